#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oprw {

/// Index of a generator in its alphabet. Index order is the base
/// well-ordering on X.
using Generator = std::uint8_t;

/// Ordered set of single-character generator symbols.
///
/// The declaration order is the well-ordering the monomial order is built
/// on. Symbols must be printable ASCII and must not collide with the word
/// grammar's reserved characters `[`, `]`, `*` and `1`.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  explicit Alphabet(std::vector<char> symbols);

  /// Parses a comma-separated list such as "x,y,z".
  static Alphabet parse(std::string_view list);

  std::size_t size() const { return symbols_.size(); }
  char symbol(Generator g) const { return symbols_.at(g); }
  std::optional<Generator> find(char symbol) const;
  const std::vector<char>& symbols() const { return symbols_; }

  /// Renders back to the comma-separated form accepted by parse().
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<char> symbols_;
};

}  // namespace oprw
