#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oprw/alphabet.hpp"

namespace oprw {

// Token encoding shared by words and contexts. A generator is stored as its
// alphabet index; brackets use two reserved byte values above any index.
namespace token {
inline constexpr char kOpen = static_cast<char>(0xFE);
inline constexpr char kClose = static_cast<char>(0xFF);

inline bool is_generator(char c) { return c != kOpen && c != kClose; }
inline Generator generator(char c) { return static_cast<Generator>(c); }
inline char encode(Generator g) { return static_cast<char>(g); }

/// End (one past) of the letter starting at `begin`.
std::size_t letter_end(std::string_view tokens, std::size_t begin);

/// Top-level letter spans [begin, end) of a balanced token string.
std::vector<std::pair<std::size_t, std::size_t>> letter_spans(
    std::string_view tokens);

bool is_balanced(std::string_view tokens);
}  // namespace token

class Letter;

/// A bracketed word, i.e. an element of the free operated monoid on an
/// alphabet. The empty word is the identity 1.
///
/// Words are immutable values. Equality is literal equality of the letter
/// sequence, which by freeness is equality in the operated monoid.
class Word {
 public:
  Word() = default;

  static Word identity() { return Word(); }
  static Word generator(Generator g);

  /// Builds a word from an already balanced token string. Throws
  /// std::invalid_argument on unbalanced input.
  static Word from_tokens(std::string tokens);

  bool is_identity() const { return tokens_.empty(); }

  /// Number of top-level letters; 0 for the identity.
  std::size_t breadth() const;
  /// Maximal bracket nesting level.
  std::size_t depth() const;
  /// Number of generator occurrences at all nesting levels.
  std::size_t deg_x() const;
  /// Number of letters counted at every nesting level (generators plus
  /// bracket letters).
  std::size_t size() const;
  /// Largest breadth found at any nesting level (the word itself or the
  /// content of any bracket).
  std::size_t max_level_breadth() const;

  std::vector<Letter> letters() const;

  std::string_view tokens() const { return tokens_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::string tokens) : tokens_(std::move(tokens)) {}
  friend Word concat(const Word& u, const Word& v);
  friend Word bracket(const Word& w);
  friend struct WordAccess;

  std::string tokens_;
};

/// A single letter of a word: a generator or a bracketed sub-word.
class Letter {
 public:
  explicit Letter(Generator g) : value_(g) {}
  explicit Letter(Word inner) : value_(std::move(inner)) {}

  bool is_generator() const { return std::holds_alternative<Generator>(value_); }
  bool is_bracket() const { return !is_generator(); }
  Generator generator() const { return std::get<Generator>(value_); }
  const Word& inner() const { return std::get<Word>(value_); }

  /// The letter as a breadth-one word.
  Word as_word() const;

  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::variant<Generator, Word> value_;
};

/// Internal constructor access for modules that splice token strings which
/// are balanced by construction.
struct WordAccess {
  static Word make(std::string tokens) { return Word(std::move(tokens)); }
};

Word concat(const Word& u, const Word& v);
Word bracket(const Word& w);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

Word from_letters(const std::vector<Letter>& letters);

inline std::size_t breadth(const Word& w) { return w.breadth(); }
inline std::size_t depth(const Word& w) { return w.depth(); }

/// Syntax or symbol error, carrying the 0-based character offset into the
/// parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the word grammar:
///   word ::= "1" | item+      ("1" only as an entire word)
///   item ::= generator | "[" word "]"
/// Whitespace is ignored.
Word parse(std::string_view text, const Alphabet& alphabet);

/// Canonical rendering, no whitespace; the identity renders as "1".
std::string render(const Word& w, const Alphabet& alphabet);

/// Renders a balanced-or-partial token fragment (used for context sides).
/// Empty brackets render as "[1]"; an empty fragment renders as "".
std::string render_fragment(std::string_view tokens, const Alphabet& alphabet);

/// An operated monoid: a monoid with an arbitrary unary operator.
template <typename M>
concept OperatedMonoid = requires(const M& m, const typename M::value_type& a) {
  typename M::value_type;
  { m.unit() } -> std::convertible_to<typename M::value_type>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.apply(a) } -> std::convertible_to<typename M::value_type>;
};

/// The unique operated-monoid homomorphism out of the free operated monoid
/// extending `assign` on generators.
template <OperatedMonoid M, typename Assign>
  requires std::invocable<Assign&, Generator>
typename M::value_type evaluate(const Word& w, const M& target, Assign&& assign) {
  typename M::value_type acc = target.unit();
  for (const Letter& letter : w.letters()) {
    if (letter.is_generator()) {
      acc = target.multiply(acc, std::invoke(assign, letter.generator()));
    } else {
      acc = target.multiply(acc, target.apply(evaluate(letter.inner(), target, assign)));
    }
  }
  return acc;
}

/// The free operated monoid itself, as an evaluation target.
struct FreeOperatedMonoid {
  using value_type = Word;
  Word unit() const { return Word(); }
  Word multiply(const Word& a, const Word& b) const { return concat(a, b); }
  Word apply(const Word& a) const { return bracket(a); }
};

}  // namespace oprw

template <>
struct std::hash<oprw::Word> {
  std::size_t operator()(const oprw::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.tokens());
  }
};
