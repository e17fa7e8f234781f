#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "oprw/alphabet.hpp"
#include "oprw/word.hpp"

namespace oprw {

/// A finite slice of the free operated monoid: every word whose breadth at
/// each nesting level is at most `max_breadth`, whose depth is at most
/// `max_depth`, and whose total letter count (Word::size) is at most
/// `max_size`.
struct Universe {
  Alphabet alphabet;
  std::size_t max_breadth = 3;
  std::size_t max_depth = 2;
  std::size_t max_size = 9;

  bool contains(const Word& w) const {
    return w.max_level_breadth() <= max_breadth && w.depth() <= max_depth &&
           w.size() <= max_size;
  }
};

class UniverseTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultUniverseCap = 5'000'000;

/// Every word of the universe, ordered by size, then by construction order.
/// Throws UniverseTooLarge when more than `cap` words would be produced.
std::vector<Word> enumerate_universe(const Universe& universe,
                                     std::size_t cap = kDefaultUniverseCap);

}  // namespace oprw
