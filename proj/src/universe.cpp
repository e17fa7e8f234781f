#include "oprw/universe.hpp"

#include <string>

namespace oprw {

namespace {

// by_size[s] lists words of exact size s; sequences of at most `breadth`
// letters drawn from `letters` (also indexed by size).
using BySize = std::vector<std::vector<Word>>;

BySize sequences(const BySize& letters, std::size_t breadth, std::size_t max_size,
                 std::size_t cap, std::size_t& produced) {
  BySize all(max_size + 1);
  all[0].push_back(Word());
  BySize layer = all;  // sequences of exactly n letters
  for (std::size_t n = 1; n <= breadth; ++n) {
    BySize next(max_size + 1);
    for (std::size_t s = 0; s <= max_size; ++s) {
      for (const Word& prefix : layer[s]) {
        for (std::size_t ls = 1; s + ls <= max_size; ++ls) {
          for (const Word& letter : letters[ls]) {
            if (++produced > cap) throw UniverseTooLarge("universe exceeds cap of " + std::to_string(cap) + " words");
            next[s + ls].push_back(prefix * letter);
          }
        }
      }
    }
    for (std::size_t s = 0; s <= max_size; ++s) {
      all[s].insert(all[s].end(), next[s].begin(), next[s].end());
    }
    layer = std::move(next);
  }
  return all;
}

}  // namespace

std::vector<Word> enumerate_universe(const Universe& universe, std::size_t cap) {
  const std::size_t max_size = universe.max_size;
  std::size_t produced = 0;
  BySize words;
  for (std::size_t d = 0; d <= universe.max_depth; ++d) {
    BySize letters(max_size + 1);
    if (max_size >= 1) {
      for (std::size_t g = 0; g < universe.alphabet.size(); ++g) {
        letters[1].push_back(Word::generator(static_cast<Generator>(g)));
      }
    }
    if (d > 0) {
      for (std::size_t s = 0; s + 1 <= max_size; ++s) {
        for (const Word& w : words[s]) letters[s + 1].push_back(bracket(w));
      }
    }
    std::size_t level_produced = 0;
    words = sequences(letters, universe.max_breadth, max_size, cap, level_produced);
    produced = level_produced;
  }
  std::vector<Word> out;
  out.reserve(produced + 1);
  for (auto& bucket : words) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

}  // namespace oprw
