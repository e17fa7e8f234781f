#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "oprw/rules.hpp"
#include "oprw/word.hpp"

namespace oprw {

/// Growth caps for the equivalence search. Words outside the caps are never
/// visited (the two query words themselves are exempt).
struct SearchLimits {
  std::size_t max_word_deg_x = 6;
  /// Applies at every nesting level (Word::max_level_breadth).
  std::size_t max_word_breadth = 8;
  std::size_t max_visited = 100'000;
  /// Optional nesting cap; unbounded when empty.
  std::optional<std::size_t> max_word_depth;

  bool admits(const Word& w) const {
    return w.deg_x() <= max_word_deg_x && w.max_level_breadth() <= max_word_breadth &&
           (!max_word_depth || w.depth() <= *max_word_depth);
  }
};

struct Equivalent {
  /// Endpoints are the queried words; consecutive words differ by one
  /// S^c step in either direction.
  std::vector<Word> path;
};

struct Unknown {
  std::size_t visited = 0;
};

using EquivalenceResult = std::variant<Equivalent, Unknown>;

/// Words one S^c step away from w in either direction, within limits.
///
/// Forward steps replace an instance's larger side by its smaller side at
/// any placement; backward steps do the converse. Backward VarPhi/Chi
/// insert [v]v or v[v] at any gap for v drawn from 1, the generators and
/// the distinct subwords of w.
std::vector<Word> rc_neighbors(const System& sys, const Alphabet& alphabet, const Word& w,
                               const SearchLimits& limits);

/// Bidirectional breadth-first search for a chain of S^c steps joining a
/// and b. Equivalent is always sound; Unknown only means the visited cap
/// was hit or the reachable set within limits was exhausted.
///
/// The search runs in stages: first with growth capped at the endpoints'
/// own degree, breadth (+1) and depth, then with the caller's limits. Each
/// stage is a complete breadth-first search with its own visited budget.
EquivalenceResult bfs_equivalent(const System& sys, const Alphabet& alphabet, const Word& a,
                                 const Word& b, const SearchLimits& limits);

/// Independent shape check: (a, b) or (b, a) is (q|_t, q|_r) for some
/// context q and some (t, r) in the system's relation.
bool is_rc_step(const System& sys, const Word& a, const Word& b);

/// (t, r) is an instance of a schema in the system, in the relation's own
/// direction (larger side first).
bool in_relation(const System& sys, const Word& t, const Word& r);

}  // namespace oprw
