#include "oprw/congruence.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "oprw/context.hpp"

namespace oprw {

namespace {

bool has_psi(const System& sys) {
  return sys.contains(Schema::kPsi) || sys.contains(Schema::kPsiReversed);
}

Word join(const std::vector<Letter>& letters, std::size_t begin, std::size_t end) {
  Word out;
  for (std::size_t i = begin; i < end; ++i) out = out * letters[i].as_word();
  return out;
}

class NeighborSet {
 public:
  NeighborSet(const Word& self, const SearchLimits& limits) : self_(self), limits_(limits) {}

  void add(Word w) {
    if (w == self_ || !limits_.admits(w)) return;
    if (seen_.insert(w).second) out_.push_back(std::move(w));
  }
  std::vector<Word> take() { return std::move(out_); }

 private:
  const Word& self_;
  const SearchLimits& limits_;
  std::unordered_set<Word> seen_;
  std::vector<Word> out_;
};

}  // namespace

bool in_relation(const System& sys, const Word& t, const Word& r) {
  auto letters = t.letters();
  if (sys.contains(Schema::kPhi) && t == bracket(bracket(r))) return true;
  if (has_psi(sys) && letters.size() == 1 && letters[0].is_bracket()) {
    auto inner = letters[0].inner().letters();
    for (std::size_t k = 1; k < inner.size(); ++k) {
      if (r == bracket(join(inner, k, inner.size())) * bracket(join(inner, 0, k))) return true;
    }
  }
  if (!r.is_identity()) return false;
  if (sys.contains(Schema::kOmega) && t == bracket(Word())) return true;
  if (sys.contains(Schema::kVarPhi) && !letters.empty() && letters.front().is_bracket()) {
    const Word& w = letters.front().inner();
    if (t == bracket(w) * w) return true;
  }
  if (sys.contains(Schema::kChi) && !letters.empty() && letters.back().is_bracket()) {
    const Word& w = letters.back().inner();
    if (t == w * bracket(w)) return true;
  }
  return false;
}

bool is_rc_step(const System& sys, const Word& a, const Word& b) {
  auto one_way = [&](const Word& big, const Word& small) {
    for (const Placement& p : enumerate_placements(big)) {
      std::string_view h = small.tokens();
      const Context& q = p.context;
      if (h.size() < q.left().size() + q.right().size()) continue;
      if (!h.starts_with(q.left()) || !h.ends_with(q.right())) continue;
      auto mid = h.substr(q.left().size(), h.size() - q.left().size() - q.right().size());
      if (!token::is_balanced(mid)) continue;
      if (in_relation(sys, p.subword, Word::from_tokens(std::string(mid)))) return true;
    }
    return false;
  };
  return one_way(a, b) || one_way(b, a);
}

std::vector<Word> rc_neighbors(const System& sys, const Alphabet& alphabet, const Word& w,
                               const SearchLimits& limits) {
  NeighborSet out(w, limits);
  const bool phi = sys.contains(Schema::kPhi);
  const bool psi = has_psi(sys);
  const bool omega = sys.contains(Schema::kOmega);
  const bool varphi = sys.contains(Schema::kVarPhi);
  const bool chi = sys.contains(Schema::kChi);

  auto placements = enumerate_placements(w, /*include_empty=*/true);

  std::vector<Word> pool{Word()};
  std::unordered_set<Word> in_pool{Word()};
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    Word x = Word::generator(static_cast<Generator>(g));
    in_pool.insert(x);
    pool.push_back(std::move(x));
  }
  for (const Placement& p : placements) {
    if (!p.subword.is_identity() && in_pool.insert(p.subword).second) pool.push_back(p.subword);
  }

  for (const Placement& p : placements) {
    const Context& q = p.context;
    const Word& t = p.subword;
    auto letters = t.letters();

    // Forward: t is a larger side.
    if (phi && letters.size() == 1 && letters[0].is_bracket()) {
      auto inner = letters[0].inner().letters();
      if (inner.size() == 1 && inner[0].is_bracket()) out.add(substitute(q, inner[0].inner()));
    }
    if (psi && letters.size() == 1 && letters[0].is_bracket()) {
      auto inner = letters[0].inner().letters();
      for (std::size_t k = 1; k < inner.size(); ++k) {
        out.add(substitute(q, bracket(join(inner, k, inner.size())) * bracket(join(inner, 0, k))));
      }
    }
    if (omega && t == bracket(Word())) out.add(substitute(q, Word()));
    if (varphi && !letters.empty() && letters.front().is_bracket()) {
      const Word& v = letters.front().inner();
      if (join(letters, 1, letters.size()) == v) out.add(substitute(q, Word()));
    }
    if (chi && !letters.empty() && letters.back().is_bracket()) {
      const Word& v = letters.back().inner();
      if (join(letters, 0, letters.size() - 1) == v) out.add(substitute(q, Word()));
    }

    // Backward: t is a smaller side.
    if (phi) out.add(substitute(q, bracket(bracket(t))));
    if (psi && letters.size() == 2 && letters[0].is_bracket() && letters[1].is_bracket() &&
        !letters[0].inner().is_identity() && !letters[1].inner().is_identity()) {
      out.add(substitute(q, bracket(letters[1].inner() * letters[0].inner())));
    }
    if (t.is_identity()) {
      if (omega) out.add(substitute(q, bracket(Word())));
      if (varphi || chi) {
        auto insert = [&](const Word& v) {
          if (varphi) out.add(substitute(q, bracket(v) * v));
          if (chi) out.add(substitute(q, v * bracket(v)));
        };
        for (const Word& v : pool) insert(v);
      }
    }
  }
  return out.take();
}

namespace {

EquivalenceResult bfs_stage(const System& sys, const Alphabet& alphabet, const Word& a,
                            const Word& b, const SearchLimits& limits) {
  // parent links per side; the root maps to itself.
  struct Side {
    std::unordered_map<Word, Word> parent;
    std::vector<Word> frontier;
  };
  Side from_a, from_b;
  from_a.parent.emplace(a, a);
  from_a.frontier.push_back(a);
  from_b.parent.emplace(b, b);
  from_b.frontier.push_back(b);

  auto chain_to_root = [](const Side& side, Word w) {
    std::vector<Word> out{w};
    for (;;) {
      const Word& up = side.parent.at(w);
      if (up == w) break;
      out.push_back(up);
      w = up;
    }
    return out;  // w ... root
  };

  while (!from_a.frontier.empty() && !from_b.frontier.empty()) {
    const bool expand_a = from_a.frontier.size() <= from_b.frontier.size();
    Side& here = expand_a ? from_a : from_b;
    Side& there = expand_a ? from_b : from_a;
    const Word& there_root = expand_a ? b : a;
    // The roots are exempt from the limits, so rc_neighbors never yields
    // one that lies outside them; reach it through the shape check instead.
    const bool root_outside = !limits.admits(there_root);
    std::vector<Word> next;
    for (const Word& w : here.frontier) {
      std::vector<Word> neighbors = rc_neighbors(sys, alphabet, w, limits);
      if (root_outside && !here.parent.contains(there_root) && is_rc_step(sys, w, there_root)) {
        neighbors.push_back(there_root);
      }
      for (Word& n : neighbors) {
        if (here.parent.contains(n)) continue;
        here.parent.emplace(n, w);
        if (there.parent.contains(n)) {
          auto left = chain_to_root(from_a, n);   // n ... a
          auto right = chain_to_root(from_b, n);  // n ... b
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin() + 1, right.end());
          return Equivalent{std::move(left)};
        }
        if (from_a.parent.size() + from_b.parent.size() >= limits.max_visited) {
          return Unknown{from_a.parent.size() + from_b.parent.size()};
        }
        next.push_back(std::move(n));
      }
    }
    here.frontier = std::move(next);
  }
  return Unknown{from_a.parent.size() + from_b.parent.size()};
}

}  // namespace

EquivalenceResult bfs_equivalent(const System& sys, const Alphabet& alphabet, const Word& a,
                                 const Word& b, const SearchLimits& limits) {
  if (a == b) return Equivalent{{a}};

  SearchLimits tight = limits;
  tight.max_word_deg_x = std::min(limits.max_word_deg_x, std::max(a.deg_x(), b.deg_x()));
  tight.max_word_breadth = std::min(
      limits.max_word_breadth, std::max(a.max_level_breadth(), b.max_level_breadth()) + 1);
  std::size_t depth = std::max(a.depth(), b.depth());
  tight.max_word_depth = limits.max_word_depth ? std::min(*limits.max_word_depth, depth) : depth;

  std::size_t visited = 0;
  if (tight.max_word_deg_x != limits.max_word_deg_x ||
      tight.max_word_breadth != limits.max_word_breadth ||
      tight.max_word_depth != limits.max_word_depth) {
    EquivalenceResult r = bfs_stage(sys, alphabet, a, b, tight);
    if (std::holds_alternative<Equivalent>(r)) return r;
    visited = std::get<Unknown>(r).visited;
  }
  EquivalenceResult r = bfs_stage(sys, alphabet, a, b, limits);
  if (auto* u = std::get_if<Unknown>(&r)) u->visited += visited;
  return r;
}

}  // namespace oprw
