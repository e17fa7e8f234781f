#include "oprw/context.hpp"

#include <algorithm>
#include <stdexcept>

#include "oprw/detail/grammar.hpp"

namespace oprw {

namespace {

// Net bracket depth of a fragment, or -1 if some prefix dips below zero
// (starting from `start`).
long fragment_depth(std::string_view tokens, long start) {
  long open = start;
  for (char c : tokens) {
    if (c == token::kOpen) {
      ++open;
    } else if (c == token::kClose && --open < 0) {
      return -1;
    }
  }
  return open;
}

bool valid_split(std::initializer_list<std::string_view> parts) {
  long open = 0;
  for (std::string_view part : parts) {
    open = fragment_depth(part, open);
    if (open < 0) return false;
  }
  return open == 0;
}

std::string cat(std::string_view a, std::string_view b, std::string_view c = {},
                std::string_view d = {}, std::string_view e = {}) {
  std::string out;
  out.reserve(a.size() + b.size() + c.size() + d.size() + e.size());
  out.append(a).append(b).append(c).append(d).append(e);
  return out;
}

}  // namespace

Context::Context(std::string left, std::string right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!valid_split({left_, right_})) throw std::invalid_argument("context is not balanced");
}

Context Context::compose(const Context& inner) const {
  Context out;
  out.left_ = cat(left_, inner.left_);
  out.right_ = cat(inner.right_, right_);
  return out;
}

Word substitute(const Context& q, const Word& u) {
  return WordAccess::make(cat(q.left(), u.tokens(), q.right()));
}

Context parse_context(std::string_view text, const Alphabet& alphabet) {
  std::string tokens = detail::parse_tokens(text, alphabet, detail::Holes::kOne);
  auto holes = std::count(tokens.begin(), tokens.end(), detail::kHole1);
  if (holes != 1) throw ParseError(0, "a context must contain exactly one '*'");
  auto at = tokens.find(detail::kHole1);
  return Context(tokens.substr(0, at), tokens.substr(at + 1));
}

std::string render(const Context& q, const Alphabet& alphabet) {
  return render_fragment(q.left(), alphabet) + "*" + render_fragment(q.right(), alphabet);
}

TwoHoleContext::TwoHoleContext(std::string left, std::string middle, std::string right,
                               bool first_hole_leftmost)
    : left_(std::move(left)),
      middle_(std::move(middle)),
      right_(std::move(right)),
      first_leftmost_(first_hole_leftmost) {
  if (!valid_split({left_, middle_, right_})) {
    throw std::invalid_argument("two-hole context is not balanced");
  }
}

Context TwoHoleContext::fill_second(const Word& u2) const {
  if (first_leftmost_) return Context(left_, cat(middle_, u2.tokens(), right_));
  return Context(cat(left_, u2.tokens(), middle_), right_);
}

Context TwoHoleContext::fill_first(const Word& u1) const {
  if (first_leftmost_) return Context(cat(left_, u1.tokens(), middle_), right_);
  return Context(left_, cat(middle_, u1.tokens(), right_));
}

Word substitute_two(const TwoHoleContext& p, const Word& u1, const Word& u2) {
  const Word& first = p.first_hole_leftmost() ? u1 : u2;
  const Word& second = p.first_hole_leftmost() ? u2 : u1;
  return WordAccess::make(cat(p.left(), first.tokens(), p.middle(), second.tokens(), p.right()));
}

TwoHoleContext parse_two_hole_context(std::string_view text, const Alphabet& alphabet) {
  std::string tokens = detail::parse_tokens(text, alphabet, detail::Holes::kTwo);
  if (std::count(tokens.begin(), tokens.end(), detail::kHole1) != 1 ||
      std::count(tokens.begin(), tokens.end(), detail::kHole2) != 1) {
    throw ParseError(0, "a two-hole context must contain exactly one '*1' and one '*2'");
  }
  auto h1 = tokens.find(detail::kHole1);
  auto h2 = tokens.find(detail::kHole2);
  auto lo = std::min(h1, h2);
  auto hi = std::max(h1, h2);
  return TwoHoleContext(tokens.substr(0, lo), tokens.substr(lo + 1, hi - lo - 1),
                        tokens.substr(hi + 1), h1 < h2);
}

std::string render(const TwoHoleContext& p, const Alphabet& alphabet) {
  const char* lo = p.first_hole_leftmost() ? "*1" : "*2";
  const char* hi = p.first_hole_leftmost() ? "*2" : "*1";
  return render_fragment(p.left(), alphabet) + lo + render_fragment(p.middle(), alphabet) + hi +
         render_fragment(p.right(), alphabet);
}

Placement placement_in(const Word& host, const Context& q) {
  std::string_view h = host.tokens();
  if (h.size() < q.left().size() + q.right().size() || !h.starts_with(q.left()) ||
      !h.ends_with(q.right())) {
    throw std::invalid_argument("context does not fit the host word");
  }
  auto middle = h.substr(q.left().size(), h.size() - q.left().size() - q.right().size());
  if (!token::is_balanced(middle)) throw std::invalid_argument("context does not fit the host word");
  return Placement{Word::from_tokens(std::string(middle)), q};
}

std::vector<Placement> enumerate_placements(const Word& w, bool include_empty) {
  std::string_view host = w.tokens();
  std::vector<Placement> out;

  auto emit = [&](std::size_t begin, std::size_t end) {
    out.push_back(Placement{WordAccess::make(std::string(host.substr(begin, end - begin))),
                            Context(std::string(host.substr(0, begin)),
                                    std::string(host.substr(end)))});
  };

  // Walk every level: the host itself and the content of each bracket.
  std::vector<std::pair<std::size_t, std::size_t>> levels{{0, host.size()}};
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (host[i] == token::kOpen) {
      std::size_t end = token::letter_end(host, i);
      levels.emplace_back(i + 1, end - 1);
    }
  }
  for (auto [lbegin, lend] : levels) {
    auto spans = token::letter_spans(host.substr(lbegin, lend - lbegin));
    for (std::size_t i = 0; i < spans.size(); ++i) {
      for (std::size_t j = i; j < spans.size(); ++j) {
        emit(lbegin + spans[i].first, lbegin + spans[j].second);
      }
    }
    if (include_empty) {
      for (const auto& span : spans) emit(lbegin + span.first, lbegin + span.first);
      emit(lend, lend);
    }
  }

  std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
    if (a.begin() != b.begin()) return a.begin() < b.begin();
    return a.end() > b.end();
  });
  return out;
}

Classification classify(const Word& host, const Placement& p1, const Placement& p2) {
  if (p1.host() != host || p2.host() != host) {
    throw std::invalid_argument("placement does not belong to the host word");
  }
  std::string_view h = host.tokens();
  auto piece = [&](std::size_t b, std::size_t e) { return std::string(h.substr(b, e - b)); };
  const std::size_t s1 = p1.begin(), e1 = p1.end(), s2 = p2.begin(), e2 = p2.end();

  if (s2 <= s1 && e1 <= e2) {
    return Nested{Context(piece(s2, s1), piece(e1, e2)), Nested::Direction::kFirstInSecond};
  }
  if (s1 <= s2 && e2 <= e1) {
    return Nested{Context(piece(s1, s2), piece(e2, e1)), Nested::Direction::kSecondInFirst};
  }
  if (e1 <= s2) {
    return Separated{TwoHoleContext(piece(0, s1), piece(e1, s2), piece(e2, h.size()), true)};
  }
  if (e2 <= s1) {
    return Separated{TwoHoleContext(piece(0, s2), piece(e2, s1), piece(e1, h.size()), false)};
  }
  // Partial overlap of two letter runs only happens within one level.
  const bool first_left = s1 < s2;
  const std::size_t lo = first_left ? s1 : s2;
  const std::size_t mid1 = first_left ? s2 : s1;
  const std::size_t mid2 = first_left ? e1 : e2;
  const std::size_t hi = first_left ? e2 : e1;
  return Intersecting{Context(piece(0, lo), piece(hi, h.size())),
                      Word::from_tokens(piece(lo, mid1)), Word::from_tokens(piece(mid1, mid2)),
                      Word::from_tokens(piece(mid2, hi)),
                      first_left ? Intersecting::Orientation::kFirstLeft
                                 : Intersecting::Orientation::kSecondLeft};
}

bool witness_holds(const Word& host, const Placement& p1, const Placement& p2,
                   const Classification& c) {
  if (const auto* sep = std::get_if<Separated>(&c)) {
    return substitute_two(sep->witness, p1.subword, p2.subword) == host &&
           sep->witness.fill_second(p2.subword) == p1.context &&
           sep->witness.fill_first(p1.subword) == p2.context;
  }
  if (const auto* nest = std::get_if<Nested>(&c)) {
    const Placement& inner = nest->direction == Nested::Direction::kFirstInSecond ? p1 : p2;
    const Placement& outer = nest->direction == Nested::Direction::kFirstInSecond ? p2 : p1;
    return substitute(nest->connector, inner.subword) == outer.subword &&
           outer.context.compose(nest->connector) == inner.context &&
           substitute(outer.context, outer.subword) == host;
  }
  const auto& in = std::get<Intersecting>(c);
  if (in.a.is_identity() || in.b.is_identity() || in.c.is_identity()) return false;
  if (substitute(in.q, in.a * in.b * in.c) != host) return false;
  const bool first_left = in.orientation == Intersecting::Orientation::kFirstLeft;
  const Placement& left = first_left ? p1 : p2;
  const Placement& right = first_left ? p2 : p1;
  return left.subword == in.a * in.b && right.subword == in.b * in.c &&
         left.context == in.q.compose(Context("", std::string(in.c.tokens()))) &&
         right.context == in.q.compose(Context(std::string(in.a.tokens()), ""));
}

}  // namespace oprw
