#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oprw/alphabet.hpp"
#include "oprw/word.hpp"

namespace oprw {

/// A ⋆-bracketed word: a bracketed word with exactly one hole.
///
/// Stored as the token strings to the left and right of the hole, so that
/// filling the hole with u is the splice left · u · right.
class Context {
 public:
  /// The bare hole ⋆.
  Context() = default;

  /// Throws std::invalid_argument unless left·⋆·right is balanced.
  Context(std::string left, std::string right);

  std::string_view left() const { return left_; }
  std::string_view right() const { return right_; }

  bool is_hole() const { return left_.empty() && right_.empty(); }

  /// Offset of the hole in the host token string.
  std::size_t offset() const { return left_.size(); }

  /// this|_{inner}: plugs another context into the hole.
  Context compose(const Context& inner) const;

  /// Wraps: outer|_{this}.
  Context within(const Context& outer) const { return outer.compose(*this); }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::string left_;
  std::string right_;
};

inline const Context kHole{};

/// q|_u. Filling with the identity collapses the hole.
Word substitute(const Context& q, const Word& u);

/// Parses a context written in the word grammar with one "*".
Context parse_context(std::string_view text, const Alphabet& alphabet);
std::string render(const Context& q, const Alphabet& alphabet);

/// A (⋆₁,⋆₂)-bracketed word. The holes may occur in either order.
class TwoHoleContext {
 public:
  /// The word left ⋆ middle ⋆ right; `first_hole_leftmost` says whether ⋆₁
  /// is the leftmost of the two holes.
  TwoHoleContext(std::string left, std::string middle, std::string right,
                 bool first_hole_leftmost = true);

  std::string_view left() const { return left_; }
  std::string_view middle() const { return middle_; }
  std::string_view right() const { return right_; }
  bool first_hole_leftmost() const { return first_leftmost_; }

  /// p|_{⋆₁, u2}: fills only the second hole.
  Context fill_second(const Word& u2) const;
  /// p|_{u1, ⋆₂}.
  Context fill_first(const Word& u1) const;

  friend bool operator==(const TwoHoleContext&, const TwoHoleContext&) = default;

 private:
  std::string left_;
  std::string middle_;
  std::string right_;
  bool first_leftmost_ = true;
};

/// p|_{u1,u2}.
Word substitute_two(const TwoHoleContext& p, const Word& u1, const Word& u2);

TwoHoleContext parse_two_hole_context(std::string_view text, const Alphabet& alphabet);
std::string render(const TwoHoleContext& p, const Alphabet& alphabet);

/// One occurrence of a bracketed subword: substitute(context, subword)
/// reproduces the host. Placements are equal iff their contexts are
/// structurally equal.
struct Placement {
  Word subword;
  Context context;

  Word host() const { return substitute(context, subword); }
  std::size_t begin() const { return context.offset(); }
  std::size_t end() const { return context.offset() + subword.tokens().size(); }

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.context == b.context && a.subword == b.subword;
  }
};

/// Placement of the subword determined by a context and its host. Throws
/// std::invalid_argument when the context does not fit the host.
Placement placement_in(const Word& host, const Context& q);

/// Every contiguous letter run at every nesting level of w, with its
/// context. Ordered by hole offset, longer runs first. The empty subword is
/// only included (once per gap per level) when `include_empty` is set.
std::vector<Placement> enumerate_placements(const Word& w, bool include_empty = false);

/// Disjoint placements; witness p satisfies p|_{u1,u2} = host.
struct Separated {
  TwoHoleContext witness;
};

/// One subword contains the other; the connector q satisfies
/// outer.subword = q|_{inner.subword} and inner.context = outer.context|_q.
struct Nested {
  enum class Direction { kFirstInSecond, kSecondInFirst };
  Context connector;
  Direction direction;
};

/// Partial overlap at one nesting level: host = q|_{abc} with a, b, c ≠ 1.
/// kFirstLeft means u1 = ab and u2 = bc; kSecondLeft means u1 = bc and
/// u2 = ab.
struct Intersecting {
  enum class Orientation { kFirstLeft, kSecondLeft };
  Context q;
  Word a, b, c;
  Orientation orientation;
};

using Classification = std::variant<Separated, Nested, Intersecting>;

/// Relative position of two placements in the same host. Checks are made
/// in the order nested, separated, intersecting. Throws
/// std::invalid_argument when either placement does not belong to `host`.
Classification classify(const Word& host, const Placement& p1, const Placement& p2);

/// Re-derives the host from a classification's witness and tests every
/// structural invariant of the witness. Independent of classify().
bool witness_holds(const Word& host, const Placement& p1, const Placement& p2,
                   const Classification& c);

}  // namespace oprw
