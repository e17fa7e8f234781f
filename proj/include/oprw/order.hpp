#pragma once

#include <compare>
#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "oprw/word.hpp"

namespace oprw {

/// Number of generator occurrences, with repetition, at every nesting level.
inline std::size_t deg_x(const Word& w) { return w.deg_x(); }

using Weight = boost::multiprecision::cpp_int;

/// Additive interpretation W(1) = 0, W(x) = 1, W(uv) = W(u) + W(v),
/// W([u]) = F(W(u)) with F(0) = 1 and F(a) = 1 + 2a(floor(log2 a) + 2).
/// F is strictly increasing and F(a + b) > F(a) + F(b) for a, b >= 1,
/// so W([uv]) > W([v][u]) whenever u, v != 1. Its bit length grows like
/// depth * log(depth), which keeps deep towers cheap to compare.
Weight order_weight(const Word& w);

/// The monomial order on bracketed words.
///
/// Keys, most significant first:
///   1. deg_X;
///   2. order_weight;
///   3. shortlex over letters, where letters compare by deg_X, then every
///      generator precedes every bracket, generators by alphabet index and
///      brackets by recursive compare() of their contents.
/// The identity is below every nonempty word, and Equal holds only for
/// identical words.
std::strong_ordering compare(const Word& u, const Word& v);

/// Shortlex tie-break alone (key 3 above), exposed for testing.
std::strong_ordering compare_shortlex(const Word& u, const Word& v);

struct MonomialLess {
  bool operator()(const Word& u, const Word& v) const { return compare(u, v) < 0; }
};

}  // namespace oprw
