#include "oprw/order.hpp"

#include <algorithm>
#include <vector>

namespace oprw {

namespace {

std::size_t count_generators(std::string_view tokens) {
  return static_cast<std::size_t>(std::count_if(tokens.begin(), tokens.end(), token::is_generator));
}

// F(a) = 1 + 2a(floor(log2 a) + 2), F(0) = 1.
Weight bracket_weight(const Weight& a) {
  if (a == 0) return 1;
  return 1 + 2 * a * (boost::multiprecision::msb(a) + 2);
}

Weight weight_of(std::string_view tokens) {
  // One accumulator per open nesting level.
  std::vector<Weight> stack(1);
  for (char c : tokens) {
    if (c == token::kOpen) {
      stack.emplace_back(0);
    } else if (c == token::kClose) {
      Weight inner = std::move(stack.back());
      stack.pop_back();
      stack.back() += bracket_weight(inner);
    } else {
      stack.back() += 1;
    }
  }
  return stack.back();
}

std::strong_ordering compare_tokens(std::string_view u, std::string_view v);

std::strong_ordering compare_letters(std::string_view a, std::string_view b) {
  if (auto c = count_generators(a) <=> count_generators(b); c != 0) return c;
  const bool ga = token::is_generator(a.front());
  const bool gb = token::is_generator(b.front());
  if (ga && gb) return token::generator(a.front()) <=> token::generator(b.front());
  if (ga != gb) return ga ? std::strong_ordering::less : std::strong_ordering::greater;
  return compare_tokens(a.substr(1, a.size() - 2), b.substr(1, b.size() - 2));
}

std::strong_ordering shortlex_tokens(std::string_view u, std::string_view v) {
  auto su = token::letter_spans(u);
  auto sv = token::letter_spans(v);
  if (auto c = su.size() <=> sv.size(); c != 0) return c;
  for (std::size_t i = 0; i < su.size(); ++i) {
    auto a = u.substr(su[i].first, su[i].second - su[i].first);
    auto b = v.substr(sv[i].first, sv[i].second - sv[i].first);
    if (a == b) continue;
    return compare_letters(a, b);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_tokens(std::string_view u, std::string_view v) {
  if (u == v) return std::strong_ordering::equal;
  if (auto c = count_generators(u) <=> count_generators(v); c != 0) return c;
  Weight wu = weight_of(u);
  Weight wv = weight_of(v);
  if (wu != wv) return wu < wv ? std::strong_ordering::less : std::strong_ordering::greater;
  return shortlex_tokens(u, v);
}

}  // namespace

Weight order_weight(const Word& w) { return weight_of(w.tokens()); }

std::strong_ordering compare(const Word& u, const Word& v) {
  return compare_tokens(u.tokens(), v.tokens());
}

std::strong_ordering compare_shortlex(const Word& u, const Word& v) {
  return shortlex_tokens(u.tokens(), v.tokens());
}

}  // namespace oprw
