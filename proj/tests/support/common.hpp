#pragma once

#include <string_view>

#include "oprw/alphabet.hpp"
#include "oprw/context.hpp"
#include "oprw/word.hpp"

namespace oprw::testing {

inline const Alphabet& xy() {
  static const Alphabet a = Alphabet::parse("x,y");
  return a;
}

inline const Alphabet& xyz() {
  static const Alphabet a = Alphabet::parse("x,y,z");
  return a;
}

inline Word W(std::string_view text, const Alphabet& a = xy()) { return parse(text, a); }
inline Context Q(std::string_view text, const Alphabet& a = xy()) { return parse_context(text, a); }
inline std::string R(const Word& w, const Alphabet& a = xy()) { return render(w, a); }
inline std::string R(const Context& q, const Alphabet& a = xy()) { return render(q, a); }

}  // namespace oprw::testing
