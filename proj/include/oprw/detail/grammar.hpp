#pragma once

#include <string>
#include <string_view>

#include "oprw/alphabet.hpp"

namespace oprw::detail {

inline constexpr char kHole1 = static_cast<char>(0xFD);
inline constexpr char kHole2 = static_cast<char>(0xFC);

enum class Holes { kNone, kOne, kTwo };

/// Parses the word grammar into a token string. With Holes::kOne the item
/// "*" is accepted and encoded as kHole1; with Holes::kTwo the items "*1"
/// and "*2" are accepted. Hole counts are checked by the caller.
std::string parse_tokens(std::string_view text, const Alphabet& alphabet, Holes holes);

}  // namespace oprw::detail
