#include "oprw/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace oprw {

namespace {
bool reserved(char c) {
  return c == '[' || c == ']' || c == '*' || c == '1' || c == ',' ||
         std::isspace(static_cast<unsigned char>(c)) ||
         !std::isprint(static_cast<unsigned char>(c));
}
}  // namespace

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (symbols_.size() > kMaxSize) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (reserved(c)) {
      throw std::invalid_argument(std::string("reserved character in alphabet: '") + c + "'");
    }
    if (std::find(symbols_.begin(), symbols_.begin() + i, c) != symbols_.begin() + i) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
}

Alphabet Alphabet::parse(std::string_view list) {
  std::vector<char> symbols;
  std::string item;
  auto flush = [&] {
    if (item.size() != 1) {
      throw std::invalid_argument("alphabet entries must be single characters: \"" +
                                  std::string(list) + "\"");
    }
    symbols.push_back(item[0]);
    item.clear();
  };
  for (char c : list) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      item.push_back(c);
    }
  }
  flush();
  return Alphabet(std::move(symbols));
}

std::optional<Generator> Alphabet::find(char symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Generator>(it - symbols_.begin());
}

std::string Alphabet::to_string() const {
  std::string out;
  for (char c : symbols_) {
    if (!out.empty()) out.push_back(',');
    out.push_back(c);
  }
  return out;
}

}  // namespace oprw
