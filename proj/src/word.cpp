#include "oprw/word.hpp"

#include <algorithm>
#include <cctype>

#include "oprw/detail/grammar.hpp"

namespace oprw {

namespace token {

std::size_t letter_end(std::string_view tokens, std::size_t begin) {
  if (tokens[begin] != kOpen) return begin + 1;
  std::size_t open = 0;
  for (std::size_t i = begin; i < tokens.size(); ++i) {
    if (tokens[i] == kOpen) {
      ++open;
    } else if (tokens[i] == kClose && --open == 0) {
      return i + 1;
    }
  }
  throw std::invalid_argument("unbalanced token string");
}

std::vector<std::pair<std::size_t, std::size_t>> letter_spans(std::string_view tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t end = letter_end(tokens, i);
    spans.emplace_back(i, end);
    i = end;
  }
  return spans;
}

bool is_balanced(std::string_view tokens) {
  long open = 0;
  for (char c : tokens) {
    if (c == kOpen) {
      ++open;
    } else if (c == kClose) {
      if (--open < 0) return false;
    }
  }
  return open == 0;
}

}  // namespace token

Word Word::generator(Generator g) { return Word(std::string(1, token::encode(g))); }

Word Word::from_tokens(std::string tokens) {
  if (!token::is_balanced(tokens)) throw std::invalid_argument("unbalanced token string");
  return Word(std::move(tokens));
}

std::size_t Word::breadth() const {
  std::size_t count = 0;
  long open = 0;
  for (char c : tokens_) {
    if (c == token::kOpen) {
      if (open++ == 0) ++count;
    } else if (c == token::kClose) {
      --open;
    } else if (open == 0) {
      ++count;
    }
  }
  return count;
}

std::size_t Word::depth() const {
  std::size_t open = 0;
  std::size_t deepest = 0;
  for (char c : tokens_) {
    if (c == token::kOpen) {
      deepest = std::max(deepest, ++open);
    } else if (c == token::kClose) {
      --open;
    }
  }
  return deepest;
}

std::size_t Word::deg_x() const {
  return static_cast<std::size_t>(std::count_if(tokens_.begin(), tokens_.end(), token::is_generator));
}

std::size_t Word::size() const {
  return static_cast<std::size_t>(
      std::count_if(tokens_.begin(), tokens_.end(), [](char c) { return c != token::kClose; }));
}

std::size_t Word::max_level_breadth() const {
  // counts[d] holds the breadth of the innermost open level at nesting d.
  std::vector<std::size_t> counts(1, 0);
  std::size_t widest = 0;
  for (char c : tokens_) {
    if (c == token::kOpen) {
      ++counts.back();
      counts.push_back(0);
    } else if (c == token::kClose) {
      widest = std::max(widest, counts.back());
      counts.pop_back();
    } else {
      ++counts.back();
    }
  }
  return std::max(widest, counts.back());
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  std::string_view view = tokens_;
  for (auto [begin, end] : token::letter_spans(view)) {
    if (view[begin] == token::kOpen) {
      out.emplace_back(Word(std::string(view.substr(begin + 1, end - begin - 2))));
    } else {
      out.emplace_back(token::generator(view[begin]));
    }
  }
  return out;
}

Word Letter::as_word() const {
  return is_generator() ? Word::generator(generator()) : bracket(inner());
}

Word concat(const Word& u, const Word& v) {
  std::string tokens;
  tokens.reserve(u.tokens_.size() + v.tokens_.size());
  tokens.append(u.tokens_).append(v.tokens_);
  return Word(std::move(tokens));
}

Word bracket(const Word& w) {
  std::string tokens;
  tokens.reserve(w.tokens_.size() + 2);
  tokens.push_back(token::kOpen);
  tokens.append(w.tokens_);
  tokens.push_back(token::kClose);
  return Word(std::move(tokens));
}

Word from_letters(const std::vector<Letter>& letters) {
  Word out;
  for (const Letter& l : letters) out = concat(out, l.as_word());
  return out;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace detail {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet, Holes holes)
      : text_(text), alphabet_(alphabet), holes_(holes) {}

  std::string run() {
    std::string out;
    word(out);
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(pos_, text_[pos_] == ']' ? "unmatched ']'" : "unexpected character");
    }
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_word_end() {
    skip_space();
    return pos_ == text_.size() || text_[pos_] == ']';
  }

  void word(std::string& out) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      if (!at_word_end()) throw ParseError(start, "'1' may only stand for an entire word");
      return;
    }
    std::size_t items = 0;
    while (!at_word_end()) {
      item(out);
      ++items;
    }
    if (items == 0) throw ParseError(pos_, "expected a word");
  }

  void item(std::string& out) {
    char c = text_[pos_];
    if (c == '[') {
      std::size_t open_at = pos_++;
      out.push_back(token::kOpen);
      word(out);
      skip_space();
      if (pos_ == text_.size()) throw ParseError(open_at, "unclosed '['");
      ++pos_;  // ']'
      out.push_back(token::kClose);
      return;
    }
    if (c == '*' && holes_ != Holes::kNone) {
      std::size_t at = pos_++;
      if (holes_ == Holes::kOne) {
        out.push_back(kHole1);
        return;
      }
      if (pos_ < text_.size() && (text_[pos_] == '1' || text_[pos_] == '2')) {
        out.push_back(text_[pos_++] == '1' ? kHole1 : kHole2);
        return;
      }
      throw ParseError(at, "expected '*1' or '*2'");
    }
    if (c == '1') throw ParseError(pos_, "'1' may only stand for an entire word");
    if (auto g = alphabet_.find(c)) {
      out.push_back(token::encode(*g));
      ++pos_;
      return;
    }
    throw ParseError(pos_, std::string("symbol '") + c + "' is not in the alphabet");
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  Holes holes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string parse_tokens(std::string_view text, const Alphabet& alphabet, Holes holes) {
  return Parser(text, alphabet, holes).run();
}

}  // namespace detail

Word parse(std::string_view text, const Alphabet& alphabet) {
  return WordAccess::make(detail::parse_tokens(text, alphabet, detail::Holes::kNone));
}

std::string render_fragment(std::string_view tokens, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    char c = tokens[i];
    if (c == token::kOpen) {
      out.push_back('[');
      if (i + 1 < tokens.size() && tokens[i + 1] == token::kClose) out.push_back('1');
    } else if (c == token::kClose) {
      out.push_back(']');
    } else if (c == detail::kHole1) {
      out.push_back('*');
    } else if (c == detail::kHole2) {
      out.push_back('*');
    } else {
      out.push_back(alphabet.symbol(token::generator(c)));
    }
  }
  return out;
}

std::string render(const Word& w, const Alphabet& alphabet) {
  if (w.is_identity()) return "1";
  return render_fragment(w.tokens(), alphabet);
}

}  // namespace oprw
