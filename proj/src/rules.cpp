#include "oprw/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace oprw {

namespace {

bool is_single_bracket(std::string_view s) {
  return s.size() >= 2 && s.front() == token::kOpen && token::letter_end(s, 0) == s.size();
}

std::string_view content(std::string_view bracket_letter) {
  return bracket_letter.substr(1, bracket_letter.size() - 2);
}

Word word_of(std::string_view tokens) { return WordAccess::make(std::string(tokens)); }

const Word& need(const std::optional<Word>& w, const char* name) {
  if (!w) throw std::invalid_argument(std::string("missing binding ") + name);
  return *w;
}

void need_nonempty(const Word& w) {
  if (w.is_identity()) throw std::invalid_argument("psi bindings must be nonempty");
}

}  // namespace

std::string_view schema_name(Schema s) {
  switch (s) {
    case Schema::kPhi: return "phi";
    case Schema::kPsi: return "psi";
    case Schema::kOmega: return "omega";
    case Schema::kVarPhi: return "varphi";
    case Schema::kChi: return "chi";
    case Schema::kPsiReversed: return "psi_reversed";
  }
  return "?";
}

Word instance_lhs(Schema s, const Bindings& b) {
  switch (s) {
    case Schema::kPhi: return bracket(bracket(need(b.w, "w")));
    case Schema::kPsi: {
      const Word& u = need(b.u, "u");
      const Word& v = need(b.v, "v");
      need_nonempty(u);
      need_nonempty(v);
      return bracket(u * v);
    }
    case Schema::kOmega: return bracket(Word());
    case Schema::kVarPhi: return bracket(need(b.w, "w")) * need(b.w, "w");
    case Schema::kChi: return need(b.w, "w") * bracket(need(b.w, "w"));
    case Schema::kPsiReversed: {
      const Word& u = need(b.u, "u");
      const Word& v = need(b.v, "v");
      need_nonempty(u);
      need_nonempty(v);
      return bracket(v) * bracket(u);
    }
  }
  throw std::invalid_argument("unknown schema");
}

Word instance_rhs(Schema s, const Bindings& b) {
  switch (s) {
    case Schema::kPhi: return need(b.w, "w");
    case Schema::kPsi: {
      const Word& u = need(b.u, "u");
      const Word& v = need(b.v, "v");
      need_nonempty(u);
      need_nonempty(v);
      return bracket(v) * bracket(u);
    }
    case Schema::kOmega: return Word();
    case Schema::kVarPhi:
    case Schema::kChi: need(b.w, "w"); return Word();
    case Schema::kPsiReversed: {
      const Word& u = need(b.u, "u");
      const Word& v = need(b.v, "v");
      need_nonempty(u);
      need_nonempty(v);
      return bracket(u * v);
    }
  }
  throw std::invalid_argument("unknown schema");
}

System::System(std::string name, std::vector<Schema> schemas)
    : name_(std::move(name)), schemas_(std::move(schemas)) {
  std::sort(schemas_.begin(), schemas_.end());
  schemas_.erase(std::unique(schemas_.begin(), schemas_.end()), schemas_.end());
}

System System::star_monoid() {
  return System("star", {Schema::kPhi, Schema::kPsi, Schema::kOmega});
}

System System::group() {
  return System("group", {Schema::kPhi, Schema::kPsi, Schema::kVarPhi, Schema::kChi});
}

System System::without(Schema s) const {
  std::vector<Schema> kept;
  std::copy_if(schemas_.begin(), schemas_.end(), std::back_inserter(kept),
               [s](Schema t) { return t != s; });
  return System(name_ + "-without-" + std::string(schema_name(s)), std::move(kept));
}

System System::with_psi_reversed() const {
  System out = without(Schema::kPsi);
  out.schemas_.push_back(Schema::kPsiReversed);
  out.name_ = name_ + "-psi-reversed";
  return out;
}

bool System::contains(Schema s) const {
  return std::find(schemas_.begin(), schemas_.end(), s) != schemas_.end();
}

std::vector<RuleMatch> match_at(Schema schema, const Placement& p) {
  std::vector<RuleMatch> out;
  std::string_view s = p.subword.tokens();
  if (s.empty()) return out;
  auto make = [&](Bindings b, Word rhs, std::size_t split = 0) {
    out.push_back(RuleMatch{schema, std::move(b), p, std::move(rhs), split});
  };

  switch (schema) {
    case Schema::kPhi: {
      if (!is_single_bracket(s)) break;
      std::string_view c = content(s);
      if (!is_single_bracket(c)) break;
      Word w = word_of(content(c));
      make(Bindings{w, {}, {}}, w);
      break;
    }
    case Schema::kPsi: {
      if (!is_single_bracket(s)) break;
      std::string_view c = content(s);
      auto spans = token::letter_spans(c);
      for (std::size_t k = 1; k < spans.size(); ++k) {
        Word u = word_of(c.substr(0, spans[k].first));
        Word v = word_of(c.substr(spans[k].first));
        Word rhs = bracket(v) * bracket(u);
        make(Bindings{{}, std::move(u), std::move(v)}, std::move(rhs), k);
      }
      break;
    }
    case Schema::kOmega: {
      if (s.size() == 2 && s[0] == token::kOpen && s[1] == token::kClose) {
        make(Bindings{}, Word());
      }
      break;
    }
    case Schema::kVarPhi: {
      if (s.front() != token::kOpen) break;
      std::size_t e = token::letter_end(s, 0);
      std::string_view w = s.substr(1, e - 2);
      if (s.substr(e) == w) make(Bindings{word_of(w), {}, {}}, Word());
      break;
    }
    case Schema::kChi: {
      if (s.back() != token::kClose) break;
      // Start of the last letter.
      std::size_t open = 0, i = s.size();
      while (i-- > 0) {
        if (s[i] == token::kClose) {
          ++open;
        } else if (s[i] == token::kOpen && --open == 0) {
          break;
        }
      }
      std::string_view w = s.substr(i + 1, s.size() - i - 2);
      if (s.substr(0, i) == w) make(Bindings{word_of(w), {}, {}}, Word());
      break;
    }
    case Schema::kPsiReversed: {
      auto spans = token::letter_spans(s);
      if (spans.size() != 2) break;
      std::string_view first = s.substr(0, spans[0].second);
      std::string_view second = s.substr(spans[1].first);
      if (first.front() != token::kOpen || second.front() != token::kOpen) break;
      if (first.size() == 2 || second.size() == 2) break;
      Word v = word_of(content(first));
      Word u = word_of(content(second));
      Word rhs = bracket(u * v);
      make(Bindings{{}, std::move(u), std::move(v)}, std::move(rhs));
      break;
    }
  }
  return out;
}

std::vector<RuleMatch> match_instances(const System& sys, const Word& w) {
  std::vector<RuleMatch> out;
  for (const Placement& p : enumerate_placements(w)) {
    for (Schema s : sys.schemas()) {
      auto found = match_at(s, p);
      out.insert(out.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
    }
  }
  return out;
}

}  // namespace oprw
