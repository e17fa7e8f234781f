#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oprw/congruence.hpp"
#include "oprw/context.hpp"
#include "oprw/order.hpp"
#include "oprw/rewrite.hpp"
#include "oprw/rules.hpp"
#include "oprw/universe.hpp"
#include "oprw/word.hpp"

namespace oprw::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

System system_named(const std::string& name) {
  if (name == "star") return System::star_monoid();
  if (name == "group") return System::group();
  throw UsageError("--system must be 'star' or 'group', got '" + name + "'");
}

Json bindings_json(const Bindings& b, const Alphabet& alphabet) {
  Json out = Json::object();
  if (b.w) out["w"] = render(*b.w, alphabet);
  if (b.u) out["u"] = render(*b.u, alphabet);
  if (b.v) out["v"] = render(*b.v, alphabet);
  return out;
}

std::string bindings_text(const Bindings& b, const Alphabet& alphabet) {
  std::string out;
  auto add = [&](const char* name, const std::optional<Word>& w) {
    if (!w) return;
    if (!out.empty()) out.push_back(' ');
    out += std::string(name) + "=" + render(*w, alphabet);
  };
  add("w", b.w);
  add("u", b.u);
  add("v", b.v);
  return out;
}

std::string path_text(const std::vector<Word>& path, const Alphabet& alphabet) {
  std::string out;
  for (const Word& w : path) {
    if (!out.empty()) out += " ~ ";
    out += render(w, alphabet);
  }
  return out;
}

struct Options {
  std::string alphabet = "x,y";
  bool json = false;
  std::string system;

  // normalize
  bool trace = false;
  std::optional<std::uint64_t> seed;
  std::string word;

  // compare-order / equiv
  std::string word2;

  // placements / classify
  bool include_empty = false;
  std::string context1, context2;

  // confluence-check
  std::size_t max_breadth = 3;
  std::size_t max_depth = 2;
  std::size_t max_size = 9;

  // equiv
  SearchLimits limits;
};

int cmd_normalize(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  System sys = system_named(o.system);
  Word w = parse(o.word, alphabet);
  Strategy strategy = Deterministic{};
  if (o.seed) strategy = SeededRandom{*o.seed};
  Normalization n = normalize(sys, w, strategy);
  if (o.trace) {
    for (const RewriteStep& s : n.trace.steps) {
      Json line;
      line["rule"] = schema_name(s.match.schema);
      line["bindings"] = bindings_json(s.match.bindings, alphabet);
      line["context"] = render(s.match.context(), alphabet);
      line["before"] = render(s.before, alphabet);
      line["after"] = render(s.after, alphabet);
      out << line.dump() << '\n';
    }
  }
  if (o.json) {
    Json line;
    line["input"] = render(w, alphabet);
    line["system"] = sys.name();
    line["normal_form"] = render(n.normal_form, alphabet);
    line["steps"] = n.trace.size();
    out << line.dump() << '\n';
  } else {
    out << render(n.normal_form, alphabet) << '\n';
  }
  return kExitOk;
}

int cmd_matches(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  System sys = system_named(o.system);
  Word w = parse(o.word, alphabet);
  for (const RuleMatch& m : match_instances(sys, w)) {
    if (o.json) {
      Json line;
      line["rule"] = schema_name(m.schema);
      line["bindings"] = bindings_json(m.bindings, alphabet);
      line["context"] = render(m.context(), alphabet);
      line["lhs"] = render(m.lhs(), alphabet);
      line["rhs"] = render(m.rhs, alphabet);
      line["result"] = render(m.result(), alphabet);
      out << line.dump() << '\n';
      continue;
    }
    std::string b = bindings_text(m.bindings, alphabet);
    out << schema_name(m.schema) << (b.empty() ? "" : " ") << b << " @ "
        << render(m.context(), alphabet) << " -> " << render(m.result(), alphabet) << '\n';
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  auto c = compare(parse(o.word, alphabet), parse(o.word2, alphabet));
  const char* symbol = c < 0 ? "<" : c > 0 ? ">" : "=";
  if (o.json) {
    Json line;
    line["left"] = render(parse(o.word, alphabet), alphabet);
    line["right"] = render(parse(o.word2, alphabet), alphabet);
    line["order"] = symbol;
    out << line.dump() << '\n';
  } else {
    out << symbol << '\n';
  }
  return kExitOk;
}

int cmd_placements(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  Word w = parse(o.word, alphabet);
  for (const Placement& p : enumerate_placements(w, o.include_empty)) {
    if (o.json) {
      Json line;
      line["subword"] = render(p.subword, alphabet);
      line["context"] = render(p.context, alphabet);
      out << line.dump() << '\n';
    } else {
      out << render(p.subword, alphabet) << " @ " << render(p.context, alphabet) << '\n';
    }
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  Word host = parse(o.word, alphabet);
  Placement p1, p2;
  try {
    p1 = placement_in(host, parse_context(o.context1, alphabet));
    p2 = placement_in(host, parse_context(o.context2, alphabet));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Classification c = classify(host, p1, p2);
  Json line;
  std::string text;
  if (const auto* sep = std::get_if<Separated>(&c)) {
    line["class"] = "separated";
    line["witness"] = render(sep->witness, alphabet);
    text = "separated witness=" + render(sep->witness, alphabet);
  } else if (const auto* nest = std::get_if<Nested>(&c)) {
    const char* dir =
        nest->direction == Nested::Direction::kFirstInSecond ? "first-in-second" : "second-in-first";
    line["class"] = "nested";
    line["connector"] = render(nest->connector, alphabet);
    line["direction"] = dir;
    text = std::string("nested connector=") + render(nest->connector, alphabet) + " " + dir;
  } else {
    const auto& in = std::get<Intersecting>(c);
    const char* orient =
        in.orientation == Intersecting::Orientation::kFirstLeft ? "first-left" : "second-left";
    line["class"] = "intersecting";
    line["q"] = render(in.q, alphabet);
    line["a"] = render(in.a, alphabet);
    line["b"] = render(in.b, alphabet);
    line["c"] = render(in.c, alphabet);
    line["orientation"] = orient;
    text = "intersecting q=" + render(in.q, alphabet) + " a=" + render(in.a, alphabet) +
           " b=" + render(in.b, alphabet) + " c=" + render(in.c, alphabet) + " " + orient;
  }
  out << (o.json ? line.dump() : text) << '\n';
  return kExitOk;
}

int cmd_confluence(const Options& o, std::ostream& out) {
  Universe u{Alphabet::parse(o.alphabet), o.max_breadth, o.max_depth, o.max_size};
  System sys = system_named(o.system);
  ConfluenceReport r = check_local_confluence(sys, u);
  const Alphabet& a = u.alphabet;
  for (const ForkReport& f : r.violations) {
    if (o.json) {
      Json line;
      line["host"] = render(f.host, a);
      line["first_rule"] = schema_name(f.first.schema);
      line["first"] = render(f.first_result, a);
      line["second_rule"] = schema_name(f.second.schema);
      line["second"] = render(f.second_result, a);
      line["joinable"] = false;
      out << line.dump() << '\n';
    } else {
      out << "fork " << render(f.host, a) << ": " << schema_name(f.first.schema) << " -> "
          << render(f.first_result, a) << " | " << schema_name(f.second.schema) << " -> "
          << render(f.second_result, a) << " not joinable\n";
    }
  }
  if (o.json) {
    Json line;
    line["system"] = sys.name();
    line["words"] = r.words_checked;
    line["forks"] = r.forks_checked;
    line["violations"] = r.violations.size();
    out << line.dump() << '\n';
  } else {
    out << "system=" << sys.name() << " words=" << r.words_checked << " forks=" << r.forks_checked
        << " violations=" << r.violations.size() << '\n';
  }
  return kExitOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  Alphabet alphabet = Alphabet::parse(o.alphabet);
  System sys = system_named(o.system);
  Word a = parse(o.word, alphabet);
  Word b = parse(o.word2, alphabet);
  EquivalenceResult r = bfs_equivalent(sys, alphabet, a, b, o.limits);
  if (const auto* eq = std::get_if<Equivalent>(&r)) {
    if (o.json) {
      Json line;
      line["verdict"] = "equivalent";
      Json path = Json::array();
      for (const Word& w : eq->path) path.push_back(render(w, alphabet));
      line["path"] = path;
      out << line.dump() << '\n';
    } else {
      out << path_text(eq->path, alphabet) << '\n';
    }
    return kExitOk;
  }
  if (o.json) {
    Json line;
    line["verdict"] = "unknown";
    line["visited"] = std::get<Unknown>(r).visited;
    out << line.dump() << '\n';
  } else {
    out << "unknown (limits exhausted)\n";
  }
  return kExitLimits;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rewriting over free operated monoids (bracketed words)", "oprw"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--alphabet", o.alphabet, "Comma-separated generators; order is the base order")
      ->capture_default_str();
  app.add_flag("--json", o.json, "Emit one JSON object per result line");

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", o.system, "star | group")->required();
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word");
  add_system(normalize_cmd);
  normalize_cmd->add_flag("--trace", o.trace, "Print every rewrite step as a JSON line");
  normalize_cmd->add_option("--seed", o.seed, "Random rewrite strategy seed");
  normalize_cmd->add_option("word", o.word)->required();

  auto* matches_cmd = app.add_subcommand("matches", "Every redex of a word");
  add_system(matches_cmd);
  matches_cmd->add_option("word", o.word)->required();

  auto* compare_cmd = app.add_subcommand("compare-order", "Compare two words in the monomial order");
  compare_cmd->add_option("left", o.word)->required();
  compare_cmd->add_option("right", o.word2)->required();

  auto* placements_cmd = app.add_subcommand("placements", "Every placement of a word");
  placements_cmd->add_flag("--include-empty", o.include_empty, "Also list empty subwords");
  placements_cmd->add_option("word", o.word)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Relative position of two placements");
  classify_cmd->add_option("word", o.word)->required();
  classify_cmd->add_option("context1", o.context1, "Context of the first placement")->required();
  classify_cmd->add_option("context2", o.context2, "Context of the second placement")->required();

  auto* confluence_cmd = app.add_subcommand("confluence-check", "Exhaustive local confluence check");
  add_system(confluence_cmd);
  confluence_cmd->add_option("--max-breadth", o.max_breadth, "Breadth cap at every level")
      ->capture_default_str();
  confluence_cmd->add_option("--max-depth", o.max_depth)->capture_default_str();
  confluence_cmd->add_option("--max-size", o.max_size, "Cap on letters counted at all levels")
      ->capture_default_str();

  auto* equiv_cmd = app.add_subcommand("equiv", "Search for an S^c chain between two words");
  add_system(equiv_cmd);
  equiv_cmd->add_option("--max-degx", o.limits.max_word_deg_x)->capture_default_str();
  equiv_cmd->add_option("--max-breadth", o.limits.max_word_breadth)->capture_default_str();
  equiv_cmd->add_option("--max-visited", o.limits.max_visited)->capture_default_str();
  equiv_cmd->add_option("left", o.word)->required();
  equiv_cmd->add_option("right", o.word2)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o, out);
    if (*matches_cmd) return cmd_matches(o, out);
    if (*compare_cmd) return cmd_compare(o, out);
    if (*placements_cmd) return cmd_placements(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*confluence_cmd) return cmd_confluence(o, out);
    if (*equiv_cmd) return cmd_equiv(o, out);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimits;
  } catch (const std::exception& e) {
    // Budget or certificate failures; unreachable for the shipped systems.
    err << "fatal: " << e.what() << '\n';
    return kExitLimits;
  }
  return kExitUsage;
}

}  // namespace oprw::cli
