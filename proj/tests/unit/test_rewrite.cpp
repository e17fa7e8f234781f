#include <doctest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "oprw/order.hpp"
#include "oprw/rewrite.hpp"
#include "oprw/universe.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace oprw;
using namespace oprw::testing;

namespace {

const System kStar = System::star_monoid();
const System kGroup = System::group();

bool letters_in_x_or_bracketed_x(const Word& w) {
  std::vector<int> signed_letters;
  return as_signed_letters(w, signed_letters);
}

void check_trace(const Word& input, const Normalization& n) {
  const auto& steps = n.trace.steps;
  CHECK(n.trace.chains());
  if (steps.empty()) {
    CHECK(n.normal_form == input);
    return;
  }
  CHECK(steps.front().before == input);
  CHECK(steps.back().after == n.normal_form);
  for (const RewriteStep& s : steps) {
    CHECK(compare(s.after, s.before) < 0);
    CHECK(s.match.result() == s.after);
    CHECK(substitute(s.match.context(), s.match.lhs()) == s.before);
  }
}

}  // namespace

TEST_CASE("one_step_all examples") {
  auto group = one_step_all(kGroup, W("[x]x[x]"));
  REQUIRE(group.size() == 2);
  CHECK(group[0].first == W("[x]"));
  CHECK(group[0].second.schema == Schema::kVarPhi);
  CHECK(group[1].first == W("[x]"));
  CHECK(group[1].second.schema == Schema::kChi);
  CHECK(one_step_all(kStar, W("x")).empty());
  auto star = one_step_all(kStar, W("[xy]"));
  REQUIRE(star.size() == 1);
  CHECK(star[0].first == W("[y][x]"));
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(kGroup, W("[x]y[x]")));
  CHECK_FALSE(is_irreducible(kGroup, W("[x]x")));
  CHECK(is_irreducible(kStar, Word()));
  CHECK(is_irreducible(kStar, W("[x]x")));
}

TEST_CASE("normalize examples") {
  {
    Word w = W("[[x]y]");
    auto n = normalize(kStar, w);
    CHECK(n.normal_form == W("[y]x"));
    REQUIRE(n.trace.size() == 2);
    CHECK(n.trace.steps[0].match.schema == Schema::kPsi);
    CHECK(n.trace.steps[1].match.schema == Schema::kPhi);
    check_trace(w, n);
    CHECK(reachable_irreducibles(kStar, w) == std::set<std::string>{std::string(W("[y]x").tokens())});
  }
  {
    Word w = W("[x]xy");
    auto n = normalize(kGroup, w);
    CHECK(n.normal_form == W("y"));
    REQUIRE(n.trace.size() == 1);
    CHECK(n.trace.steps[0].match.schema == Schema::kVarPhi);
    CHECK(R(n.trace.steps[0].match.context()) == "*y");
    CHECK(reachable_irreducibles(kGroup, w) == std::set<std::string>{std::string(W("y").tokens())});
  }
  CHECK(normalize(kGroup, W("[xy]")).normal_form == W("[y][x]"));
  for (const System& sys : {kStar, kGroup}) {
    auto n = normalize(sys, Word());
    CHECK(n.normal_form.is_identity());
    CHECK(n.trace.empty());
  }
  // Deterministic psi splits off the first letter.
  auto first = normalize(kStar, parse("[xyz]", xyz())).trace.steps.front();
  CHECK(first.match.split == 1);
  CHECK(normalize(kStar, W("[[1]]")).normal_form.is_identity());
}

TEST_CASE("record_trace off keeps the normal form") {
  NormalizeOptions quiet;
  quiet.record_trace = false;
  auto n = normalize(kGroup, W("[[x]y][x]"), Deterministic{}, quiet);
  CHECK(n.trace.empty());
  CHECK(n.normal_form == normalize(kGroup, W("[[x]y][x]")).normal_form);
}

TEST_CASE("joinable examples") {
  CHECK(joinable(kGroup, W("[x]x"), Word()) == Word());
  CHECK_FALSE(joinable(kGroup, W("x"), W("y")).has_value());
  CHECK(joinable(kStar, W("[xy]"), W("[y][x]")) == W("[y][x]"));
}

TEST_CASE("step budget") {
  CHECK(step_budget(Word()) == 10);
  CHECK(step_budget(W("x[y]")) == 10 * 4 * 4);
  NormalizeOptions tight;
  tight.max_steps = 1;
  CHECK_THROWS_AS(normalize(kStar, W("[[[[x]]]]"), Deterministic{}, tight), StepBudgetExceeded);
  tight.max_steps = 2;
  CHECK(normalize(kStar, W("[[[[x]]]]"), Deterministic{}, tight).normal_form == W("x"));
  // A deep tower normalizes within the default budget.
  Word tower;
  for (int i = 0; i < 200; ++i) tower = bracket(tower);
  CHECK(normalize(kStar, tower).normal_form.is_identity());
  CHECK(normalize(kGroup, tower).normal_form.is_identity());
}

TEST_CASE("normal forms are the unique reachable irreducibles") {
  auto words = enumerate_universe(Universe{xy(), 3, 2, 6});
  for (const System& sys : {kStar, kGroup}) {
    for (const Word& w : words) {
      auto n = normalize(sys, w);
      check_trace(w, n);
      CHECK(is_irreducible(sys, n.normal_form));
      auto reach = reachable_irreducibles(sys, w);
      REQUIRE(reach.size() == 1);
      CHECK(*reach.begin() == n.normal_form.tokens());
    }
  }
}

TEST_CASE("strategy independence on random words") {
  WordGen gen(2, 41);
  WordShape shape{5, 3};
  for (const System& sys : {kStar, kGroup}) {
    for (int i = 0; i < 200; ++i) {
      Word w = gen.word(shape);
      Word nf = normalize(sys, w).normal_form;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto n = normalize(sys, w, SeededRandom{seed * 977 + i});
        check_trace(w, n);
        CHECK(n.normal_form == nf);
      }
    }
  }
}

TEST_CASE("seeded strategies are reproducible") {
  Word w = W("[[x]y[[y]x]][x]x");
  auto a = normalize(kGroup, w, SeededRandom{7});
  auto b = normalize(kGroup, w, SeededRandom{7});
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(a.trace.steps[i].after == b.trace.steps[i].after);
}

TEST_CASE("star normal forms match the involution monoid") {
  WordGen gen(3, 42);
  WordShape shape{5, 3};
  for (int i = 0; i < 500; ++i) {
    Word w = gen.word(shape);
    Word nf = normalize(kStar, w).normal_form;
    REQUIRE(letters_in_x_or_bracketed_x(nf));
    auto expect = star_value(w);
    std::vector<std::pair<int, bool>> got;
    std::vector<int> signed_letters;
    as_signed_letters(nf, signed_letters);
    for (int s : signed_letters) got.emplace_back(std::abs(s) - 1, s < 0);
    CHECK(got == expect);
  }
}

TEST_CASE("group normal forms match the free group") {
  WordGen gen(3, 43);
  WordShape shape{5, 3};
  for (int i = 0; i < 500; ++i) {
    Word w = gen.word(shape);
    Word nf = normalize(kGroup, w).normal_form;
    std::vector<int> signed_letters;
    REQUIRE(as_signed_letters(nf, signed_letters));
    for (std::size_t k = 1; k < signed_letters.size(); ++k) {
      CHECK(signed_letters[k] != -signed_letters[k - 1]);
    }
    CHECK(signed_letters == free_group_value(w));
  }
}

TEST_CASE("normal form cache") {
  NormalFormCache cache(kGroup);
  WordGen gen(2, 44);
  WordShape shape{4, 2};
  for (int i = 0; i < 300; ++i) {
    Word w = gen.word(shape);
    CHECK(cache.get(w) == normalize(kGroup, w).normal_form);
  }
  CHECK(cache.size() >= 1);
  CHECK(cache.system() == kGroup);
}

TEST_CASE("local confluence of both systems on a small universe") {
  Universe u{xy(), 3, 2, 6};
  for (const System& sys : {kStar, kGroup}) {
    auto report = check_local_confluence(sys, u);
    CHECK(report.confluent());
    CHECK(report.words_checked == enumerate_universe(u).size());
    CHECK(report.forks_checked > 0);
  }
  CHECK_THROWS_AS(check_local_confluence(kGroup, Universe{xy(), 3, 2, 9}, {true, 10}),
                  UniverseTooLarge);
}

TEST_CASE("mutants are detected") {
  Universe u{xy(), 4, 2, 7};
  for (Schema s : kGroup.schemas()) {
    auto report = check_local_confluence(kGroup.without(s), u);
    INFO("without ", schema_name(s));
    CHECK_FALSE(report.confluent());
    CHECK_FALSE(report.violations.empty());
    for (const ForkReport& f : report.violations) {
      CHECK_FALSE(f.joinable);
      CHECK_FALSE(f.common_reduct.has_value());
      CHECK(f.first.result() == f.first_result);
      CHECK(f.second.result() == f.second_result);
    }
  }
  ConfluenceOptions uncertified;
  uncertified.certify = false;
  auto reversed = check_local_confluence(kGroup.with_psi_reversed(), u, uncertified);
  CHECK(reversed.misoriented_steps > 0);
  CHECK_FALSE(reversed.confluent());
}

TEST_CASE("specific mutant forks") {
  // Without phi, [[x]] cannot collapse; x[x][[x]] forks into [[x]] and x.
  Universe tiny{xy(), 3, 2, 6};
  auto report = check_local_confluence(kGroup.without(Schema::kPhi), tiny);
  bool found = false;
  for (const ForkReport& f : report.violations) found |= f.host == W("x[x][[x]]");
  CHECK(found);
}

TEST_CASE("certificate counters advance") {
  auto before = certificate_stats();
  normalize(kStar, W("[[x]y]"));
  auto after = certificate_stats();
  CHECK(after.steps_checked == before.steps_checked + 2);
  CHECK(after.violations == 0);
}
