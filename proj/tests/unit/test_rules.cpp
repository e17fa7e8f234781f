#include <doctest.h>

#include <set>

#include "oprw/congruence.hpp"
#include "oprw/rules.hpp"
#include "oprw/universe.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace oprw;
using namespace oprw::testing;

TEST_CASE("systems") {
  System star = System::star_monoid();
  System group = System::group();
  CHECK(star.name() == "star");
  CHECK(group.name() == "group");
  CHECK(star.schemas() == std::vector<Schema>{Schema::kPhi, Schema::kPsi, Schema::kOmega});
  CHECK(group.schemas() ==
        std::vector<Schema>{Schema::kPhi, Schema::kPsi, Schema::kVarPhi, Schema::kChi});
  CHECK_FALSE(group.contains(Schema::kOmega));
  CHECK_FALSE(group.without(Schema::kPsi).contains(Schema::kPsi));
  System rev = group.with_psi_reversed();
  CHECK(rev.contains(Schema::kPsiReversed));
  CHECK_FALSE(rev.contains(Schema::kPsi));
  CHECK(schema_name(Schema::kVarPhi) == "varphi");
  CHECK(schema_name(Schema::kPsiReversed) == "psi_reversed");
}

TEST_CASE("instances") {
  Bindings w{W("xy"), std::nullopt, std::nullopt};
  Bindings uv{std::nullopt, W("x"), W("[y]")};
  CHECK(instance_lhs(Schema::kPhi, w) == W("[[xy]]"));
  CHECK(instance_rhs(Schema::kPhi, w) == W("xy"));
  CHECK(instance_lhs(Schema::kPsi, uv) == W("[x[y]]"));
  CHECK(instance_rhs(Schema::kPsi, uv) == W("[[y]][x]"));
  CHECK(instance_lhs(Schema::kOmega, {}) == W("[1]"));
  CHECK(instance_rhs(Schema::kOmega, {}).is_identity());
  CHECK(instance_lhs(Schema::kVarPhi, w) == W("[xy]xy"));
  CHECK(instance_lhs(Schema::kChi, w) == W("xy[xy]"));
  CHECK(instance_rhs(Schema::kChi, w).is_identity());
  CHECK_THROWS_AS(instance_lhs(Schema::kPsi, Bindings{std::nullopt, Word(), W("x")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instance_lhs(Schema::kPsi, Bindings{std::nullopt, W("x"), Word()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instance_lhs(Schema::kPhi, Bindings{}), std::invalid_argument);
}

TEST_CASE("match examples") {
  {
    auto ms = match_instances(System::star_monoid(), W("[[x]]"));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].schema == Schema::kPhi);
    CHECK(ms[0].bindings.w == W("x"));
    CHECK(ms[0].context().is_hole());
  }
  {
    auto ms = match_instances(System::star_monoid(), parse("[xyz]", xyz()));
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].schema == Schema::kPsi);
    CHECK(ms[0].bindings.u == parse("x", xyz()));
    CHECK(ms[0].bindings.v == parse("yz", xyz()));
    CHECK(ms[0].split == 1);
    CHECK(ms[1].bindings.u == parse("xy", xyz()));
    CHECK(ms[1].bindings.v == parse("z", xyz()));
    CHECK(ms[1].split == 2);
  }
  {
    auto ms = match_instances(System::group(), W("[x]x[x]"));
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].schema == Schema::kVarPhi);
    CHECK(ms[0].bindings.w == W("x"));
    CHECK(R(ms[0].context()) == "*[x]");
    CHECK(ms[1].schema == Schema::kChi);
    CHECK(ms[1].bindings.w == W("x"));
    CHECK(R(ms[1].context()) == "[x]*");
  }
  {
    auto ms = match_instances(System::group(), W("[1]"));
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].schema == Schema::kVarPhi);
    CHECK(ms[1].schema == Schema::kChi);
    for (const auto& m : ms) {
      CHECK(m.bindings.w == Word());
      CHECK(m.result().is_identity());
    }
    auto star = match_instances(System::star_monoid(), W("[1]"));
    REQUIRE(star.size() == 1);
    CHECK(star[0].schema == Schema::kOmega);
  }
  CHECK(match_instances(System::group(), W("[x]y[x]")).empty());
  CHECK(match_instances(System::star_monoid(), W("x[y][x]")).empty());
}

TEST_CASE("match order") {
  // [[xy]]: phi at top, psi inside it.
  auto ms = match_instances(System::star_monoid(), W("[[xy]]y"));
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].schema == Schema::kPhi);
  CHECK(ms[1].schema == Schema::kPsi);
  CHECK(R(ms[1].context()) == "[*]y");
  for (const System& sys : {System::star_monoid(), System::group()}) {
    auto words = enumerate_universe(Universe{xy(), 3, 2, 6});
    for (const Word& w : words) {
      auto got = match_instances(sys, w);
      for (std::size_t i = 1; i < got.size(); ++i) {
        const auto& a = got[i - 1].placement;
        const auto& b = got[i].placement;
        bool ok = a.begin() < b.begin() || (a.begin() == b.begin() && a.end() > b.end()) ||
                  (a == b && (got[i - 1].schema < got[i].schema ||
                              (got[i - 1].schema == got[i].schema &&
                               got[i - 1].split < got[i].split)));
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("match_at") {
  Word host = W("[x[y]]");
  Placement p{host, kHole};
  auto ms = match_at(Schema::kPsi, p);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].rhs == W("[[y]][x]"));
  CHECK(match_at(Schema::kPhi, p).empty());
}

TEST_CASE("completeness against a brute-force matcher") {
  auto words = enumerate_universe(Universe{xy(), 4, 2, 6});
  for (const System& sys : {System::star_monoid(), System::group(),
                            System::group().with_psi_reversed()}) {
    for (const Word& w : words) {
      auto got = match_instances(sys, w);
      std::set<MatchKey> actual;
      for (const RuleMatch& m : got) {
        actual.insert(key_of(m));
        CHECK(substitute(m.context(), m.lhs()) == w);
        CHECK(m.lhs() == instance_lhs(m.schema, m.bindings));
        CHECK(m.rhs == instance_rhs(m.schema, m.bindings));
      }
      CHECK(actual.size() == got.size());
      CHECK(actual == brute_matches(sys, w));
    }
  }
}

TEST_CASE("soundness") {
  auto words = enumerate_universe(Universe{xy(), 4, 2, 7});
  for (const System& sys : {System::star_monoid(), System::group()}) {
    for (const Word& w : words) {
      for (const RuleMatch& m : match_instances(sys, w)) {
        CHECK(in_relation(sys, m.lhs(), m.rhs));
        CHECK(is_rc_step(sys, w, m.result()));
        if (m.schema == Schema::kPsi) {
          CHECK_FALSE(m.bindings.u->is_identity());
          CHECK_FALSE(m.bindings.v->is_identity());
        }
      }
    }
  }
}
