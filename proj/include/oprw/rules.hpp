#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oprw/context.hpp"
#include "oprw/word.hpp"

namespace oprw {

/// Rule families. Declaration order is the tie-break order of matches.
enum class Schema : std::uint8_t {
  kPhi,          // [[w]] -> w
  kPsi,          // [uv] -> [v][u], u, v != 1
  kOmega,        // [1] -> 1
  kVarPhi,       // [w]w -> 1
  kChi,          // w[w] -> 1
  kPsiReversed,  // [v][u] -> [uv]; only used by mutant systems
};

std::string_view schema_name(Schema s);

/// Variables bound by a match: w for Phi/VarPhi/Chi, u and v for Psi.
struct Bindings {
  std::optional<Word> w;
  std::optional<Word> u;
  std::optional<Word> v;

  friend bool operator==(const Bindings&, const Bindings&) = default;
};

/// Left- and right-hand sides of a schema instance. Throws
/// std::invalid_argument when the bindings do not fit the schema.
Word instance_lhs(Schema s, const Bindings& b);
Word instance_rhs(Schema s, const Bindings& b);

/// A named set of rule families.
class System {
 public:
  System(std::string name, std::vector<Schema> schemas);

  /// Phi, Psi, Omega: the free *-monoid.
  static System star_monoid();
  /// Phi, Psi, VarPhi, Chi: the free group. [1] -> 1 arises as VarPhi/Chi
  /// with w = 1.
  static System group();

  /// Test mutants.
  System without(Schema s) const;
  System with_psi_reversed() const;

  const std::string& name() const { return name_; }
  const std::vector<Schema>& schemas() const { return schemas_; }
  bool contains(Schema s) const;

  friend bool operator==(const System&, const System&) = default;

 private:
  std::string name_;
  std::vector<Schema> schemas_;
};

/// One redex: an instance of a schema at a placement of the host.
struct RuleMatch {
  Schema schema;
  Bindings bindings;
  Placement placement;  // subword is the instance's left-hand side
  Word rhs;
  std::size_t split = 0;  // Psi: breadth of u; otherwise 0

  const Word& lhs() const { return placement.subword; }
  const Context& context() const { return placement.context; }
  /// context|_{rhs}.
  Word result() const { return substitute(placement.context, rhs); }
};

/// Every placement of every schema instance of the system in w, ordered by
/// placement (leftmost, then outermost), then schema, then Psi split.
std::vector<RuleMatch> match_instances(const System& sys, const Word& w);

/// Matches of one schema against one fixed subword (no context search).
std::vector<RuleMatch> match_at(Schema s, const Placement& p);

}  // namespace oprw
