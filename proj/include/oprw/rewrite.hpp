#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "oprw/rules.hpp"
#include "oprw/universe.hpp"
#include "oprw/word.hpp"

namespace oprw {

struct RewriteStep {
  RuleMatch match;
  Word before;
  Word after;
};

/// Applied steps in order; after_i == before_{i+1}.
struct RewriteTrace {
  std::vector<RewriteStep> steps;

  bool chains() const;
  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
};

/// Always rewrite the first match in canonical match order.
struct Deterministic {};
/// Rewrite a uniformly chosen match at every step.
struct SeededRandom {
  std::uint64_t seed = 0;
};
using Strategy = std::variant<Deterministic, SeededRandom>;

struct NormalizeOptions {
  /// Check that every step strictly decreases under compare(); a failure
  /// throws OrderViolation. Only mutant systems are run without it.
  bool certify = true;
  bool record_trace = true;
  /// Overrides step_budget(w) when set.
  std::optional<std::size_t> max_steps;
};

struct Normalization {
  Word normal_form;
  RewriteTrace trace;
};

/// A rewrite step that does not decrease under the monomial order.
class OrderViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Normalization ran past its step budget. Unreachable for terminating
/// systems; reported as a fatal diagnostic.
class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide tally of certified rewrite steps.
struct CertificateStats {
  std::uint64_t steps_checked = 0;
  std::uint64_t violations = 0;
};
CertificateStats certificate_stats();

/// Safety cap on normalization steps: 10 * (size(w) + 1)^2.
std::size_t step_budget(const Word& w);

/// All one-step successors, one per match, in match order.
std::vector<std::pair<Word, RuleMatch>> one_step_all(const System& sys, const Word& w);

bool is_irreducible(const System& sys, const Word& w);

Normalization normalize(const System& sys, const Word& w, Strategy strategy = Deterministic{},
                        const NormalizeOptions& options = {});

/// Common normal form of f and g, if they have one. Normal-form equality
/// decides joinability because both shipped systems are convergent.
std::optional<Word> joinable(const System& sys, const Word& f, const Word& g);

/// Deterministic normal forms with memoization of every intermediate word.
class NormalFormCache {
 public:
  explicit NormalFormCache(System sys, bool certify = true) : sys_(std::move(sys)), certify_(certify) {}

  const Word& get(const Word& w);
  const System& system() const { return sys_; }
  std::size_t size() const { return cache_.size(); }

 private:
  System sys_;
  bool certify_;
  std::unordered_map<Word, Word> cache_;
};

/// A local fork f -> g, f -> h.
struct ForkReport {
  Word host;
  RuleMatch first;
  RuleMatch second;
  Word first_result;
  Word second_result;
  bool joinable = false;
  std::optional<Word> common_reduct;
};

struct ConfluenceOptions {
  bool certify = true;
  std::size_t universe_cap = kDefaultUniverseCap;
};

struct ConfluenceReport {
  std::size_t words_checked = 0;
  std::size_t forks_checked = 0;
  /// Steps that failed to decrease (always 0 when certify is on, since a
  /// failure throws).
  std::size_t misoriented_steps = 0;
  /// Non-joinable forks, in universe order.
  std::vector<ForkReport> violations;

  bool confluent() const { return violations.empty() && misoriented_steps == 0; }
};

/// Enumerates every word of the universe and every unordered pair of its
/// one-step rewrites, and reports the pairs whose results have different
/// normal forms. Throws UniverseTooLarge past the cap.
ConfluenceReport check_local_confluence(const System& sys, const Universe& universe,
                                        const ConfluenceOptions& options = {});

}  // namespace oprw
