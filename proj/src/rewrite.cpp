#include "oprw/rewrite.hpp"

#include <atomic>
#include <random>
#include <string>

#include "oprw/order.hpp"

namespace oprw {

namespace {

std::atomic<std::uint64_t> g_steps_checked{0};
std::atomic<std::uint64_t> g_violations{0};

void certify_step(const Word& before, const Word& after, const RuleMatch& m) {
  g_steps_checked.fetch_add(1, std::memory_order_relaxed);
  if (compare(after, before) >= 0) {
    g_violations.fetch_add(1, std::memory_order_relaxed);
    throw OrderViolation("rewrite step via " + std::string(schema_name(m.schema)) +
                         " does not decrease under the monomial order");
  }
}

std::optional<RuleMatch> first_match(const System& sys, const Word& w) {
  for (const Placement& p : enumerate_placements(w)) {
    for (Schema s : sys.schemas()) {
      auto found = match_at(s, p);
      if (!found.empty()) return std::move(found.front());
    }
  }
  return std::nullopt;
}

}  // namespace

bool RewriteTrace::chains() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1].after != steps[i].before) return false;
  }
  return true;
}

CertificateStats certificate_stats() {
  return {g_steps_checked.load(), g_violations.load()};
}

std::size_t step_budget(const Word& w) {
  std::size_t n = w.size() + 1;
  return 10 * n * n;
}

std::vector<std::pair<Word, RuleMatch>> one_step_all(const System& sys, const Word& w) {
  std::vector<std::pair<Word, RuleMatch>> out;
  for (RuleMatch& m : match_instances(sys, w)) {
    Word after = m.result();
    out.emplace_back(std::move(after), std::move(m));
  }
  return out;
}

bool is_irreducible(const System& sys, const Word& w) { return !first_match(sys, w).has_value(); }

Normalization normalize(const System& sys, const Word& w, Strategy strategy,
                        const NormalizeOptions& options) {
  const std::size_t budget = options.max_steps.value_or(step_budget(w));
  std::optional<std::mt19937_64> rng;
  if (const auto* r = std::get_if<SeededRandom>(&strategy)) rng.emplace(r->seed);

  Normalization out{w, {}};
  for (std::size_t step = 0;; ++step) {
    std::optional<RuleMatch> chosen;
    if (rng) {
      auto all = match_instances(sys, out.normal_form);
      if (!all.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        chosen = std::move(all[pick(*rng)]);
      }
    } else {
      chosen = first_match(sys, out.normal_form);
    }
    if (!chosen) return out;
    if (step == budget) {
      throw StepBudgetExceeded("normalization exceeded its budget of " + std::to_string(budget) +
                               " steps");
    }
    Word after = chosen->result();
    if (options.certify) certify_step(out.normal_form, after, *chosen);
    if (options.record_trace) {
      out.trace.steps.push_back(RewriteStep{std::move(*chosen), out.normal_form, after});
    }
    out.normal_form = std::move(after);
  }
}

std::optional<Word> joinable(const System& sys, const Word& f, const Word& g) {
  NormalizeOptions quiet;
  quiet.record_trace = false;
  Word nf = normalize(sys, f, Deterministic{}, quiet).normal_form;
  if (nf == normalize(sys, g, Deterministic{}, quiet).normal_form) return nf;
  return std::nullopt;
}

const Word& NormalFormCache::get(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  std::vector<Word> path{w};
  const std::size_t budget = step_budget(w);
  const Word* known = nullptr;
  for (std::size_t step = 0;; ++step) {
    auto m = first_match(sys_, path.back());
    if (!m) break;
    if (step == budget) {
      throw StepBudgetExceeded("normalization exceeded its budget of " + std::to_string(budget) +
                               " steps");
    }
    Word after = m->result();
    if (certify_) certify_step(path.back(), after, *m);
    if (auto it = cache_.find(after); it != cache_.end()) {
      known = &it->second;
      break;
    }
    path.push_back(std::move(after));
  }
  Word nf = known ? *known : path.back();
  for (Word& p : path) cache_.emplace(std::move(p), nf);
  return cache_.find(w)->second;
}

ConfluenceReport check_local_confluence(const System& sys, const Universe& universe,
                                        const ConfluenceOptions& options) {
  ConfluenceReport report;
  NormalFormCache nf(sys, options.certify);
  for (const Word& host : enumerate_universe(universe, options.universe_cap)) {
    ++report.words_checked;
    auto successors = one_step_all(sys, host);
    for (const auto& [after, m] : successors) {
      if (options.certify) {
        certify_step(host, after, m);
      } else if (compare(after, host) >= 0) {
        ++report.misoriented_steps;
      }
    }
    for (std::size_t i = 0; i < successors.size(); ++i) {
      for (std::size_t j = i + 1; j < successors.size(); ++j) {
        ++report.forks_checked;
        const Word& g = successors[i].first;
        const Word& h = successors[j].first;
        if (g == h) continue;
        Word ng = nf.get(g);
        const Word& nh = nf.get(h);
        if (ng == nh) continue;
        report.violations.push_back(ForkReport{host, successors[i].second, successors[j].second,
                                               g, h, false, std::nullopt});
      }
    }
  }
  return report;
}

}  // namespace oprw
