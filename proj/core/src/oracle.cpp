#include "cookiecut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cookiecut/adversary.hpp"
#include "cookiecut/bounds.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/linalg.hpp"
#include "cookiecut/random_gen.hpp"

namespace cookiecut {

namespace {

int popcount(unsigned v) {
  int c = 0;
  while (v != 0) {
    c += static_cast<int>(v & 1U);
    v >>= 1U;
  }
  return c;
}

class OracleSearch {
 public:
  OracleSearch(const Instance& inst, int r, long budget)
      : inst_(inst), r_(r), n_(inst.n()), m_(inst.m), budget_(budget) {
    const FrostingVector totals = inst.totals();
    target_.resize(m_);
    for (int j = 0; j < m_; ++j) target_[j] = totals[j] / r_;
    fixed_.assign(r_, FrostingVector(m_, Rat(0)));
    fulls_.assign(r_, 0);
    max_best_ = n_ / r_;
  }

  OracleResult run() {
    for (unsigned mask = 0; mask < (1U << n_); ++mask) {
      if (popcount(mask) > budget_) continue;
      cut_list_.clear();
      uncut_list_.clear();
      for (int i = 0; i < n_; ++i) {
        if ((mask >> i) & 1U) cut_list_.push_back(i);
        else uncut_list_.push_back(i);
      }
      agent_masks_.assign(cut_list_.size(), 0);
      assign_.assign(uncut_list_.size(), -1);
      enum_assignments(0);
      if (done()) break;
    }
    OracleResult out;
    out.feasible = feasible_;
    out.best_min_full = best_;
    out.witness = witness_;
    out.lp_count = lp_count_;
    return out;
  }

 private:
  bool done() const { return feasible_ && best_ == max_best_; }

  void enum_assignments(size_t idx) {
    if (done()) return;
    if (idx == uncut_list_.size()) {
      long cmf = max_best_ + 1;
      for (int u = 0; u < r_; ++u) cmf = std::min(cmf, fulls_[u]);
      if (feasible_ && cmf <= best_) return;  // cannot improve and feasibility known
      enum_patterns(0, budget_);
      return;
    }
    const int cookie = uncut_list_[idx];
    const int agent_limit = cookie == 0 ? 1 : r_;  // fix cookie 1's agent: symmetry
    for (int u = 0; u < agent_limit; ++u) {
      bool ok = true;
      for (int j = 0; j < m_; ++j) {
        fixed_[u][j] += inst_.cookies[cookie][j];
        if (fixed_[u][j] > target_[j]) ok = false;
      }
      fulls_[u] += 1;
      assign_[idx] = u;
      if (ok) enum_assignments(idx + 1);
      fulls_[u] -= 1;
      for (int j = 0; j < m_; ++j) fixed_[u][j] -= inst_.cookies[cookie][j];
      if (done()) return;
    }
  }

  void enum_patterns(size_t idx, long strokes_left) {
    if (done()) return;
    if (idx == cut_list_.size()) {
      check_pattern();
      return;
    }
    for (unsigned mask = 0; mask < (1U << r_); ++mask) {
      const int sharers = popcount(mask);
      if (sharers < 2 || sharers - 1 > strokes_left) continue;
      agent_masks_[idx] = static_cast<int>(mask);
      enum_patterns(idx + 1, strokes_left - (sharers - 1));
      if (done()) return;
    }
  }

  void check_pattern() {
    // Necessary condition before the exact solve: every agent must still be
    // able to reach its target from the cookies it shares.
    for (int u = 0; u < r_; ++u) {
      for (int j = 0; j < m_; ++j) {
        Rat reach = fixed_[u][j];
        for (size_t c = 0; c < cut_list_.size(); ++c) {
          if ((agent_masks_[c] >> u) & 1) reach += inst_.cookies[cut_list_[c]][j];
        }
        if (reach < target_[j]) return;
      }
    }

    // Variables: one fraction per (cut cookie, sharer).
    std::vector<std::pair<int, int>> vars;  // (cut index, agent)
    for (size_t c = 0; c < cut_list_.size(); ++c) {
      for (int u = 0; u < r_; ++u) {
        if ((agent_masks_[c] >> u) & 1) vars.emplace_back(static_cast<int>(c), u);
      }
    }
    RatMat A;
    RatVec b;
    for (size_t c = 0; c < cut_list_.size(); ++c) {
      RatVec row(vars.size(), Rat(0));
      for (size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].first == static_cast<int>(c)) row[v] = 1;
      }
      A.push_back(std::move(row));
      b.emplace_back(1);
    }
    for (int u = 0; u < r_; ++u) {
      for (int j = 0; j < m_; ++j) {
        RatVec row(vars.size(), Rat(0));
        bool any = false;
        for (size_t v = 0; v < vars.size(); ++v) {
          if (vars[v].second != u) continue;
          const Rat& w = inst_.cookies[cut_list_[vars[v].first]][j];
          if (w != 0) {
            row[v] = w;
            any = true;
          }
        }
        const Rat rhs = target_[j] - fixed_[u][j];
        if (!any) {
          if (rhs != 0) return;
          continue;
        }
        A.push_back(std::move(row));
        b.push_back(rhs);
      }
    }

    ++lp_count_;
    const auto x = feasible_point(A, b, RatVec(vars.size(), Rat(0)),
                                  std::vector<std::optional<Rat>>(vars.size(), std::nullopt));
    if (!x) return;

    // Recount from the witness: sharers parked at fraction 0 cost no stroke,
    // sharers parked at 1 own the cookie in full.
    std::vector<long> fulls_eff = fulls_;
    for (size_t c = 0; c < cut_list_.size(); ++c) {
      int support = 0;
      int sole = -1;
      for (size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].first == static_cast<int>(c) && (*x)[v] > 0) {
          ++support;
          sole = vars[v].second;
        }
      }
      if (support == 1) fulls_eff[sole] += 1;
    }
    long val = max_best_;
    for (int u = 0; u < r_; ++u) val = std::min(val, fulls_eff[u]);

    const bool improved = !feasible_ || val > best_;
    feasible_ = true;
    if (!improved) return;
    best_ = val;

    witness_.r = r_;
    witness_.shares.assign(n_, {});
    for (size_t k = 0; k < uncut_list_.size(); ++k) {
      witness_.shares[uncut_list_[k]] = {{assign_[k] + 1, Rat(1)}};
    }
    for (size_t c = 0; c < cut_list_.size(); ++c) {
      auto& entry = witness_.shares[cut_list_[c]];
      for (size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].first == static_cast<int>(c) && (*x)[v] > 0) {
          entry.emplace_back(vars[v].second + 1, (*x)[v]);
        }
      }
    }
  }

  const Instance& inst_;
  int r_, n_, m_;
  long budget_;
  FrostingVector target_;
  std::vector<int> cut_list_, uncut_list_, agent_masks_, assign_;
  std::vector<FrostingVector> fixed_;
  std::vector<long> fulls_;
  long max_best_ = 0;
  bool feasible_ = false;
  long best_ = -1;
  Allocation witness_;
  long long lp_count_ = 0;
};

double work_of(int n, int r) { return std::pow(r, n) * std::pow(2.0, n); }

}  // namespace

OracleResult oracle_optimal(const Instance& instance, int r, long stroke_budget,
                            const OracleLimits& limits) {
  if (r < 1) throw SolverError(ErrorCode::InvalidArgument, "oracle_optimal: need r >= 1");
  if (stroke_budget < 0) {
    throw SolverError(ErrorCode::InvalidArgument, "oracle_optimal: need budget >= 0");
  }
  if (work_of(instance.n(), r) > limits.work_limit) {
    throw SolverError(ErrorCode::WorkLimit, "oracle_optimal: r^n * 2^n exceeds the work limit");
  }
  return OracleSearch(instance, r, stroke_budget).run();
}

ProbeReport probe_conjecture(int n_max, int m_max, const std::vector<int>& r_set, int trials,
                             unsigned long long seed, const OracleLimits& limits) {
  if (n_max < 1 || m_max < 1 || r_set.empty()) {
    throw SolverError(ErrorCode::InvalidArgument, "probe_conjecture: empty envelope");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(1, n_max), pick_m(1, m_max);
  std::uniform_int_distribution<size_t> pick_r(0, r_set.size() - 1);

  ProbeReport report;
  bool have_slack = false;

  auto run_one = [&](const Instance& inst, int r, const char* tag) {
    ++report.trials;
    if (work_of(inst.n(), r) > limits.work_limit) {
      ++report.skipped_work;
      return;
    }
    const long budget = static_cast<long>(r - 1) * inst.m;
    const OracleResult res = oracle_optimal(inst, r, budget, limits);
    ++report.ran;
    const long conj = guarantee_conjecture(inst.n(), inst.m, r);
    const long floor0 = std::max(conj, 0L);
    if (!res.feasible) {
      ++report.infeasible;
      ++report.violations;
      std::ostringstream msg;
      msg << tag << " n=" << inst.n() << " m=" << inst.m << " r=" << r << " infeasible at budget "
          << budget;
      report.counterexamples.push_back(msg.str());
      return;
    }
    const long slack = res.best_min_full - floor0;
    if (slack < 0) {
      ++report.violations;
      std::ostringstream msg;
      msg << tag << " n=" << inst.n() << " m=" << inst.m << " r=" << r << " best "
          << res.best_min_full << " < " << floor0;
      report.counterexamples.push_back(msg.str());
    }
    if (res.best_min_full == floor0) ++report.tight;
    if (!have_slack || slack < report.min_slack) {
      report.min_slack = slack;
      have_slack = true;
    }
  };

  for (int t = 0; t < trials; ++t) {
    RandomSpec spec;
    spec.n = pick_n(rng);
    spec.m = pick_m(rng);
    const int r = r_set[pick_r(rng)];
    const Instance inst = random_instance(rng, spec);
    run_one(inst, r, "random");
  }
  // Adversarial tail: tight instances at and just above the minimum size.
  for (int m = 1; m <= m_max; ++m) {
    for (int r : r_set) {
      const int base = (r - 1) * m;
      for (int n = base; n <= std::min(n_max, base + 2); ++n) {
        if (n < 1) continue;
        run_one(tight_instance(m, r, n), r, "tight");
      }
    }
  }
  return report;
}

}  // namespace cookiecut
