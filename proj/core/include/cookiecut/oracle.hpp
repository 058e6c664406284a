#pragma once

#include <string>

#include "cookiecut/types.hpp"

namespace cookiecut {

struct OracleLimits {
  // Guard on r^n * 2^n; the documented envelope is n <= 6, r <= 3, m <= 2.
  double work_limit = 5e6;
};

struct OracleResult {
  bool feasible = false;     // some plan within the stroke budget is fair
  long best_min_full = -1;   // max over fair plans of the minimum full count
  Allocation witness;        // first plan achieving best_min_full
  long long lp_count = 0;
};

// Exhaustive search over (cut set, sharing pattern, whole-cookie assignment)
// configurations with at most `stroke_budget` strokes, solving exact linear
// feasibility for the cut fractions.  Never invoked by the solvers; this is
// the independent ground truth the test suite compares them against.
OracleResult oracle_optimal(const Instance& instance, int r, long stroke_budget,
                            const OracleLimits& limits = {});

struct ProbeReport {
  long trials = 0;
  long ran = 0;
  long skipped_work = 0;
  long violations = 0;      // expected 0
  long infeasible = 0;      // expected 0 (budget (r-1)m always suffices)
  long tight = 0;           // best == conjectured floor((n-m(r-1))/r)
  long min_slack = 0;       // min of best - conjectured bound over ran trials
  std::vector<std::string> counterexamples;
};

// Random + adversarial instances at desk scale: does the oracle with budget
// (r-1)m always reach the conjectured floor((n-m(r-1))/r) full cookies?
ProbeReport probe_conjecture(int n_max, int m_max, const std::vector<int>& r_set, int trials,
                             unsigned long long seed, const OracleLimits& limits = {});

}  // namespace cookiecut
