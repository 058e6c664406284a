#pragma once

#include <optional>
#include <string>

#include "cookiecut/types.hpp"

namespace cookiecut {

enum class Method { Auto, Two, TwoM2, Prime, Pow2, Product };

Method method_from_name(const std::string& name);
const char* method_name(Method method);

// Per-run diagnostics of the group-stage construction.  `stages` records one
// entry per product step (outermost first); `pieces_per_agent` holds the
// final tiling of the (padded) instance for board-based solves.  The r = 2
// Gale path does not fill the trace.
struct ComposeTrace {
  struct StageRecord {
    int bundles_in = 0;  // bundles entering the step
    int a = 0, b = 0, m = 0;
    std::vector<long> group_fulls;  // whole bundles received per group
  };
  struct PieceRec {
    int origin = 0;
    Rat lo, hi;
  };
  std::vector<StageRecord> stages;
  std::vector<std::vector<PieceRec>> pieces_per_agent;
};

// r = a*b by solving b groups first, then a agents inside each group with
// received pieces appended to an anchor bundle.
Allocation solve_product(const Instance& instance, int a, int b, ComposeTrace* trace = nullptr);

// r = 2^t by repeated halving; pads so that r | n+m, reports on original
// cookies only.
Allocation solve_pow2(const Instance& instance, int r, ComposeTrace* trace = nullptr);

struct SolveOutput {
  Allocation alloc;
  std::optional<LabeledPartition> partition;  // set for direct prime solves
  Method resolved = Method::Auto;
  long guarantee = 0;  // the applicable full-cookie bound for the method
};

SolveOutput solve_with(const Instance& instance, int r, Method method,
                       ComposeTrace* trace = nullptr, bool force = false);

// Dispatcher: r=1 trivial, r=2 Gale, prime direct, powers of two by halving,
// anything else by prime-factor products (largest factor innermost).
Allocation solve(const Instance& instance, int r);

}  // namespace cookiecut
