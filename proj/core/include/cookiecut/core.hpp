#pragma once

#include "cookiecut/types.hpp"

namespace cookiecut {

// Embed the instance in [0,1]: cookie i occupies [(i-1)/n, i/n) as a single
// uniform atom.  Throws EmptyInstance for n = 0.
Board layout(const Instance& instance);

// 0-based agent receiving bundle `bundle` (0-based) under interval label
// `label`: the residue (bundle+1 + label) mod p, with residue 0 mapping to
// agent p.  Returned value is agent-1.
int agent_of(int bundle, int label, int p);

// One swept piece of the board: the part of `atom` covered by interval
// `interval` of the partition, credited to `agent` (1-based).
struct BoardPiece {
  int atom = 0;
  int interval = 0;
  int agent = 0;
  Rat board_lo, board_hi;
  Rat origin_lo, origin_hi;  // in the origin cookie's own parameter
};

// Sweep of (atom x partition interval) overlaps with positive length,
// ordered left to right.
std::vector<BoardPiece> board_pieces(const Board& board, const LabeledPartition& partition);

// y[u][j] = amount of kind j credited to agent u+1 under the cyclic rule
// agent = bundle index + interval label (mod p).
ShareMatrix shares(const Board& board, const LabeledPartition& partition);

// Merge the labeled sub-pieces of each original cookie by receiving agent.
// Cuts landing exactly on atom boundaries produce no stroke.  The board must
// cover every origin cookie fully (as layout() boards do).
Allocation to_allocation(const Board& board, const LabeledPartition& partition);

// Number of label transitions t -> t' with t - t' not in {0,1} (mod p).
long count_bad_cuts(const LabeledPartition& partition);

// Check a plan against an instance: fair iff every agent's every-kind total
// is within tol*max(1,T_j) of T_j/r.  Pure; tol = 0 demands exact equality.
// Pass the partition that produced the plan to get bad_cuts reported.
VerificationReport verify(const Instance& instance, const Allocation& alloc, int r,
                          const Rat& tol = Rat(0),
                          const LabeledPartition* partition = nullptr);

// Append k all-zero cookies.
Instance pad_empty(const Instance& instance, int k);

// Strip the entries of pad cookies from a solved plan; `original_n` is the
// pre-padding cookie count.
Allocation unpad(const Allocation& alloc, int original_n);

// Lowest-count entry of full_per_agent for a verified plan.
long min_full(const VerificationReport& report);

}  // namespace cookiecut
