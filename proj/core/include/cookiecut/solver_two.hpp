#pragma once

#include <array>

#include "cookiecut/types.hpp"

namespace cookiecut {

// Gale/ham-sandwich solver for two agents: exact fairness, at most m cut
// cookies, and at least floor((n-m)/2) full cookies per agent.
Allocation solve_two(const Instance& instance);

// Diagnostics for the combinatorial m=2 solver; the orientation-flip
// statistics feed the test suite.
struct M2Stats {
  std::vector<std::array<int, 2>> pairs;  // padded-instance cookie indices
  std::vector<int> winner;                // agent 1's cookie per pair
  int cut_black = -1, cut_white = -1;     // C1 and C2 (padded indices)
  int greedy_flips = 0;
  bool exhausted_orientations = false;
  bool reselected_cut_pair = false;  // the max-black/max-white pair was degenerate
  long orientations_tried = 0;
};

// Self-contained two-agent solver for m = 2 built on the max-black /
// max-white pairing argument.  Same guarantees as solve_two with at most
// 2 cut cookies.
Allocation solve_two_m2(const Instance& instance, M2Stats* stats = nullptr);

}  // namespace cookiecut
