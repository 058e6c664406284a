#include "cookiecut/solver_two.hpp"

#include <algorithm>
#include <numeric>

#include "cookiecut/core.hpp"
#include "cookiecut/geometry.hpp"
#include "cookiecut/linalg.hpp"

namespace cookiecut {

namespace {

void push_share(std::vector<std::pair<int, Rat>>& shares, int agent, const Rat& frac) {
  if (frac > 0) shares.emplace_back(agent, frac);
}

}  // namespace

Allocation solve_two(const Instance& instance) {
  if (instance.m < 1) {
    throw SolverError(ErrorCode::InvalidArgument, "solve_two: need m >= 1");
  }
  const int n = instance.n();
  Allocation empty;
  empty.r = 2;
  if (n == 0) return empty;

  // Pad with empty cookies until the count is 2*n' + m with n' >= 1: one pad
  // when n+m is odd, more only when n < m+2 (where the guarantee is vacuous).
  const long d = static_cast<long>(n) - instance.m;
  const long n_prime = std::max(1L, (d + 1) / 2);
  const int pads = static_cast<int>(2 * n_prime + instance.m - n);
  const Instance padded = pad_empty(instance, pads);

  GalePointSet pts = gale_points(static_cast<int>(n_prime), instance.m);
  const OriginHyperplane plane = ham_sandwich_origin(pts, padded.cookies);

  FrostingVector pos_totals(instance.m, Rat(0));
  for (int i : plane.positive) {
    for (int j = 0; j < instance.m; ++j) pos_totals[j] += padded.cookies[i][j];
  }
  std::vector<FrostingVector> boundary_w;
  for (int i : plane.boundary) boundary_w.push_back(padded.cookies[i]);
  const auto fractions = boundary_balance(boundary_w, pos_totals, padded.totals());
  if (!fractions) {
    throw SolverError(ErrorCode::NoCandidate, "solve_two: accepted candidate lost feasibility");
  }

  Allocation alloc;
  alloc.r = 2;
  alloc.shares.resize(padded.n());
  for (int i : plane.positive) alloc.shares[i] = {{1, Rat(1)}};
  for (int i : plane.negative) alloc.shares[i] = {{2, Rat(1)}};
  for (size_t k = 0; k < plane.boundary.size(); ++k) {
    auto& entry = alloc.shares[plane.boundary[k]];
    push_share(entry, 1, (*fractions)[k]);
    push_share(entry, 2, 1 - (*fractions)[k]);
  }
  return unpad(alloc, n);
}

namespace {

// One (C1, C2) attempt: pair the rest by black descending, orient winners
// alternately along the sorted white differences, then search orientations
// for box-feasible cut fractions on C1 and C2.
struct M2Attempt {
  std::vector<int> rest;
  std::vector<int> orientation;
  RatVec fractions;  // alpha on c1, beta on c2
  int greedy_flips = 0;
  bool exhausted = false;
};

std::optional<M2Attempt> try_cut_pair(const Instance& padded, int c1, int c2, bool allow_sweep,
                                      long& orientations_tried) {
  const auto& c = padded.cookies;
  const int N = padded.n();

  M2Attempt attempt;
  for (int i = 0; i < N; ++i) {
    if (i != c1 && i != c2) attempt.rest.push_back(i);
  }
  std::sort(attempt.rest.begin(), attempt.rest.end(), [&](int a, int b) {
    if (c[a][0] != c[b][0]) return c[a][0] > c[b][0];
    return a < b;
  });

  const int num_pairs = static_cast<int>(attempt.rest.size()) / 2;
  std::vector<Rat> white_diff(num_pairs);
  for (int i = 0; i < num_pairs; ++i) {
    white_diff[i] = c[attempt.rest[2 * i]][1] - c[attempt.rest[2 * i + 1]][1];
  }

  // Alternating winners over the sorted differences keep the white gap in
  // [0, c_1].
  std::vector<int> order(num_pairs);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (white_diff[a] != white_diff[b]) return white_diff[a] > white_diff[b];
    return a < b;
  });
  std::vector<int> orient(num_pairs, 0);  // 0: first-listed cookie to agent 1
  for (int rank = 0; rank < num_pairs; ++rank) {
    orient[order[rank]] = rank % 2 == 0 ? 0 : 1;
  }

  const FrostingVector totals = padded.totals();
  auto try_orientation = [&](const std::vector<int>& o) -> std::optional<RatVec> {
    ++orientations_tried;
    FrostingVector agent1(2, Rat(0));
    for (int i = 0; i < num_pairs; ++i) {
      const int cookie = attempt.rest[2 * i + o[i]];
      agent1[0] += c[cookie][0];
      agent1[1] += c[cookie][1];
    }
    RatMat A(2, RatVec(2));
    RatVec rhs(2);
    for (int j = 0; j < 2; ++j) {
      A[j][0] = c[c1][j];
      A[j][1] = c[c2][j];
      rhs[j] = totals[j] / 2 - agent1[j];
    }
    return feasible_unit_box(A, rhs);
  };

  std::vector<int> o = orient;
  std::optional<RatVec> cut = try_orientation(o);
  if (!cut) {
    // Flip pairs greedily, largest |white difference| first, keeping earlier
    // flips.
    std::vector<int> by_abs(num_pairs);
    std::iota(by_abs.begin(), by_abs.end(), 0);
    std::sort(by_abs.begin(), by_abs.end(), [&](int a, int b) {
      const Rat abs_a = white_diff[a] < 0 ? -white_diff[a] : white_diff[a];
      const Rat abs_b = white_diff[b] < 0 ? -white_diff[b] : white_diff[b];
      if (abs_a != abs_b) return abs_a > abs_b;
      return a < b;
    });
    for (int k = 0; k < num_pairs && !cut; ++k) {
      o[by_abs[k]] ^= 1;
      ++attempt.greedy_flips;
      cut = try_orientation(o);
    }
  }
  if (!cut && allow_sweep && num_pairs <= 20) {
    attempt.exhausted = true;
    for (long mask = 0; mask < (1L << num_pairs) && !cut; ++mask) {
      for (int i = 0; i < num_pairs; ++i) o[i] = (mask >> i) & 1;
      cut = try_orientation(o);
    }
  }
  if (!cut) return std::nullopt;
  attempt.orientation = std::move(o);
  attempt.fractions = std::move(*cut);
  return attempt;
}

}  // namespace

Allocation solve_two_m2(const Instance& instance, M2Stats* stats) {
  if (instance.m != 2) {
    throw SolverError(ErrorCode::InvalidArgument, "solve_two_m2: needs exactly m = 2");
  }
  const int n = instance.n();
  Allocation empty;
  empty.r = 2;
  if (n == 0) return empty;

  const Instance padded = pad_empty(instance, n % 2 == 1 ? 1 : 0);
  const int N = padded.n();
  const auto& c = padded.cookies;

  // C1: most black (kind 0); C2: most white (kind 1) among the rest.
  int c1 = 0;
  for (int i = 1; i < N; ++i) {
    if (c[i][0] > c[c1][0]) c1 = i;
  }
  int c2 = -1;
  for (int i = 0; i < N; ++i) {
    if (i == c1) continue;
    if (c2 < 0 || c[i][1] > c[c2][1]) c2 = i;
  }

  long orientations_tried = 0;
  std::optional<M2Attempt> attempt = try_cut_pair(padded, c1, c2, true, orientations_tried);
  int chosen_c1 = c1, chosen_c2 = c2;

  if (!attempt) {
    // Degenerate cut pair (e.g. parallel weight columns): no orientation
    // admits a balancing cut of C1 and C2 at all.  Reselect the two cut
    // cookies deterministically; the budget (two cut cookies) and the pair
    // count are unchanged.
    std::vector<int> by_black(N), by_white(N);
    std::iota(by_black.begin(), by_black.end(), 0);
    by_white = by_black;
    std::sort(by_black.begin(), by_black.end(), [&](int a, int b) {
      if (c[a][0] != c[b][0]) return c[a][0] > c[b][0];
      return a < b;
    });
    std::sort(by_white.begin(), by_white.end(), [&](int a, int b) {
      if (c[a][1] != c[b][1]) return c[a][1] > c[b][1];
      return a < b;
    });
    for (int pass = 0; pass < 2 && !attempt; ++pass) {
      const bool sweep = pass == 1;  // greedy flips first, full sweeps last
      for (int i : by_black) {
        for (int j : by_white) {
          if (i == j || (i == c1 && j == c2)) continue;
          attempt = try_cut_pair(padded, i, j, sweep, orientations_tried);
          if (attempt) {
            chosen_c1 = i;
            chosen_c2 = j;
            break;
          }
        }
        if (attempt) break;
      }
    }
  }
  if (!attempt) {
    throw SolverError(ErrorCode::InfeasibleM2,
                      "solve_two_m2: no cut pair and orientation admits balancing cuts");
  }

  Allocation alloc;
  alloc.r = 2;
  alloc.shares.resize(N);
  const int num_pairs = static_cast<int>(attempt->rest.size()) / 2;
  for (int i = 0; i < num_pairs; ++i) {
    alloc.shares[attempt->rest[2 * i + attempt->orientation[i]]] = {{1, Rat(1)}};
    alloc.shares[attempt->rest[2 * i + 1 - attempt->orientation[i]]] = {{2, Rat(1)}};
  }
  push_share(alloc.shares[chosen_c1], 1, attempt->fractions[0]);
  push_share(alloc.shares[chosen_c1], 2, 1 - attempt->fractions[0]);
  push_share(alloc.shares[chosen_c2], 1, attempt->fractions[1]);
  push_share(alloc.shares[chosen_c2], 2, 1 - attempt->fractions[1]);

  if (stats != nullptr) {
    stats->pairs.clear();
    stats->winner.clear();
    for (int i = 0; i < num_pairs; ++i) {
      stats->pairs.push_back({attempt->rest[2 * i], attempt->rest[2 * i + 1]});
      stats->winner.push_back(attempt->rest[2 * i + attempt->orientation[i]]);
    }
    stats->cut_black = chosen_c1;
    stats->cut_white = chosen_c2;
    stats->greedy_flips = attempt->greedy_flips;
    stats->exhausted_orientations = attempt->exhausted;
    stats->orientations_tried = orientations_tried;
    stats->reselected_cut_pair = chosen_c1 != c1 || chosen_c2 != c2;
  }
  return unpad(alloc, n);
}

}  // namespace cookiecut
