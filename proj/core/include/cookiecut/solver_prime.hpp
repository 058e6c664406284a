#pragma once

#include "cookiecut/types.hpp"

namespace cookiecut {

// Factor structure of the sparse join parametrizing admissible labeled
// partitions with s = (p-1)m cuts: ceil((s+1)/2) Pair factors when s is odd,
// s/2 Pair factors plus one Single when s is even.
struct LabelingScheme {
  int p = 0;
  int m = 0;
  int s = 0;
  std::vector<FactorKind> factors;
};

LabelingScheme make_scheme(int p, int m);

// Every label sequence consistent with the scheme, first label fixed to 0
// (one representative per cyclic-relabeling orbit), in lexicographic order.
std::vector<std::vector<int>> enumerate_labelings(const LabelingScheme& scheme);

// ( (2p)^pairs * p^singles ) / p, the size of enumerate_labelings' output.
long long labeling_count(const LabelingScheme& scheme);

bool is_prime(long v);

struct PrimeOptions {
  bool force = false;
  // Inputs inside the documented envelope (p <= 5, m <= 3, <= 12 bundles)
  // are always accepted; larger ones only while the search-space estimate
  // stays under this limit, unless forced.
  double estimate_limit = 5e6;
};

// Exact solver for prime p: searches the (cut placement, labeling) space of
// the K-scheme depth-first over atoms.  Per atom, cut sequences come before
// the no-cut branch; per cut, labels are tried stepping down first (the
// no-skip cut), wider skips next, the degenerate same-label cut last; an
// atom is closed before it is cut deeper.  Prefixes whose committed shares
// overshoot T_j/p are pruned, and every surviving leaf is certified by an
// exact rational feasibility solve.  Returns the first feasible partition in
// that fixed order; identical input yields the identical partition.
LabeledPartition solve_prime(const Board& board, int p, const PrimeOptions& options = {});

}  // namespace cookiecut
