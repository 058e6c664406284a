#pragma once

#include "cookiecut/linalg.hpp"
#include "cookiecut/types.hpp"

namespace cookiecut {

// Signed moment-curve points.  Point i (1-based) is
// (-1)^i * (1, t_i, t_i^2, ..., t_i^m); only the sign of h . v_i ever
// matters, so the vectors stay unnormalized and rational.
struct GalePointSet {
  int m = 0;
  int n_prime = 0;
  std::vector<Rat> params;  // t_1 < t_2 < ... for genuine sets
  std::vector<int> signs;   // (-1)^i

  int size() const { return static_cast<int>(params.size()); }
  RatVec point(int i) const;  // dim m+1, 0-based index
};

struct OriginHyperplane {
  RatVec normal;              // dim m+1, nonzero
  std::vector<int> boundary;  // 0-based point indices with h.v = 0
  std::vector<int> positive;
  std::vector<int> negative;
};

// t_i = i, signs alternating.  Every origin hyperplane leaves at least
// n_prime points strictly on each side (checked by validate_gale).
GalePointSet gale_points(int n_prime, int m);

// Exhaustive check over all hyperplanes spanned by m points, plus a battery
// of fixed pseudo-random rational normals.  Sidedness counts only change
// when the normal crosses a point-spanned hyperplane, so the subset sweep is
// exhaustive for the property.
bool validate_gale(const GalePointSet& pts);

// Sign of h . v_i for the hyperplane through the size-m `subset`
// (coefficients of prod (x - t_j)); works for degenerate parameter choices
// too since the polynomial identity h . v(t) = sign * prod (t - t_j) is
// unconditional.
int subset_side(const GalePointSet& pts, const std::vector<int>& subset, int i);

// Normal of the hyperplane spanned by the subset, as polynomial coefficients.
RatVec subset_normal(const GalePointSet& pts, const std::vector<int>& subset);

// Half-weight test plus boundary feasibility for one candidate subset;
// exposed so that the scaling-invariance property can be asserted per
// candidate.
bool candidate_passes(const GalePointSet& pts, const std::vector<FrostingVector>& weights,
                      const std::vector<int>& subset);

// First (lexicographic subsets, + orientation before -) candidate hyperplane
// whose open half-spaces each carry at most half of every kind and whose
// boundary admits balancing fractions.  Throws NoCandidate when no subset
// passes, which only happens for inputs violating the Gale precondition.
OriginHyperplane ham_sandwich_origin(const GalePointSet& pts,
                                     const std::vector<FrostingVector>& weights);

// Fractions x in [0,1]^k with side_totals + sum x_k * boundary_weights[k]
// equal to grand_totals / 2 in every kind, or nullopt when the polytope is
// empty.
std::optional<RatVec> boundary_balance(const std::vector<FrostingVector>& boundary_weights,
                                       const FrostingVector& side_totals,
                                       const FrostingVector& grand_totals);

}  // namespace cookiecut
