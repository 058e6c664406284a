#pragma once

#include <optional>
#include <vector>

#include "cookiecut/rational.hpp"

namespace cookiecut {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct LinearSolution {
  bool consistent = false;
  RatVec particular;
  std::vector<RatVec> nullspace;  // basis of the homogeneous solutions
};

// Exact row reduction of A x = b.
LinearSolution solve_linear(RatMat A, RatVec b);

// Some nonzero v with A v = 0, or nullopt when the kernel is trivial.
std::optional<RatVec> nullspace_vector(const RatMat& A);

// A point x with A x = b and lower <= x <= upper, or nullopt when the
// polytope is empty.  Entries of `upper` may be absent ("no upper bound").
// Exact phase-1 simplex with Bland's rule; the returned vertex is a
// deterministic function of the inputs.
std::optional<RatVec> feasible_point(const RatMat& A, const RatVec& b, const RatVec& lower,
                                     const std::vector<std::optional<Rat>>& upper);

// Convenience wrapper for the common box [0, 1]^k.
std::optional<RatVec> feasible_unit_box(const RatMat& A, const RatVec& b);

}  // namespace cookiecut
