#include "cookiecut/geometry.hpp"

#include <cmath>
#include <random>

namespace cookiecut {

namespace {

int sign_of(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RatVec GalePointSet::point(int i) const {
  RatVec v(m + 1);
  Rat power(1);
  for (int k = 0; k <= m; ++k) {
    v[k] = signs[i] * power;
    power *= params[i];
  }
  return v;
}

GalePointSet gale_points(int n_prime, int m) {
  if (n_prime < 1 || m < 1) {
    throw SolverError(ErrorCode::InvalidArgument, "gale_points: need n_prime >= 1, m >= 1");
  }
  GalePointSet pts;
  pts.m = m;
  pts.n_prime = n_prime;
  const int count = 2 * n_prime + m;
  for (int i = 1; i <= count; ++i) {
    pts.params.emplace_back(i);
    pts.signs.push_back(i % 2 == 0 ? 1 : -1);
  }
  return pts;
}

RatVec subset_normal(const GalePointSet& pts, const std::vector<int>& subset) {
  // Coefficients of prod_{j in S} (x - t_j); then h . v(t) = sign * prod (t - t_j).
  RatVec poly{Rat(1)};
  for (int idx : subset) {
    RatVec next(poly.size() + 1, Rat(0));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * pts.params[idx];
    }
    poly = std::move(next);
  }
  poly.resize(pts.m + 1, Rat(0));
  return poly;
}

int subset_side(const GalePointSet& pts, const std::vector<int>& subset, int i) {
  int s = pts.signs[i];
  for (int idx : subset) {
    s *= sign_of(pts.params[i] - pts.params[idx]);
    if (s == 0) return 0;
  }
  return s;
}

namespace {

bool counts_ok(const GalePointSet& pts, const RatVec& normal) {
  int pos = 0, neg = 0;
  for (int i = 0; i < pts.size(); ++i) {
    Rat dot(0);
    Rat power(1);
    for (int k = 0; k <= pts.m; ++k) {
      dot += normal[k] * pts.signs[i] * power;
      power *= pts.params[i];
    }
    if (dot > 0) ++pos;
    else if (dot < 0) ++neg;
  }
  return pos >= pts.n_prime && neg >= pts.n_prime;
}

}  // namespace

bool validate_gale(const GalePointSet& pts) {
  const int count = pts.size();
  if (count != 2 * pts.n_prime + pts.m) return false;

  std::vector<int> subset(pts.m);
  for (int i = 0; i < pts.m; ++i) subset[i] = i;
  do {
    int pos = 0, neg = 0;
    for (int i = 0; i < count; ++i) {
      const int s = subset_side(pts, subset, i);
      if (s > 0) ++pos;
      else if (s < 0) ++neg;
    }
    if (pos < pts.n_prime || neg < pts.n_prime) return false;
  } while (next_combination(subset, count));

  // Fixed-seed battery of random integer normals as an extra consistency
  // probe over non-point-spanned directions.
  std::mt19937_64 rng(0xC00C1EULL);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec h(pts.m + 1);
    bool nonzero = false;
    for (auto& v : h) {
      int c = coord(rng);
      v = Rat(c);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    if (!counts_ok(pts, h)) return false;
  }
  return true;
}

std::optional<RatVec> boundary_balance(const std::vector<FrostingVector>& boundary_weights,
                                       const FrostingVector& side_totals,
                                       const FrostingVector& grand_totals) {
  const size_t m = grand_totals.size();
  const size_t k = boundary_weights.size();
  RatMat A(m, RatVec(k, Rat(0)));
  RatVec b(m);
  for (size_t j = 0; j < m; ++j) {
    for (size_t c = 0; c < k; ++c) A[j][c] = boundary_weights[c][j];
    b[j] = grand_totals[j] / 2 - side_totals[j];
  }
  return feasible_point(A, b, RatVec(k, Rat(0)), std::vector<std::optional<Rat>>(k, Rat(1)));
}

bool candidate_passes(const GalePointSet& pts, const std::vector<FrostingVector>& weights,
                      const std::vector<int>& subset) {
  const int m = pts.m;
  FrostingVector pos(m, Rat(0)), neg(m, Rat(0)), total(m, Rat(0));
  std::vector<FrostingVector> boundary_w;
  for (int i = 0; i < pts.size(); ++i) {
    const int s = subset_side(pts, subset, i);
    for (int j = 0; j < m; ++j) total[j] += weights[i][j];
    if (s > 0) {
      for (int j = 0; j < m; ++j) pos[j] += weights[i][j];
    } else if (s < 0) {
      for (int j = 0; j < m; ++j) neg[j] += weights[i][j];
    } else {
      boundary_w.push_back(weights[i]);
    }
  }
  for (int j = 0; j < m; ++j) {
    if (2 * pos[j] > total[j] || 2 * neg[j] > total[j]) return false;
  }
  return boundary_balance(boundary_w, pos, total).has_value();
}

OriginHyperplane ham_sandwich_origin(const GalePointSet& pts,
                                     const std::vector<FrostingVector>& weights) {
  const int count = pts.size();
  const int m = pts.m;
  if (static_cast<int>(weights.size()) != count) {
    throw SolverError(ErrorCode::InvalidArgument, "ham_sandwich_origin: one weight per point");
  }

  // Double pre-screen.  Weights are nonnegative, so partial sums carry no
  // cancellation and the 1e-6-relative margin dwarfs the accumulation error;
  // the exact check remains the authority for every surviving candidate.
  std::vector<std::vector<double>> wd(count, std::vector<double>(m));
  std::vector<double> td(m, 0.0);
  bool screen = true;
  for (int i = 0; i < count && screen; ++i) {
    for (int j = 0; j < m; ++j) {
      wd[i][j] = weights[i][j].get_d();
      if (!std::isfinite(wd[i][j]) || wd[i][j] > 1e280) screen = false;
      td[j] += wd[i][j];
    }
  }
  std::vector<double> margin(m);
  for (int j = 0; j < m; ++j) margin[j] = 1e-6 * std::max(1.0, td[j]);

  std::vector<int> subset(m);
  for (int i = 0; i < m; ++i) subset[i] = i;
  do {
    if (screen) {
      std::vector<double> pos(m, 0.0), neg(m, 0.0);
      for (int i = 0; i < count; ++i) {
        const int s = subset_side(pts, subset, i);
        if (s > 0) {
          for (int j = 0; j < m; ++j) pos[j] += wd[i][j];
        } else if (s < 0) {
          for (int j = 0; j < m; ++j) neg[j] += wd[i][j];
        }
      }
      bool plausible = true;
      for (int j = 0; j < m && plausible; ++j) {
        if (pos[j] > td[j] / 2 + margin[j] || neg[j] > td[j] / 2 + margin[j]) plausible = false;
      }
      if (!plausible) continue;
    }
    if (!candidate_passes(pts, weights, subset)) continue;

    OriginHyperplane plane;
    plane.normal = subset_normal(pts, subset);
    for (int i = 0; i < count; ++i) {
      const int s = subset_side(pts, subset, i);
      if (s > 0) plane.positive.push_back(i);
      else if (s < 0) plane.negative.push_back(i);
      else plane.boundary.push_back(i);
    }
    return plane;
  } while (next_combination(subset, count));

  throw SolverError(ErrorCode::NoCandidate,
                    "ham_sandwich_origin: no candidate hyperplane passed; the point set does not "
                    "satisfy the Gale precondition -- retry with perturbed parameters");
}

}  // namespace cookiecut
