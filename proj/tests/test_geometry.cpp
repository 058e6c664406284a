#include <doctest.h>

#include <random>

#include "cookiecut/geometry.hpp"
#include "cookiecut/random_gen.hpp"

using namespace cookiecut;

TEST_CASE("gale points are alternating moment-curve points") {
  const GalePointSet pts = gale_points(1, 1);
  REQUIRE(pts.size() == 3);
  CHECK(pts.point(0) == RatVec{Rat(-1), Rat(-1)});  // -(1, 1)
  CHECK(pts.point(1) == RatVec{Rat(1), Rat(2)});
  CHECK(pts.point(2) == RatVec{Rat(-1), Rat(-3)});  // -(1, 3)

  CHECK(gale_points(2, 2).size() == 6);
  CHECK(gale_points(2, 3).size() == 7);
}

TEST_CASE("the line through the first point splits the other two") {
  const GalePointSet pts = gale_points(1, 1);
  // normal (1,-1) vanishes on -(1,1)
  const RatVec h = subset_normal(pts, {0});
  Rat dot0 = h[0] * pts.point(0)[0] + h[1] * pts.point(0)[1];
  CHECK(dot0 == 0);
  CHECK(subset_side(pts, {0}, 1) * subset_side(pts, {0}, 2) < 0);
}

TEST_CASE("gale sets validate; degenerate sets do not") {
  CHECK(validate_gale(gale_points(1, 1)));
  CHECK(validate_gale(gale_points(2, 2)));
  CHECK(validate_gale(gale_points(3, 2)));

  GalePointSet degenerate;
  degenerate.m = 1;
  degenerate.n_prime = 1;
  degenerate.params = {Rat(1), Rat(1), Rat(1)};
  degenerate.signs = {1, 1, 1};
  CHECK(!validate_gale(degenerate));
}

TEST_CASE("ham sandwich on unit weights balances around one boundary point") {
  const GalePointSet pts = gale_points(1, 1);
  const std::vector<FrostingVector> weights(3, FrostingVector{Rat(1)});
  const OriginHyperplane plane = ham_sandwich_origin(pts, weights);
  REQUIRE(plane.boundary.size() == 1);
  CHECK(plane.positive.size() == 1);
  CHECK(plane.negative.size() == 1);
  const auto x = boundary_balance({weights[plane.boundary[0]]}, {Rat(1)}, {Rat(3)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1, 2));
}

TEST_CASE("zero weights accept the first candidate") {
  const GalePointSet pts = gale_points(2, 1);
  const std::vector<FrostingVector> weights(5, FrostingVector{Rat(0)});
  const OriginHyperplane plane = ham_sandwich_origin(pts, weights);
  REQUIRE(plane.boundary.size() == 1);
  CHECK(plane.boundary[0] == 0);
}

TEST_CASE("concentrated weight forces the plane through its point") {
  const GalePointSet pts = gale_points(2, 2);
  std::vector<FrostingVector> weights(6, FrostingVector{Rat(0), Rat(0)});
  weights[2] = {Rat(4), Rat(6)};
  const OriginHyperplane plane = ham_sandwich_origin(pts, weights);
  bool on_boundary = false;
  for (int i : plane.boundary) on_boundary = on_boundary || i == 2;
  CHECK(on_boundary);
  FrostingVector pos(2, Rat(0));
  for (int i : plane.positive) {
    pos[0] += weights[i][0];
    pos[1] += weights[i][1];
  }
  CHECK(pos[0] == 0);
  CHECK(pos[1] == 0);
}

TEST_CASE("the returned plane satisfies the half-weight inequalities exactly") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> pick_np(1, 4), pick_m(1, 3);
    const int n_prime = pick_np(rng);
    const int m = pick_m(rng);
    const GalePointSet pts = gale_points(n_prime, m);
    RandomSpec spec;
    spec.n = pts.size();
    spec.m = m;
    const Instance weights_inst = random_instance(rng, spec);
    const OriginHyperplane plane = ham_sandwich_origin(pts, weights_inst.cookies);

    FrostingVector total(m, Rat(0)), pos(m, Rat(0)), neg(m, Rat(0));
    for (int i = 0; i < pts.size(); ++i) {
      for (int j = 0; j < m; ++j) total[j] += weights_inst.cookies[i][j];
    }
    for (int i : plane.positive) {
      for (int j = 0; j < m; ++j) pos[j] += weights_inst.cookies[i][j];
    }
    for (int i : plane.negative) {
      for (int j = 0; j < m; ++j) neg[j] += weights_inst.cookies[i][j];
    }
    for (int j = 0; j < m; ++j) {
      CHECK(2 * pos[j] <= total[j]);
      CHECK(2 * neg[j] <= total[j]);
    }
  }
}

TEST_CASE("candidate pass status is invariant under scaling one kind") {
  std::mt19937_64 rng(103);
  const GalePointSet pts = gale_points(2, 2);
  RandomSpec spec;
  spec.n = pts.size();
  spec.m = 2;
  const Instance base = random_instance(rng, spec);
  Instance scaled = base;
  for (auto& cookie : scaled.cookies) cookie[1] *= rat(7, 3);

  std::vector<int> subset{0, 1};
  do {
    CHECK(candidate_passes(pts, base.cookies, subset) ==
          candidate_passes(pts, scaled.cookies, subset));
    // advance the combination by hand
    if (subset[1] < pts.size() - 1) {
      ++subset[1];
    } else if (subset[0] < pts.size() - 2) {
      ++subset[0];
      subset[1] = subset[0] + 1;
    } else {
      break;
    }
  } while (true);
}

TEST_CASE("boundary balance solves the box-constrained equalities exactly") {
  const auto one = boundary_balance({{Rat(1)}}, {Rat(1)}, {Rat(3)});
  REQUIRE(one.has_value());
  CHECK((*one)[0] == rat(1, 2));

  const auto zeros = boundary_balance({{Rat(0)}, {Rat(0)}}, {rat(3, 2)}, {Rat(3)});
  REQUIRE(zeros.has_value());
  CHECK((*zeros)[0] == 0);
  CHECK((*zeros)[1] == 0);

  const auto pair = boundary_balance({{Rat(2), Rat(0)}, {Rat(0), Rat(2)}},
                                     {Rat(1), Rat(1)}, {Rat(4), Rat(4)});
  REQUIRE(pair.has_value());
  CHECK((*pair)[0] == rat(1, 2));
  CHECK((*pair)[1] == rat(1, 2));

  // side already past the half: no fractions can fix it
  CHECK(!boundary_balance({{Rat(0)}}, {Rat(2)}, {Rat(3)}).has_value());
}

TEST_CASE("balance solutions substitute back with zero residual") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    RandomSpec spec;
    spec.n = 3;
    spec.m = 2;
    const Instance w = random_instance(rng, spec);
    FrostingVector total(2, Rat(0));
    for (const auto& cookie : w.cookies) {
      total[0] += cookie[0];
      total[1] += cookie[1];
    }
    const auto x = boundary_balance(w.cookies, FrostingVector(2, Rat(0)), total);
    if (!x.has_value()) continue;  // side 0 + boundary must reach T/2; may be infeasible
    for (int j = 0; j < 2; ++j) {
      Rat sum(0);
      for (size_t k = 0; k < w.cookies.size(); ++k) sum += (*x)[k] * w.cookies[k][j];
      CHECK(sum == total[j] / 2);
    }
  }
}
