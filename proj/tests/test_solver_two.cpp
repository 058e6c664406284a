#include <doctest.h>

#include <random>

#include "cookiecut/bounds.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/random_gen.hpp"
#include "cookiecut/solver_two.hpp"

using namespace cookiecut;

namespace {

Instance make_instance(int m, std::vector<FrostingVector> cookies) {
  Instance inst;
  inst.m = m;
  inst.cookies = std::move(cookies);
  return inst;
}

}  // namespace

TEST_CASE("three unit cookies: one is halved") {
  const Instance inst = make_instance(1, {{Rat(1)}, {Rat(1)}, {Rat(1)}});
  const Allocation alloc = solve_two(inst);
  const VerificationReport report = verify(inst, alloc, 2);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes <= 1);
  CHECK(min_full(report) >= 1);
}

TEST_CASE("two unit cookies: no cut needed") {
  const Instance inst = make_instance(1, {{Rat(1)}, {Rat(1)}});
  const Allocation alloc = solve_two(inst);
  const VerificationReport report = verify(inst, alloc, 2);
  CHECK(report.fair);
  CHECK(report.strokes == 0);
  CHECK(report.full_per_agent == std::vector<long>{1, 1});
}

TEST_CASE("four cookies with two kinds") {
  const Instance inst = make_instance(
      2, {{Rat(5), Rat(1)}, {Rat(1), Rat(4)}, {Rat(3), Rat(3)}, {Rat(2), Rat(2)}});
  const Allocation alloc = solve_two(inst);
  const VerificationReport report = verify(inst, alloc, 2);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes <= 2);
  CHECK(min_full(report) >= 1);
}

TEST_CASE("tiny instances pad their way through the point construction") {
  const Instance lone = make_instance(3, {{Rat(1), Rat(2), Rat(3)}});
  const VerificationReport report = verify(lone, solve_two(lone), 2);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);

  Allocation nothing = solve_two(make_instance(2, {}));
  CHECK(nothing.n() == 0);
  CHECK(nothing.r == 2);
}

TEST_CASE("m2 algorithm reproduces the worked pairing") {
  const Instance inst = make_instance(
      2, {{Rat(5), Rat(1)}, {Rat(1), Rat(4)}, {Rat(3), Rat(3)}, {Rat(2), Rat(2)}});
  M2Stats stats;
  const Allocation alloc = solve_two_m2(inst, &stats);

  CHECK(stats.cut_black == 0);
  CHECK(stats.cut_white == 1);
  REQUIRE(stats.pairs.size() == 1);
  CHECK(stats.pairs[0] == std::array<int, 2>{2, 3});
  CHECK(stats.winner[0] == 2);  // agent 1 takes (3,3)
  CHECK(stats.greedy_flips == 0);

  // alpha = 8/19 of C1 and beta = 15/38 of C2 go to agent 1
  REQUIRE(alloc.shares[0].size() == 2);
  CHECK(alloc.shares[0][0] == std::pair<int, Rat>{1, rat(8, 19)});
  REQUIRE(alloc.shares[1].size() == 2);
  CHECK(alloc.shares[1][0] == std::pair<int, Rat>{1, rat(15, 38)});
  CHECK(alloc.shares[2] == std::vector<std::pair<int, Rat>>{{1, Rat(1)}});
  CHECK(alloc.shares[3] == std::vector<std::pair<int, Rat>>{{2, Rat(1)}});

  const VerificationReport report = verify(inst, alloc, 2);
  CHECK(report.fair);
  CHECK(report.strokes == 2);
  CHECK(min_full(report) == 1);
}

TEST_CASE("m2 handles a dead kind") {
  const Instance inst = make_instance(2, {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}});
  const VerificationReport report = verify(inst, solve_two_m2(inst), 2);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes <= 2);
}

TEST_CASE("m2 on identical cookies is exactly fair") {
  const Instance inst = make_instance(
      2, {{Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)}});
  const VerificationReport report = verify(inst, solve_two_m2(inst), 2);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes <= 2);
  CHECK(min_full(report) >= 1);
}

TEST_CASE("m2 rejects other widths") {
  CHECK_THROWS_AS((void)solve_two_m2(make_instance(1, {{Rat(1)}})), SolverError);
}

TEST_CASE("random suite: gale solver meets the two-agent contract") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 40), pick_m(1, 4);
    RandomSpec spec;
    spec.n = pick_n(rng);
    spec.m = pick_m(rng);
    const Instance inst = random_instance(rng, spec);
    const Allocation alloc = solve_two(inst);
    const VerificationReport report = verify(inst, alloc, 2);
    CHECK(report.fair);
    CHECK(report.max_residual == 0);
    CHECK(report.strokes <= inst.m);
    CHECK(min_full(report) >= guarantee_two(inst.n(), inst.m));
  }
}

TEST_CASE("random suite: m2 matches the gale solver's contract") {
  std::mt19937_64 rng(203);
  long flip_runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 30);
    RandomSpec spec;
    spec.n = pick_n(rng);
    spec.m = 2;
    const Instance inst = random_instance(rng, spec);
    M2Stats stats;
    const Allocation alloc = solve_two_m2(inst, &stats);
    const VerificationReport report = verify(inst, alloc, 2);
    CHECK(report.fair);
    CHECK(report.max_residual == 0);
    CHECK(report.strokes <= 2);
    CHECK(min_full(report) >= guarantee_two(inst.n(), 2));
    if (stats.greedy_flips > 0) ++flip_runs;

    // replay of the pairing inequality: the winners' black-frosting gap stays
    // within the largest paired black amount
    const Instance padded = pad_empty(inst, inst.n() % 2 == 1 ? 1 : 0);
    Rat gap(0), x1(0);
    for (size_t i = 0; i < stats.pairs.size(); ++i) {
      const int a = stats.pairs[i][0], b = stats.pairs[i][1];
      const int win = stats.winner[i];
      const int lose = win == a ? b : a;
      gap += padded.cookies[win][0] - padded.cookies[lose][0];
      if (padded.cookies[a][0] > x1) x1 = padded.cookies[a][0];
      if (padded.cookies[b][0] > x1) x1 = padded.cookies[b][0];
    }
    CHECK(gap <= x1);
    CHECK(gap >= -x1);
  }
  MESSAGE("orientation-flip runs: ", flip_runs, " / 60");
}
