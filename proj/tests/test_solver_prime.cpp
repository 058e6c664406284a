#include <doctest.h>

#include <random>
#include <set>

#include "cookiecut/bounds.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/oracle.hpp"
#include "cookiecut/random_gen.hpp"
#include "cookiecut/solver_prime.hpp"

using namespace cookiecut;

namespace {

Instance make_instance(int m, std::vector<FrostingVector> cookies) {
  Instance inst;
  inst.m = m;
  inst.cookies = std::move(cookies);
  return inst;
}

}  // namespace

TEST_CASE("scheme shapes") {
  const LabelingScheme a = make_scheme(2, 1);  // s = 1, odd
  CHECK(a.s == 1);
  CHECK(a.factors == std::vector<FactorKind>{FactorKind::Pair});

  const LabelingScheme b = make_scheme(3, 1);  // s = 2, even
  CHECK(b.factors == std::vector<FactorKind>{FactorKind::Pair, FactorKind::Single});

  const LabelingScheme c = make_scheme(5, 2);  // s = 8
  CHECK(c.factors.size() == 5);
  CHECK(c.factors[4] == FactorKind::Single);

  CHECK_THROWS_AS((void)make_scheme(4, 1), SolverError);
}

TEST_CASE("labeling enumeration is the quotiented factor product") {
  const auto two = enumerate_labelings(make_scheme(2, 1));
  CHECK(two == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  const auto three = enumerate_labelings(make_scheme(3, 1));
  CHECK(three.size() == 6);
  CHECK(static_cast<long long>(three.size()) == labeling_count(make_scheme(3, 1)));
  for (const auto& labels : three) {
    CHECK(labels[0] == 0);
    const int diff = ((labels[0] - labels[1]) % 3 + 3) % 3;
    CHECK((diff == 0 || diff == 1));
  }

  // s = 4: two Pair factors and one Single, (2*5)^2 * 5 / 5 = 100
  CHECK(labeling_count(make_scheme(5, 1)) == 100);
  CHECK(static_cast<long long>(enumerate_labelings(make_scheme(5, 1)).size()) == 100);
  // labelings are distinct and sorted
  const auto five = enumerate_labelings(make_scheme(5, 1));
  CHECK(std::set<std::vector<int>>(five.begin(), five.end()).size() == five.size());
  CHECK(std::is_sorted(five.begin(), five.end()));
}

TEST_CASE("search-space size identity at a tiny scale") {
  // nondecreasing placements of s cuts into n cells, counted directly
  const int n = 3;  // two cuts
  long placements = 0;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = a1; a2 < n; ++a2) ++placements;
  }
  CHECK(placements == 6);  // C(n + s - 1, s)
  CHECK(labeling_count(make_scheme(3, 1)) * placements == 36);
}

TEST_CASE("two unit cookies split without strokes") {
  const Instance inst = make_instance(1, {{Rat(1)}, {Rat(1)}});
  const Board board = layout(inst);
  const LabeledPartition part = solve_prime(board, 2);
  const Allocation alloc = to_allocation(board, part);
  const VerificationReport report = verify(inst, alloc, 2, Rat(0), &part);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes == 0);
  CHECK(report.full_per_agent == std::vector<long>{1, 1});
}

TEST_CASE("three agents on a lopsided instance") {
  const Instance inst = make_instance(1, {{Rat(1)}, {Rat(1)}, {Rat(1)}, {Rat(3)}});
  const Board board = layout(inst);
  const LabeledPartition part = solve_prime(board, 3);
  const Allocation alloc = to_allocation(board, part);
  const VerificationReport report = verify(inst, alloc, 3, Rat(0), &part);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
  CHECK(report.strokes <= 2);
  CHECK(*report.bad_cuts <= 1);
  CHECK(min_full(report) >= guarantee_main(4, 1, 3));

  // the exhaustive oracle confirms min-full 1 is reachable within the budget
  const OracleResult best = oracle_optimal(inst, 3, 2);
  CHECK(best.feasible);
  CHECK(best.best_min_full == 1);
  CHECK(min_full(report) <= best.best_min_full);
}

TEST_CASE("p=2 partitions never carry bad cuts and meet the strong bound") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 10), pick_m(1, 3);
    RandomSpec spec;
    spec.n = pick_n(rng);
    spec.m = pick_m(rng);
    const Instance inst = random_instance(rng, spec);
    const Board board = layout(inst);
    const LabeledPartition part = solve_prime(board, 2);
    const VerificationReport report = verify(inst, to_allocation(board, part), 2, Rat(0), &part);
    CHECK(report.fair);
    CHECK(report.max_residual == 0);
    CHECK(*report.bad_cuts == 0);
    CHECK(report.strokes <= inst.m);
    CHECK(min_full(report) >= guarantee_two(inst.n(), inst.m));
  }
}

TEST_CASE("share rows equal the target exactly") {
  std::mt19937_64 rng(405);
  const int primes[3] = {2, 3, 5};
  for (int trial = 0; trial < 24; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 10), pick_m(1, 2), pick_p(0, 2);
    RandomSpec spec;
    spec.n = pick_n(rng);
    spec.m = pick_m(rng);
    const int p = primes[pick_p(rng)];
    const Instance inst = random_instance(rng, spec);
    const Board board = layout(inst);
    const LabeledPartition part = solve_prime(board, p);
    const ShareMatrix sm = shares(board, part);
    const FrostingVector totals = inst.totals();
    for (int u = 0; u < p; ++u) {
      for (int j = 0; j < inst.m; ++j) CHECK(sm.y[u][j] == totals[j] / p);
    }
    const long s = static_cast<long>(p - 1) * inst.m;
    const VerificationReport report = verify(inst, to_allocation(board, part), p, Rat(0), &part);
    CHECK(report.strokes <= s);
    CHECK(*report.bad_cuts <= s / 2);
    CHECK(min_full(report) >= guarantee_main(inst.n(), inst.m, p));
  }
}

TEST_CASE("identical input yields the identical partition") {
  std::mt19937_64 rng(406);
  RandomSpec spec;
  spec.n = 7;
  spec.m = 2;
  const Instance inst = random_instance(rng, spec);
  const Board board = layout(inst);
  const LabeledPartition a = solve_prime(board, 3);
  const LabeledPartition b = solve_prime(board, 3);
  CHECK(a.cuts == b.cuts);
  CHECK(a.labels == b.labels);
}

TEST_CASE("partition invariants hold structurally") {
  const Instance inst = make_instance(2, {{Rat(2), Rat(1)}, {Rat(1), Rat(5)}, {Rat(4), Rat(2)},
                                          {Rat(3), Rat(3)}, {Rat(2), Rat(2)}});
  const Board board = layout(inst);
  const LabeledPartition part = solve_prime(board, 3);
  const LabelingScheme scheme = make_scheme(3, 2);
  CHECK(part.labels.size() == part.cuts.size() + 1);
  CHECK(part.cuts.size() == static_cast<size_t>(scheme.s));
  CHECK(part.scheme == scheme.factors);
  CHECK(part.labels[0] == 0);
  CHECK(std::is_sorted(part.cuts.begin(), part.cuts.end()));
  for (size_t k = 1; k < part.labels.size(); k += 2) {
    const int diff = ((part.labels[k - 1] - part.labels[k]) % 3 + 3) % 3;
    CHECK((diff == 0 || diff == 1));  // Pair factor constraint
  }
}

TEST_CASE("the envelope gate refuses oversized inputs unless forced") {
  Instance big;
  big.m = 3;
  big.cookies.assign(30, FrostingVector(3, Rat(1)));
  const Board board = layout(big);
  CHECK_THROWS_AS((void)solve_prime(board, 7), SolverError);

  // outside the envelope but trivially cheap: accepted without force
  Instance wide;
  wide.m = 1;
  for (int i = 0; i < 14; ++i) wide.cookies.push_back({rat(i + 1, 3)});
  const Board wide_board = layout(wide);
  const LabeledPartition part = solve_prime(wide_board, 2);
  CHECK(verify(wide, to_allocation(wide_board, part), 2).fair);
}

TEST_CASE("zero-total kinds are skipped, not fatal") {
  const Instance inst = make_instance(2, {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(3), Rat(0)}});
  const Board board = layout(inst);
  const LabeledPartition part = solve_prime(board, 3);
  const VerificationReport report = verify(inst, to_allocation(board, part), 3);
  CHECK(report.fair);
  CHECK(report.max_residual == 0);
}
