#pragma once

#include <optional>

namespace cookiecut {

// Closed-form full-cookie guarantees.  Values may be negative; clamping to 0
// is the caller's (reporting-side) job so the algebraic identities stay
// testable.

long floor_div(long a, long b);
long ceil_div(long a, long b);
bool is_power_of_two(long r);

// floor((n - ceil(m(r-1)/2)) / r) - floor(m(r-1)/2)
long guarantee_main(long n, long m, long r);

// floor((n - m(r-1)) / r)
long guarantee_conjecture(long n, long m, long r);

// floor((n - m) / 2), the two-agent guarantee
long guarantee_two(long n, long m);

// r a power of two: (n-(r-1)m)/r when r | n+m, else floor(...) - (r-2)
long guarantee_pow2(long n, long m, long r);

// ceil(n/r) - (r-1)(m+1), the guarantee of the plain scheme that also
// bisects cookie dough
long guarantee_naive(long n, long m, long r);

// ceil(n/r) - m(r-1), the guarantee without the sparse-join construction
long guarantee_no_vz(long n, long m, long r);

// floor((n + b - (r-1)m)/r) - b after b skip-inducing cuts
long worst_after_bad_cuts(long n, long m, long r, long b);

struct BoundsTable {
  long n = 0, m = 0, r = 0;
  long cut_budget = 0;  // (r-1)m
  long main = 0;
  long conjecture = 0;
  std::optional<long> two;          // r == 2
  std::optional<long> pow2_exact;   // r power of two and r | n+m
  std::optional<long> pow2_general; // r power of two
  long naive = 0;
  long no_vz = 0;
};

BoundsTable bounds_table(long n, long m, long r);

}  // namespace cookiecut
