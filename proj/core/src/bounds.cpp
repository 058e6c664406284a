#include "cookiecut/bounds.hpp"

#include "cookiecut/types.hpp"

namespace cookiecut {

long floor_div(long a, long b) {
  long q = a / b, rem = a % b;
  return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

bool is_power_of_two(long r) { return r >= 1 && (r & (r - 1)) == 0; }

namespace {
void check_positive(long n, long m, long r) {
  if (n < 0 || m < 1 || r < 1) {
    throw SolverError(ErrorCode::InvalidArgument, "bounds: need n >= 0, m >= 1, r >= 1");
  }
}
}  // namespace

long guarantee_main(long n, long m, long r) {
  check_positive(n, m, r);
  const long c = m * (r - 1);
  return floor_div(n - ceil_div(c, 2), r) - c / 2;
}

long guarantee_conjecture(long n, long m, long r) {
  check_positive(n, m, r);
  return floor_div(n - m * (r - 1), r);
}

long guarantee_two(long n, long m) {
  check_positive(n, m, 2);
  return floor_div(n - m, 2);
}

long guarantee_pow2(long n, long m, long r) {
  check_positive(n, m, r);
  if (r < 2 || !is_power_of_two(r)) {
    throw SolverError(ErrorCode::InvalidArgument, "guarantee_pow2: r must be a power of two >= 2");
  }
  const long numerator = n - (r - 1) * m;
  if ((n + m) % r == 0) return numerator / r;  // exact: n+m = 0 (mod r) makes r | numerator
  return floor_div(numerator, r) - (r - 2);
}

long guarantee_naive(long n, long m, long r) {
  check_positive(n, m, r);
  return ceil_div(n, r) - (r - 1) * (m + 1);
}

long guarantee_no_vz(long n, long m, long r) {
  check_positive(n, m, r);
  return ceil_div(n, r) - m * (r - 1);
}

long worst_after_bad_cuts(long n, long m, long r, long b) {
  check_positive(n, m, r);
  if (b < 0 || b > m * (r - 1) / 2) {
    throw SolverError(ErrorCode::InvalidArgument, "worst_after_bad_cuts: b out of range");
  }
  return floor_div(n + b - (r - 1) * m, r) - b;
}

BoundsTable bounds_table(long n, long m, long r) {
  check_positive(n, m, r);
  BoundsTable t;
  t.n = n;
  t.m = m;
  t.r = r;
  t.cut_budget = (r - 1) * m;
  t.main = guarantee_main(n, m, r);
  t.conjecture = guarantee_conjecture(n, m, r);
  if (r == 2) t.two = guarantee_two(n, m);
  if (r >= 2 && is_power_of_two(r)) {
    t.pow2_general = guarantee_pow2(n, m, r);
    if ((n + m) % r == 0) t.pow2_exact = (n - (r - 1) * m) / r;
  }
  t.naive = guarantee_naive(n, m, r);
  t.no_vz = guarantee_no_vz(n, m, r);
  return t;
}

}  // namespace cookiecut
