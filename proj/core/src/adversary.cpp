#include "cookiecut/adversary.hpp"

namespace cookiecut {

Instance tight_instance(int m, int r, int n) {
  if (m < 1 || r < 1 || n < 0) {
    throw SolverError(ErrorCode::InvalidArgument, "tight_instance: need m >= 1, r >= 1, n >= 0");
  }
  if (n < (r - 1) * m) {
    throw SolverError(ErrorCode::TooFewCookies,
                      "tight_instance: need n >= (r-1)*m cookies to place every block");
  }
  Instance inst;
  inst.m = m;
  inst.cookies.assign(n, FrostingVector(m, Rat(0)));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < r - 1; ++i) {
      inst.cookies[j * (r - 1) + i][j] = rat(1, r - 1);
    }
  }
  return inst;
}

}  // namespace cookiecut
