#pragma once

#include <random>

#include "cookiecut/types.hpp"

namespace cookiecut {

// Random-instance utility shared by the test suites, the conjecture probe
// and the CLI; solvers never consume randomness.
struct RandomSpec {
  int n = 1;
  int m = 1;
  long max_numerator = 12;
  long max_denominator = 6;
  int zero_percent = 15;  // chance an amount is exactly zero
};

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec);

}  // namespace cookiecut
