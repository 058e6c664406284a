#include "cookiecut/random_gen.hpp"

namespace cookiecut {

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<long> numerator(1, spec.max_numerator);
  std::uniform_int_distribution<long> denominator(1, spec.max_denominator);
  std::uniform_int_distribution<int> percent(0, 99);

  Instance inst;
  inst.m = spec.m;
  inst.cookies.assign(spec.n, FrostingVector(spec.m, Rat(0)));
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.m; ++j) {
      if (percent(rng) < spec.zero_percent) continue;
      inst.cookies[i][j] = rat(numerator(rng), denominator(rng));
    }
  }
  return inst;
}

}  // namespace cookiecut
