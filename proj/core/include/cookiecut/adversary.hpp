#pragma once

#include "cookiecut/types.hpp"

namespace cookiecut {

// The cut-count lower-bound construction: m disjoint blocks of r-1 cookies,
// block j carrying 1/(r-1) of kind j per cookie, padded with zero cookies up
// to n.  Any fair division must cut all (r-1)m frosted cookies.
Instance tight_instance(int m, int r, int n);

}  // namespace cookiecut
