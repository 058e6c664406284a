#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cookiecut {

// All amounts, cut positions and fractions in this library are exact
// rationals.  Fairness is an equality, so nothing here ever rounds.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "a/b", plain integers ("-3") and decimal literals ("1.25"),
// all parsed exactly.  Returns nullopt on anything else.
std::optional<Rat> parse_rational(const std::string& text);

// True for literals with a decimal point; callers use this to switch the
// verifier from exact comparison to the relative-tolerance path.
bool is_decimal_literal(const std::string& text);

// Canonical lowest-terms "a/b" form (denominator always present, >= 1).
std::string fraction_string(const Rat& q);

}  // namespace cookiecut
