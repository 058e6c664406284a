#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cookiecut/rational.hpp"

namespace cookiecut {

// One amount per frosting kind.  Length always equals the instance's m.
using FrostingVector = std::vector<Rat>;

struct Instance {
  int m = 0;
  std::vector<FrostingVector> cookies;
  std::vector<std::string> names;  // optional; empty or one per cookie

  int n() const { return static_cast<int>(cookies.size()); }
  FrostingVector totals() const;
};

// A sub-piece of one original cookie, carrying a uniform frosting density.
// `lo`/`hi` live in the origin cookie's own [0,1] parameter; `board_lo`/
// `board_hi` place the atom inside the board interval [0,1].
struct Atom {
  int origin = 0;
  Rat lo, hi;
  FrostingVector frosting;
  Rat board_lo, board_hi;
};

// The interval representation of a set of bundles: ordered atoms tiling
// [0,1].  `bundle_of[k]` is the index of the bundle ("cookie" at this solve
// level) that atom k belongs to; for boards built by layout() the bundle
// index equals the origin cookie index.
struct Board {
  int m = 0;
  std::vector<Atom> atoms;
  std::vector<int> bundle_of;
  int bundle_count = 0;

  FrostingVector totals() const;
};

enum class FactorKind { Pair, Single };

// Cut positions plus per-interval labels in Z_p.  Within a Pair factor the
// left label x and right label y satisfy x - y = 0 or 1 (mod p); labels are
// unconstrained across factor boundaries.
struct LabeledPartition {
  int p = 0;
  std::vector<Rat> cuts;           // nondecreasing, in [0,1]
  std::vector<int> labels;         // cuts.size() + 1 values in {0..p-1}
  std::vector<FactorKind> scheme;  // Pair spans two intervals, Single one
};

// Final cut plan: per cookie, the agents sharing it with their fractions.
// Fractions are positive and sum to 1 per cookie; a single entry with
// fraction 1 is a full cookie.
struct Allocation {
  int r = 0;
  std::vector<std::vector<std::pair<int, Rat>>> shares;  // agent in 1..r

  int n() const { return static_cast<int>(shares.size()); }
};

struct ShareMatrix {
  std::vector<FrostingVector> y;  // y[agent-1][kind]
};

struct VerificationReport {
  bool fair = false;
  Rat max_residual;
  int worst_agent = 0;  // 1-based agent of the max residual (0 if none)
  int worst_kind = -1;  // 0-based kind of the max residual
  long strokes = 0;
  long cookies_cut = 0;
  std::vector<long> full_per_agent;
  std::optional<long> bad_cuts;
};

enum class ErrorCode {
  EmptyInstance,
  MismatchedShape,
  NoCandidate,
  InfeasibleM2,
  Exhausted,
  BudgetExceeded,
  WorkLimit,
  TooFewCookies,
  InvalidArgument,
  MalformedInput,
};

struct SolverError : std::runtime_error {
  ErrorCode code;
  SolverError(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* error_code_name(ErrorCode code);

}  // namespace cookiecut
