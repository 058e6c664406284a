#include "cookiecut/core.hpp"

#include <algorithm>
#include <map>

namespace cookiecut {

FrostingVector Instance::totals() const {
  FrostingVector t(m, Rat(0));
  for (const auto& c : cookies) {
    for (int j = 0; j < m; ++j) t[j] += c[j];
  }
  return t;
}

FrostingVector Board::totals() const {
  FrostingVector t(m, Rat(0));
  for (const auto& a : atoms) {
    for (int j = 0; j < m; ++j) t[j] += a.frosting[j];
  }
  return t;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInstance: return "EMPTY_INSTANCE";
    case ErrorCode::MismatchedShape: return "MISMATCHED_SHAPE";
    case ErrorCode::NoCandidate: return "NO_CANDIDATE";
    case ErrorCode::InfeasibleM2: return "INFEASIBLE_M2";
    case ErrorCode::Exhausted: return "EXHAUSTED";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::WorkLimit: return "WORK_LIMIT";
    case ErrorCode::TooFewCookies: return "TOO_FEW_COOKIES";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

Board layout(const Instance& instance) {
  if (instance.n() == 0) {
    throw SolverError(ErrorCode::EmptyInstance, "layout: instance has no cookies");
  }
  Board board;
  board.m = instance.m;
  const int n = instance.n();
  for (int i = 0; i < n; ++i) {
    Atom a;
    a.origin = i;
    a.lo = Rat(0);
    a.hi = Rat(1);
    a.frosting = instance.cookies[i];
    a.board_lo = rat(i, n);
    a.board_hi = rat(i + 1, n);
    board.atoms.push_back(std::move(a));
    board.bundle_of.push_back(i);
  }
  board.bundle_count = n;
  return board;
}

int agent_of(int bundle, int label, int p) {
  int u = (bundle + label) % p;  // 0-based; cookie i = bundle+1 goes to residue i+label
  return u;
}

std::vector<BoardPiece> board_pieces(const Board& board, const LabeledPartition& partition) {
  const int p = partition.p;
  const size_t s = partition.cuts.size();
  std::vector<BoardPiece> pieces;
  for (size_t k = 0; k < board.atoms.size(); ++k) {
    const Atom& atom = board.atoms[k];
    const Rat atom_len = atom.board_hi - atom.board_lo;
    for (size_t ivl = 0; ivl <= s; ++ivl) {
      Rat lo = ivl == 0 ? Rat(0) : partition.cuts[ivl - 1];
      Rat hi = ivl == s ? Rat(1) : partition.cuts[ivl];
      if (lo < atom.board_lo) lo = atom.board_lo;
      if (hi > atom.board_hi) hi = atom.board_hi;
      if (hi <= lo) continue;
      BoardPiece piece;
      piece.atom = static_cast<int>(k);
      piece.interval = static_cast<int>(ivl);
      piece.agent = agent_of(board.bundle_of[k], partition.labels[ivl], p) + 1;
      piece.board_lo = lo;
      piece.board_hi = hi;
      piece.origin_lo = atom.lo + (lo - atom.board_lo) / atom_len * (atom.hi - atom.lo);
      piece.origin_hi = atom.lo + (hi - atom.board_lo) / atom_len * (atom.hi - atom.lo);
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

ShareMatrix shares(const Board& board, const LabeledPartition& partition) {
  ShareMatrix sm;
  sm.y.assign(partition.p, FrostingVector(board.m, Rat(0)));
  for (const BoardPiece& piece : board_pieces(board, partition)) {
    const Atom& atom = board.atoms[piece.atom];
    const Rat frac = (piece.board_hi - piece.board_lo) / (atom.board_hi - atom.board_lo);
    for (int j = 0; j < board.m; ++j) {
      sm.y[piece.agent - 1][j] += atom.frosting[j] * frac;
    }
  }
  return sm;
}

Allocation to_allocation(const Board& board, const LabeledPartition& partition) {
  int max_origin = -1;
  for (const Atom& a : board.atoms) max_origin = std::max(max_origin, a.origin);

  std::vector<std::map<int, Rat>> per_cookie(max_origin + 1);
  for (const BoardPiece& piece : board_pieces(board, partition)) {
    const int origin = board.atoms[piece.atom].origin;
    per_cookie[origin][piece.agent] += piece.origin_hi - piece.origin_lo;
  }

  Allocation alloc;
  alloc.r = partition.p;
  alloc.shares.resize(max_origin + 1);
  for (int i = 0; i <= max_origin; ++i) {
    for (const auto& [agent, frac] : per_cookie[i]) {
      if (frac > 0) alloc.shares[i].emplace_back(agent, frac);
    }
  }
  return alloc;
}

long count_bad_cuts(const LabeledPartition& partition) {
  const int p = partition.p;
  long bad = 0;
  for (size_t k = 0; k + 1 < partition.labels.size(); ++k) {
    int diff = ((partition.labels[k] - partition.labels[k + 1]) % p + p) % p;
    if (diff != 0 && diff != 1) ++bad;
  }
  return bad;
}

VerificationReport verify(const Instance& instance, const Allocation& alloc, int r,
                          const Rat& tol, const LabeledPartition* partition) {
  if (r < 1) throw SolverError(ErrorCode::InvalidArgument, "verify: r must be >= 1");
  if (alloc.n() != instance.n()) {
    throw SolverError(ErrorCode::MismatchedShape, "verify: allocation and instance disagree on n");
  }
  if (alloc.r != r) {
    throw SolverError(ErrorCode::MismatchedShape, "verify: allocation r differs from requested r");
  }

  VerificationReport report;
  report.max_residual = Rat(0);
  report.full_per_agent.assign(r, 0);

  std::vector<FrostingVector> y(r, FrostingVector(instance.m, Rat(0)));
  for (int i = 0; i < instance.n(); ++i) {
    int support = 0;
    int sole_agent = 0;
    Rat sole_frac(0);
    for (const auto& [agent, frac] : alloc.shares[i]) {
      if (agent < 1 || agent > r) {
        throw SolverError(ErrorCode::MismatchedShape, "verify: agent index out of range");
      }
      if (frac == 0) continue;
      ++support;
      sole_agent = agent;
      sole_frac = frac;
      for (int j = 0; j < instance.m; ++j) {
        y[agent - 1][j] += instance.cookies[i][j] * frac;
      }
    }
    if (support > 1) {
      report.strokes += support - 1;
      report.cookies_cut += 1;
    } else if (support == 1 && sole_frac == 1) {
      report.full_per_agent[sole_agent - 1] += 1;
    }
  }

  const FrostingVector totals = instance.totals();
  report.fair = true;
  for (int u = 0; u < r; ++u) {
    for (int j = 0; j < instance.m; ++j) {
      Rat residual = y[u][j] - totals[j] / r;
      if (residual < 0) residual = -residual;
      if (residual > report.max_residual) {
        report.max_residual = residual;
        report.worst_agent = u + 1;
        report.worst_kind = j;
      }
      Rat scale = totals[j] > 1 ? totals[j] : Rat(1);
      if (residual > tol * scale) report.fair = false;
    }
  }
  if (partition != nullptr) report.bad_cuts = count_bad_cuts(*partition);
  return report;
}

Instance pad_empty(const Instance& instance, int k) {
  Instance out = instance;
  for (int i = 0; i < k; ++i) {
    out.cookies.emplace_back(instance.m, Rat(0));
    if (!out.names.empty()) out.names.emplace_back("");
  }
  return out;
}

Allocation unpad(const Allocation& alloc, int original_n) {
  Allocation out;
  out.r = alloc.r;
  out.shares.assign(alloc.shares.begin(),
                    alloc.shares.begin() + std::min<size_t>(original_n, alloc.shares.size()));
  return out;
}

long min_full(const VerificationReport& report) {
  long best = 0;
  for (size_t u = 0; u < report.full_per_agent.size(); ++u) {
    if (u == 0 || report.full_per_agent[u] < best) best = report.full_per_agent[u];
  }
  return best;
}

}  // namespace cookiecut
