#include "cookiecut/solver_prime.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "cookiecut/core.hpp"
#include "cookiecut/linalg.hpp"

namespace cookiecut {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

LabelingScheme make_scheme(int p, int m) {
  if (!is_prime(p)) throw SolverError(ErrorCode::InvalidArgument, "make_scheme: p must be prime");
  if (m < 1) throw SolverError(ErrorCode::InvalidArgument, "make_scheme: m must be >= 1");
  LabelingScheme scheme;
  scheme.p = p;
  scheme.m = m;
  scheme.s = (p - 1) * m;
  const int pairs = scheme.s % 2 == 1 ? (scheme.s + 1) / 2 : scheme.s / 2;
  scheme.factors.assign(pairs, FactorKind::Pair);
  if (scheme.s % 2 == 0) scheme.factors.push_back(FactorKind::Single);
  return scheme;
}

long long labeling_count(const LabelingScheme& scheme) {
  long long count = 1;
  for (FactorKind f : scheme.factors) {
    count *= f == FactorKind::Pair ? 2LL * scheme.p : scheme.p;
  }
  return count / scheme.p;
}

std::vector<std::vector<int>> enumerate_labelings(const LabelingScheme& scheme) {
  const int p = scheme.p;
  std::vector<std::vector<int>> out;
  std::vector<int> current;

  auto pair_rights = [&](int left) {
    std::vector<int> ys{left, (left - 1 + p) % p};
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return ys;
  };

  std::function<void(size_t)> rec = [&](size_t factor) {
    if (factor == scheme.factors.size()) {
      out.push_back(current);
      return;
    }
    const bool first = factor == 0;
    if (scheme.factors[factor] == FactorKind::Pair) {
      for (int x = 0; x < (first ? 1 : p); ++x) {
        current.push_back(x);
        for (int y : pair_rights(x)) {
          current.push_back(y);
          rec(factor + 1);
          current.pop_back();
        }
        current.pop_back();
      }
    } else {
      for (int x = 0; x < (first ? 1 : p); ++x) {
        current.push_back(x);
        rec(factor + 1);
        current.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Small dense floating-point phase-1 used to discard clearly infeasible leaf
// systems before the exact solve.  Conservative: it only answers
// "certainly infeasible" (residual above a scaled margin) or "unsure".
bool float_certainly_infeasible(const std::vector<std::vector<double>>& A,
                                const std::vector<double>& b) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A[0].size();
  double scale = 1.0;
  for (double v : b) scale = std::max(scale, std::fabs(v));

  std::vector<std::vector<double>> t(rows, std::vector<double>(cols + rows + 1, 0.0));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (size_t j = 0; j < cols; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
    t[i][cols + i] = 1.0;
    t[i].back() = flip ? -b[i] : b[i];
    basis[i] = cols + i;
  }
  const double eps = 1e-9 * scale;
  for (int iter = 0; iter < 500; ++iter) {
    int entering = -1;
    for (size_t j = 0; j < cols; ++j) {
      double reduced = 0.0;
      for (size_t i = 0; i < rows; ++i) {
        if (basis[i] >= cols) reduced -= t[i][j];
      }
      if (reduced < -eps) {
        entering = static_cast<int>(j);
        break;
      }
    }
    if (entering < 0) break;
    int leaving = -1;
    double best_ratio = 0.0;
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][entering] <= eps) continue;
      const double ratio = t[i].back() / t[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return false;  // numerically odd; defer to the exact solve
    const double inv = t[leaving][entering];
    for (auto& v : t[leaving]) v /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (static_cast<int>(i) == leaving || t[i][entering] == 0.0) continue;
      const double factor = t[i][entering];
      for (size_t j = 0; j < t[i].size(); ++j) t[i][j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
    if (iter == 499) return false;  // hit the cap: unsure
  }
  double residual = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    if (basis[i] >= cols) residual += t[i].back();
  }
  return residual > 1e-6 * scale;
}

struct FlexEntry {
  int atom = 0;
  int label_from = 0;  // interval index of the atom's first part
  int parts = 0;
  unsigned agent_mask = 0;
  bool zero_mass = false;
};

class PrimeSearch {
 public:
  PrimeSearch(const Board& board, int p, bool allow_screen)
      : board_(board),
        p_(p),
        m_(board.m),
        s_((p - 1) * board.m),
        natoms_(static_cast<int>(board.atoms.size())) {
    const FrostingVector totals = board.totals();
    target_.resize(m_);
    target_d_.resize(m_);
    margin_.resize(m_);
    screen_ok_ = allow_screen;
    for (int j = 0; j < m_; ++j) {
      target_[j] = totals[j] / p_;
      target_d_[j] = target_[j].get_d();
      const double total_d = totals[j].get_d();
      if (!std::isfinite(total_d)) screen_ok_ = false;
      margin_[j] = 1e-7 * std::max(1.0, total_d);
    }
    suffix_d_.assign(natoms_ + 1, std::vector<double>(m_, 0.0));
    mass_d_.assign(natoms_, std::vector<double>(m_, 0.0));
    len_d_.assign(natoms_, 0.0);
    for (int a = natoms_ - 1; a >= 0; --a) {
      for (int j = 0; j < m_; ++j) {
        mass_d_[a][j] = board_.atoms[a].frosting[j].get_d();
        suffix_d_[a][j] = suffix_d_[a + 1][j] + mass_d_[a][j];
      }
      len_d_[a] = Rat(board_.atoms[a].board_hi - board_.atoms[a].board_lo).get_d();
    }
    fixed_.assign(p_, FrostingVector(m_, Rat(0)));
    fixed_d_.assign(p_, std::vector<double>(m_, 0.0));
    flexpot_d_.assign(p_, std::vector<double>(m_, 0.0));
    labels_.push_back(0);
    assigned_sig_.assign(p_, {});

    // Intern atom signatures; the failed-state memo only pays off when the
    // board carries interchangeable (duplicate or zero) atoms.
    std::vector<std::string> sigs;
    for (const Atom& atom : board_.atoms) {
      std::string sig;
      for (int j = 0; j < m_; ++j) sig += atom.frosting[j].get_str() + ",";
      sigs.push_back(std::move(sig));
    }
    std::vector<std::string> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    sig_of_.resize(natoms_);
    for (int a = 0; a < natoms_; ++a) {
      sig_of_[a] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[a]) - sorted.begin());
    }
    use_memo_ = sorted.size() < sigs.size();
  }

  bool run() { return visit(0, 0); }

  std::vector<int> final_labels;
  std::vector<FlexEntry> final_entries;
  RatVec final_lambda;
  int final_cuts = 0;

 private:
  int part_agent(const FlexEntry& e, int i) const {
    return agent_of(board_.bundle_of[e.atom], labels_[e.label_from + i], p_);
  }

  bool visit(int a, int c) {
    if (found_) return true;
    if (a == natoms_) return leaf(c);
    std::string key;
    if (use_memo_) {
      key = state_key(a, c);
      if (failed_.count(key) > 0) return false;
    }
    const bool ok = expand(a, c);
    if (use_memo_ && !ok && failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return ok;
  }

  bool expand(int a, int c) {
    // Cut branches first: fair partitions at this scale cut most atoms, so
    // the cut-free branch is the long shot.
    if (c < s_) {
      FlexEntry entry;
      entry.atom = a;
      entry.label_from = c;
      entry.parts = 1;
      entry.agent_mask = 1U << agent_of(board_.bundle_of[a], labels_.back(), p_);
      if (add_cut(a, c, entry)) return true;
    }

    const int agent = agent_of(board_.bundle_of[a], labels_.back(), p_);
    const FrostingVector& mass = board_.atoms[a].frosting;
    for (int j = 0; j < m_; ++j) {
      fixed_[agent][j] += mass[j];
      fixed_d_[agent][j] += mass_d_[a][j];
    }
    assigned_sig_[agent].push_back(sig_of_[a]);
    const bool ok = check_fixed(agent) && check_reach(a + 1) && visit(a + 1, c);
    assigned_sig_[agent].pop_back();
    for (int j = 0; j < m_; ++j) {
      fixed_[agent][j] -= mass[j];
      fixed_d_[agent][j] -= mass_d_[a][j];
    }
    return ok;
  }

  // Label order for cut k: the step down ("no child skipped") first, then
  // wider skips, the degenerate same-label cut last.  Odd cut indices sit on
  // the right of a Pair factor and may only keep or drop the label.
  void label_choices(int k, int prev, int* out, int* count) const {
    if (k % 2 == 1) {
      out[0] = (prev - 1 + p_) % p_;
      out[1] = prev;
      *count = 2;
    } else {
      for (int step = 1; step < p_; ++step) out[step - 1] = ((prev - step) % p_ + p_) % p_;
      out[p_ - 1] = prev;
      *count = p_;
    }
  }

  bool add_cut(int a, int c, FlexEntry& entry) {
    const int k = c + 1;
    int choices[16];
    int count = 0;
    label_choices(k, labels_.back(), choices, &count);
    for (int idx = 0; idx < count; ++idx) {
      const int label = choices[idx];
      labels_.push_back(label);
      entry.parts += 1;
      const unsigned saved_mask = entry.agent_mask;
      entry.agent_mask |= 1U << agent_of(board_.bundle_of[a], label, p_);
      if (close_atom(a, k, entry)) return true;
      if (k < s_ && add_cut(a, k, entry)) return true;
      labels_.pop_back();
      entry.parts -= 1;
      entry.agent_mask = saved_mask;
    }
    return false;
  }

  bool close_atom(int a, int c, FlexEntry& entry) {
    FlexEntry finished = entry;
    finished.zero_mass = true;
    for (int j = 0; j < m_; ++j) {
      if (mass_d_[a][j] != 0.0 || board_.atoms[a].frosting[j] != 0) finished.zero_mass = false;
    }
    for (int u = 0; u < p_; ++u) {
      if ((finished.agent_mask >> u) & 1U) {
        for (int j = 0; j < m_; ++j) flexpot_d_[u][j] += mass_d_[a][j];
      }
    }
    entries_.push_back(finished);

    const bool ok = check_reach(a + 1) && visit(a + 1, c);

    entries_.pop_back();
    for (int u = 0; u < p_; ++u) {
      if ((finished.agent_mask >> u) & 1U) {
        for (int j = 0; j < m_; ++j) flexpot_d_[u][j] -= mass_d_[a][j];
      }
    }
    return ok;
  }

  // Prune only on certain violations: the double mirrors are accurate to far
  // below the margin (the amounts are nonnegative, so sums cannot cancel).
  bool check_fixed(int agent) {
    if (!screen_ok_) {
      for (int j = 0; j < m_; ++j) {
        if (fixed_[agent][j] > target_[j]) return false;
      }
      return true;
    }
    for (int j = 0; j < m_; ++j) {
      if (fixed_d_[agent][j] > target_d_[j] + margin_[j]) return false;
    }
    return true;
  }

  bool check_reach(int next_atom) {
    if (!screen_ok_) return true;  // settled by the exact leaf solve
    for (int u = 0; u < p_; ++u) {
      for (int j = 0; j < m_; ++j) {
        if (fixed_d_[u][j] + flexpot_d_[u][j] + suffix_d_[next_atom][j] <
            target_d_[j] - margin_[j]) {
          return false;
        }
      }
    }
    return true;
  }

  // Leaf: first assemble the system in doubles and discard certain
  // infeasibility, then certify the survivors exactly.
  bool leaf(int c) {
    size_t vars = 0;
    for (const auto& e : entries_) vars += e.parts;
    const size_t max_rows = entries_.size() + static_cast<size_t>(p_) * m_;

    if (screen_ok_) {
      std::vector<std::vector<double>> Ad;
      std::vector<double> bd;
      Ad.reserve(max_rows);
      size_t base = 0;
      for (const auto& e : entries_) {
        std::vector<double> row(vars, 0.0);
        for (int i = 0; i < e.parts; ++i) row[base + i] = 1.0;
        Ad.push_back(std::move(row));
        bd.push_back(len_d_[e.atom]);
        base += e.parts;
      }
      for (int u = 0; u < p_; ++u) {
        for (int j = 0; j < m_; ++j) {
          std::vector<double> row(vars, 0.0);
          bool any = false;
          size_t off = 0;
          for (const auto& e : entries_) {
            const double density = len_d_[e.atom] > 0 ? mass_d_[e.atom][j] / len_d_[e.atom] : 0.0;
            for (int i = 0; i < e.parts; ++i) {
              if (part_agent(e, i) == u && density != 0.0) {
                row[off + i] += density;
                any = true;
              }
            }
            off += e.parts;
          }
          const double rhs = target_d_[j] - fixed_d_[u][j];
          if (!any && std::fabs(rhs) > margin_[j]) return false;
          Ad.push_back(std::move(row));
          bd.push_back(rhs);
        }
      }
      if (float_certainly_infeasible(Ad, bd)) return false;
    }

    RatMat A;
    RatVec b;
    size_t base = 0;
    for (const auto& e : entries_) {
      RatVec row(vars, Rat(0));
      for (int i = 0; i < e.parts; ++i) row[base + i] = 1;
      A.push_back(std::move(row));
      b.push_back(board_.atoms[e.atom].board_hi - board_.atoms[e.atom].board_lo);
      base += e.parts;
    }
    for (int u = 0; u < p_; ++u) {
      for (int j = 0; j < m_; ++j) {
        RatVec row(vars, Rat(0));
        bool any = false;
        size_t off = 0;
        for (const auto& e : entries_) {
          const Atom& atom = board_.atoms[e.atom];
          const Rat density = atom.frosting[j] / (atom.board_hi - atom.board_lo);
          for (int i = 0; i < e.parts; ++i) {
            if (part_agent(e, i) == u && density != 0) {
              row[off + i] += density;
              any = true;
            }
          }
          off += e.parts;
        }
        const Rat rhs = target_[j] - fixed_[u][j];
        if (!any) {
          if (rhs != 0) return false;
          continue;
        }
        A.push_back(std::move(row));
        b.push_back(rhs);
      }
    }

    auto lambda = feasible_point(A, b, RatVec(vars, Rat(0)),
                                 std::vector<std::optional<Rat>>(vars, std::nullopt));
    if (!lambda) return false;

    found_ = true;
    final_labels = labels_;
    final_entries = entries_;
    final_lambda = std::move(*lambda);
    final_cuts = c;
    return true;
  }

  // Integer state key.  Agents' fixed shares are determined by the multiset
  // of atom signatures assigned to them, and a completion's feasibility
  // depends on each cut atom only through its signature and touched-agent
  // set, so the key needs no rational arithmetic.  (States that differ here
  // but agree numerically are merely memoized separately.)
  std::string state_key(int a, int c) {
    std::string key;
    key.reserve(64);
    key += std::to_string(a);
    key += '|';
    key += std::to_string(c);
    key += '|';
    key += std::to_string(labels_.back());
    key += '|';
    for (int u = 0; u < p_; ++u) {
      std::vector<int> sigs = assigned_sig_[u];
      std::sort(sigs.begin(), sigs.end());
      for (int sig : sigs) {
        key += std::to_string(sig);
        key += ',';
      }
      key += ';';
    }
    std::vector<long> entry_keys;
    for (const auto& e : entries_) {
      if (e.zero_mass) continue;
      entry_keys.push_back(static_cast<long>(sig_of_[e.atom]) << 12 | e.agent_mask);
    }
    std::sort(entry_keys.begin(), entry_keys.end());
    for (long ek : entry_keys) {
      key += std::to_string(ek);
      key += ',';
    }
    return key;
  }

  static constexpr size_t kMemoCap = 2'000'000;

  const Board& board_;
  int p_, m_, s_, natoms_;
  FrostingVector target_;
  std::vector<FrostingVector> fixed_;
  std::vector<double> target_d_, margin_, len_d_;
  std::vector<std::vector<double>> suffix_d_, mass_d_, fixed_d_, flexpot_d_;
  std::vector<int> sig_of_;
  std::vector<std::vector<int>> assigned_sig_;
  bool screen_ok_ = true;
  bool use_memo_ = false;
  std::vector<int> labels_;
  std::vector<FlexEntry> entries_;
  std::unordered_set<std::string> failed_;
  bool found_ = false;
};

double search_estimate(const LabelingScheme& scheme, int natoms) {
  double assignments = 1.0;
  for (int i = 1; i <= scheme.s; ++i) {
    assignments *= static_cast<double>(natoms + i) / i;
  }
  return static_cast<double>(labeling_count(scheme)) * assignments;
}

}  // namespace

LabeledPartition solve_prime(const Board& board, int p, const PrimeOptions& options) {
  const LabelingScheme scheme = make_scheme(p, board.m);

  const bool in_envelope = p <= 5 && board.m <= 3 && board.bundle_count <= 12;
  if (!in_envelope && !options.force &&
      search_estimate(scheme, static_cast<int>(board.atoms.size())) > options.estimate_limit) {
    throw SolverError(ErrorCode::BudgetExceeded,
                      "solve_prime: input exceeds the intended envelope (p <= 5, m <= 3, n <= 12); "
                      "pass force to run anyway");
  }

  auto assemble = [&](const PrimeSearch& search) {
    LabeledPartition part;
    part.p = p;
    part.scheme = scheme.factors;
    part.labels = search.final_labels;
    for (int k = static_cast<int>(part.labels.size()); k <= scheme.s; ++k) {
      part.labels.push_back(k % 2 == 1 ? part.labels.back() : 0);
    }
    size_t base = 0;
    for (const auto& e : search.final_entries) {
      Rat pos = board.atoms[e.atom].board_lo;
      for (int i = 0; i + 1 < e.parts; ++i) {
        pos += search.final_lambda[base + i];
        part.cuts.push_back(pos);
      }
      base += e.parts;
    }
    for (int k = search.final_cuts; k < scheme.s; ++k) part.cuts.push_back(Rat(1));
    return part;
  };

  PrimeSearch screened(board, p, true);
  if (screened.run()) return assemble(screened);

  // The floating-point screens only reject branches whose violation clears a
  // conservative margin; an exact-only pass settles any doubt before
  // declaring the guaranteed fair partition absent.
  PrimeSearch exact(board, p, false);
  if (exact.run()) return assemble(exact);

  throw SolverError(ErrorCode::Exhausted,
                    "solve_prime: search space exhausted without a fair partition; this "
                    "indicates an implementation bug for valid inputs");
}

}  // namespace cookiecut
