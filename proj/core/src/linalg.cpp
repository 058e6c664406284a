#include "cookiecut/linalg.hpp"

#include <cassert>

namespace cookiecut {

LinearSolution solve_linear(RatMat A, RatVec b) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(cols, -1);

  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && A[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[pivot], A[row]);
    std::swap(b[pivot], b[row]);
    const Rat inv = A[row][col];
    for (size_t j = col; j < cols; ++j) A[row][j] /= inv;
    b[row] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || A[i][col] == 0) continue;
      const Rat factor = A[i][col];
      for (size_t j = col; j < cols; ++j) A[i][j] -= factor * A[row][j];
      b[i] -= factor * b[row];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }

  LinearSolution out;
  for (size_t i = row; i < rows; ++i) {
    if (b[i] != 0) return out;  // 0 = nonzero
  }
  out.consistent = true;
  out.particular.assign(cols, Rat(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
    out.particular[pivot_col_of_row[i]] = b[i];
  }
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    RatVec basis(cols, Rat(0));
    basis[col] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      basis[pivot_col_of_row[i]] = -A[i][col];
    }
    out.nullspace.push_back(std::move(basis));
  }
  return out;
}

std::optional<RatVec> nullspace_vector(const RatMat& A) {
  if (A.empty()) return std::nullopt;
  LinearSolution sol = solve_linear(A, RatVec(A.size(), Rat(0)));
  if (sol.nullspace.empty()) return std::nullopt;
  return sol.nullspace.front();
}

namespace {

// Full-tableau phase-1 simplex.  Artificial columns never re-enter the
// basis, which keeps the pivot sequence short and is sound for the
// feasibility question (the all-zero artificial point survives every column
// deletion).
class Phase1 {
 public:
  Phase1(const RatMat& A, const RatVec& b) : rows_(A.size()), cols_(A.empty() ? 0 : A[0].size()) {
    tableau_.assign(rows_, RatVec(cols_ + rows_ + 1, Rat(0)));
    basis_.resize(rows_);
    for (size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;
      for (size_t j = 0; j < cols_; ++j) tableau_[i][j] = flip ? -A[i][j] : A[i][j];
      tableau_[i][cols_ + i] = 1;
      tableau_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = static_cast<int>(cols_ + i);
    }
  }

  std::optional<RatVec> run() {
    for (;;) {
      int entering = -1;
      for (size_t j = 0; j < cols_; ++j) {
        Rat reduced(0);
        for (size_t i = 0; i < rows_; ++i) {
          if (basis_[i] >= static_cast<int>(cols_)) reduced -= tableau_[i][j];
        }
        if (reduced < 0) {
          entering = static_cast<int>(j);
          break;  // Bland: first improving column
        }
      }
      if (entering < 0) break;

      int leaving = -1;
      Rat best_ratio(0);
      for (size_t i = 0; i < rows_; ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rat ratio = tableau_[i].back() / tableau_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return std::nullopt;  // unbounded cannot happen in phase 1
      pivot(leaving, entering);
    }

    for (size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= static_cast<int>(cols_) && tableau_[i].back() != 0) {
        return std::nullopt;  // residual artificial mass: infeasible
      }
    }
    RatVec x(cols_, Rat(0));
    for (size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < static_cast<int>(cols_)) x[basis_[i]] = tableau_[i].back();
    }
    return x;
  }

 private:
  void pivot(int row, int col) {
    const Rat inv = tableau_[row][col];
    for (auto& v : tableau_[row]) v /= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (static_cast<int>(i) == row || tableau_[i][col] == 0) continue;
      const Rat factor = tableau_[i][col];
      for (size_t j = 0; j < tableau_[i].size(); ++j) {
        tableau_[i][j] -= factor * tableau_[row][j];
      }
    }
    basis_[row] = col;
  }

  size_t rows_, cols_;
  RatMat tableau_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<RatVec> feasible_point(const RatMat& A, const RatVec& b, const RatVec& lower,
                                     const std::vector<std::optional<Rat>>& upper) {
  const size_t k = lower.size();
  assert(upper.size() == k);
  for ([[maybe_unused]] const auto& row : A) assert(row.size() == k);

  // Shift to u = x - lower >= 0 and add a slack row per finite upper bound.
  std::vector<size_t> capped;
  for (size_t i = 0; i < k; ++i) {
    if (!upper[i].has_value()) continue;
    if (*upper[i] < lower[i]) return std::nullopt;
    capped.push_back(i);
  }

  // Slack columns come first so Bland's rule parks shifted variables at
  // their lower bound when the system leaves them free.
  const size_t rows = A.size() + capped.size();
  const size_t cols = k + capped.size();
  RatMat M(rows, RatVec(cols, Rat(0)));
  RatVec rhs(rows, Rat(0));
  for (size_t i = 0; i < A.size(); ++i) {
    Rat shift(0);
    for (size_t j = 0; j < k; ++j) {
      M[i][capped.size() + j] = A[i][j];
      shift += A[i][j] * lower[j];
    }
    rhs[i] = b[i] - shift;
  }
  for (size_t c = 0; c < capped.size(); ++c) {
    const size_t i = A.size() + c;
    M[i][c] = 1;
    M[i][capped.size() + capped[c]] = 1;
    rhs[i] = *upper[capped[c]] - lower[capped[c]];
  }

  auto u = Phase1(M, rhs).run();
  if (!u) return std::nullopt;
  RatVec x(k);
  for (size_t i = 0; i < k; ++i) x[i] = lower[i] + (*u)[capped.size() + i];
  return x;
}

std::optional<RatVec> feasible_unit_box(const RatMat& A, const RatVec& b) {
  const size_t k = A.empty() ? 0 : A[0].size();
  return feasible_point(A, b, RatVec(k, Rat(0)),
                        std::vector<std::optional<Rat>>(k, Rat(1)));
}

}  // namespace cookiecut
