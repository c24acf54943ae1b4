// Copyright 2026 The maxplus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxplus/lp.h"

#include <optional>

#include "maxplus/errors.h"

namespace maxplus {
namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<int> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  const std::vector<int>& basis() const { return basis_; }
  const Rational& entry(int r, int col) const { return rows_[r][col]; }
  const Rational& rhs(int r) const { return rhs_[r]; }

  // Maximizes cost.x over the columns with allowed[col]; returns false when
  // the objective is unbounded.
  bool Maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Bland: the lowest-index improving column enters.
      int enter = -1;
      for (int col = 0; col < num_cols() && enter < 0; ++col) {
        if (!allowed[col] || IsBasic(col)) continue;
        Rational reduced = cost[col];
        for (int r = 0; r < num_rows(); ++r) {
          if (rows_[r][col] != 0) reduced -= cost[basis_[r]] * rows_[r][col];
        }
        if (reduced > 0) enter = col;
      }
      if (enter < 0) return true;
      // Ratio test, ties broken by the lowest basic index.
      int leave = -1;
      Rational best;
      for (int r = 0; r < num_rows(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        const Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int row, int col) {
    const Rational pivot = rows_[row][col];
    for (Rational& x : rows_[row]) x /= pivot;
    rhs_[row] /= pivot;
    for (int r = 0; r < num_rows(); ++r) {
      if (r == row || rows_[r][col] == 0) continue;
      const Rational factor = rows_[r][col];
      for (int k = 0; k < num_cols(); ++k) {
        if (rows_[row][k] != 0) rows_[r][k] -= factor * rows_[row][k];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  void DropRow(int row) {
    rows_.erase(rows_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

  std::vector<Rational> Values() const {
    std::vector<Rational> values(num_cols());
    for (int r = 0; r < num_rows(); ++r) values[basis_[r]] = rhs_[r];
    return values;
  }

 private:
  bool IsBasic(int col) const {
    for (int b : basis_) {
      if (b == col) return true;
    }
    return false;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution SolveLp(const IntMatrix& a, const std::vector<int64_t>& b,
                   const std::vector<int64_t>& c, const std::vector<int64_t>& lower,
                   const std::vector<int64_t>& upper) {
  const int d = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != d || static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n) {
    throw PreconditionViolated("LP dimensions disagree");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw PreconditionViolated("LP matrix is ragged");
  }
  LpSolution result;
  for (int j = 0; j < n; ++j) {
    if (lower[j] > upper[j]) return result;
  }

  // Variables y = x - lower in [0, upper - lower]; slacks s with y + s = width.
  // Columns: y (n), s (n), artificial (d + n).
  const int rows = d + n;
  const int cols = 2 * n + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols));
  std::vector<Rational> rhs(rows);
  std::vector<int> basis(rows);
  for (int r = 0; r < d; ++r) {
    Rational shifted = b[r];
    for (int j = 0; j < n; ++j) {
      t[r][j] = a[r][j];
      shifted -= Rational(a[r][j]) * lower[j];
    }
    rhs[r] = shifted;
  }
  for (int j = 0; j < n; ++j) {
    t[d + j][j] = 1;
    t[d + j][n + j] = 1;
    rhs[d + j] = Rational(upper[j]) - Rational(lower[j]);
  }
  for (int r = 0; r < rows; ++r) {
    if (rhs[r] < 0) {
      for (Rational& x : t[r]) x = -x;
      rhs[r] = -rhs[r];
    }
    t[r][2 * n + r] = 1;
    basis[r] = 2 * n + r;
  }
  Tableau tableau(std::move(t), std::move(rhs), std::move(basis));

  std::vector<Rational> phase1(cols);
  for (int col = 2 * n; col < cols; ++col) phase1[col] = -1;
  tableau.Maximize(phase1, std::vector<bool>(cols, true));
  {
    const std::vector<Rational> values = tableau.Values();
    for (int col = 2 * n; col < cols; ++col) {
      if (values[col] != 0) return result;
    }
  }
  // Pivot remaining artificials out of the basis or drop redundant rows.
  for (int r = tableau.num_rows() - 1; r >= 0; --r) {
    if (tableau.basis()[r] < 2 * n) continue;
    std::optional<int> col;
    for (int k = 0; k < 2 * n && !col; ++k) {
      if (tableau.entry(r, k) != 0) col = k;
    }
    if (col) {
      tableau.Pivot(r, *col);
    } else {
      tableau.DropRow(r);
    }
  }

  std::vector<Rational> phase2(cols);
  for (int j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<bool> allowed(cols, false);
  for (int col = 0; col < 2 * n; ++col) allowed[col] = true;
  if (!tableau.Maximize(phase2, allowed)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  const std::vector<Rational> values = tableau.Values();
  result.status = LpStatus::kOptimal;
  result.x.resize(n);
  result.value = 0;
  for (int j = 0; j < n; ++j) {
    result.x[j] = values[j] + lower[j];
    result.value += Rational(c[j]) * result.x[j];
  }
  return result;
}

}  // namespace maxplus
