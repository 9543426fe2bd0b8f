#include "bcc/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "bcc/errors.hpp"

namespace bcc {

namespace {

constexpr double kPivotTol = 1e-10;

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // variable columns, excluding rhs
  std::vector<double> t;  // rows x (cols + 1), rhs last
  std::vector<std::size_t> basis;

  double& at(std::size_t i, std::size_t j) { return t[i * (cols + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * (cols + 1) + j]; }
  double& rhs(std::size_t i) { return t[i * (cols + 1) + cols]; }
  double rhs(std::size_t i) const { return t[i * (cols + 1) + cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double piv = at(pr, pc);
    for (std::size_t j = 0; j <= cols; ++j) at(pr, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const double f = at(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) at(i, j) -= f * at(pr, j);
      at(i, pc) = 0.0;
    }
    basis[pr] = pc;
  }

  /// Minimizes cost over columns [0, allowed_cols) with Bland's rule.
  void solve(const std::vector<double>& cost, std::size_t allowed_cols) {
    for (std::size_t iter = 0; iter < 100000; ++iter) {
      // Reduced cost c_j - c_B . column_j; Bland picks the first negative.
      std::size_t enter = cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        double rc = cost[j];
        for (std::size_t i = 0; i < rows; ++i) {
          const double cb = cost[basis[i]];
          if (cb != 0.0) rc -= cb * at(i, j);
        }
        if (rc < -kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return;  // optimal

      std::size_t leave = rows;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows; ++i) {
        if (at(i, enter) > kPivotTol) {
          const double ratio = rhs(i) / at(i, enter);
          if (ratio < best - 1e-15 ||
              (std::abs(ratio - best) <= 1e-15 &&
               (leave == rows || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == rows) throw Error("simplex: unbounded objective");
      pivot(leave, enter);
    }
    throw Error("simplex: iteration limit reached");
  }

  double objective(const std::vector<double>& cost) const {
    double obj = 0.0;
    for (std::size_t i = 0; i < rows; ++i) obj += cost[basis[i]] * rhs(i);
    return obj;
  }
};

}  // namespace

LpResult simplex_solve_equality(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw DimensionMismatch("lp: b length must match row count");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionMismatch("lp: row length must match c length");
  }
  for (double v : b) {
    if (v < 0.0) throw DomainError("lp: rhs must be non-negative");
  }

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m;  // artificials appended
  tab.t.assign(m * (tab.cols + 1), 0.0);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = a[i][j];
    tab.at(i, n + i) = 1.0;
    tab.rhs(i) = b[i];
    tab.basis[i] = n + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<double> phase1(tab.cols, 0.0);
  for (std::size_t j = n; j < tab.cols; ++j) phase1[j] = 1.0;
  tab.solve(phase1, tab.cols);
  if (tab.objective(phase1) > 1e-8) {
    return {false, 0.0, {}};
  }
  // Pivot leftover zero-level artificials out where possible; columns >= n
  // are excluded from phase 2 so any stragglers stay at zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) {
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(tab.at(i, j)) > kPivotTol) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> phase2(tab.cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.solve(phase2, n);

  LpResult res;
  res.feasible = true;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) res.x[tab.basis[i]] = std::max(0.0, tab.rhs(i));
  }
  res.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

}  // namespace bcc
