#pragma once

#include <vector>

namespace bcc {

struct LpResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

/// Minimizes c.x subject to A x = b, x >= 0 with b >= 0, using a dense
/// two-phase simplex with Bland's rule. Deterministic; intended for the tiny
/// feasibility systems this project solves (tens of variables).
LpResult simplex_solve_equality(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& b, const std::vector<double>& c);

}  // namespace bcc
