#include "bcc/prob.hpp"

#include <cmath>
#include <string>

namespace bcc {

double sum(std::span<const double> v) {
  // Neumaier compensated summation; rows can be long after n-fold products.
  double s = 0.0;
  double c = 0.0;
  for (double x : v) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  return s + c;
}

void check_distribution(std::span<const double> row) {
  if (row.empty()) throw LengthMismatch("distribution must be non-empty");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!(row[i] >= -kNegTol)) {
      throw NegativeEntry("entry " + std::to_string(i) + " = " + std::to_string(row[i]) +
                          " below -1e-12");
    }
  }
  const double s = sum(row);
  if (std::abs(s - 1.0) > kRowSumTol) {
    throw RowSumViolation("row sums to " + std::to_string(s) + ", expected 1 within 1e-9");
  }
}

std::vector<double> renormalize(std::vector<double> row) {
  for (double& x : row) {
    if (x < 0.0) x = 0.0;
  }
  const double s = sum(row);
  if (s > 0.0 && s != 1.0) {
    for (double& x : row) x /= s;
  }
  return row;
}

ProbVector ProbVector::validated(std::vector<double> entries) {
  check_distribution(entries);
  return ProbVector(renormalize(std::move(entries)));
}

}  // namespace bcc
