#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bcc/errors.hpp"

namespace bcc {

/// Absolute tolerance on |sum - 1| for a probability mass function.
inline constexpr double kRowSumTol = 1e-9;
/// Entries below -kNegTol are rejected; entries in [-kNegTol, 0) are clamped.
inline constexpr double kNegTol = 1e-12;
/// Absolute tolerance used by every inequality verifier.
inline constexpr double kCheckTol = 1e-9;

double sum(std::span<const double> v);

/// Throws NegativeEntry / RowSumViolation when `row` is not a pmf within
/// tolerance.
void check_distribution(std::span<const double> row);

/// Clamps entries in [-kNegTol, 0) to zero and rescales so the row sums to 1.
/// Callers must have validated the row first.
std::vector<double> renormalize(std::vector<double> row);

/// Probability mass function over a finite alphabet.
class ProbVector {
 public:
  /// Validates and renormalizes. Throws NegativeEntry / RowSumViolation.
  static ProbVector validated(std::vector<double> entries);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const { return entries_; }

 private:
  explicit ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {}
  std::vector<double> entries_;
};

}  // namespace bcc
