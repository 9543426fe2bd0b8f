#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bcc/channel.hpp"
#include "bcc/prob.hpp"

namespace bcc {

/// Shannon entropy in bits, 0*log0 = 0.
double entropy(std::span<const double> p);
inline double entropy(const ProbVector& p) { return entropy(p.entries()); }

/// H2(eps) in bits. Throws DomainError outside [0,1].
double binary_entropy(double eps);

/// Total variation in the l1-sum convention: sum |p_i - q_i|, range [0,2].
/// Throws LengthMismatch.
double total_variation(std::span<const double> p, std::span<const double> q);

struct Axis {
  std::string name;
  std::size_t size = 0;
};

/// Dense joint pmf over named finite axes, flattened lexicographically with
/// the last axis fastest.
class JointDistribution {
 public:
  /// Validates shape, clamps entries in [-kNegTol,0), requires mass 1 within
  /// kRowSumTol. Throws DimensionMismatch / NegativeEntry / RowSumViolation.
  JointDistribution(std::vector<Axis> axes, std::vector<double> mass);

  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t axis_count() const { return axes_.size(); }
  std::span<const double> mass() const { return mass_; }

  /// Marginal over the listed axes (kept in the given order).
  JointDistribution marginal(std::span<const std::size_t> keep) const;

  double entropy_bits() const { return entropy(mass_); }

 private:
  std::vector<Axis> axes_;
  std::vector<double> mass_;
};

/// Auxiliary chain U - V - X^n: prior on U, conditional V|U, and a stochastic
/// encoder mapping V to n-symbol input words.
struct AuxiliaryInput {
  ProbVector p_u;
  Channel p_v_given_u;
  Channel encoder;
  std::size_t n = 1;

  /// Checks the dimension chain |U| -> |V| -> |X|^n. Throws DimensionMismatch.
  static AuxiliaryInput make(ProbVector p_u, Channel p_v_given_u, Channel encoder,
                             std::size_t n);

  std::size_t u_size() const { return p_u.size(); }
  std::size_t v_size() const { return p_v_given_u.output_size(); }
  std::size_t xn_size() const { return encoder.output_size(); }
};

/// P(u,v,y^n) = sum_{x^n} W^n(y^n|x^n) E(x^n|v) P(v|u) P(u); axes (U,V,Yn).
/// `w_n` must act on the encoder's output alphabet.
JointDistribution induced_joint(const AuxiliaryInput& aux, const Channel& w_n);

/// I(axis1; axis2 | axis0) in bits for a three-axis joint.
/// Throws AxisCountMismatch.
double conditional_mutual_information(const JointDistribution& joint);

/// I(axis0; axis1) in bits for a two-axis joint; evaluated as conditional MI
/// with a degenerate conditioning axis. Throws AxisCountMismatch.
double mutual_information(const JointDistribution& joint);

}  // namespace bcc
