#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bcc/channel.hpp"

namespace bcc {

/// Arbitrarily varying channel: the state may change on every channel use.
struct AVCFamily {
  std::vector<Channel> states;

  static AVCFamily make(std::vector<Channel> states);
};

struct SymmetrizerResult {
  bool symmetrizable = false;
  std::optional<Channel> sigma;  // rows sigma(.|x), present whenever the LP solves
  double residual = 0.0;         // max |constraint violation| of the returned sigma
};

/// The two-state family to receiver 1,
///   W1 = [[1,0,0],[0,l,1-l]],  W2 = [[l,0,1-l],[0,1,0]],
/// plus the uninformative receiver-2 channel V with all rows (1/2, 1/2).
/// (The first family's second row is the row-stochastic form.)
std::pair<AVCFamily, Channel> example_family(double lambda);

/// Decides whether some sigma: X -> P(S) satisfies
///   sum_s W_s(y|x) sigma(s|x') = sum_s W_s(y|x') sigma(s|x)  for all x,x',y
/// by minimizing the maximum violation with an in-repo dense simplex.
/// residual <= 1e-9 counts as symmetrizable; otherwise the positive optimum
/// is an infeasibility margin. The returned sigma's residual is recomputed
/// independently of the solver.
SymmetrizerResult symmetrizability_check(const AVCFamily& fam);

/// Max violation of the symmetrizability constraints for a given sigma.
double symmetrizer_residual(const AVCFamily& fam, const Channel& sigma);

struct SweepRow {
  double lambda = 0.0;
  bool symmetrizable = false;
  double residual = 0.0;
  double a0 = 0.0;  // context: single-state rate rectangle of (W1(lambda), V)
  double a1 = 0.0;
};

/// Per lambda: symmetrizability flag and margin, plus the n=1 rectangle of
/// (W1(lambda), V) under a fixed auxiliary input (degenerate U, uniform
/// binary V, identity encoder).
std::vector<SweepRow> lambda_sweep(std::span<const double> lambdas);

}  // namespace bcc
