#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "bcc/channel.hpp"
#include "bcc/info.hpp"
#include "bcc/regions.hpp"

namespace bcc {

/// The continuity bounds, all in bits:
///   delta1       = 2 eps log2|Y| + 2 H2(eps)
///   delta2_y     = 4 eps log2|Y| + 4 H2(eps)      (delta2_z with |Z|)
///   delta_prime  = 4 H2(eps) + 4 eps max{log2|Y|, log2|Z|}
///   delta_dprime = 4 eps log2(|Y||Z|) + 8 H2(eps)
///   delta_total  = delta_prime + delta_dprime
struct DeltaBundle {
  double eps = 0.0;
  std::size_t y_size = 0;
  std::size_t z_size = 0;
  double delta1 = 0.0;
  double delta2_y = 0.0;
  double delta2_z = 0.0;
  double delta_prime = 0.0;
  double delta_dprime = 0.0;
  double delta_total = 0.0;
};

/// Evaluates the bound formulas. eps = 0 is accepted (all bounds vanish) so
/// that verifiers can plug in a measured distance of zero. Throws DomainError
/// for eps outside [0,1) or sizes < 1.
DeltaBundle delta_bundle(double eps, std::size_t y_size, std::size_t z_size);

/// Aggregated result of one verification suite. Checks use the measured
/// distance of each instance in the bound; `bound` reports the a-priori value
/// at the nominal eps, and `tightness` the worst measured gap/bound ratio.
struct ContinuityReport {
  std::string check;
  std::size_t instances = 0;
  std::size_t violations = 0;  // instances with gap > bound(measured eps) + 1e-9
  double max_gap = 0.0;
  double bound = 0.0;
  double tightness = 0.0;
  double eps_nominal = 0.0;
  double eps_measured_max = 0.0;
  double slack = 0.0;
  std::map<std::string, double> extras;
  std::string witness;  // JSON text of the worst instance
};

/// Pools two suite reports (instance counts add, gaps/tightness take maxima).
ContinuityReport merge_reports(ContinuityReport a, const ContinuityReport& b);

/// Samples `trials` joint pairs with ||P - P~||_1 <= eps and checks
/// |H(Y|X) - H(Y~|X~)| <= delta1(measured TV, |Y|).
ContinuityReport verify_entropy_continuity(std::size_t trials, double eps,
                                           std::size_t x_size, std::size_t y_size,
                                           std::uint64_t seed, std::size_t threads = 0);

/// Joint of (U, V, Y^n) where the first k coordinates pass through w and the
/// remaining n-k through w_tilde. k = n reproduces induced_joint(aux, w^n),
/// k = 0 reproduces induced_joint(aux, w_tilde^n).
JointDistribution hybrid_distribution(const AuxiliaryInput& aux, const Channel& w,
                                      const Channel& w_tilde, std::size_t k,
                                      std::size_t entry_budget = kDefaultEntryBudget);

/// Walks the hybrid chain k = 0..n for one instance: consecutive hybrids stay
/// within the channel distance in TV, each conditional-MI step moves by at
/// most delta2, the summed bound holds, and the signed steps reconstruct the
/// end-to-end MI difference. Throws PreconditionViolated when
/// channel_distance(w, w_tilde) > eps.
ContinuityReport verify_telescoping(const AuxiliaryInput& aux, const Channel& w,
                                    const Channel& w_tilde, double eps);

struct MiSuiteSizes {
  std::size_t x = 2;
  std::size_t y = 3;
  std::size_t u = 2;
  std::size_t v = 2;
};

/// Random (aux, W, W~) instances with d(W, W~) <= eps; checks the n*delta2
/// bound and the full telescoping structure on every instance.
ContinuityReport verify_mi_continuity(std::size_t trials, double eps, std::size_t n,
                                      const MiSuiteSizes& sizes, std::uint64_t seed,
                                      std::size_t threads = 0);

/// For each auxiliary input: both rectangles, then corner gap <= delta,
/// rectangle region distance <= delta, |a0 gap| <= delta', |a1 gap| <= delta''.
/// The measured compound distance serves as eps. Throws PreconditionViolated
/// when the measured distance is not below 1.
ContinuityReport verify_rectangle_continuity(const CompoundBCC& c1, const CompoundBCC& c2,
                                             std::span<const AuxiliaryInput> aux_list,
                                             std::size_t threads = 0);

/// Matched-grid check of the capacity-region bound: both inner approximations
/// use the identical auxiliary grid and the exact hull-to-hull distance must
/// stay within delta(measured D) plus the reported grid slack.
ContinuityReport verify_capacity_continuity(const CompoundBCC& c1, const CompoundBCC& c2,
                                            std::size_t n_max, const GridSpec& grid,
                                            std::size_t threads = 0);

}  // namespace bcc
