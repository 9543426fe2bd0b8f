#include "bcc/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

#include "bcc/metrics.hpp"
#include "bcc/parallel.hpp"
#include "bcc/rng.hpp"

namespace bcc {

using nlohmann::json;

DeltaBundle delta_bundle(double eps, std::size_t y_size, std::size_t z_size) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw DomainError("delta formulas need eps in [0,1), got " + std::to_string(eps));
  }
  if (y_size < 1 || z_size < 1) throw DomainError("alphabet sizes must be >= 1");
  const double h2 = binary_entropy(eps);
  const double ly = std::log2(static_cast<double>(y_size));
  const double lz = std::log2(static_cast<double>(z_size));
  DeltaBundle d;
  d.eps = eps;
  d.y_size = y_size;
  d.z_size = z_size;
  d.delta1 = 2.0 * eps * ly + 2.0 * h2;
  d.delta2_y = 4.0 * eps * ly + 4.0 * h2;
  d.delta2_z = 4.0 * eps * lz + 4.0 * h2;
  d.delta_prime = 4.0 * h2 + 4.0 * eps * std::max(ly, lz);
  d.delta_dprime = 4.0 * eps * (ly + lz) + 8.0 * h2;
  d.delta_total = d.delta_prime + d.delta_dprime;
  return d;
}

ContinuityReport merge_reports(ContinuityReport a, const ContinuityReport& b) {
  a.instances += b.instances;
  a.violations += b.violations;
  a.max_gap = std::max(a.max_gap, b.max_gap);
  a.bound = std::max(a.bound, b.bound);
  a.eps_nominal = std::max(a.eps_nominal, b.eps_nominal);
  a.eps_measured_max = std::max(a.eps_measured_max, b.eps_measured_max);
  a.slack = std::max(a.slack, b.slack);
  if (b.tightness > a.tightness) {
    a.tightness = b.tightness;
    a.witness = b.witness;
  } else if (a.witness.empty()) {
    a.witness = b.witness;
  }
  for (const auto& [k, v] : b.extras) {
    auto it = a.extras.find(k);
    if (it == a.extras.end()) {
      a.extras[k] = v;
    } else {
      it->second = std::max(it->second, v);
    }
  }
  return a;
}

namespace {

json channel_json(const Channel& c) {
  json rows = json::array();
  for (std::size_t x = 0; x < c.input_size(); ++x) {
    rows.push_back(std::vector<double>(c.row(x).begin(), c.row(x).end()));
  }
  return {{"inputs", c.input_size()}, {"outputs", c.output_size()}, {"rows", rows}};
}

json aux_json(const AuxiliaryInput& aux) {
  return {{"p_u", std::vector<double>(aux.p_u.entries().begin(), aux.p_u.entries().end())},
          {"p_v_given_u", channel_json(aux.p_v_given_u)},
          {"encoder", channel_json(aux.encoder)},
          {"n", aux.n}};
}

/// Conditional entropy H(Y|X) of a two-axis joint.
double conditional_entropy(const JointDistribution& j) {
  static constexpr std::size_t kX[] = {0};
  return j.entropy_bits() - j.marginal(kX).entropy_bits();
}

struct TrialOutcome {
  double gap = 0.0;
  double bound = 0.0;   // at the measured eps of this instance
  double measured = 0.0;
  bool violated = false;
  double ratio = 0.0;
  json witness;
};

ContinuityReport reduce_trials(std::string check, double eps_nominal, double nominal_bound,
                               std::vector<TrialOutcome>& outcomes) {
  ContinuityReport r;
  r.check = std::move(check);
  r.eps_nominal = eps_nominal;
  r.bound = nominal_bound;
  r.instances = outcomes.size();
  std::size_t worst = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.violated) ++r.violations;
    r.max_gap = std::max(r.max_gap, o.gap);
    r.eps_measured_max = std::max(r.eps_measured_max, o.measured);
    if (o.ratio > r.tightness) {
      r.tightness = o.ratio;
      worst = i;
    }
  }
  if (worst == outcomes.size() && !outcomes.empty()) worst = 0;
  if (worst < outcomes.size()) {
    outcomes[worst].witness["trial"] = worst;
    r.witness = outcomes[worst].witness.dump();
  }
  return r;
}

}  // namespace

ContinuityReport verify_entropy_continuity(std::size_t trials, double eps,
                                           std::size_t x_size, std::size_t y_size,
                                           std::uint64_t seed, std::size_t threads) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0,1)");
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(
      trials,
      [&](std::size_t i) {
        Rng rng(mix_seed(seed, i));
        const auto base = rng.simplex_point(x_size * y_size);
        const auto pert = perturb_distribution(base, eps, rng);
        const double tv = total_variation(base, pert);
        const JointDistribution ja({{"X", x_size}, {"Y", y_size}}, base);
        const JointDistribution jb({{"X", x_size}, {"Y", y_size}}, pert);
        const double gap = std::abs(conditional_entropy(ja) - conditional_entropy(jb));
        const double bound = delta_bundle(tv, y_size, 1).delta1;
        TrialOutcome& o = outcomes[i];
        o.gap = gap;
        o.bound = bound;
        o.measured = tv;
        o.violated = gap > bound + kCheckTol;
        o.ratio = bound > 0.0 ? gap / bound : 0.0;
        o.witness = {{"tv", tv}, {"gap", gap}, {"bound", bound},
                     {"joint", base}, {"joint_perturbed", pert}};
      },
      threads);
  return reduce_trials("lemma2", eps, delta_bundle(eps, y_size, 1).delta1, outcomes);
}

JointDistribution hybrid_distribution(const AuxiliaryInput& aux, const Channel& w,
                                      const Channel& w_tilde, std::size_t k,
                                      std::size_t entry_budget) {
  if (k > aux.n) throw DimensionMismatch("hybrid index k must satisfy 0 <= k <= n");
  return induced_joint(aux, mixed_product_channel(w, w_tilde, aux.n, k, entry_budget));
}

namespace {

struct TelescopeResult {
  double measured_d = 0.0;
  double step_bound = 0.0;          // delta2(measured_d, |Y|)
  double max_step_gap = 0.0;
  double max_hybrid_tv = 0.0;
  double total_gap = 0.0;           // |I(V;Y^n|U) - I(V;Y~^n|U)|
  double total_bound = 0.0;         // n * delta2
  double recon_err = 0.0;
  std::size_t step_violations = 0;  // TV or per-step MI bound failures
  bool total_violated = false;
};

TelescopeResult run_telescope(const AuxiliaryInput& aux, const Channel& w,
                              const Channel& w_tilde) {
  TelescopeResult t;
  const std::size_t n = aux.n;
  t.measured_d = channel_distance(w, w_tilde);
  t.step_bound = delta_bundle(t.measured_d, w.output_size(), 1).delta2_y;
  t.total_bound = static_cast<double>(n) * t.step_bound;

  std::vector<JointDistribution> hybrids;
  hybrids.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    hybrids.push_back(hybrid_distribution(aux, w, w_tilde, k));
  }
  std::vector<double> cmi(n + 1);
  for (std::size_t k = 0; k <= n; ++k) cmi[k] = conditional_mutual_information(hybrids[k]);

  double signed_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double tv = total_variation(hybrids[k + 1].mass(), hybrids[k].mass());
    const double step = cmi[k + 1] - cmi[k];
    signed_sum += step;
    t.max_hybrid_tv = std::max(t.max_hybrid_tv, tv);
    t.max_step_gap = std::max(t.max_step_gap, std::abs(step));
    if (tv > t.measured_d + kCheckTol) ++t.step_violations;
    if (std::abs(step) > t.step_bound + kCheckTol) ++t.step_violations;
  }
  t.total_gap = std::abs(cmi[n] - cmi[0]);
  t.total_violated = t.total_gap > t.total_bound + kCheckTol;
  t.recon_err = std::abs(signed_sum - (cmi[n] - cmi[0]));
  return t;
}

}  // namespace

ContinuityReport verify_telescoping(const AuxiliaryInput& aux, const Channel& w,
                                    const Channel& w_tilde, double eps) {
  const double d = channel_distance(w, w_tilde);
  if (d > eps + 1e-12) {
    throw PreconditionViolated("channel distance " + std::to_string(d) +
                               " exceeds eps = " + std::to_string(eps));
  }
  const TelescopeResult t = run_telescope(aux, w, w_tilde);

  ContinuityReport r;
  r.check = "telescope";
  r.eps_nominal = eps;
  r.eps_measured_max = t.measured_d;
  r.instances = aux.n + 1;  // n step checks plus the summed bound
  r.violations = t.step_violations + (t.total_violated ? 1 : 0);
  r.max_gap = t.max_step_gap;
  r.bound = t.step_bound;
  r.tightness = t.step_bound > 0.0 ? t.max_step_gap / t.step_bound : 0.0;
  r.extras["recon_err"] = t.recon_err;
  r.extras["max_hybrid_tv"] = t.max_hybrid_tv;
  r.extras["total_gap"] = t.total_gap;
  r.extras["total_bound"] = t.total_bound;
  r.witness = json{{"n", aux.n},
                   {"measured_d", t.measured_d},
                   {"max_step_gap", t.max_step_gap},
                   {"recon_err", t.recon_err},
                   {"w", channel_json(w)},
                   {"w_tilde", channel_json(w_tilde)},
                   {"aux", aux_json(aux)}}
                  .dump();
  return r;
}

ContinuityReport verify_mi_continuity(std::size_t trials, double eps, std::size_t n,
                                      const MiSuiteSizes& sizes, std::uint64_t seed,
                                      std::size_t threads) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0,1)");
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(
      trials,
      [&](std::size_t i) {
        Rng rng(mix_seed(seed, i));
        std::vector<std::vector<double>> w_rows(sizes.x);
        std::vector<std::vector<double>> wt_rows(sizes.x);
        for (std::size_t x = 0; x < sizes.x; ++x) {
          w_rows[x] = rng.simplex_point(sizes.y);
          wt_rows[x] = perturb_distribution(w_rows[x], eps, rng);
        }
        const Channel w = Channel::validated(w_rows);
        const Channel wt = Channel::validated(wt_rows);

        std::size_t xn = 1;
        for (std::size_t j = 0; j < n; ++j) xn *= sizes.x;
        std::vector<std::vector<double>> v_rows(sizes.u);
        for (auto& row : v_rows) row = rng.simplex_point(sizes.v);
        std::vector<std::vector<double>> e_rows(sizes.v);
        for (auto& row : e_rows) row = rng.simplex_point(xn);
        const AuxiliaryInput aux =
            AuxiliaryInput::make(ProbVector::validated(rng.simplex_point(sizes.u)),
                                 Channel::validated(v_rows), Channel::validated(e_rows), n);

        const TelescopeResult t = run_telescope(aux, w, wt);
        TrialOutcome& o = outcomes[i];
        o.gap = t.total_gap;
        o.bound = t.total_bound;
        o.measured = t.measured_d;
        const bool recon_bad = t.recon_err > kCheckTol;
        o.violated = t.total_violated || t.step_violations > 0 || recon_bad;
        o.ratio = o.bound > 0.0 ? o.gap / o.bound : 0.0;
        o.witness = {{"measured_d", t.measured_d},
                     {"gap", t.total_gap},
                     {"bound", t.total_bound},
                     {"max_step_gap", t.max_step_gap},
                     {"max_hybrid_tv", t.max_hybrid_tv},
                     {"recon_err", t.recon_err},
                     {"w", channel_json(w)},
                     {"w_tilde", channel_json(wt)},
                     {"aux", aux_json(aux)}};
      },
      threads);

  const double nominal_bound =
      static_cast<double>(n) * delta_bundle(eps, sizes.y, 1).delta2_y;
  ContinuityReport r = reduce_trials("lemma3", eps, nominal_bound, outcomes);
  double recon = 0.0;
  double step_gap = 0.0;
  for (const auto& o : outcomes) {
    recon = std::max(recon, o.witness.value("recon_err", 0.0));
    step_gap = std::max(step_gap, o.witness.value("max_step_gap", 0.0));
  }
  r.extras["max_recon_err"] = recon;
  r.extras["max_step_gap"] = step_gap;
  return r;
}

ContinuityReport verify_rectangle_continuity(const CompoundBCC& c1, const CompoundBCC& c2,
                                             std::span<const AuxiliaryInput> aux_list,
                                             std::size_t threads) {
  if (aux_list.empty()) throw EmptySet("rectangle continuity needs auxiliary inputs");
  const double d = compound_distance(c1, c2);
  if (!(d < 1.0)) {
    throw PreconditionViolated("measured compound distance " + std::to_string(d) +
                               " must be below 1");
  }
  const DeltaBundle deltas = delta_bundle(d, c1.y_size(), c1.z_size());

  std::vector<TrialOutcome> outcomes(aux_list.size());
  parallel_for(
      aux_list.size(),
      [&](std::size_t i) {
        const AuxiliaryInput& aux = aux_list[i];
        const RateRectangle r1 = rate_rectangle(c1, aux);
        const RateRectangle r2 = rate_rectangle(c2, aux);
        const double corner = rectangle_corner_gap(r1, r2);
        const double rdist = region_distance(r1, r2);
        const double gap0 = std::abs(r1.a0 - r2.a0);
        const double gap1 = std::abs(r1.a1 - r2.a1);
        TrialOutcome& o = outcomes[i];
        o.gap = corner;
        o.bound = deltas.delta_total;
        o.measured = d;
        o.violated = corner > deltas.delta_total + kCheckTol ||
                     rdist > deltas.delta_total + kCheckTol ||
                     gap0 > deltas.delta_prime + kCheckTol ||
                     gap1 > deltas.delta_dprime + kCheckTol;
        o.ratio = deltas.delta_total > 0.0 ? corner / deltas.delta_total : 0.0;
        o.witness = {{"corner_gap", corner},
                     {"region_distance", rdist},
                     {"a0_gap", gap0},
                     {"a1_gap", gap1},
                     {"rect1", {{"a0", r1.a0}, {"a1", r1.a1}}},
                     {"rect2", {{"a0", r2.a0}, {"a1", r2.a1}}},
                     {"aux", aux_json(aux)}};
      },
      threads);

  ContinuityReport r = reduce_trials("lemma4", d, deltas.delta_total, outcomes);
  r.extras["delta_prime"] = deltas.delta_prime;
  r.extras["delta_dprime"] = deltas.delta_dprime;
  return r;
}

ContinuityReport verify_capacity_continuity(const CompoundBCC& c1, const CompoundBCC& c2,
                                            std::size_t n_max, const GridSpec& grid,
                                            std::size_t threads) {
  const double d = compound_distance(c1, c2);
  if (!(d < 1.0)) {
    throw PreconditionViolated("measured compound distance " + std::to_string(d) +
                               " must be below 1");
  }
  const DeltaBundle deltas = delta_bundle(d, c1.y_size(), c1.z_size());
  const double slack = 1e-6;

  const RegionApproximation a1 = capacity_region_approx(c1, n_max, grid, threads);
  const RegionApproximation a2 = capacity_region_approx(c2, n_max, grid, threads);
  const double dist = region_distance_hulls(a1.hull, a2.hull);

  ContinuityReport r;
  r.check = "theorem2";
  r.instances = 1;
  r.eps_nominal = d;
  r.eps_measured_max = d;
  r.bound = deltas.delta_total;
  r.slack = slack;
  r.max_gap = dist;
  r.tightness = deltas.delta_total > 0.0 ? dist / deltas.delta_total : 0.0;
  r.violations = dist > deltas.delta_total + slack ? 1 : 0;
  json hull1 = json::array();
  for (const auto& p : a1.hull) hull1.push_back({p.r0, p.r1});
  json hull2 = json::array();
  for (const auto& p : a2.hull) hull2.push_back({p.r0, p.r1});
  r.witness = json{{"hull_distance", dist},
                   {"bound", deltas.delta_total},
                   {"measured_d", d},
                   {"grid", a1.grid_desc},
                   {"n_max", n_max},
                   {"hull1", hull1},
                   {"hull2", hull2}}
                  .dump();
  return r;
}

}  // namespace bcc
