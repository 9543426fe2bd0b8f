#include "bcc/avc.hpp"

#include <cmath>
#include <string>

#include "bcc/lp.hpp"
#include "bcc/regions.hpp"

namespace bcc {

AVCFamily AVCFamily::make(std::vector<Channel> states) {
  if (states.empty()) throw EmptySet("AVC family must be non-empty");
  for (const auto& s : states) {
    if (!s.same_shape(states.front())) throw ShapeMismatch("AVC states must share shapes");
  }
  return AVCFamily{std::move(states)};
}

std::pair<AVCFamily, Channel> example_family(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda must lie in [0,1], got " + std::to_string(lambda));
  }
  const Channel w1 = Channel::validated({{1.0, 0.0, 0.0}, {0.0, lambda, 1.0 - lambda}});
  const Channel w2 = Channel::validated({{lambda, 0.0, 1.0 - lambda}, {0.0, 1.0, 0.0}});
  const Channel v = Channel::validated({{0.5, 0.5}, {0.5, 0.5}});
  return {AVCFamily::make({w1, w2}), v};
}

double symmetrizer_residual(const AVCFamily& fam, const Channel& sigma) {
  const std::size_t nx = fam.states.front().input_size();
  const std::size_t ny = fam.states.front().output_size();
  const std::size_t ns = fam.states.size();
  if (sigma.input_size() != nx || sigma.output_size() != ns) {
    throw ShapeMismatch("sigma must map inputs to state distributions");
  }
  double worst = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t xp = x + 1; xp < nx; ++xp) {
      for (std::size_t y = 0; y < ny; ++y) {
        double g = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
          g += fam.states[s].at(x, y) * sigma.at(xp, s) -
               fam.states[s].at(xp, y) * sigma.at(x, s);
        }
        worst = std::max(worst, std::abs(g));
      }
    }
  }
  return worst;
}

SymmetrizerResult symmetrizability_check(const AVCFamily& fam) {
  const std::size_t nx = fam.states.front().input_size();
  const std::size_t ny = fam.states.front().output_size();
  const std::size_t ns = fam.states.size();

  // Variables: sigma(x,s) at x*ns+s, then t, then one slack per inequality.
  const std::size_t n_sigma = nx * ns;
  const std::size_t t_idx = n_sigma;
  const std::size_t pairs = nx * (nx - 1) / 2;
  const std::size_t n_ineq = 2 * pairs * ny;
  const std::size_t n_vars = n_sigma + 1 + n_ineq;

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(nx + n_ineq);
  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<double> row(n_vars, 0.0);
    for (std::size_t s = 0; s < ns; ++s) row[x * ns + s] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  std::size_t slack = n_sigma + 1;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t xp = x + 1; xp < nx; ++xp) {
      for (std::size_t y = 0; y < ny; ++y) {
        std::vector<double> g(n_vars, 0.0);
        for (std::size_t s = 0; s < ns; ++s) {
          g[xp * ns + s] += fam.states[s].at(x, y);
          g[x * ns + s] -= fam.states[s].at(xp, y);
        }
        // g - t + slack = 0 and -g - t + slack' = 0.
        std::vector<double> row1 = g;
        row1[t_idx] = -1.0;
        row1[slack++] = 1.0;
        a.push_back(std::move(row1));
        b.push_back(0.0);
        std::vector<double> row2(n_vars, 0.0);
        for (std::size_t j = 0; j < n_sigma; ++j) row2[j] = -g[j];
        row2[t_idx] = -1.0;
        row2[slack++] = 1.0;
        a.push_back(std::move(row2));
        b.push_back(0.0);
      }
    }
  }
  std::vector<double> c(n_vars, 0.0);
  c[t_idx] = 1.0;

  const LpResult lp = simplex_solve_equality(a, b, c);
  SymmetrizerResult out;
  if (!lp.feasible) {
    // Cannot happen: uniform sigma with t = max violation is always feasible.
    throw Error("symmetrizability LP reported infeasible");
  }
  std::vector<std::vector<double>> sigma_rows(nx, std::vector<double>(ns, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t s = 0; s < ns; ++s) sigma_rows[x][s] = lp.x[x * ns + s];
  }
  const Channel sigma = Channel::validated(sigma_rows);
  out.sigma = sigma;
  out.residual = symmetrizer_residual(fam, sigma);
  out.symmetrizable = out.residual <= 1e-9;
  return out;
}

std::vector<SweepRow> lambda_sweep(std::span<const double> lambdas) {
  if (lambdas.empty()) throw EmptySet("lambda sweep needs at least one value");
  const AuxiliaryInput aux = AuxiliaryInput::make(
      ProbVector::validated({1.0}), Channel::validated({{0.5, 0.5}}),
      Channel::validated({{1.0, 0.0}, {0.0, 1.0}}), 1);
  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size());
  for (double l : lambdas) {
    auto [fam, v] = example_family(l);
    const SymmetrizerResult sym = symmetrizability_check(fam);
    const CompoundBCC single = CompoundBCC::make({BroadcastPair::make(fam.states[0], v)});
    const RateRectangle rect = rate_rectangle(single, aux);
    rows.push_back({l, sym.symmetrizable, sym.residual, rect.a0, rect.a1});
  }
  return rows;
}

}  // namespace bcc
