#include "bcc/rng.hpp"

#include <cmath>
#include <limits>

#include "bcc/prob.hpp"

namespace bcc {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t Rng::index(std::size_t n) {
  if (n <= 1) return 0;
  // Lemire's multiply-shift; deterministic and unbiased enough for tests.
  const unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
  return static_cast<std::size_t>(m >> 64);
}

std::vector<double> Rng::simplex_point(std::size_t k) {
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) {
    // Exponential(1) weights give a uniform Dirichlet(1,...,1) sample.
    double u = uniform();
    x = -std::log1p(-u);
    total += x;
  }
  if (total < 1e-300) {
    for (auto& x : w) x = 1.0 / static_cast<double>(k);
    return w;
  }
  for (auto& x : w) x /= total;
  return w;
}

std::vector<double> perturb_distribution(std::span<const double> row, double eps, Rng& rng) {
  const std::size_t k = row.size();
  std::vector<double> out(row.begin(), row.end());
  if (k < 2 || eps <= 0.0) return out;

  std::vector<double> z(k);
  double mean = 0.0;
  for (auto& x : z) {
    x = rng.uniform_signed();
    mean += x;
  }
  mean /= static_cast<double>(k);
  double l1 = 0.0;
  for (auto& x : z) {
    x -= mean;
    l1 += std::abs(x);
  }
  if (l1 < 1e-12) return out;

  // Largest step that keeps every entry non-negative.
  double c_max = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    if (z[i] < 0.0) c_max = std::min(c_max, row[i] / -z[i]);
  }
  const double c = std::min(eps / l1, c_max) * (1.0 - 1e-12);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = row[i] + c * z[i];
    if (out[i] < 0.0) out[i] = 0.0;
  }
  out = renormalize(std::move(out));

  // Entry rounding can push the measured TV a few ulps past eps; shrink the
  // realized move until the guarantee holds exactly.
  for (int pass = 0; pass < 4; ++pass) {
    double tv = 0.0;
    for (std::size_t i = 0; i < k; ++i) tv += std::abs(out[i] - row[i]);
    if (tv <= eps) return out;
    const double shrink = eps / tv * (1.0 - 1e-9);
    for (std::size_t i = 0; i < k; ++i) {
      out[i] = row[i] + shrink * (out[i] - row[i]);
      if (out[i] < 0.0) out[i] = 0.0;
    }
    out = renormalize(std::move(out));
  }
  return std::vector<double>(row.begin(), row.end());
}

}  // namespace bcc
