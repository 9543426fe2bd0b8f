#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bcc {

/// splitmix64 step; used to derive independent per-trial seeds so that
/// results do not depend on how trials are split across threads.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard; doubles are derived with an explicit 53-bit conversion so the
/// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_signed() { return 2.0 * uniform() - 1.0; }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);

  /// Uniform sample from the probability simplex over k symbols.
  std::vector<double> simplex_point(std::size_t k);

 private:
  std::mt19937_64 gen_;
};

/// Moves `row` by at most `eps` in total variation (l1 sum convention) while
/// staying exactly on the simplex. The perturbation direction is a random
/// sum-zero vector; its magnitude is scaled to min(eps, feasibility limit),
/// so samples often sit on the boundary of the TV ball.
std::vector<double> perturb_distribution(std::span<const double> row, double eps, Rng& rng);

}  // namespace bcc
