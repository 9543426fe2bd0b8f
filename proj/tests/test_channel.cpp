#include <cmath>
#include <vector>

#include "doctest.h"

#include "bcc/channel.hpp"
#include "bcc/instances.hpp"
#include "bcc/metrics.hpp"
#include "bcc/rng.hpp"

using namespace bcc;

namespace {

Channel bsc(double p) { return Channel::validated({{1.0 - p, p}, {p, 1.0 - p}}); }

// Independent product oracle: decode tuple indices digit by digit.
double product_entry_oracle(const Channel& w, std::size_t n, std::size_t xn, std::size_t yn) {
  std::vector<std::size_t> xs(n), ys(n);
  for (std::size_t i = n; i-- > 0;) {
    xs[i] = xn % w.input_size();
    xn /= w.input_size();
    ys[i] = yn % w.output_size();
    yn /= w.output_size();
  }
  double p = 1.0;
  for (std::size_t i = 0; i < n; ++i) p *= w.at(xs[i], ys[i]);
  return p;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("validate accepts stochastic matrices") {
  const Channel id = Channel::validated({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(id.input_size() == 2);
  CHECK(id.output_size() == 2);
  CHECK(id.at(0, 0) == 1.0);

  const Channel uniform = Channel::validated({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(uniform.at(1, 0) == 0.5);
}

TEST_CASE("validate rejects bad rows") {
  CHECK_THROWS_AS(Channel::validated({{1.0, 0.0}, {0.6, 0.6}}), RowSumViolation);
  CHECK_THROWS_AS(Channel::validated({{1.0, -0.5}, {0.25, 0.25}}), NegativeEntry);
  CHECK_THROWS_AS(Channel::validated({{0.5, 0.5}, {1.0}}), ShapeMismatch);
  CHECK_THROWS_AS(Channel::validated({}), ShapeMismatch);
  // Entries within the renormalization tolerances pass.
  CHECK_NOTHROW(Channel::validated({{0.5 + 4e-10, 0.5}, {-5e-13, 1.0}}));
}

TEST_CASE("product channel boundary cases") {
  const Channel w = bsc(0.1);
  const Channel w1 = product_channel(w, 1);
  CHECK(w1.input_size() == 2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK(w1.at(x, y) == doctest::Approx(w.at(x, y)));
  }

  const Channel w2 = product_channel(w, 2);
  CHECK(w2.input_size() == 4);
  CHECK(w2.output_size() == 4);
  // ((0,0)|(0,0)) = (1-p)^2 and ((0,1)|(0,0)) = 0.9 * 0.1, lexicographic
  // flattening with the last coordinate fastest.
  CHECK(w2.at(0, 0) == doctest::Approx(0.81).epsilon(1e-12));
  CHECK(w2.at(0, 1) == doctest::Approx(0.09).epsilon(1e-12));
}

TEST_CASE("product channel matches the per-coordinate oracle") {
  Rng rng(17);
  const Channel w = random_channel(rng, 2, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Channel wn = product_channel(w, n);
    for (std::size_t t = 0; t < 50; ++t) {
      const std::size_t x = rng.index(wn.input_size());
      const std::size_t y = rng.index(wn.output_size());
      CHECK(wn.at(x, y) == doctest::Approx(product_entry_oracle(w, n, x, y)).epsilon(1e-12));
    }
    // every row must still be a pmf
    for (std::size_t x = 0; x < wn.input_size(); ++x) {
      CHECK_NOTHROW(check_distribution(wn.row(x)));
    }
  }
}

TEST_CASE("product channel respects the entry budget") {
  const Channel w = bsc(0.2);
  CHECK_THROWS_AS(product_channel(w, 13, 1 << 10), SizeExceeded);
}

TEST_CASE("marginals recover independent factors") {
  const Channel w = Channel::validated({{1.0, 0.0}, {0.0, 1.0}});
  const Channel v = Channel::validated({{0.5, 0.5}, {0.5, 0.5}});
  std::vector<std::vector<double>> joint(2);
  for (std::size_t x = 0; x < 2; ++x) {
    joint[x].resize(4);
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t z = 0; z < 2; ++z) joint[x][y * 2 + z] = w.at(x, y) * v.at(x, z);
    }
  }
  const auto [mw, mv] = marginals(joint, 2, 2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK(mw.at(x, y) == doctest::Approx(w.at(x, y)));
    for (std::size_t z = 0; z < 2; ++z) CHECK(mv.at(x, z) == doctest::Approx(v.at(x, z)));
  }
}

TEST_CASE("marginals of the diagonal joint are identities") {
  // Q((y,z) = (x,x) | x) = 1
  std::vector<std::vector<double>> joint(2, std::vector<double>(4, 0.0));
  joint[0][0] = 1.0;  // (y,z) = (0,0)
  joint[1][3] = 1.0;  // (y,z) = (1,1)
  const auto [mw, mv] = marginals(joint, 2, 2);
  CHECK(mw.at(0, 0) == 1.0);
  CHECK(mw.at(1, 1) == 1.0);
  CHECK(mv.at(0, 0) == 1.0);
  CHECK(mv.at(1, 1) == 1.0);
}

TEST_CASE("marginal rows of random joints are pmfs") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<double>> joint(2);
    for (auto& row : joint) row = rng.simplex_point(4);
    const auto [mw, mv] = marginals(joint, 2, 2);
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(sum(mw.row(x)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(sum(mv.row(x)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("broadcast pair validates joint kernels") {
  const Channel w = Channel::validated({{1.0, 0.0}, {0.0, 1.0}});
  const Channel v = Channel::validated({{0.5, 0.5}, {0.5, 0.5}});
  const Channel q = Channel::validated({{0.5, 0.5, 0.0, 0.0}, {0.0, 0.0, 0.5, 0.5}});
  CHECK_NOTHROW(BroadcastPair::with_joint(w, v, q));
  const Channel bad = Channel::validated({{0.0, 0.0, 0.5, 0.5}, {0.5, 0.5, 0.0, 0.0}});
  CHECK_THROWS_AS(BroadcastPair::with_joint(w, v, bad), RowSumViolation);
}

TEST_CASE("perturbation is deterministic and within the TV ball") {
  Rng rng(23);
  const CompoundBCC base = random_compound(rng, 2, 2, 3, 2);

  const CompoundBCC a = perturb_compound(base, 0.05, 99);
  const CompoundBCC b = perturb_compound(base, 0.05, 99);
  for (std::size_t s = 0; s < 2; ++s) {
    CHECK(channel_distance(a.states[s].w, b.states[s].w) == 0.0);
    CHECK(channel_distance(a.states[s].v, b.states[s].v) == 0.0);
  }

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CompoundBCC moved = perturb_compound(base, 0.05, seed);
    CHECK(compound_distance(base, moved) <= 0.05);
  }
}

TEST_CASE("perturbation vanishes with eps") {
  Rng rng(31);
  const CompoundBCC base = random_compound(rng, 1, 2, 2, 2);
  const CompoundBCC moved = perturb_compound(base, 1e-12, 7);
  CHECK(compound_distance(base, moved) <= 1e-12);
}

TEST_CASE("compound constructor checks") {
  CHECK_THROWS_AS(CompoundBCC::make({}), EmptySet);
  const Channel w2 = bsc(0.1);
  const Channel w3 = Channel::validated({{0.5, 0.25, 0.25}, {0.1, 0.2, 0.7}});
  CHECK_THROWS_AS(
      CompoundBCC::make({BroadcastPair::make(w2, w2), BroadcastPair::make(w3, w3)}),
      ShapeMismatch);
}

}  // TEST_SUITE
