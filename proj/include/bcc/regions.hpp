#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bcc/info.hpp"
#include "bcc/metrics.hpp"
#include "bcc/rate_types.hpp"

namespace bcc {

/// Deterministic simplex-lattice enumeration of auxiliary inputs.
struct GridSpec {
  std::size_t denom = 8;    // lattice step 1/denom on every simplex
  std::size_t u_size = 0;   // 0 = default |X|+1
  std::size_t v_size = 0;   // 0 = default |X|+1
  std::size_t max_aux = 5'000'000;  // enumeration budget

  std::string describe(std::size_t x_size) const;
};

/// Number of lattice points with the given denominator on the (k-1)-simplex.
std::size_t simplex_lattice_size(std::size_t k, std::size_t denom);

/// All lattice points, lexicographic in the composition (first coordinate
/// descending), as probability vectors.
std::vector<std::vector<double>> simplex_lattice(std::size_t k, std::size_t denom);

/// Enumerates every AuxiliaryInput on the grid: P_U, each row of P_{V|U}, and
/// each row of the encoder range independently over the lattice. Index 0 is
/// the lexicographically first combination. Throws SizeExceeded when the
/// total count exceeds the grid budget.
class AuxGrid {
 public:
  AuxGrid(std::size_t x_size, std::size_t n, const GridSpec& spec);

  std::size_t size() const { return total_; }
  AuxiliaryInput at(std::size_t index) const;

  std::size_t u_size() const { return u_size_; }
  std::size_t v_size() const { return v_size_; }
  std::size_t xn_size() const { return xn_; }

 private:
  std::size_t u_size_ = 0;
  std::size_t v_size_ = 0;
  std::size_t xn_ = 0;
  std::size_t n_ = 1;
  std::size_t total_ = 0;
  std::vector<std::vector<double>> lattice_u_;
  std::vector<std::vector<double>> lattice_v_;
  std::vector<std::vector<double>> lattice_e_;
};

/// Achievable rectangle for one auxiliary structure:
///   a0 = max(0, (1/n) min_s min{I(U;Y_s^n), I(U;Z_s^n)})
///   a1 = max(0, (1/n) (min_s I(V;Y_s^n|U) - max_s I(V;Z_s^n|U)))
/// Ties on states resolve to the lowest index.
RateRectangle rate_rectangle(const CompoundBCC& c, const AuxiliaryInput& aux,
                             std::size_t entry_budget = kDefaultEntryBudget);

/// Same, with the n-fold state channels precomputed by the caller.
RateRectangle rate_rectangle_products(std::span<const Channel> w_n,
                                      std::span<const Channel> v_n,
                                      const AuxiliaryInput& aux);

struct RegionApproximation {
  RegionPointSet points;                 // corners, staircase projections, origin
  std::vector<std::int64_t> aux_ids;     // per point; -1 for the synthetic origin
  std::vector<std::size_t> point_n;      // per point: blocklength that produced it
  std::vector<RatePoint> hull;           // CCW convex hull of points
  std::vector<std::size_t> n_values;
  std::string grid_desc;
  std::string kind = "inner_approximation";
};

/// Union of the grid rectangles at blocklength n, reported as the deduplicated
/// set of rectangle corners plus their staircase projections and the origin.
RegionApproximation region_Mn(const CompoundBCC& c, std::size_t n, const GridSpec& spec,
                              std::size_t threads = 0);

/// Convex hull of all region_Mn point sets for n = 1..n_max plus the origin.
/// An inner approximation of the capacity region by construction.
RegionApproximation capacity_region_approx(const CompoundBCC& c, std::size_t n_max,
                                           const GridSpec& spec, std::size_t threads = 0);

/// Counter-clockwise convex hull vertices, collinear interior points removed.
/// Throws EmptySet.
std::vector<RatePoint> convex_hull(std::span<const RatePoint> points);

}  // namespace bcc
