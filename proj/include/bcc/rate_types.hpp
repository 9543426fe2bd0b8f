#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bcc/errors.hpp"

namespace bcc {

/// A rate pair (R0, R1) in bits per channel use.
struct RatePoint {
  double r0 = 0.0;
  double r1 = 0.0;
};

/// Axis-aligned achievable rectangle [0,a0] x [0,a1] anchored at the origin,
/// together with which states attained the binding terms.
struct RateRectangle {
  double a0 = 0.0;
  double a1 = 0.0;
  std::size_t n = 1;
  std::string aux_id;

  double r0_raw = 0.0;  // bound before clipping at 0
  double r1_raw = 0.0;
  std::size_t r0_state = 0;  // state attaining the R0 min
  bool r0_via_z = false;     // true when the R0 min came through receiver 2
  std::size_t r1_min_y_state = 0;
  std::size_t r1_max_z_state = 0;
};

/// Finite set of rate pairs; all coordinates must be >= 0.
struct RegionPointSet {
  std::vector<RatePoint> points;

  static RegionPointSet validated(std::vector<RatePoint> pts) {
    if (pts.empty()) throw EmptySet("region point set must be non-empty");
    for (const auto& p : pts) {
      if (!(p.r0 >= 0.0 && p.r1 >= 0.0)) {
        throw DomainError("rate points must have non-negative coordinates");
      }
    }
    return RegionPointSet{std::move(pts)};
  }
};

}  // namespace bcc
