#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "bcc/channel.hpp"
#include "bcc/rate_types.hpp"

namespace bcc {

/// d(W, W~) = max_x sum_y |W(y|x) - W~(y|x)|; values in [0,2].
/// Throws ShapeMismatch.
double channel_distance(const Channel& a, const Channel& b);

struct ChannelDistanceWitness {
  double value = 0.0;
  std::size_t x = 0;  // input symbol attaining the max (lowest index on ties)
};
ChannelDistanceWitness channel_distance_witness(const Channel& a, const Channel& b);

/// max(d(W,W~), d(V,V~)).
double pair_distance(const BroadcastPair& a, const BroadcastPair& b);

struct DirectedWitness {
  double value = 0.0;
  std::size_t outer = 0;  // index in the max-scanned set
  std::size_t inner = 0;  // index in the min-scanned set
};

/// Directed Hausdorff value between channel sets under channel_distance.
/// direction 1: max over b of min over a; direction 2: max over a of min
/// over b. Ties resolve to the lowest index. Throws EmptySet / DomainError.
DirectedWitness directed_set_distance(std::span<const Channel> a, std::span<const Channel> b,
                                      int direction);

/// D = max of the four directed distances over the W and V marginal families.
double compound_distance(const CompoundBCC& a, const CompoundBCC& b);

struct CompoundDistanceWitness {
  double value = 0.0;
  std::string term;  // one of d1_W, d2_W, d1_V, d2_V
  std::size_t outer = 0;
  std::size_t inner = 0;
};
CompoundDistanceWitness compound_distance_witness(const CompoundBCC& a, const CompoundBCC& b);

struct RegionDistanceWitness {
  double value = 0.0;
  int direction = 1;  // which directed term attained the max
  RatePoint from;
  RatePoint to;
};

/// Symmetric Hausdorff distance between finite point sets under the l1 ground
/// metric; exact for the point sets provided. Throws EmptySet.
double region_distance(const RegionPointSet& a, const RegionPointSet& b);
RegionDistanceWitness region_distance_witness(const RegionPointSet& a,
                                              const RegionPointSet& b);

/// Exact filled-region Hausdorff distance between two origin-anchored
/// rectangles: max of the clipped corner deficits in each direction.
double region_distance(const RateRectangle& a, const RateRectangle& b);

/// |a0 - a0'| + |a1 - a1'|; upper-bounds region_distance of the rectangles,
/// with equality when one contains the other.
double rectangle_corner_gap(const RateRectangle& a, const RateRectangle& b);

/// Exact filled-region Hausdorff distance between two convex polygons given
/// as hull vertex lists (any orientation, no repeated closing vertex).
double region_distance_hulls(std::span<const RatePoint> hull_a,
                             std::span<const RatePoint> hull_b);

/// Dense boundary sampling of the rectangle [0,a0] x [0,a1] with l1 arc step
/// <= step; suitable input for the finite-set region_distance.
RegionPointSet sample_rectangle_boundary(const RateRectangle& r, double step);

}  // namespace bcc
