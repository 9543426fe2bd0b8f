#include "bcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bcc/info.hpp"

namespace bcc {

ChannelDistanceWitness channel_distance_witness(const Channel& a, const Channel& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("channel distance needs matching shapes");
  ChannelDistanceWitness w;
  for (std::size_t x = 0; x < a.input_size(); ++x) {
    const double d = total_variation(a.row(x), b.row(x));
    if (d > w.value) {
      w.value = d;
      w.x = x;
    }
  }
  return w;
}

double channel_distance(const Channel& a, const Channel& b) {
  return channel_distance_witness(a, b).value;
}

double pair_distance(const BroadcastPair& a, const BroadcastPair& b) {
  return std::max(channel_distance(a.w, b.w), channel_distance(a.v, b.v));
}

DirectedWitness directed_set_distance(std::span<const Channel> a, std::span<const Channel> b,
                                      int direction) {
  if (a.empty() || b.empty()) throw EmptySet("directed set distance needs non-empty sets");
  if (direction != 1 && direction != 2) throw DomainError("direction must be 1 or 2");
  // direction 1 scans the max over the second family, direction 2 over the
  // first; the min always runs over the other one.
  std::span<const Channel> outer = direction == 1 ? b : a;
  std::span<const Channel> inner = direction == 1 ? a : b;
  DirectedWitness w;
  bool first = true;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      const double d = channel_distance(inner[j], outer[i]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (first || best > w.value) {
      w.value = best;
      w.outer = i;
      w.inner = best_j;
      first = false;
    }
  }
  return w;
}

namespace {

std::vector<Channel> w_family(const CompoundBCC& c) {
  std::vector<Channel> out;
  out.reserve(c.states.size());
  for (const auto& s : c.states) out.push_back(s.w);
  return out;
}

std::vector<Channel> v_family(const CompoundBCC& c) {
  std::vector<Channel> out;
  out.reserve(c.states.size());
  for (const auto& s : c.states) out.push_back(s.v);
  return out;
}

}  // namespace

CompoundDistanceWitness compound_distance_witness(const CompoundBCC& a, const CompoundBCC& b) {
  if (a.x_size() != b.x_size() || a.y_size() != b.y_size() || a.z_size() != b.z_size()) {
    throw ShapeMismatch("compound distance needs matching alphabets");
  }
  const auto wa = w_family(a);
  const auto wb = w_family(b);
  const auto va = v_family(a);
  const auto vb = v_family(b);

  CompoundDistanceWitness best;
  const auto consider = [&best](const char* term, const DirectedWitness& w) {
    if (best.term.empty() || w.value > best.value) {
      best.value = w.value;
      best.term = term;
      best.outer = w.outer;
      best.inner = w.inner;
    }
  };
  consider("d1_W", directed_set_distance(wa, wb, 1));
  consider("d2_W", directed_set_distance(wa, wb, 2));
  consider("d1_V", directed_set_distance(va, vb, 1));
  consider("d2_V", directed_set_distance(va, vb, 2));
  return best;
}

double compound_distance(const CompoundBCC& a, const CompoundBCC& b) {
  return compound_distance_witness(a, b).value;
}

namespace {

double l1(const RatePoint& p, const RatePoint& q) {
  return std::abs(p.r0 - q.r0) + std::abs(p.r1 - q.r1);
}

RegionDistanceWitness directed_point_sets(const RegionPointSet& from, const RegionPointSet& to,
                                          int direction) {
  RegionDistanceWitness w;
  w.direction = direction;
  bool first = true;
  for (const auto& p : from.points) {
    double best = std::numeric_limits<double>::infinity();
    RatePoint best_q;
    for (const auto& q : to.points) {
      const double d = l1(p, q);
      if (d < best) {
        best = d;
        best_q = q;
      }
    }
    if (first || best > w.value) {
      w.value = best;
      w.from = p;
      w.to = best_q;
      first = false;
    }
  }
  return w;
}

}  // namespace

RegionDistanceWitness region_distance_witness(const RegionPointSet& a,
                                              const RegionPointSet& b) {
  if (a.points.empty() || b.points.empty()) {
    throw EmptySet("region distance needs non-empty point sets");
  }
  const auto d12 = directed_point_sets(a, b, 1);
  const auto d21 = directed_point_sets(b, a, 2);
  return d21.value > d12.value ? d21 : d12;
}

double region_distance(const RegionPointSet& a, const RegionPointSet& b) {
  return region_distance_witness(a, b).value;
}

double region_distance(const RateRectangle& a, const RateRectangle& b) {
  const auto pos = [](double x) { return x > 0.0 ? x : 0.0; };
  const double ab = pos(a.a0 - b.a0) + pos(a.a1 - b.a1);
  const double ba = pos(b.a0 - a.a0) + pos(b.a1 - a.a1);
  return std::max(ab, ba);
}

double rectangle_corner_gap(const RateRectangle& a, const RateRectangle& b) {
  return std::abs(a.a0 - b.a0) + std::abs(a.a1 - b.a1);
}

namespace {

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r0 - o.r0) * (b.r1 - o.r1) - (a.r1 - o.r1) * (b.r0 - o.r0);
}

/// l1 distance from p to the segment a-b, minimized exactly: the distance is
/// piecewise linear in the segment parameter, so the minimum sits at an
/// endpoint or where one coordinate difference vanishes.
double point_segment_l1(const RatePoint& p, const RatePoint& a, const RatePoint& b) {
  const double dx = b.r0 - a.r0;
  const double dy = b.r1 - a.r1;
  double best = std::numeric_limits<double>::infinity();
  const auto eval = [&](double t) {
    t = std::clamp(t, 0.0, 1.0);
    const double qx = a.r0 + t * dx;
    const double qy = a.r1 + t * dy;
    best = std::min(best, std::abs(p.r0 - qx) + std::abs(p.r1 - qy));
  };
  eval(0.0);
  eval(1.0);
  if (dx != 0.0) eval((p.r0 - a.r0) / dx);
  if (dy != 0.0) eval((p.r1 - a.r1) / dy);
  return best;
}

bool inside_convex(const RatePoint& p, std::span<const RatePoint> hull, bool ccw) {
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cross(hull[i], hull[(i + 1) % n], p);
    if (ccw ? c < -1e-12 : c > 1e-12) return false;
  }
  return true;
}

double signed_area2(std::span<const RatePoint> hull) {
  double s = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    s += a.r0 * b.r1 - b.r0 * a.r1;
  }
  return s;
}

double point_to_polygon(const RatePoint& p, std::span<const RatePoint> hull, bool ccw) {
  if (hull.size() == 1) return l1(p, hull[0]);
  if (hull.size() >= 3 && inside_convex(p, hull, ccw)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = hull.size();
  const std::size_t edges = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    best = std::min(best, point_segment_l1(p, hull[i], hull[(i + 1) % n]));
  }
  return best;
}

}  // namespace

double region_distance_hulls(std::span<const RatePoint> hull_a,
                             std::span<const RatePoint> hull_b) {
  if (hull_a.empty() || hull_b.empty()) throw EmptySet("hull distance needs non-empty hulls");
  // The max of a convex function over a convex polygon sits at a vertex, so
  // scanning vertices against the filled other polygon is exact.
  const bool ccw_a = signed_area2(hull_a) >= 0.0;
  const bool ccw_b = signed_area2(hull_b) >= 0.0;
  double d = 0.0;
  for (const auto& p : hull_a) d = std::max(d, point_to_polygon(p, hull_b, ccw_b));
  for (const auto& q : hull_b) d = std::max(d, point_to_polygon(q, hull_a, ccw_a));
  return d;
}

RegionPointSet sample_rectangle_boundary(const RateRectangle& r, double step) {
  if (!(step > 0.0)) throw DomainError("sampling step must be positive");
  std::vector<RatePoint> pts;
  const auto emit_edge = [&](RatePoint from, RatePoint to) {
    const double len = l1(from, to);
    const std::size_t segs = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / step)));
    for (std::size_t i = 0; i < segs; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(segs);
      pts.push_back({from.r0 + t * (to.r0 - from.r0), from.r1 + t * (to.r1 - from.r1)});
    }
  };
  const RatePoint o{0.0, 0.0}, c0{r.a0, 0.0}, c{r.a0, r.a1}, c1{0.0, r.a1};
  emit_edge(o, c0);
  emit_edge(c0, c);
  emit_edge(c, c1);
  emit_edge(c1, o);
  if (pts.empty()) pts.push_back(o);
  return RegionPointSet::validated(std::move(pts));
}

}  // namespace bcc
