#include "bcc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "bcc/parallel.hpp"

namespace bcc {

std::string GridSpec::describe(std::size_t x_size) const {
  const std::size_t u = u_size == 0 ? x_size + 1 : u_size;
  const std::size_t v = v_size == 0 ? x_size + 1 : v_size;
  return "step=1/" + std::to_string(denom) + ",u=" + std::to_string(u) +
         ",v=" + std::to_string(v);
}

namespace {

std::size_t binomial_checked(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(1) << 62) {
      throw SizeExceeded("simplex lattice size overflows the grid budget");
    }
  }
  return static_cast<std::size_t>(r);
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw SizeExceeded("auxiliary grid size overflow");
  }
  return a * b;
}

std::size_t checked_pow_count(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

std::size_t simplex_lattice_size(std::size_t k, std::size_t denom) {
  if (k == 0) throw DomainError("simplex dimension must be >= 1");
  if (denom < 1) throw DomainError("grid needs at least 2 points per simplex edge");
  return binomial_checked(denom + k - 1, k - 1);
}

std::vector<std::vector<double>> simplex_lattice(std::size_t k, std::size_t denom) {
  const std::size_t count = simplex_lattice_size(k, denom);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  std::vector<std::size_t> comp(k, 0);
  const double inv = 1.0 / static_cast<double>(denom);
  const auto emit = [&] {
    std::vector<double> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<double>(comp[i]) * inv;
    out.push_back(std::move(p));
  };
  // Compositions of denom into k parts, first coordinate descending.
  const auto rec = [&](auto&& self, std::size_t pos, std::size_t rest) -> void {
    if (pos + 1 == k) {
      comp[pos] = rest;
      emit();
      return;
    }
    for (std::size_t take = rest + 1; take-- > 0;) {
      comp[pos] = take;
      self(self, pos + 1, rest - take);
    }
  };
  rec(rec, 0, denom);
  return out;
}

AuxGrid::AuxGrid(std::size_t x_size, std::size_t n, const GridSpec& spec) : n_(n) {
  if (n < 1) throw DomainError("blocklength n must be >= 1");
  u_size_ = spec.u_size == 0 ? x_size + 1 : spec.u_size;
  v_size_ = spec.v_size == 0 ? x_size + 1 : spec.v_size;
  xn_ = 1;
  for (std::size_t i = 0; i < n; ++i) xn_ = checked_mul(xn_, x_size);

  const std::size_t nu = simplex_lattice_size(u_size_, spec.denom);
  const std::size_t nv = simplex_lattice_size(v_size_, spec.denom);
  const std::size_t ne = simplex_lattice_size(xn_, spec.denom);
  total_ = checked_mul(nu, checked_mul(checked_pow_count(nv, u_size_),
                                       checked_pow_count(ne, v_size_)));
  if (total_ > spec.max_aux) {
    throw SizeExceeded("grid enumerates " + std::to_string(total_) +
                       " auxiliary inputs, budget " + std::to_string(spec.max_aux) +
                       "; reduce u/v sizes or the lattice step");
  }
  lattice_u_ = simplex_lattice(u_size_, spec.denom);
  lattice_v_ = simplex_lattice(v_size_, spec.denom);
  lattice_e_ = simplex_lattice(xn_, spec.denom);
}

AuxiliaryInput AuxGrid::at(std::size_t index) const {
  if (index >= total_) throw DomainError("aux grid index out of range");
  std::size_t rest = index;
  const std::size_t nu = lattice_u_.size();
  const std::size_t nv = lattice_v_.size();
  const std::size_t ne = lattice_e_.size();

  const std::size_t iu = rest % nu;
  rest /= nu;
  std::vector<std::vector<double>> v_rows(u_size_);
  for (std::size_t u = 0; u < u_size_; ++u) {
    v_rows[u] = lattice_v_[rest % nv];
    rest /= nv;
  }
  std::vector<std::vector<double>> e_rows(v_size_);
  for (std::size_t v = 0; v < v_size_; ++v) {
    e_rows[v] = lattice_e_[rest % ne];
    rest /= ne;
  }
  return AuxiliaryInput::make(ProbVector::validated(lattice_u_[iu]),
                              Channel::validated(v_rows), Channel::validated(e_rows), n_);
}

RateRectangle rate_rectangle_products(std::span<const Channel> w_n,
                                      std::span<const Channel> v_n,
                                      const AuxiliaryInput& aux) {
  if (w_n.empty() || w_n.size() != v_n.size()) {
    throw DimensionMismatch("need one (W^n, V^n) pair per state");
  }
  static constexpr std::size_t kUY[] = {0, 2};
  const double inv_n = 1.0 / static_cast<double>(aux.n);

  double min_common = std::numeric_limits<double>::infinity();
  std::size_t r0_state = 0;
  bool r0_via_z = false;
  double min_iy = std::numeric_limits<double>::infinity();
  std::size_t min_iy_state = 0;
  double max_iz = -std::numeric_limits<double>::infinity();
  std::size_t max_iz_state = 0;

  for (std::size_t s = 0; s < w_n.size(); ++s) {
    const JointDistribution jy = induced_joint(aux, w_n[s]);
    const JointDistribution jz = induced_joint(aux, v_n[s]);
    const double i_uy = mutual_information(jy.marginal(kUY));
    const double i_uz = mutual_information(jz.marginal(kUY));
    const double i_vy = conditional_mutual_information(jy);
    const double i_vz = conditional_mutual_information(jz);

    const bool via_z = i_uz < i_uy;
    const double common = via_z ? i_uz : i_uy;
    if (common < min_common) {
      min_common = common;
      r0_state = s;
      r0_via_z = via_z;
    }
    if (i_vy < min_iy) {
      min_iy = i_vy;
      min_iy_state = s;
    }
    if (i_vz > max_iz) {
      max_iz = i_vz;
      max_iz_state = s;
    }
  }

  RateRectangle r;
  r.n = aux.n;
  r.r0_raw = inv_n * min_common;
  r.r1_raw = inv_n * (min_iy - max_iz);
  r.a0 = std::max(0.0, r.r0_raw);
  r.a1 = std::max(0.0, r.r1_raw);
  r.r0_state = r0_state;
  r.r0_via_z = r0_via_z;
  r.r1_min_y_state = min_iy_state;
  r.r1_max_z_state = max_iz_state;
  return r;
}

RateRectangle rate_rectangle(const CompoundBCC& c, const AuxiliaryInput& aux,
                             std::size_t entry_budget) {
  if (aux.xn_size() != checked_pow_count(c.x_size(), aux.n)) {
    throw DimensionMismatch("encoder output alphabet must be |X|^n");
  }
  std::vector<Channel> w_n;
  std::vector<Channel> v_n;
  w_n.reserve(c.states.size());
  v_n.reserve(c.states.size());
  for (const auto& s : c.states) {
    w_n.push_back(product_channel(s.w, aux.n, entry_budget));
    v_n.push_back(product_channel(s.v, aux.n, entry_budget));
  }
  return rate_rectangle_products(w_n, v_n, aux);
}

namespace {

struct PointAccumulator {
  std::map<std::pair<double, double>, std::size_t> seen;
  std::vector<RatePoint> points;
  std::vector<std::int64_t> aux_ids;
  std::vector<std::size_t> point_n;

  void add(double r0, double r1, std::int64_t aux_id, std::size_t n) {
    const auto key = std::make_pair(r0, r1);
    if (seen.emplace(key, points.size()).second) {
      points.push_back({r0, r1});
      aux_ids.push_back(aux_id);
      point_n.push_back(n);
    }
  }
};

void accumulate_region(const CompoundBCC& c, std::size_t n, const GridSpec& spec,
                       std::size_t threads, PointAccumulator& acc) {
  const AuxGrid grid(c.x_size(), n, spec);
  std::vector<Channel> w_n;
  std::vector<Channel> v_n;
  for (const auto& s : c.states) {
    w_n.push_back(product_channel(s.w, n));
    v_n.push_back(product_channel(s.v, n));
  }
  std::vector<RatePoint> corners(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const RateRectangle r = rate_rectangle_products(w_n, v_n, grid.at(i));
        corners[i] = {r.a0, r.a1};
      },
      threads);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto id = static_cast<std::int64_t>(i);
    acc.add(corners[i].r0, corners[i].r1, id, n);
    acc.add(corners[i].r0, 0.0, id, n);
    acc.add(0.0, corners[i].r1, id, n);
  }
}

RegionApproximation finish(PointAccumulator&& acc, std::vector<std::size_t> n_values,
                           std::string grid_desc) {
  RegionApproximation out;
  out.points = RegionPointSet::validated(std::move(acc.points));
  out.aux_ids = std::move(acc.aux_ids);
  out.point_n = std::move(acc.point_n);
  out.hull = convex_hull(out.points.points);
  out.n_values = std::move(n_values);
  out.grid_desc = std::move(grid_desc);
  return out;
}

}  // namespace

RegionApproximation region_Mn(const CompoundBCC& c, std::size_t n, const GridSpec& spec,
                              std::size_t threads) {
  PointAccumulator acc;
  acc.add(0.0, 0.0, -1, n);
  accumulate_region(c, n, spec, threads, acc);
  return finish(std::move(acc), {n}, spec.describe(c.x_size()));
}

RegionApproximation capacity_region_approx(const CompoundBCC& c, std::size_t n_max,
                                           const GridSpec& spec, std::size_t threads) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  PointAccumulator acc;
  acc.add(0.0, 0.0, -1, 1);
  std::vector<std::size_t> n_values;
  for (std::size_t n = 1; n <= n_max; ++n) {
    accumulate_region(c, n, spec, threads, acc);
    n_values.push_back(n);
  }
  return finish(std::move(acc), std::move(n_values), spec.describe(c.x_size()));
}

std::vector<RatePoint> convex_hull(std::span<const RatePoint> points) {
  if (points.empty()) throw EmptySet("convex hull of an empty point set");
  std::vector<RatePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r0 < b.r0 || (a.r0 == b.r0 && a.r1 < b.r1);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatePoint& a, const RatePoint& b) {
                          return a.r0 == b.r0 && a.r1 == b.r1;
                        }),
            pts.end());
  if (pts.size() <= 2) return pts;

  const auto cross = [](const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.r0 - o.r0) * (b.r1 - o.r1) - (a.r1 - o.r1) * (b.r0 - o.r0);
  };
  // Monotone chain; <= 0 also drops collinear interior points.
  std::vector<RatePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace bcc
