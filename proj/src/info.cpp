#include "bcc/info.hpp"

#include <cmath>
#include <string>

namespace bcc {

double entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double binary_entropy(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw DomainError("binary entropy needs eps in [0,1], got " + std::to_string(eps));
  }
  double h = 0.0;
  if (eps > 0.0) h -= eps * std::log2(eps);
  if (eps < 1.0) h -= (1.0 - eps) * std::log2(1.0 - eps);
  return h;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw LengthMismatch("total variation needs equal lengths, got " +
                         std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s;
}

JointDistribution::JointDistribution(std::vector<Axis> axes, std::vector<double> mass)
    : axes_(std::move(axes)), mass_(std::move(mass)) {
  std::size_t cells = 1;
  for (const auto& a : axes_) {
    if (a.size == 0) throw DimensionMismatch("axis '" + a.name + "' has size 0");
    cells *= a.size;
  }
  if (cells != mass_.size()) {
    throw DimensionMismatch("mass length " + std::to_string(mass_.size()) +
                            " != product of axis sizes " + std::to_string(cells));
  }
  check_distribution(mass_);
  for (double& x : mass_) {
    if (x < 0.0) x = 0.0;
  }
}

JointDistribution JointDistribution::marginal(std::span<const std::size_t> keep) const {
  std::vector<Axis> out_axes;
  out_axes.reserve(keep.size());
  std::size_t out_cells = 1;
  for (std::size_t a : keep) {
    if (a >= axes_.size()) throw DimensionMismatch("marginal axis index out of range");
    out_axes.push_back(axes_[a]);
    out_cells *= axes_[a].size;
  }

  // Stride of each source axis in the flattened mass (last axis fastest).
  std::vector<std::size_t> stride(axes_.size(), 1);
  for (std::size_t a = axes_.size(); a-- > 1;) {
    stride[a - 1] = stride[a] * axes_[a].size;
  }
  std::vector<std::size_t> out_stride(keep.size(), 1);
  for (std::size_t i = keep.size(); i-- > 1;) {
    out_stride[i - 1] = out_stride[i] * axes_[keep[i]].size;
  }

  std::vector<double> out(out_cells, 0.0);
  for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const std::size_t a = keep[i];
      idx += ((cell / stride[a]) % axes_[a].size) * out_stride[i];
    }
    out[idx] += mass_[cell];
  }
  return JointDistribution(std::move(out_axes), std::move(out));
}

AuxiliaryInput AuxiliaryInput::make(ProbVector p_u, Channel p_v_given_u, Channel encoder,
                                    std::size_t n) {
  if (n < 1) throw DomainError("auxiliary blocklength n must be >= 1");
  if (p_u.size() != p_v_given_u.input_size()) {
    throw DimensionMismatch("|U| mismatch between P_U and P_{V|U}");
  }
  if (p_v_given_u.output_size() != encoder.input_size()) {
    throw DimensionMismatch("|V| mismatch between P_{V|U} and encoder");
  }
  return AuxiliaryInput{std::move(p_u), std::move(p_v_given_u), std::move(encoder), n};
}

JointDistribution induced_joint(const AuxiliaryInput& aux, const Channel& w_n) {
  if (aux.xn_size() != w_n.input_size()) {
    throw DimensionMismatch("encoder output alphabet " + std::to_string(aux.xn_size()) +
                            " != channel input alphabet " +
                            std::to_string(w_n.input_size()));
  }
  const std::size_t nu = aux.u_size();
  const std::size_t nv = aux.v_size();
  const std::size_t nx = w_n.input_size();
  const std::size_t ny = w_n.output_size();

  // M[v][y] = sum_x E(x|v) W(y|x); the joint factors through it.
  std::vector<double> m(nv * ny, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    double* mv = m.data() + v * ny;
    for (std::size_t x = 0; x < nx; ++x) {
      const double e = aux.encoder.at(v, x);
      if (e == 0.0) continue;
      const double* wr = w_n.row(x).data();
      for (std::size_t y = 0; y < ny; ++y) mv[y] += e * wr[y];
    }
  }

  std::vector<double> mass(nu * nv * ny);
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      const double scale = aux.p_u[u] * aux.p_v_given_u.at(u, v);
      const double* mv = m.data() + v * ny;
      double* dst = mass.data() + (u * nv + v) * ny;
      for (std::size_t y = 0; y < ny; ++y) dst[y] = scale * mv[y];
    }
  }
  return JointDistribution({{"U", nu}, {"V", nv}, {"Yn", ny}}, std::move(mass));
}

double conditional_mutual_information(const JointDistribution& joint) {
  if (joint.axis_count() != 3) {
    throw AxisCountMismatch("conditional MI needs a three-axis joint, got " +
                            std::to_string(joint.axis_count()));
  }
  static constexpr std::size_t kUV[] = {0, 1};
  static constexpr std::size_t kUY[] = {0, 2};
  static constexpr std::size_t kU[] = {0};
  const double h_uv = joint.marginal(kUV).entropy_bits();
  const double h_uy = joint.marginal(kUY).entropy_bits();
  const double h_u = joint.marginal(kU).entropy_bits();
  const double h_uvy = joint.entropy_bits();
  return h_uv + h_uy - h_u - h_uvy;
}

double mutual_information(const JointDistribution& joint) {
  if (joint.axis_count() != 2) {
    throw AxisCountMismatch("mutual information needs a two-axis joint, got " +
                            std::to_string(joint.axis_count()));
  }
  std::vector<double> mass(joint.mass().begin(), joint.mass().end());
  JointDistribution lifted({{"1", 1}, joint.axes()[0], joint.axes()[1]}, std::move(mass));
  return conditional_mutual_information(lifted);
}

}  // namespace bcc
