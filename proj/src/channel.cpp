#include "bcc/channel.hpp"

#include <cmath>
#include <string>

#include "bcc/rng.hpp"

namespace bcc {

Channel Channel::validated(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ShapeMismatch("channel needs at least one row");
  const std::size_t out = rows.front().size();
  if (out == 0) throw ShapeMismatch("channel rows must be non-empty");
  std::vector<double> data;
  data.reserve(rows.size() * out);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != out) {
      throw ShapeMismatch("row " + std::to_string(x) + " has " +
                          std::to_string(rows[x].size()) + " entries, expected " +
                          std::to_string(out));
    }
    check_distribution(rows[x]);
    auto fixed = renormalize(rows[x]);
    data.insert(data.end(), fixed.begin(), fixed.end());
  }
  return Channel(rows.size(), out, std::move(data));
}

namespace {

std::size_t checked_pow(std::size_t base, std::size_t n, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > limit / base) throw SizeExceeded("alphabet size overflow in n-fold extension");
    r *= base;
  }
  return r;
}

}  // namespace

Channel mixed_product_channel(const Channel& head, const Channel& tail, std::size_t n,
                              std::size_t k, std::size_t entry_budget) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (k > n) throw DimensionMismatch("k must satisfy 0 <= k <= n");
  if (!head.same_shape(tail)) throw ShapeMismatch("head/tail channel shapes differ");

  const std::size_t in_n = checked_pow(head.input_size(), n, entry_budget);
  const std::size_t out_n = checked_pow(head.output_size(), n, entry_budget);
  if (in_n > entry_budget / out_n) {
    throw SizeExceeded("n-fold extension would need " + std::to_string(in_n) + "x" +
                       std::to_string(out_n) + " entries, budget " +
                       std::to_string(entry_budget));
  }

  // Iterated Kronecker product; the first factor is the slowest coordinate,
  // matching the lexicographic flattening.
  std::vector<double> acc{1.0};
  std::size_t acc_in = 1;
  std::size_t acc_out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Channel& f = i < k ? head : tail;
    const std::size_t fin = f.input_size();
    const std::size_t fout = f.output_size();
    std::vector<double> next(acc_in * fin * acc_out * fout);
    const std::size_t next_out = acc_out * fout;
    for (std::size_t a = 0; a < acc_in; ++a) {
      for (std::size_t b = 0; b < acc_out; ++b) {
        const double base = acc[a * acc_out + b];
        if (base == 0.0) continue;
        for (std::size_t x = 0; x < fin; ++x) {
          double* dst = next.data() + (a * fin + x) * next_out + b * fout;
          const double* src = f.row(x).data();
          for (std::size_t y = 0; y < fout; ++y) dst[y] = base * src[y];
        }
      }
    }
    acc = std::move(next);
    acc_in *= fin;
    acc_out *= fout;
  }

  std::vector<std::vector<double>> rows(acc_in);
  for (std::size_t x = 0; x < acc_in; ++x) {
    rows[x].assign(acc.begin() + static_cast<std::ptrdiff_t>(x * acc_out),
                   acc.begin() + static_cast<std::ptrdiff_t>((x + 1) * acc_out));
  }
  return Channel::validated(rows);
}

Channel product_channel(const Channel& w, std::size_t n, std::size_t entry_budget) {
  return mixed_product_channel(w, w, n, n, entry_budget);
}

std::pair<Channel, Channel> marginals(const std::vector<std::vector<double>>& joint_rows,
                                      std::size_t y_size, std::size_t z_size) {
  if (joint_rows.empty()) throw ShapeMismatch("joint kernel needs at least one row");
  std::vector<std::vector<double>> w_rows;
  std::vector<std::vector<double>> v_rows;
  for (const auto& q : joint_rows) {
    if (q.size() != y_size * z_size) {
      throw ShapeMismatch("joint row length " + std::to_string(q.size()) +
                          " != |Y||Z| = " + std::to_string(y_size * z_size));
    }
    check_distribution(q);
    std::vector<double> wy(y_size, 0.0);
    std::vector<double> vz(z_size, 0.0);
    for (std::size_t y = 0; y < y_size; ++y) {
      for (std::size_t z = 0; z < z_size; ++z) {
        const double p = q[y * z_size + z];
        wy[y] += p;
        vz[z] += p;
      }
    }
    w_rows.push_back(std::move(wy));
    v_rows.push_back(std::move(vz));
  }
  return {Channel::validated(w_rows), Channel::validated(v_rows)};
}

BroadcastPair BroadcastPair::make(Channel w, Channel v) {
  if (w.input_size() != v.input_size()) {
    throw ShapeMismatch("broadcast pair: W and V input sizes differ");
  }
  return BroadcastPair{std::move(w), std::move(v), std::nullopt};
}

BroadcastPair BroadcastPair::with_joint(Channel w, Channel v, Channel joint) {
  if (w.input_size() != v.input_size() || joint.input_size() != w.input_size()) {
    throw ShapeMismatch("broadcast pair: input sizes differ");
  }
  const std::size_t ys = w.output_size();
  const std::size_t zs = v.output_size();
  if (joint.output_size() != ys * zs) {
    throw ShapeMismatch("joint kernel output size != |Y||Z|");
  }
  std::vector<std::vector<double>> rows(joint.input_size());
  for (std::size_t x = 0; x < joint.input_size(); ++x) {
    rows[x].assign(joint.row(x).begin(), joint.row(x).end());
  }
  auto [mw, mv] = marginals(rows, ys, zs);
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    for (std::size_t y = 0; y < ys; ++y) {
      if (std::abs(mw.at(x, y) - w.at(x, y)) > kRowSumTol) {
        throw RowSumViolation("joint kernel marginal over Z does not match W");
      }
    }
    for (std::size_t z = 0; z < zs; ++z) {
      if (std::abs(mv.at(x, z) - v.at(x, z)) > kRowSumTol) {
        throw RowSumViolation("joint kernel marginal over Y does not match V");
      }
    }
  }
  return BroadcastPair{std::move(w), std::move(v), std::move(joint)};
}

CompoundBCC CompoundBCC::make(std::vector<BroadcastPair> states,
                              std::vector<std::string> labels) {
  if (states.empty()) throw EmptySet("compound family must be non-empty");
  const auto& first = states.front();
  for (const auto& s : states) {
    if (!s.w.same_shape(first.w) || !s.v.same_shape(first.v)) {
      throw ShapeMismatch("all states must share alphabet sizes");
    }
  }
  if (labels.empty()) {
    labels.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) labels.push_back("s" + std::to_string(i));
  } else if (labels.size() != states.size()) {
    throw ShapeMismatch("label count must match state count");
  }
  return CompoundBCC{std::move(states), std::move(labels)};
}

namespace {

Channel perturb_channel(const Channel& base, double eps, Rng& rng) {
  std::vector<std::vector<double>> rows(base.input_size());
  for (std::size_t x = 0; x < base.input_size(); ++x) {
    rows[x] = perturb_distribution(base.row(x), eps, rng);
  }
  return Channel::validated(rows);
}

}  // namespace

CompoundBCC perturb_compound(const CompoundBCC& base, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0,1)");
  std::vector<BroadcastPair> states;
  states.reserve(base.states.size());
  for (std::size_t s = 0; s < base.states.size(); ++s) {
    Rng rng_w(mix_seed(seed, 2 * s));
    Rng rng_v(mix_seed(seed, 2 * s + 1));
    states.push_back(BroadcastPair::make(perturb_channel(base.states[s].w, eps, rng_w),
                                         perturb_channel(base.states[s].v, eps, rng_v)));
  }
  return CompoundBCC::make(std::move(states), base.labels);
}

}  // namespace bcc
