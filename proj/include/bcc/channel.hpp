#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcc/prob.hpp"

namespace bcc {

/// Default cap on the entry count of any materialized matrix. n-fold
/// extensions grow exponentially; everything the bounds need is reachable
/// well below this.
inline constexpr std::size_t kDefaultEntryBudget = std::size_t{1} << 24;

/// Row-stochastic matrix: one output distribution per input symbol.
class Channel {
 public:
  /// Validates every row as a pmf (tolerances kNegTol / kRowSumTol) and
  /// renormalizes. Throws NegativeEntry / RowSumViolation / ShapeMismatch.
  static Channel validated(const std::vector<std::vector<double>>& rows);

  std::size_t input_size() const { return in_; }
  std::size_t output_size() const { return out_; }
  std::span<const double> row(std::size_t x) const {
    return {data_.data() + x * out_, out_};
  }
  double at(std::size_t x, std::size_t y) const { return data_[x * out_ + y]; }
  std::span<const double> flat() const { return data_; }

  bool same_shape(const Channel& other) const {
    return in_ == other.in_ && out_ == other.out_;
  }

 private:
  Channel(std::size_t in, std::size_t out, std::vector<double> data)
      : in_(in), out_(out), data_(std::move(data)) {}
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  std::vector<double> data_;
};

/// Memoryless n-fold extension W^n(y^n|x^n) = prod_i W(y_i|x_i). Symbol
/// tuples are flattened lexicographically, last coordinate fastest.
Channel product_channel(const Channel& w, std::size_t n,
                        std::size_t entry_budget = kDefaultEntryBudget);

/// n-fold extension whose first k coordinates go through `head` and whose
/// remaining n-k coordinates go through `tail`.
Channel mixed_product_channel(const Channel& head, const Channel& tail, std::size_t n,
                              std::size_t k,
                              std::size_t entry_budget = kDefaultEntryBudget);

/// Splits a joint kernel Q(y,z|x) (rows over Y x Z, z fastest) into its two
/// marginal channels (W, V).
std::pair<Channel, Channel> marginals(const std::vector<std::vector<double>>& joint_rows,
                                      std::size_t y_size, std::size_t z_size);

/// One broadcast state: receiver-1 channel W, receiver-2 channel V, and an
/// optional joint kernel whose marginals must match them.
struct BroadcastPair {
  Channel w;
  Channel v;
  std::optional<Channel> joint;  // rows over Y x Z, z fastest

  static BroadcastPair make(Channel w, Channel v);
  static BroadcastPair with_joint(Channel w, Channel v, Channel joint);
};

/// Finite family of broadcast states over shared alphabets.
struct CompoundBCC {
  std::vector<BroadcastPair> states;
  std::vector<std::string> labels;

  static CompoundBCC make(std::vector<BroadcastPair> states,
                          std::vector<std::string> labels = {});

  std::size_t state_count() const { return states.size(); }
  std::size_t x_size() const { return states.front().w.input_size(); }
  std::size_t y_size() const { return states.front().w.output_size(); }
  std::size_t z_size() const { return states.front().v.output_size(); }
};

/// Same-shape family with every row moved by at most eps in total variation.
/// Deterministic in (base, eps, seed); the compound distance to the base is
/// at most eps by construction.
CompoundBCC perturb_compound(const CompoundBCC& base, double eps, std::uint64_t seed);

}  // namespace bcc
