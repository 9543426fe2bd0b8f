#include "bcc/instances.hpp"

namespace bcc {

Channel random_channel(Rng& rng, std::size_t input_size, std::size_t output_size) {
  std::vector<std::vector<double>> rows(input_size);
  for (auto& r : rows) r = rng.simplex_point(output_size);
  return Channel::validated(rows);
}

CompoundBCC random_compound(Rng& rng, std::size_t state_count, std::size_t x_size,
                            std::size_t y_size, std::size_t z_size) {
  std::vector<BroadcastPair> states;
  states.reserve(state_count);
  for (std::size_t s = 0; s < state_count; ++s) {
    states.push_back(BroadcastPair::make(random_channel(rng, x_size, y_size),
                                         random_channel(rng, x_size, z_size)));
  }
  return CompoundBCC::make(std::move(states));
}

AuxiliaryInput random_aux(Rng& rng, std::size_t x_size, std::size_t n, std::size_t u_size,
                          std::size_t v_size) {
  std::size_t xn = 1;
  for (std::size_t i = 0; i < n; ++i) xn *= x_size;
  std::vector<std::vector<double>> v_rows(u_size);
  for (auto& r : v_rows) r = rng.simplex_point(v_size);
  std::vector<std::vector<double>> e_rows(v_size);
  for (auto& r : e_rows) r = rng.simplex_point(xn);
  return AuxiliaryInput::make(ProbVector::validated(rng.simplex_point(u_size)),
                              Channel::validated(v_rows), Channel::validated(e_rows), n);
}

}  // namespace bcc
