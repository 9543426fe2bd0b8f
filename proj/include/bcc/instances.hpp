#pragma once

#include <cstddef>

#include "bcc/channel.hpp"
#include "bcc/info.hpp"
#include "bcc/rng.hpp"

namespace bcc {

/// Channel with rows drawn uniformly from the simplex.
Channel random_channel(Rng& rng, std::size_t input_size, std::size_t output_size);

/// Compound family with independent random states.
CompoundBCC random_compound(Rng& rng, std::size_t state_count, std::size_t x_size,
                            std::size_t y_size, std::size_t z_size);

/// Auxiliary chain with random P_U, P_{V|U}, and encoder rows.
AuxiliaryInput random_aux(Rng& rng, std::size_t x_size, std::size_t n, std::size_t u_size,
                          std::size_t v_size);

}  // namespace bcc
