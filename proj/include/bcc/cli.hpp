#pragma once

#include <string>
#include <vector>

namespace bcc::cli {

/// Parsed command-line configuration shared by all subcommands.
struct RunConfig {
  std::string subcommand;
  std::string input_a;
  std::string input_b;
  std::string out;
  std::string hull_out;
  double eps = 0.1;
  double lambda = 0.0;
  std::vector<double> lambdas;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t aux_per_pair = 50;
  std::size_t n = 1;
  std::size_t n_max = 1;
  std::size_t grid_denom = 8;
  std::size_t x_size = 2;
  std::size_t y_size = 3;
  std::size_t z_size = 2;
  std::size_t u_size = 2;
  std::size_t v_size = 2;
  std::size_t max_aux = 5'000'000;
};

/// Entry point behind the binary. Exit codes: 0 success with zero bound
/// violations, 1 when any verifier reports a violation, 2 on usage or input
/// errors. Parallelism is capped by BCC_LAB_THREADS.
int run(const std::vector<std::string>& args);

}  // namespace bcc::cli
