#include "bcc/cli.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcc/instances.hpp"
#include "bcc/json_io.hpp"
#include "bcc/rng.hpp"

namespace bcc::cli {

using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
  } else {
    write_file_atomic(out_path, content);
  }
}

void emit_json(const std::string& out_path, const json& j) {
  emit(out_path, j.dump(2) + "\n");
}

int finish_report(const RunConfig& cfg, const ContinuityReport& report) {
  emit_json(cfg.out, report_to_json(report));
  std::cerr << report.check << ": " << report.instances << " instances, "
            << report.violations << " violations, max_gap=" << report.max_gap
            << ", bound=" << report.bound << "\n";
  return report.violations == 0 ? 0 : 1;
}

GridSpec grid_from(const RunConfig& cfg) {
  GridSpec g;
  g.denom = cfg.grid_denom;
  g.u_size = cfg.u_size;
  g.v_size = cfg.v_size;
  g.max_aux = cfg.max_aux;
  return g;
}

int run_region(const RunConfig& cfg) {
  const CompoundBCC c = compound_from_json(load_json(cfg.input_a));
  const RegionApproximation approx = capacity_region_approx(c, cfg.n_max, grid_from(cfg));
  emit(cfg.out, region_csv(approx));
  std::string hull_path = cfg.hull_out;
  if (hull_path.empty() && !cfg.out.empty()) {
    hull_path = (std::filesystem::path(cfg.out).parent_path() / "hull.json").string();
  }
  emit_json(hull_path, hull_to_json(approx));
  return 0;
}

int run_distance(const RunConfig& cfg) {
  json out;
  if (cfg.subcommand == "channels") {
    const Channel a = channel_from_json(load_json(cfg.input_a));
    const Channel b = channel_from_json(load_json(cfg.input_b));
    const auto w = channel_distance_witness(a, b);
    out = {{"value", w.value}, {"witness", {{"x", w.x}}}};
  } else if (cfg.subcommand == "compound") {
    const CompoundBCC a = compound_from_json(load_json(cfg.input_a));
    const CompoundBCC b = compound_from_json(load_json(cfg.input_b));
    const auto w = compound_distance_witness(a, b);
    out = {{"value", w.value},
           {"witness", {{"term", w.term}, {"outer", w.outer}, {"inner", w.inner}}}};
  } else {
    const RegionPointSet a = pointset_from_json(load_json(cfg.input_a));
    const RegionPointSet b = pointset_from_json(load_json(cfg.input_b));
    const auto w = region_distance_witness(a, b);
    out = {{"value", w.value},
           {"witness",
            {{"direction", w.direction},
             {"from", {w.from.r0, w.from.r1}},
             {"to", {w.to.r0, w.to.r1}}}}};
  }
  emit_json(cfg.out, out);
  return 0;
}

ContinuityReport run_lemma4_suite(const RunConfig& cfg) {
  ContinuityReport merged;
  for (std::size_t p = 0; p < cfg.trials; ++p) {
    Rng rng(mix_seed(cfg.seed, 0x4C454D41ULL + p));
    const std::size_t states = 1 + rng.index(3);
    const std::size_t x = 2 + rng.index(2);
    const std::size_t y = 2 + rng.index(2);
    const std::size_t z = 2 + rng.index(2);
    const CompoundBCC base = random_compound(rng, states, x, y, z);
    const CompoundBCC moved = perturb_compound(base, cfg.eps, mix_seed(cfg.seed, 7777 + p));
    std::vector<AuxiliaryInput> aux;
    aux.reserve(cfg.aux_per_pair);
    for (std::size_t k = 0; k < cfg.aux_per_pair; ++k) {
      aux.push_back(random_aux(rng, x, cfg.n, 2 + rng.index(2), 2 + rng.index(2)));
    }
    const ContinuityReport rep = verify_rectangle_continuity(base, moved, aux);
    merged = p == 0 ? rep : merge_reports(std::move(merged), rep);
  }
  merged.eps_nominal = cfg.eps;
  return merged;
}

ContinuityReport run_theorem2_suite(const RunConfig& cfg) {
  ContinuityReport merged;
  for (std::size_t p = 0; p < cfg.trials; ++p) {
    Rng rng(mix_seed(cfg.seed, 0x54483200ULL + p));
    const std::size_t states = 1 + rng.index(2);
    const std::size_t y = 2 + rng.index(2);
    const std::size_t z = 2 + rng.index(2);
    const CompoundBCC base = random_compound(rng, states, 2, y, z);
    const CompoundBCC moved = perturb_compound(base, cfg.eps, mix_seed(cfg.seed, 9999 + p));
    const ContinuityReport rep =
        verify_capacity_continuity(base, moved, cfg.n_max, grid_from(cfg));
    merged = p == 0 ? rep : merge_reports(std::move(merged), rep);
  }
  merged.eps_nominal = cfg.eps;
  return merged;
}

ContinuityReport run_telescope(const RunConfig& cfg) {
  Rng rng(mix_seed(cfg.seed, 0x54454C45ULL));
  std::vector<std::vector<double>> rows(cfg.x_size);
  std::vector<std::vector<double>> rows_t(cfg.x_size);
  for (std::size_t x = 0; x < cfg.x_size; ++x) {
    rows[x] = rng.simplex_point(cfg.y_size);
    rows_t[x] = perturb_distribution(rows[x], cfg.eps, rng);
  }
  const Channel w = Channel::validated(rows);
  const Channel wt = Channel::validated(rows_t);
  const AuxiliaryInput aux = random_aux(rng, cfg.x_size, cfg.n, cfg.u_size, cfg.v_size);
  return verify_telescoping(aux, w, wt, cfg.eps);
}

int run_avc_check(const RunConfig& cfg) {
  const auto [fam, v] = example_family(cfg.lambda);
  const SymmetrizerResult res = symmetrizability_check(fam);
  json sigma = json::array();
  if (res.sigma) {
    for (std::size_t x = 0; x < res.sigma->input_size(); ++x) {
      sigma.push_back(
          std::vector<double>(res.sigma->row(x).begin(), res.sigma->row(x).end()));
    }
  }
  emit_json(cfg.out, {{"lambda", cfg.lambda},
                      {"symmetrizable", res.symmetrizable},
                      {"residual", res.residual},
                      {"sigma", sigma}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"compound broadcast channel rate regions, distances, and continuity checks",
               "bcc_lab"};
  app.require_subcommand(1);

  auto* region = app.add_subcommand("region", "rate-region computations");
  auto* region_compute =
      region->add_subcommand("compute", "grid inner approximation of the capacity region");
  region_compute->add_option("--input", cfg.input_a, "compound JSON file")->required();
  region_compute->add_option("--n", cfg.n_max, "max blocklength for the union");
  region_compute->add_option("--grid", cfg.grid_denom, "simplex lattice denominator");
  region_compute->add_option("--u-size", cfg.u_size, "auxiliary alphabet |U|");
  region_compute->add_option("--v-size", cfg.v_size, "auxiliary alphabet |V|");
  region_compute->add_option("--max-aux", cfg.max_aux, "grid enumeration budget");
  region_compute->add_option("--out", cfg.out, "CSV output path (n,R0,R1,aux_id)");
  region_compute->add_option("--hull-out", cfg.hull_out, "hull JSON output path");

  auto* distance = app.add_subcommand("distance", "channel/compound/region distances");
  for (const char* name : {"channels", "compound", "regions"}) {
    auto* sub = distance->add_subcommand(name);
    sub->add_option("--a", cfg.input_a, "first input JSON")->required();
    sub->add_option("--b", cfg.input_b, "second input JSON")->required();
    sub->add_option("--out", cfg.out, "output JSON path (default: stdout)");
  }

  auto* verify = app.add_subcommand("verify", "continuity-bound verification suites");
  auto* lemma2 = verify->add_subcommand("lemma2", "conditional entropy continuity");
  auto* lemma3 = verify->add_subcommand("lemma3", "conditional MI continuity");
  auto* lemma4 = verify->add_subcommand("lemma4", "rate-rectangle continuity");
  auto* theorem2 = verify->add_subcommand("theorem2", "capacity-region continuity");
  auto* telescope = verify->add_subcommand("telescope", "hybrid telescoping chain");
  for (CLI::App* sub : {lemma2, lemma3, lemma4, theorem2, telescope}) {
    sub->add_option("--eps", cfg.eps, "perturbation radius in (0,1)");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--out", cfg.out, "report JSON path (default: stdout)");
  }
  for (CLI::App* sub : {lemma2, lemma3, lemma4, theorem2}) {
    sub->add_option("--trials", cfg.trials, "number of sampled instances/pairs");
  }
  for (CLI::App* sub : {lemma2, lemma3, telescope}) {
    sub->add_option("--x-size", cfg.x_size, "input alphabet size");
    sub->add_option("--y-size", cfg.y_size, "output alphabet size");
  }
  for (CLI::App* sub : {lemma3, telescope}) {
    sub->add_option("--n", cfg.n, "blocklength");
    sub->add_option("--u-size", cfg.u_size, "auxiliary alphabet |U|");
    sub->add_option("--v-size", cfg.v_size, "auxiliary alphabet |V|");
  }
  lemma4->add_option("--aux", cfg.aux_per_pair, "auxiliary inputs per pair");
  lemma4->add_option("--n", cfg.n, "blocklength");
  theorem2->add_option("--n-max", cfg.n_max, "max blocklength for the union");
  theorem2->add_option("--grid", cfg.grid_denom, "simplex lattice denominator");
  theorem2->add_option("--u-size", cfg.u_size, "auxiliary alphabet |U|");
  theorem2->add_option("--v-size", cfg.v_size, "auxiliary alphabet |V|");
  theorem2->add_option("--max-aux", cfg.max_aux, "grid enumeration budget");

  auto* avc = app.add_subcommand("avc", "arbitrarily varying channel example");
  auto* sweep = avc->add_subcommand("sweep", "symmetrizability across lambda values");
  sweep->add_option("--lambdas", cfg.lambdas, "comma-separated lambda grid")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", cfg.out, "CSV output path (default: stdout)");
  auto* check = avc->add_subcommand("check", "symmetrizability at one lambda");
  check->add_option("--lambda", cfg.lambda, "lambda in [0,1]")->required();
  check->add_option("--out", cfg.out, "output JSON path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (region_compute->parsed()) return run_region(cfg);
    if (distance->parsed()) {
      cfg.subcommand = distance->get_subcommands().front()->get_name();
      return run_distance(cfg);
    }
    if (lemma2->parsed()) {
      return finish_report(cfg, verify_entropy_continuity(cfg.trials, cfg.eps, cfg.x_size,
                                                          cfg.y_size, cfg.seed));
    }
    if (lemma3->parsed()) {
      MiSuiteSizes sizes{cfg.x_size, cfg.y_size, cfg.u_size, cfg.v_size};
      return finish_report(
          cfg, verify_mi_continuity(cfg.trials, cfg.eps, cfg.n, sizes, cfg.seed));
    }
    if (lemma4->parsed()) return finish_report(cfg, run_lemma4_suite(cfg));
    if (theorem2->parsed()) return finish_report(cfg, run_theorem2_suite(cfg));
    if (telescope->parsed()) return finish_report(cfg, run_telescope(cfg));
    if (sweep->parsed()) {
      const auto rows = lambda_sweep(cfg.lambdas);
      emit(cfg.out, sweep_csv(rows));
      return 0;
    }
    if (check->parsed()) return run_avc_check(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}

}  // namespace bcc::cli
