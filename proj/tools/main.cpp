// Command-line front end: construct / simulate / report.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pufsketch/experiment.hpp"

namespace {

using pufsketch::ExperimentSpec;

// Flags land in optionals so a --config file can be applied first and
// explicitly given flags override it afterwards.
struct Flags {
  std::optional<std::string> config;
  std::optional<std::size_t> n, target_k, max_rows, combo_weight_cap, min_col_weight;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> response_file, out, code, tail, p_grid;
  std::optional<std::size_t> trials, i_max;
  std::optional<unsigned> readouts;
  std::optional<double> delta1, delta2;
  std::optional<std::size_t> baseline_n, baseline_t;
  std::vector<std::string> sources;
};

ExperimentSpec resolve(const Flags& f) {
  ExperimentSpec spec;
  if (f.config) pufsketch::apply_config_file(spec, *f.config);
  if (f.n) spec.n = *f.n;
  if (f.target_k) spec.target_k = *f.target_k;
  if (!f.sources.empty()) {
    spec.sources.clear();
    for (const auto& s : f.sources) spec.sources.push_back(pufsketch::parse_source(s));
  }
  if (f.max_rows) spec.max_rows = *f.max_rows;
  if (f.combo_weight_cap) spec.combo_weight_cap = *f.combo_weight_cap;
  if (f.min_col_weight) spec.min_col_weight = *f.min_col_weight;
  if (f.seed) spec.seed = *f.seed;
  if (f.response_file) spec.response_file = *f.response_file;
  if (f.out) spec.out_file = *f.out;
  if (f.code) spec.code_file = *f.code;
  if (f.p_grid) {
    spec.p_grid.clear();
    std::string item;
    std::istringstream in(*f.p_grid);
    while (std::getline(in, item, ','))
      if (!item.empty()) spec.p_grid.push_back(std::stod(item));
  }
  if (f.trials) spec.trials = *f.trials;
  if (f.i_max) spec.i_max = *f.i_max;
  if (f.tail) spec.tail = pufsketch::parse_tail_policy(*f.tail);
  if (f.readouts) spec.readouts = *f.readouts;
  if (f.delta1) spec.delta1 = *f.delta1;
  if (f.delta2) spec.delta2 = *f.delta2;
  if (f.baseline_n.has_value() != f.baseline_t.has_value())
    throw std::invalid_argument("baseline needs both --baseline-n and --baseline-t");
  if (f.baseline_n) spec.baseline = {*f.baseline_n, *f.baseline_t};
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Per-device LDPC secure sketch: code construction, decoding simulation, "
               "storage reporting"};
  app.require_subcommand(1);

  Flags flags;

  auto* construct = app.add_subcommand(
      "construct", "Build an instance code around an enrolled response");
  construct->add_option("--config", flags.config, "key=value config file");
  construct->add_option("--n", flags.n, "response length");
  construct->add_option("--target-k", flags.target_k, "desired code dimension");
  construct->add_option("--source", flags.sources,
                        "base construction (eg:m,q | pg:m,q | rs:q,rho), repeatable");
  construct->add_option("--max-rows", flags.max_rows, "row cap (default 5*(n-k))");
  construct->add_option("--combo-weight-cap", flags.combo_weight_cap,
                        "max weight of combination rows");
  construct->add_option("--min-col-weight", flags.min_col_weight,
                        "column balancing target");
  construct->add_option("--seed", flags.seed, "construction seed");
  construct->add_option("--response-file", flags.response_file,
                        "enrolled response (line of 0/1); default derives from seed");
  construct->add_option("--out", flags.out, "output code file")->required();

  auto* simulate = app.add_subcommand(
      "simulate", "Estimate the block error curve of a stored code");
  simulate->add_option("--config", flags.config, "key=value config file");
  simulate->add_option("--code", flags.code, "instance code file");
  simulate->add_option("--p-grid", flags.p_grid, "comma-separated crossover grid");
  simulate->add_option("--trials", flags.trials, "trials per error weight");
  simulate->add_option("--i-max", flags.i_max, "largest simulated error weight");
  simulate->add_option("--tail", flags.tail, "conservative | truncated");
  simulate->add_option("--m", flags.readouts, "readouts per reproduction");
  simulate->add_option("--delta1", flags.delta1, "agreement penalty");
  simulate->add_option("--delta2", flags.delta2, "disagreement penalty");
  simulate->add_option("--seed", flags.seed, "simulation seed");
  simulate->add_option("--response-file", flags.response_file,
                       "enrolled response; default uses the zero codeword");
  simulate->add_option("--baseline-n", flags.baseline_n,
                       "bounded-distance baseline length");
  simulate->add_option("--baseline-t", flags.baseline_t,
                       "bounded-distance baseline correction radius");
  simulate->add_option("--out", flags.out, "output CSV file")->required();

  auto* report =
      app.add_subcommand("report", "Storage and regularity report for a code file");
  std::string report_code;
  report->add_option("--code", report_code, "instance code file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      const auto outcome = pufsketch::run_construct(resolve(flags));
      std::cout << outcome.summary;
      if (outcome.code.report.rank_shortfall) return 2;
    } else if (simulate->parsed()) {
      const auto outcome = pufsketch::run_simulate(resolve(flags));
      std::cout << outcome.summary;
    } else if (report->parsed()) {
      std::cout << pufsketch::run_report(report_code);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
