#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pufsketch/evaluate.hpp"
#include "pufsketch/sketch.hpp"

namespace pufsketch {

/// Everything a construct or simulate run needs. The resolved spec is
/// written as a flat key=value file next to every output, and the same file
/// can be fed back via --config, so each artifact carries its own recipe.
struct ExperimentSpec {
  // construct
  std::size_t n = 0;
  std::size_t target_k = 0;
  std::vector<SourceSpec> sources;  // empty -> defaults for n
  std::size_t max_rows = 0;
  std::size_t combo_weight_cap = 0;
  std::size_t min_col_weight = 0;
  std::uint64_t seed = 0;
  std::string response_file;  // empty -> derived from the seed / all-zero reference

  // simulate
  std::string code_file;
  std::vector<double> p_grid = {0.001, 0.005, 0.01, 0.02, 0.05};
  std::size_t trials = 10000;
  std::size_t i_max = 0;  // 0 -> adaptive: covers the grid mean + 6 sigma
  TailPolicy tail = TailPolicy::Conservative;
  unsigned readouts = 3;
  double delta1 = 0.0;  // 0 -> 10 for n < 256, 20 otherwise
  double delta2 = 0.0;  // 0 -> 6 for n < 256, 12 otherwise
  std::optional<std::pair<std::size_t, std::size_t>> baseline;  // (n, t)

  std::string out_file;
};

std::string format_tail_policy(TailPolicy t);
TailPolicy parse_tail_policy(const std::string& text);

/// key=value serialization of the fields relevant to `command`.
std::string spec_to_config(const ExperimentSpec& spec, const std::string& command);
/// Applies key=value lines from `path` on top of `spec`; returns the
/// command recorded in the file, if any.
std::string apply_config_file(ExperimentSpec& spec, const std::filesystem::path& path);

struct ConstructOutcome {
  InstanceCode code;
  Response response;
  std::string summary;
};

/// Builds the instance code, writes it to spec.out_file with the resolved
/// config next to it, and returns a printable summary.
ConstructOutcome run_construct(const ExperimentSpec& spec);

struct SimulateOutcome {
  SimReport report;
  std::vector<Curve> curves;
  std::string summary;
};

/// Simulates the block error curve for the code in spec.code_file, appends
/// the analytic bounded-distance baseline when configured, and writes CSV
/// plus the resolved config.
SimulateOutcome run_simulate(const ExperimentSpec& spec);

/// Storage and regularity report for a stored instance code.
std::string run_report(const std::filesystem::path& code_file);

}  // namespace pufsketch
