#include "pufsketch/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pufsketch {
namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::string join_sources(const std::vector<SourceSpec>& sources) {
  std::string out;
  for (const auto& s : sources) {
    if (!out.empty()) out += ';';
    out += format_source(s);
  }
  return out;
}

}  // namespace

std::string format_tail_policy(TailPolicy t) {
  return t == TailPolicy::Conservative ? "conservative" : "truncated";
}

TailPolicy parse_tail_policy(const std::string& text) {
  if (text == "conservative") return TailPolicy::Conservative;
  if (text == "truncated") return TailPolicy::Truncated;
  throw std::invalid_argument("tail policy must be 'conservative' or 'truncated'");
}

std::string spec_to_config(const ExperimentSpec& spec, const std::string& command) {
  std::ostringstream out;
  out << "command=" << command << '\n';
  if (command == "construct") {
    out << "n=" << spec.n << '\n';
    out << "target_k=" << spec.target_k << '\n';
    out << "sources=" << join_sources(spec.sources) << '\n';
    out << "max_rows=" << spec.max_rows << '\n';
    out << "combo_weight_cap=" << spec.combo_weight_cap << '\n';
    out << "min_col_weight=" << spec.min_col_weight << '\n';
    out << "seed=" << spec.seed << '\n';
    out << "response_file=" << spec.response_file << '\n';
    out << "out=" << spec.out_file << '\n';
  } else if (command == "simulate") {
    out << "code=" << spec.code_file << '\n';
    std::string grid;
    for (double p : spec.p_grid) {
      if (!grid.empty()) grid += ';';
      grid += format_double(p);
    }
    out << "p_grid=" << grid << '\n';
    out << "trials=" << spec.trials << '\n';
    out << "i_max=" << spec.i_max << '\n';
    out << "tail=" << format_tail_policy(spec.tail) << '\n';
    out << "readouts=" << spec.readouts << '\n';
    out << "delta1=" << format_double(spec.delta1) << '\n';
    out << "delta2=" << format_double(spec.delta2) << '\n';
    out << "seed=" << spec.seed << '\n';
    out << "response_file=" << spec.response_file << '\n';
    if (spec.baseline) {
      out << "baseline_n=" << spec.baseline->first << '\n';
      out << "baseline_t=" << spec.baseline->second << '\n';
    }
    out << "out=" << spec.out_file << '\n';
  }
  return out.str();
}

std::string apply_config_file(ExperimentSpec& spec, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  std::string command;
  std::string line;
  std::size_t baseline_n = 0, baseline_t = 0;
  bool have_bn = false, have_bt = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "command") {
      command = value;
    } else if (key == "n") {
      spec.n = std::stoull(value);
    } else if (key == "target_k") {
      spec.target_k = std::stoull(value);
    } else if (key == "sources") {
      spec.sources.clear();
      for (const auto& item : split(value, ';')) spec.sources.push_back(parse_source(item));
    } else if (key == "max_rows") {
      spec.max_rows = std::stoull(value);
    } else if (key == "combo_weight_cap") {
      spec.combo_weight_cap = std::stoull(value);
    } else if (key == "min_col_weight") {
      spec.min_col_weight = std::stoull(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else if (key == "response_file") {
      spec.response_file = value;
    } else if (key == "code") {
      spec.code_file = value;
    } else if (key == "p_grid") {
      spec.p_grid.clear();
      for (const auto& item : split(value, ';')) spec.p_grid.push_back(std::stod(item));
    } else if (key == "trials") {
      spec.trials = std::stoull(value);
    } else if (key == "i_max") {
      spec.i_max = std::stoull(value);
    } else if (key == "tail") {
      spec.tail = parse_tail_policy(value);
    } else if (key == "readouts") {
      spec.readouts = static_cast<unsigned>(std::stoul(value));
    } else if (key == "delta1") {
      spec.delta1 = std::stod(value);
    } else if (key == "delta2") {
      spec.delta2 = std::stod(value);
    } else if (key == "baseline_n") {
      baseline_n = std::stoull(value);
      have_bn = true;
    } else if (key == "baseline_t") {
      baseline_t = std::stoull(value);
      have_bt = true;
    } else if (key == "out") {
      spec.out_file = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (have_bn != have_bt)
    throw std::invalid_argument("config: baseline needs both baseline_n and baseline_t");
  if (have_bn) spec.baseline = {baseline_n, baseline_t};
  return command;
}

ConstructOutcome run_construct(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  if (spec.out_file.empty())
    throw std::invalid_argument("construct: output file required");

  Response enrolled;
  if (!spec.response_file.empty()) {
    enrolled = read_response(spec.response_file);
    if (spec.n != 0 && spec.n != enrolled.size())
      throw std::invalid_argument("construct: response file length " +
                                  std::to_string(enrolled.size()) +
                                  " does not match n=" + std::to_string(spec.n));
    spec.n = enrolled.size();
  } else {
    if (spec.n == 0) throw std::invalid_argument("construct: n required");
    Rng rng = Rng::substream(spec.seed, 0);
    enrolled = random_response(spec.n, rng);
  }

  ConstructionConfig cfg;
  cfg.n = spec.n;
  cfg.target_k = spec.target_k;
  cfg.sources = spec.sources;
  cfg.max_rows = spec.max_rows;
  cfg.combo_weight_cap = spec.combo_weight_cap;
  cfg.min_col_weight = spec.min_col_weight;
  cfg.seed = spec.seed;

  ConstructOutcome out;
  out.code = build_instance_code(enrolled, cfg);
  out.response = std::move(enrolled);

  write_instance_code(out.code, spec.out_file);
  // Echo the resolved values so the run can be replayed from the record.
  spec.sources = out.code.config.sources;
  spec.max_rows = out.code.config.max_rows;
  spec.combo_weight_cap = out.code.config.combo_weight_cap;
  spec.min_col_weight = out.code.config.min_col_weight;
  {
    std::ofstream cfg_out(spec.out_file + ".cfg");
    if (!cfg_out) throw std::runtime_error("construct: cannot write config record");
    cfg_out << spec_to_config(spec, "construct");
  }

  const auto& rep = out.code.report;
  std::ostringstream s;
  s << "n=" << out.code.n << " k=" << out.code.k << " rows=" << out.code.H.n_rows
    << " ones=" << out.code.H.nnz() << " density="
    << format_double(static_cast<double>(out.code.H.nnz()) /
                     (static_cast<double>(out.code.H.n_rows) *
                      static_cast<double>(out.code.n)))
    << '\n';
  s << "rows by stage: base=" << rep.base_rows << " combination=" << rep.combination_rows
    << " balance=" << rep.balance_rows << '\n';
  s << "column weight: min=" << rep.min_col_weight << " max=" << rep.max_col_weight
    << " spread=" << rep.max_col_weight - rep.min_col_weight << '\n';
  if (!rep.unreachable_columns.empty())
    s << "warning: " << rep.unreachable_columns.size()
      << " columns stayed below the balancing target\n";
  if (rep.degenerate_response)
    s << "warning: enrolled response is all-zero (degenerate key)\n";
  if (rep.rank_shortfall)
    s << "warning: target k=" << spec.target_k << " unreachable, achieved k="
      << out.code.k << '\n';
  out.summary = s.str();
  return out;
}

SimulateOutcome run_simulate(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  if (spec.code_file.empty()) throw std::invalid_argument("simulate: code file required");
  if (spec.out_file.empty()) throw std::invalid_argument("simulate: output file required");

  const InstanceCode code = read_instance_code(spec.code_file);
  Response reference;
  if (!spec.response_file.empty()) {
    reference = read_response(spec.response_file);
  } else {
    // Decoding commutes with codeword translation, so the all-zero codeword
    // gives the same failure statistics as the enrolled response.
    reference.bits.assign(code.n, 0);
  }

  if (spec.delta1 == 0.0) spec.delta1 = code.n >= 256 ? 20.0 : 10.0;
  if (spec.delta2 == 0.0) spec.delta2 = code.n >= 256 ? 12.0 : 6.0;
  if (spec.i_max == 0) {
    double pmax = 0.0;
    for (double p : spec.p_grid) pmax = std::max(pmax, p);
    const double mean = static_cast<double>(code.n) * pmax;
    const double sigma = std::sqrt(mean * (1.0 - pmax));
    spec.i_max = std::min<std::size_t>(
        code.n, static_cast<std::size_t>(std::ceil(mean + 6.0 * sigma)));
  }

  DecodeConfig dcfg;
  dcfg.readouts = spec.readouts;
  dcfg.delta1 = spec.delta1;
  dcfg.delta2 = spec.delta2;

  SimulateOutcome out;
  out.report = block_error_curve(code, reference, spec.p_grid, spec.i_max, spec.trials,
                                 spec.tail, dcfg, spec.seed);
  out.curves.push_back({"ldpc", out.report.curve});
  if (spec.baseline) {
    out.curves.push_back(
        {"bdd", bdd_baseline(spec.baseline->first, spec.baseline->second, spec.p_grid)});
  }
  write_curve_csv(spec.out_file, out.curves);
  {
    std::ofstream cfg_out(spec.out_file + ".cfg");
    if (!cfg_out) throw std::runtime_error("simulate: cannot write config record");
    cfg_out << spec_to_config(spec, "simulate");
  }

  std::ostringstream s;
  s << "simulated weights 0.." << out.report.i_max << " at " << spec.trials
    << " trials each, readouts=" << spec.readouts << " delta=(" << spec.delta1 << ","
    << spec.delta2 << ") tail=" << format_tail_policy(spec.tail) << '\n';
  for (const auto& [p, v] : out.report.curve)
    s << "  p=" << format_double(p) << "  p_block=" << format_double(v) << '\n';
  out.summary = s.str();
  return out;
}

std::string run_report(const std::filesystem::path& code_file) {
  const InstanceCode code = read_instance_code(code_file);
  const MemoryReport mem = memory_report(code);
  const RegularityReport reg = check_regular(code.H);

  std::ostringstream s;
  s << "instance code: n=" << code.n << " k=" << code.k << " rows=" << code.H.n_rows
    << '\n';
  if (!code.provenance_counts.empty()) {
    s << "row provenance:";
    for (const auto& [name, count] : code.provenance_counts)
      s << ' ' << name << '=' << count;
    s << '\n';
  }
  s << "storage: " << mem.nnz << " ones stored as (row, column) pairs, "
    << mem.row_index_bits << '+' << mem.col_index_bits << " bits each = "
    << mem.matrix_bits << " bits\n";
  s << "code-offset helper would need " << code.n << " bits\n";
  s << "syndrome helper would need " << code.n - code.k
    << " bits (full-rank parity matrix)\n";
  if (reg.regular()) {
    s << "regularity: regular with rho=" << reg.rho << " gamma=" << reg.gamma << '\n';
  } else {
    s << "regularity: irregular (" << reg.violation() << ")\n";
  }
  return s.str();
}

}  // namespace pufsketch
