#include "pufsketch/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pufsketch {
namespace {

// Compensated (Kahan) accumulator; the acceptance tolerances on the
// binomial identities are tighter than naive summation guarantees.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// C(n, k) saturating at 2^63; only compared against trial counts.
std::uint64_t binom_capped(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > 9.2e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

// Uniform weight-w subset of [0, n), sorted.
std::vector<std::uint32_t> sample_pattern(std::size_t n, std::size_t w, Rng& rng) {
  std::vector<std::uint32_t> picks;
  picks.reserve(w);
  while (picks.size() < w) {
    const auto c = static_cast<std::uint32_t>(rng.below(n));
    if (std::find(picks.begin(), picks.end(), c) == picks.end()) picks.push_back(c);
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

bool next_combination(std::vector<std::uint32_t>& idx, std::size_t n) {
  const std::size_t w = idx.size();
  for (std::size_t i = w; i-- > 0;) {
    if (idx[i] + (w - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<BitVec> bsc_corrupt(const Response& reference, const ChannelParams& params,
                                Rng& rng) {
  if (params.p < 0.0 || params.p > 0.5)
    throw std::invalid_argument("bsc_corrupt: p must lie in [0, 0.5]");
  if (params.readouts < 1)
    throw std::invalid_argument("bsc_corrupt: need at least one readout");
  std::vector<BitVec> out;
  out.reserve(params.readouts);
  for (unsigned j = 0; j < params.readouts; ++j) {
    BitVec r = reference.bits;
    for (auto& b : r)
      if (rng.bernoulli(params.p)) b ^= 1u;
    out.push_back(std::move(r));
  }
  return out;
}

WeightEstimate estimate_perr(const InstanceCode& code, const Response& reference,
                             std::size_t weight, std::size_t trials,
                             const DecodeConfig& dcfg, std::uint64_t seed) {
  const std::size_t n = code.n;
  if (weight > n) throw std::invalid_argument("estimate_perr: weight exceeds length");
  if (trials < 1) throw std::invalid_argument("estimate_perr: need at least one trial");
  if (reference.size() != n)
    throw std::invalid_argument("estimate_perr: reference length mismatch");
  for (std::uint8_t bit : syndrome(code.H, reference.bits))
    if (bit)
      throw std::invalid_argument("estimate_perr: reference is not a codeword");

  const BitflipDecoder decoder(code.H);
  const SoftWeights uniform = SoftWeights::uniform(n);

  const std::uint64_t pattern_count = binom_capped(n, weight);
  const bool exhaustive = pattern_count <= trials;
  const std::size_t n_trials =
      exhaustive ? static_cast<std::size_t>(pattern_count) : trials;

  std::vector<std::uint32_t> combo(weight);
  for (std::size_t i = 0; i < weight; ++i) combo[i] = static_cast<std::uint32_t>(i);

  std::size_t failures = 0;
  for (std::size_t t = 0; t < n_trials; ++t) {
    Rng rng = Rng::substream(seed, weight, t);
    std::vector<std::uint32_t> pattern =
        exhaustive ? combo : sample_pattern(n, weight, rng);

    std::vector<BitVec> readouts;
    readouts.reserve(dcfg.readouts);
    for (unsigned j = 0; j < dcfg.readouts; ++j) {
      const std::vector<std::uint32_t>& e =
          j == 0 ? pattern : sample_pattern(n, weight, rng);
      BitVec r = reference.bits;
      for (std::uint32_t c : e) r[c] ^= 1u;
      readouts.push_back(std::move(r));
    }

    DecodeResult res =
        dcfg.readouts == 1
            ? decoder.decode(readouts[0], uniform, dcfg.max_iters)
            : reproduce_multi(decoder, readouts, dcfg.delta1, dcfg.delta2,
                              dcfg.max_iters);
    if (!res.converged || res.word != reference.bits) ++failures;

    if (exhaustive && !next_combination(combo, n) && t + 1 < n_trials)
      throw std::logic_error("estimate_perr: combination enumeration short");
  }

  WeightEstimate est;
  est.weight = weight;
  est.trials = n_trials;
  est.failures = failures;
  est.p_err = static_cast<double>(failures) / static_cast<double>(n_trials);
  est.exhaustive = exhaustive;
  return est;
}

std::vector<double> binomial_pmf(std::size_t n, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_pmf: p out of range");
  std::vector<double> pmf(n + 1, 0.0);
  if (p == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p == 1.0) {
    pmf[n] = 1.0;
    return pmf;
  }
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t i = 0; i <= n; ++i) {
    const double lgc = lgn - std::lgamma(static_cast<double>(i) + 1.0) -
                       std::lgamma(static_cast<double>(n - i) + 1.0);
    pmf[i] = std::exp(lgc + static_cast<double>(i) * lp +
                      static_cast<double>(n - i) * lq);
  }
  return pmf;
}

SimReport block_error_curve(const InstanceCode& code, const Response& reference,
                            const std::vector<double>& p_grid, std::size_t i_max,
                            std::size_t trials, TailPolicy tail,
                            const DecodeConfig& dcfg, std::uint64_t seed) {
  if (p_grid.empty()) throw std::invalid_argument("block_error_curve: empty grid");
  for (double p : p_grid)
    if (p < 0.0 || p > 0.5)
      throw std::invalid_argument("block_error_curve: p must lie in [0, 0.5]");
  if (i_max > code.n)
    throw std::invalid_argument("block_error_curve: i_max exceeds length");

  SimReport report;
  report.i_max = i_max;
  report.tail_policy = tail;
  for (std::size_t i = 0; i <= i_max; ++i)
    report.per_weight.push_back(estimate_perr(code, reference, i, trials, dcfg, seed));

  for (double p : p_grid) {
    const auto pmf = binomial_pmf(code.n, p);
    Kahan head;
    for (std::size_t i = 0; i <= i_max; ++i)
      head.add(pmf[i] * report.per_weight[i].p_err);
    double value = head.sum;
    if (tail == TailPolicy::Conservative) {
      Kahan tail_mass;
      for (std::size_t i = i_max + 1; i <= code.n; ++i) tail_mass.add(pmf[i]);
      value += tail_mass.sum;
    }
    report.curve.emplace_back(p, value);
  }
  return report;
}

std::vector<std::pair<double, double>> bdd_baseline(std::size_t n, std::size_t t,
                                                    const std::vector<double>& p_grid) {
  if (t > n) throw std::invalid_argument("bdd_baseline: t exceeds n");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(p_grid.size());
  for (double p : p_grid) {
    const auto pmf = binomial_pmf(n, p);
    Kahan tail;
    for (std::size_t i = t + 1; i <= n; ++i) tail.add(pmf[i]);
    curve.emplace_back(p, tail.sum);
  }
  return curve;
}

namespace {

std::size_t ceil_log2(std::size_t x) {
  if (x <= 1) return 0;
  std::size_t bits = 0;
  std::size_t v = x - 1;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

}  // namespace

MemoryReport memory_report(const InstanceCode& code, const HelperData* helper) {
  MemoryReport rep;
  rep.n = code.n;
  rep.n_rows = code.H.n_rows;
  rep.nnz = code.H.nnz();
  rep.row_index_bits = ceil_log2(code.H.n_rows);
  rep.col_index_bits = ceil_log2(code.n);
  rep.matrix_bits = rep.nnz * (rep.row_index_bits + rep.col_index_bits);
  if (helper != nullptr) {
    rep.helper_bits = helper->payload.size();
    rep.helper_kind = helper->kind;
  }
  return rep;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_curve_csv(const std::filesystem::path& path, const std::vector<Curve>& curves) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_curve_csv: cannot open " + path.string());
  const bool multi = curves.size() > 1;
  out << (multi ? "p,p_block,source" : "p,p_block") << '\n';
  for (const auto& curve : curves) {
    for (const auto& [p, v] : curve.points) {
      out << format_double(p) << ',' << format_double(v);
      if (multi) out << ',' << curve.name;
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("write_curve_csv: write failed");
}

std::vector<Curve> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_curve_csv: cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("read_curve_csv: missing header");
  const bool multi = header == "p,p_block,source";
  if (!multi && header != "p,p_block")
    throw std::runtime_error("read_curve_csv: unexpected header '" + header + "'");

  std::vector<Curve> curves;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string p_str, v_str, name;
    if (!std::getline(ls, p_str, ',') || !std::getline(ls, v_str, ','))
      throw std::runtime_error("read_curve_csv: malformed row '" + line + "'");
    if (multi && !std::getline(ls, name))
      throw std::runtime_error("read_curve_csv: missing source in '" + line + "'");
    if (curves.empty() || curves.back().name != name) {
      auto existing = std::find_if(curves.begin(), curves.end(),
                                   [&](const Curve& c) { return c.name == name; });
      if (existing != curves.end()) {
        existing->points.emplace_back(std::stod(p_str), std::stod(v_str));
        continue;
      }
      curves.push_back({name, {}});
    }
    curves.back().points.emplace_back(std::stod(p_str), std::stod(v_str));
  }
  return curves;
}

}  // namespace pufsketch
