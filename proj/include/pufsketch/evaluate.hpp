#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pufsketch/decoder.hpp"
#include "pufsketch/rng.hpp"
#include "pufsketch/sketch.hpp"

namespace pufsketch {

struct ChannelParams {
  double p = 0.0;          // BSC crossover probability, in [0, 0.5]
  unsigned readouts = 1;   // m
  std::uint64_t seed = 0;
};

/// m independent BSC(p) corruptions of the reference response.
std::vector<BitVec> bsc_corrupt(const Response& reference, const ChannelParams& params,
                                Rng& rng);

/// How error weights above the simulated cutoff enter the block error
/// probability: counted as certain failures (Conservative) or dropped,
/// replicating the truncated sum literally (Truncated).
enum class TailPolicy { Conservative, Truncated };

struct WeightEstimate {
  std::size_t weight = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double p_err = 0.0;
  bool exhaustive = false;
};

struct DecodeConfig {
  unsigned readouts = 3;  // m; 1 selects single-readout uniform decoding
  double delta1 = 10.0;
  double delta2 = 6.0;
  std::size_t max_iters = 0;  // 0 -> code length
};

/// Failure rate of reproduction under exactly `weight` errors per readout.
/// Error patterns are enumerated exhaustively when C(n, weight) <= trials,
/// otherwise sampled; each of the m readouts gets an independent uniform
/// weight-`weight` pattern. Per-trial substreams are derived from
/// (seed, weight, trial), so results do not depend on execution order.
/// The reference must be a codeword; by the decoder's translation
/// equivariance the estimate is the same for every codeword.
WeightEstimate estimate_perr(const InstanceCode& code, const Response& reference,
                             std::size_t weight, std::size_t trials,
                             const DecodeConfig& dcfg, std::uint64_t seed);

struct SimReport {
  std::vector<WeightEstimate> per_weight;
  std::vector<std::pair<double, double>> curve;  // (p, P_Block)
  std::size_t i_max = 0;
  TailPolicy tail_policy = TailPolicy::Conservative;
};

/// P_Block(p) = sum_{i<=i_max} P(i) P_err(i), with P(i) the binomial weight
/// distribution, plus the unsimulated tail mass under the conservative
/// policy.
SimReport block_error_curve(const InstanceCode& code, const Response& reference,
                            const std::vector<double>& p_grid, std::size_t i_max,
                            std::size_t trials, TailPolicy tail,
                            const DecodeConfig& dcfg, std::uint64_t seed);

/// P(i) = C(n,i) p^i (1-p)^(n-i) for i = 0..n.
std::vector<double> binomial_pmf(std::size_t n, double p);

/// Exact block error probability of a bounded-distance decoder correcting
/// up to t errors: sum_{i>t} P(i) per grid point.
std::vector<std::pair<double, double>> bdd_baseline(std::size_t n, std::size_t t,
                                                    const std::vector<double>& p_grid);

struct MemoryReport {
  std::size_t n = 0;
  std::size_t n_rows = 0;
  std::size_t nnz = 0;
  std::size_t row_index_bits = 0;
  std::size_t col_index_bits = 0;
  std::size_t matrix_bits = 0;  // nnz * (row_index_bits + col_index_bits)
  std::optional<std::size_t> helper_bits;
  std::optional<HelperData::Kind> helper_kind;
};

/// Storage accounting: the instance code as one (row, column) integer pair
/// per stored 1, plus the helper payload when one is supplied.
MemoryReport memory_report(const InstanceCode& code, const HelperData* helper = nullptr);

struct Curve {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// CSV "p,p_block" for a single curve, "p,p_block,source" for several.
void write_curve_csv(const std::filesystem::path& path, const std::vector<Curve>& curves);
std::vector<Curve> read_curve_csv(const std::filesystem::path& path);

}  // namespace pufsketch
