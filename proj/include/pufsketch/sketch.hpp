#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pufsketch/decoder.hpp"
#include "pufsketch/rng.hpp"
#include "pufsketch/sparse_matrix.hpp"

namespace pufsketch {

/// A PUF readout, or the enrolled reference response.
struct Response {
  BitVec bits;

  std::size_t size() const { return bits.size(); }
  bool operator==(const Response&) const = default;
};

Response random_response(std::size_t n, Rng& rng);
Response read_response(const std::filesystem::path& path);  // line of '0'/'1'
void write_response(const Response& r, const std::filesystem::path& path);

enum class RowSource { Euclidean, Projective, ReedSolomon, Combination, Balancing };
std::string row_source_name(RowSource s);

/// Base-construction descriptor. Text form: "eg:m,q", "pg:m,q", "rs:q,rho".
struct SourceSpec {
  RowSource kind = RowSource::Euclidean;
  unsigned a = 0;  // m for eg/pg, q for rs
  unsigned b = 0;  // q for eg/pg, rho for rs

  std::size_t width() const;           // length of the rows it produces
  std::size_t max_row_weight() const;  // rho of the construction
  bool operator==(const SourceSpec&) const = default;
};

std::string format_source(const SourceSpec& s);
SourceSpec parse_source(const std::string& text);

/// Every base construction whose row length is exactly n: Euclidean, then
/// projective, then Reed-Solomon, each by decreasing field size. May be
/// empty; lengths with no matching construction are rejected, not padded.
std::vector<SourceSpec> default_sources(std::size_t n);

SparseBinaryMatrix build_base_matrix(const SourceSpec& s);

struct ConstructionConfig {
  std::size_t n = 0;         // 0 -> take the enrolled response length
  std::size_t target_k = 0;  // required, 0 < target_k < n
  std::vector<SourceSpec> sources;  // empty -> default_sources(n)
  std::size_t max_rows = 0;          // 0 -> 5 * (n - target_k)
  std::size_t combo_weight_cap = 0;  // 0 -> 2 * max source row weight
  std::size_t min_col_weight = 0;    // 0 -> median column weight after base intake
  std::uint64_t seed = 0;
};

struct RowTag {
  RowSource source = RowSource::Euclidean;
  std::string detail;          // source parameters, or the balanced column
  std::int64_t parent_a = -1;  // combination parents (pool row indices)
  std::int64_t parent_b = -1;
};

/// Parity rows bound to one response: every stored row b satisfies
/// <b, response> = 0. Duplicate and empty rows are rejected, and with a rank
/// cap set, rows that would push the GF(2) rank past the cap are rejected
/// too.
class DualRowPool {
 public:
  DualRowPool(std::size_t n, BitVec bound_response);

  void set_rank_cap(std::size_t cap) { rank_cap_ = cap; }
  bool is_dual(const std::vector<std::uint32_t>& support) const;
  bool would_increase_rank(const std::vector<std::uint32_t>& support) const;
  /// Returns false when the row is empty, non-dual, duplicate, or blocked by
  /// the rank cap.
  bool add_row(std::vector<std::uint32_t> support, RowTag tag);

  std::size_t n() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t rank() const { return elim_.rank(); }
  const BitVec& bound_response() const { return response_; }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
  const std::vector<RowTag>& tags() const { return tags_; }
  const std::vector<std::size_t>& col_weights() const { return col_weights_; }

  SparseBinaryMatrix to_matrix() const;

 private:
  std::size_t n_;
  BitVec response_;
  std::optional<std::size_t> rank_cap_;
  Gf2Eliminator elim_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<RowTag> tags_;
  std::vector<std::size_t> col_weights_;
  std::set<std::vector<std::uint32_t>> seen_;
};

/// Keeps exactly the rows of base orthogonal to the bound response.
DualRowPool filter_dual_rows(const SparseBinaryMatrix& base, const Response& bound,
                             RowTag tag);

/// Appends up to `count` XOR combinations of distinct row pairs whose
/// combined weight is within the cap. Pairs are sampled from the growing
/// pool, so combinations of combinations occur. Returns the number added;
/// the pool is unchanged when no admissible pair is found.
std::size_t augment_combinations(DualRowPool& pool, std::size_t combo_weight_cap,
                                 std::size_t count, Rng& rng);

struct CandidateRow {
  std::vector<std::uint32_t> support;
  RowTag tag;
};

struct BalanceOutcome {
  std::size_t rows_added = 0;
  std::size_t min_weight_before = 0;
  std::size_t min_weight_after = 0;
  std::size_t max_weight_after = 0;
  std::vector<std::uint32_t> unreachable_columns;
};

/// Greedily raises columns below min_col_weight, first with the supplied
/// candidate rows (leftover base rows), then with pair combinations that
/// cover the deficient column, until the target is met, the row budget runs
/// out, or no admissible row exists (such columns are reported).
BalanceOutcome balance_columns(DualRowPool& pool, std::size_t min_col_weight,
                               std::size_t combo_weight_cap, std::size_t row_budget,
                               const std::vector<CandidateRow>& candidates = {});

struct ConstructionReport {
  std::size_t base_rows = 0;
  std::size_t combination_rows = 0;
  std::size_t balance_rows = 0;
  std::size_t min_col_weight = 0;
  std::size_t max_col_weight = 0;
  std::vector<std::uint32_t> unreachable_columns;
  bool rank_shortfall = false;       // target rank not reachable
  bool degenerate_response = false;  // all-zero enrollment (weak key)
};

struct InstanceCode {
  SparseBinaryMatrix H;
  std::size_t n = 0;
  std::size_t k = 0;  // n - rank(H)
  std::uint64_t seed = 0;
  std::vector<RowTag> row_tags;  // empty when loaded from file
  std::map<std::string, std::size_t> provenance_counts;
  ConstructionConfig config;  // resolved values
  ConstructionReport report;
};

/// Builds the per-response code: stream the configured base constructions
/// keeping only rows dual to the enrollment, stop rank growth at
/// n - target_k, then add pair combinations and column-balancing rows up to
/// max_rows. The enrolled response is a codeword of the result by
/// construction. If the dual pools cannot reach the target rank the best
/// achievable code is returned with the shortfall flagged.
InstanceCode build_instance_code(const Response& enrolled,
                                 const ConstructionConfig& cfg);

struct HelperData {
  enum class Kind { CodeOffset, Syndrome };
  Kind kind = Kind::CodeOffset;
  BitVec payload;
  std::string code_ref = "-";
};

/// Code-offset sketch: stores h = r ^ c for a uniformly random codeword c.
HelperData code_offset_enroll(const Response& enrolled, const SparseBinaryMatrix& H,
                              Rng& rng, std::string code_ref = "-");
/// Decodes r ^ h and returns (decoded ^ h); empty on decoder failure.
std::optional<Response> code_offset_reproduce(const Response& readout,
                                              const HelperData& helper,
                                              const BitflipDecoder& decoder,
                                              const SoftWeights& soft,
                                              std::size_t max_iters = 0);

/// Syndrome sketch: stores h = H r^T.
HelperData syndrome_enroll(const Response& enrolled, const SparseBinaryMatrix& H,
                           std::string code_ref = "-");
/// Solves H e^T = H r^T ^ h with the decoder and returns r ^ e; empty on
/// decoder failure.
std::optional<Response> syndrome_reproduce(const Response& readout,
                                           const HelperData& helper,
                                           const BitflipDecoder& decoder,
                                           const SoftWeights& soft,
                                           std::size_t max_iters = 0);

/// Instance-code file: '#'-prefixed header (n, k, seed, provenance counts)
/// followed by the matrix in the standard text format.
void write_instance_code(const InstanceCode& code, const std::filesystem::path& path);
InstanceCode read_instance_code(const std::filesystem::path& path);

/// Helper-data file: single line "<kind> <code_ref> <n_bits> <hex>".
void write_helper_data(const HelperData& h, const std::filesystem::path& path);
HelperData read_helper_data(const std::filesystem::path& path);

}  // namespace pufsketch
