#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pufsketch {

using BitVec = std::vector<std::uint8_t>;

/// GF(2) matrix in row-major coordinate form: each row stores the sorted
/// column indices of its ones. Instances are plain values; treat them as
/// immutable once built and they are safe to share across threads.
struct SparseBinaryMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  SparseBinaryMatrix() = default;
  SparseBinaryMatrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), rows(r) {}

  /// Appends a row given its support; indices are sorted and validated
  /// (in range, no duplicates).
  void append_row(std::vector<std::uint32_t> support);

  std::size_t nnz() const;
  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> col_weights() const;

  bool operator==(const SparseBinaryMatrix&) const = default;
};

/// Incremental GF(2) row-space tracker backed by bit-packed elimination.
/// Basis rows keep distinct pivots (lowest set bit), so membership probes
/// are a single reduction pass.
class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(std::size_t n_cols);

  /// True if the row is independent of everything inserted so far.
  bool would_increase(const std::vector<std::uint32_t>& support) const;
  /// Inserts the row; returns true if the rank grew.
  bool insert(const std::vector<std::uint32_t>& support);
  std::size_t rank() const { return basis_.size(); }
  std::size_t n_cols() const { return n_cols_; }

 private:
  std::vector<std::uint64_t> reduce(const std::vector<std::uint32_t>& support) const;

  std::size_t n_cols_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> basis_;  // sorted by pivot
  std::vector<std::uint32_t> pivots_;
};

std::size_t rank_gf2(const SparseBinaryMatrix& m);

struct RegularityReport {
  bool row_weights_constant = false;
  std::size_t rho = 0;  // common row weight when constant
  bool col_weights_constant = false;
  std::size_t gamma = 0;  // common column weight when constant
  bool row_overlap_ok = false;
  bool col_overlap_ok = false;
  // Two rows sharing more than one column, or two columns sharing more
  // than one row.
  std::optional<std::pair<std::size_t, std::size_t>> row_overlap_witness;
  std::optional<std::pair<std::size_t, std::size_t>> col_overlap_witness;

  bool regular() const {
    return row_weights_constant && col_weights_constant && row_overlap_ok &&
           col_overlap_ok && rho > 0 && gamma > 0;
  }
  /// Human-readable description of the first violated property, empty when
  /// regular.
  std::string violation() const;
};

RegularityReport check_regular(const SparseBinaryMatrix& m);

/// s = H v over GF(2); v has length n_cols, the result length n_rows.
BitVec syndrome(const SparseBinaryMatrix& m, const BitVec& v);

struct MatrixStats {
  double density = 0.0;
  std::map<std::size_t, std::size_t> row_weight_histogram;
  std::map<std::size_t, std::size_t> col_weight_histogram;
  std::size_t rank = 0;
  std::optional<double> rate_bound;  // 1 - gamma/rho for regular matrices
};

MatrixStats matrix_stats(const SparseBinaryMatrix& m);

SparseBinaryMatrix transpose(const SparseBinaryMatrix& m);

/// Removes duplicate rows (first occurrence wins); returns how many were
/// dropped.
std::size_t dedup_rows(SparseBinaryMatrix& m);

/// Text format, bit-exact: header "n_rows n_cols nnz", then one zero-indexed
/// "row col" pair per 1, sorted by (row, col), newline separated. The reader
/// additionally skips leading lines starting with '#'.
void write_matrix(const SparseBinaryMatrix& m, std::ostream& out);
void write_matrix(const SparseBinaryMatrix& m, const std::filesystem::path& path);
SparseBinaryMatrix read_matrix(std::istream& in);
SparseBinaryMatrix read_matrix(const std::filesystem::path& path);

/// Basis of the right null space {x : H x^T = 0}, one BitVec per vector.
std::vector<BitVec> null_space_basis(const SparseBinaryMatrix& m);

}  // namespace pufsketch
