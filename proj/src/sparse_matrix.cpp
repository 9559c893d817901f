#include "pufsketch/sparse_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pufsketch {

void SparseBinaryMatrix::append_row(std::vector<std::uint32_t> support) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("SparseBinaryMatrix: duplicate column index in row");
  if (!support.empty() && support.back() >= n_cols)
    throw std::invalid_argument("SparseBinaryMatrix: column index out of range");
  rows.push_back(std::move(support));
  n_rows = rows.size();
}

std::size_t SparseBinaryMatrix::nnz() const {
  std::size_t z = 0;
  for (const auto& r : rows) z += r.size();
  return z;
}

std::vector<std::size_t> SparseBinaryMatrix::row_weights() const {
  std::vector<std::size_t> w(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) w[i] = rows[i].size();
  return w;
}

std::vector<std::size_t> SparseBinaryMatrix::col_weights() const {
  std::vector<std::size_t> w(n_cols, 0);
  for (const auto& r : rows)
    for (std::uint32_t c : r) ++w[c];
  return w;
}

Gf2Eliminator::Gf2Eliminator(std::size_t n_cols)
    : n_cols_(n_cols), words_((n_cols + 63) / 64) {}

std::vector<std::uint64_t> Gf2Eliminator::reduce(
    const std::vector<std::uint32_t>& support) const {
  std::vector<std::uint64_t> v(words_, 0);
  for (std::uint32_t c : support) {
    if (c >= n_cols_) throw std::invalid_argument("Gf2Eliminator: index out of range");
    v[c >> 6] ^= 1ull << (c & 63);
  }
  // Basis rows are sorted by pivot and each pivot is that row's lowest set
  // bit, so one ascending pass fully reduces v.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint32_t p = pivots_[i];
    if (v[p >> 6] & (1ull << (p & 63))) {
      const auto& b = basis_[i];
      for (std::size_t w = 0; w < words_; ++w) v[w] ^= b[w];
    }
  }
  return v;
}

namespace {

// Lowest set bit position, or -1 for the zero vector.
long long first_bit(const std::vector<std::uint64_t>& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0)
      return static_cast<long long>(w * 64 + static_cast<std::size_t>(
                                                 __builtin_ctzll(v[w])));
  }
  return -1;
}

}  // namespace

bool Gf2Eliminator::would_increase(const std::vector<std::uint32_t>& support) const {
  return first_bit(reduce(support)) >= 0;
}

bool Gf2Eliminator::insert(const std::vector<std::uint32_t>& support) {
  auto v = reduce(support);
  const long long p = first_bit(v);
  if (p < 0) return false;
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(),
                                    static_cast<std::uint32_t>(p)) -
                   pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, static_cast<std::uint32_t>(p));
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

std::size_t rank_gf2(const SparseBinaryMatrix& m) {
  Gf2Eliminator elim(m.n_cols);
  for (const auto& r : m.rows) elim.insert(r);
  return elim.rank();
}

std::string RegularityReport::violation() const {
  if (!row_weights_constant) return "row weights are not constant";
  if (!col_weights_constant) return "column weights are not constant";
  if (rho == 0) return "matrix has empty rows";
  if (gamma == 0) return "matrix has empty columns";
  if (!row_overlap_ok) {
    return "rows " + std::to_string(row_overlap_witness->first) + " and " +
           std::to_string(row_overlap_witness->second) +
           " share more than one column";
  }
  if (!col_overlap_ok) {
    return "columns " + std::to_string(col_overlap_witness->first) + " and " +
           std::to_string(col_overlap_witness->second) +
           " share more than one row";
  }
  return {};
}

RegularityReport check_regular(const SparseBinaryMatrix& m) {
  RegularityReport rep;

  rep.row_weights_constant = true;
  if (m.n_rows > 0) {
    rep.rho = m.rows[0].size();
    for (const auto& r : m.rows)
      if (r.size() != rep.rho) {
        rep.row_weights_constant = false;
        rep.rho = 0;
        break;
      }
  }

  const auto colw = m.col_weights();
  rep.col_weights_constant = true;
  if (m.n_cols > 0) {
    rep.gamma = colw[0];
    for (std::size_t c = 1; c < m.n_cols; ++c)
      if (colw[c] != rep.gamma) {
        rep.col_weights_constant = false;
        rep.gamma = 0;
        break;
      }
  }

  // Column pair repeated across rows => those two columns share two rows.
  {
    std::vector<std::uint64_t> pairs;
    for (const auto& r : m.rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
          pairs.push_back(static_cast<std::uint64_t>(r[i]) * m.n_cols + r[j]);
    std::sort(pairs.begin(), pairs.end());
    const auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    rep.col_overlap_ok = dup == pairs.end();
    if (!rep.col_overlap_ok)
      rep.col_overlap_witness = {static_cast<std::size_t>(*dup / m.n_cols),
                                 static_cast<std::size_t>(*dup % m.n_cols)};
  }

  // Row pair repeated across columns => those two rows share two columns.
  {
    std::vector<std::vector<std::uint32_t>> cols(m.n_cols);
    for (std::size_t r = 0; r < m.n_rows; ++r)
      for (std::uint32_t c : m.rows[r]) cols[c].push_back(static_cast<std::uint32_t>(r));
    std::vector<std::uint64_t> pairs;
    for (const auto& col : cols)
      for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = i + 1; j < col.size(); ++j)
          pairs.push_back(static_cast<std::uint64_t>(col[i]) * m.n_rows + col[j]);
    std::sort(pairs.begin(), pairs.end());
    const auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    rep.row_overlap_ok = dup == pairs.end();
    if (!rep.row_overlap_ok)
      rep.row_overlap_witness = {static_cast<std::size_t>(*dup / m.n_rows),
                                 static_cast<std::size_t>(*dup % m.n_rows)};
  }

  return rep;
}

BitVec syndrome(const SparseBinaryMatrix& m, const BitVec& v) {
  if (v.size() != m.n_cols)
    throw std::invalid_argument("syndrome: vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(m.n_cols) +
                                " columns");
  BitVec s(m.n_rows, 0);
  for (std::size_t r = 0; r < m.n_rows; ++r) {
    unsigned parity = 0;
    for (std::uint32_t c : m.rows[r]) parity ^= v[c];
    s[r] = static_cast<std::uint8_t>(parity & 1u);
  }
  return s;
}

MatrixStats matrix_stats(const SparseBinaryMatrix& m) {
  MatrixStats st;
  const std::size_t z = m.nnz();
  if (m.n_rows > 0 && m.n_cols > 0)
    st.density = static_cast<double>(z) /
                 (static_cast<double>(m.n_rows) * static_cast<double>(m.n_cols));
  for (const auto& r : m.rows) ++st.row_weight_histogram[r.size()];
  for (std::size_t w : m.col_weights()) ++st.col_weight_histogram[w];
  st.rank = rank_gf2(m);
  const auto rep = check_regular(m);
  if (rep.regular())
    st.rate_bound = 1.0 - static_cast<double>(rep.gamma) / static_cast<double>(rep.rho);
  return st;
}

SparseBinaryMatrix transpose(const SparseBinaryMatrix& m) {
  SparseBinaryMatrix t(m.n_cols, m.n_rows);
  for (std::size_t r = 0; r < m.n_rows; ++r)
    for (std::uint32_t c : m.rows[r]) t.rows[c].push_back(static_cast<std::uint32_t>(r));
  return t;
}

std::size_t dedup_rows(SparseBinaryMatrix& m) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> kept;
  kept.reserve(m.rows.size());
  for (auto& r : m.rows)
    if (seen.insert(r).second) kept.push_back(std::move(r));
  const std::size_t removed = m.rows.size() - kept.size();
  m.rows = std::move(kept);
  m.n_rows = m.rows.size();
  return removed;
}

void write_matrix(const SparseBinaryMatrix& m, std::ostream& out) {
  out << m.n_rows << ' ' << m.n_cols << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.n_rows; ++r)
    for (std::uint32_t c : m.rows[r]) out << r << ' ' << c << '\n';
}

void write_matrix(const SparseBinaryMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_matrix: cannot open " + path.string());
  write_matrix(m, out);
  if (!out) throw std::runtime_error("write_matrix: write failed for " + path.string());
}

SparseBinaryMatrix read_matrix(std::istream& in) {
  // Skip leading comment lines (instance-code headers).
  while (in >> std::ws, in.peek() == '#') {
    std::string line;
    std::getline(in, line);
  }
  std::size_t n_rows = 0, n_cols = 0, nnz = 0;
  if (!(in >> n_rows >> n_cols >> nnz))
    throw std::runtime_error("read_matrix: malformed header");
  SparseBinaryMatrix m(n_rows, n_cols);
  std::size_t prev_r = 0, prev_c = 0;
  bool first = true;
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r = 0, c = 0;
    if (!(in >> r >> c)) throw std::runtime_error("read_matrix: truncated entry list");
    if (r >= n_rows || c >= n_cols)
      throw std::runtime_error("read_matrix: index out of range");
    if (!first && (r < prev_r || (r == prev_r && c <= prev_c)))
      throw std::runtime_error("read_matrix: entries not sorted by (row, col)");
    m.rows[r].push_back(static_cast<std::uint32_t>(c));
    prev_r = r;
    prev_c = c;
    first = false;
  }
  return m;
}

SparseBinaryMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_matrix: cannot open " + path.string());
  return read_matrix(in);
}

std::vector<BitVec> null_space_basis(const SparseBinaryMatrix& m) {
  const std::size_t words = (m.n_cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.n_rows,
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.n_rows; ++r)
    for (std::uint32_t c : m.rows[r]) rows[r][c >> 6] ^= 1ull << (c & 63);

  auto get = [&](std::size_t r, std::size_t c) {
    return (rows[r][c >> 6] >> (c & 63)) & 1ull;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> is_pivot_col(m.n_cols, false);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.n_cols && next_row < m.n_rows; ++col) {
    std::size_t sel = next_row;
    while (sel < m.n_rows && !get(sel, col)) ++sel;
    if (sel == m.n_rows) continue;
    std::swap(rows[sel], rows[next_row]);
    for (std::size_t r = 0; r < m.n_rows; ++r) {
      if (r != next_row && get(r, col))
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[next_row][w];
    }
    pivots.emplace_back(next_row, col);
    is_pivot_col[col] = true;
    ++next_row;
  }

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < m.n_cols; ++f) {
    if (is_pivot_col[f]) continue;
    BitVec x(m.n_cols, 0);
    x[f] = 1;
    for (const auto& [r, c] : pivots)
      if (get(r, f)) x[c] = 1;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace pufsketch
