#include "pufsketch/sketch.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pufsketch/geometry.hpp"
#include "pufsketch/rs_ldpc.hpp"

namespace pufsketch {
namespace {

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  try {
    GaloisField::factor_prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::uint32_t> xor_supports(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

Response random_response(std::size_t n, Rng& rng) {
  Response r;
  r.bits.resize(n);
  for (auto& b : r.bits) b = static_cast<std::uint8_t>(rng.next() & 1u);
  return r;
}

Response read_response(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_response: cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  Response r;
  for (char ch : line) {
    if (ch == '0' || ch == '1')
      r.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw std::runtime_error("read_response: expected a line of 0/1 characters");
  }
  if (r.bits.empty()) throw std::runtime_error("read_response: empty response");
  return r;
}

void write_response(const Response& r, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_response: cannot open " + path.string());
  for (std::uint8_t b : r.bits) out << (b ? '1' : '0');
  out << '\n';
}

std::string row_source_name(RowSource s) {
  switch (s) {
    case RowSource::Euclidean: return "eg";
    case RowSource::Projective: return "pg";
    case RowSource::ReedSolomon: return "rs";
    case RowSource::Combination: return "combo";
    case RowSource::Balancing: return "balance";
  }
  return "?";
}

std::size_t SourceSpec::width() const {
  switch (kind) {
    case RowSource::Euclidean: return eg_points(a, b);
    case RowSource::Projective: return pg_points(a, b);
    case RowSource::ReedSolomon: return static_cast<std::size_t>(a) * b;
    default: break;
  }
  throw std::invalid_argument("SourceSpec: not a base construction");
}

std::size_t SourceSpec::max_row_weight() const {
  switch (kind) {
    case RowSource::Euclidean: return b;
    case RowSource::Projective: return b + 1;
    case RowSource::ReedSolomon: return b;
    default: break;
  }
  throw std::invalid_argument("SourceSpec: not a base construction");
}

std::string format_source(const SourceSpec& s) {
  return row_source_name(s.kind) + ":" + std::to_string(s.a) + "," +
         std::to_string(s.b);
}

SourceSpec parse_source(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos || comma < colon)
    throw std::invalid_argument("parse_source: expected kind:a,b, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  SourceSpec s;
  if (kind == "eg")
    s.kind = RowSource::Euclidean;
  else if (kind == "pg")
    s.kind = RowSource::Projective;
  else if (kind == "rs")
    s.kind = RowSource::ReedSolomon;
  else
    throw std::invalid_argument("parse_source: unknown construction '" + kind + "'");
  s.a = static_cast<unsigned>(std::stoul(text.substr(colon + 1, comma - colon - 1)));
  s.b = static_cast<unsigned>(std::stoul(text.substr(comma + 1)));
  return s;
}

std::vector<SourceSpec> default_sources(std::size_t n) {
  std::vector<SourceSpec> eg, pg, rs;
  for (unsigned q = 2; q <= n && q <= (1u << 16); ++q) {
    if (!is_prime_power(q)) continue;
    // EG(m,q): q^m == n
    std::uint64_t w = static_cast<std::uint64_t>(q) * q;
    for (unsigned m = 2; w <= n; ++m, w *= q) {
      if (w == n) {
        eg.push_back({RowSource::Euclidean, m, q});
        break;
      }
    }
    // PG(m,q): 1 + q + ... + q^m == n
    std::uint64_t acc = 1 + static_cast<std::uint64_t>(q);
    for (unsigned m = 2;; ++m) {
      std::uint64_t term = 1;
      for (unsigned i = 0; i < m; ++i) term *= q;
      acc += term;
      if (acc == n) {
        pg.push_back({RowSource::Projective, m, q});
        break;
      }
      if (acc > n) break;
    }
    // RS(q,rho): rho * q == n with 1 < rho < q
    if (n % q == 0) {
      const std::size_t rho = n / q;
      if (rho > 1 && rho < q)
        rs.push_back({RowSource::ReedSolomon, q, static_cast<unsigned>(rho)});
    }
  }
  auto by_field_desc = [](const SourceSpec& x, const SourceSpec& y) {
    return x.b > y.b;  // eg/pg: larger q first
  };
  std::sort(eg.begin(), eg.end(), by_field_desc);
  std::sort(pg.begin(), pg.end(), by_field_desc);
  std::sort(rs.begin(), rs.end(),
            [](const SourceSpec& x, const SourceSpec& y) { return x.a > y.a; });
  std::vector<SourceSpec> out = std::move(eg);
  out.insert(out.end(), pg.begin(), pg.end());
  out.insert(out.end(), rs.begin(), rs.end());
  return out;
}

SparseBinaryMatrix build_base_matrix(const SourceSpec& s) {
  switch (s.kind) {
    case RowSource::Euclidean: return incidence_matrix(build_eg(s.a, s.b));
    case RowSource::Projective: return incidence_matrix(build_pg(s.a, s.b));
    case RowSource::ReedSolomon:
      return build_rs_ldpc(build_rs_base(s.a, s.b), s.a);
    default: break;
  }
  throw std::invalid_argument("build_base_matrix: not a base construction");
}

DualRowPool::DualRowPool(std::size_t n, BitVec bound_response)
    : n_(n), response_(std::move(bound_response)), elim_(n), col_weights_(n, 0) {
  if (n == 0) throw std::invalid_argument("DualRowPool: empty length");
  if (response_.size() != n)
    throw std::invalid_argument("DualRowPool: response length mismatch");
}

bool DualRowPool::is_dual(const std::vector<std::uint32_t>& support) const {
  unsigned parity = 0;
  for (std::uint32_t c : support) {
    if (c >= n_) throw std::invalid_argument("DualRowPool: index out of range");
    parity ^= response_[c];
  }
  return (parity & 1u) == 0;
}

bool DualRowPool::would_increase_rank(const std::vector<std::uint32_t>& support) const {
  return elim_.would_increase(support);
}

bool DualRowPool::add_row(std::vector<std::uint32_t> support, RowTag tag) {
  std::sort(support.begin(), support.end());
  if (support.empty()) return false;
  if (!is_dual(support)) return false;
  if (seen_.count(support)) return false;
  if (rank_cap_ && elim_.rank() >= *rank_cap_ && elim_.would_increase(support))
    return false;
  elim_.insert(support);
  for (std::uint32_t c : support) ++col_weights_[c];
  seen_.insert(support);
  rows_.push_back(std::move(support));
  tags_.push_back(std::move(tag));
  return true;
}

SparseBinaryMatrix DualRowPool::to_matrix() const {
  SparseBinaryMatrix m(0, n_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

DualRowPool filter_dual_rows(const SparseBinaryMatrix& base, const Response& bound,
                             RowTag tag) {
  if (base.n_cols != bound.size())
    throw std::invalid_argument("filter_dual_rows: length mismatch");
  DualRowPool pool(bound.size(), bound.bits);
  for (const auto& row : base.rows) pool.add_row(row, tag);
  return pool;
}

std::size_t augment_combinations(DualRowPool& pool, std::size_t combo_weight_cap,
                                 std::size_t count, Rng& rng) {
  if (pool.size() < 2 || count == 0) return 0;
  std::size_t added = 0;
  std::size_t misses = 0;
  const std::size_t miss_limit = 200 + 60 * count;
  while (added < count && misses < miss_limit) {
    const std::size_t i = rng.below(pool.size());
    const std::size_t j = rng.below(pool.size());
    if (i == j) {
      ++misses;
      continue;
    }
    auto combined = xor_supports(pool.rows()[i], pool.rows()[j]);
    if (combined.empty() || combined.size() > combo_weight_cap) {
      ++misses;
      continue;
    }
    RowTag tag{RowSource::Combination, "", static_cast<std::int64_t>(std::min(i, j)),
               static_cast<std::int64_t>(std::max(i, j))};
    if (pool.add_row(std::move(combined), std::move(tag)))
      ++added;
    else
      ++misses;
  }
  return added;
}

BalanceOutcome balance_columns(DualRowPool& pool, std::size_t min_col_weight,
                               std::size_t combo_weight_cap, std::size_t row_budget,
                               const std::vector<CandidateRow>& candidates) {
  BalanceOutcome out;
  const std::size_t n = pool.n();
  auto deficient = [&](std::uint32_t c) {
    return pool.col_weights()[c] < min_col_weight;
  };
  auto any_deficient = [&] {
    for (std::uint32_t c = 0; c < n; ++c)
      if (deficient(c)) return true;
    return false;
  };
  out.min_weight_before =
      *std::min_element(pool.col_weights().begin(), pool.col_weights().end());

  // Leftover base rows first.
  for (const auto& cand : candidates) {
    if (row_budget == 0 || !any_deficient()) break;
    bool covers = false;
    for (std::uint32_t c : cand.support)
      if (deficient(c)) {
        covers = true;
        break;
      }
    if (!covers) continue;
    RowTag tag{RowSource::Balancing, cand.tag.detail, -1, -1};
    if (pool.add_row(cand.support, std::move(tag))) {
      ++out.rows_added;
      --row_budget;
    }
  }

  // Pair combinations covering the currently lowest column. A combination
  // covers column c exactly when one parent contains c and the other does
  // not; combinations never move the rank.
  std::vector<bool> hopeless(n, false);
  while (row_budget > 0) {
    std::uint32_t target = n;
    std::size_t target_w = min_col_weight;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (hopeless[c]) continue;
      if (pool.col_weights()[c] < target_w) {
        target_w = pool.col_weights()[c];
        target = c;
      }
    }
    if (target == n) break;

    bool found = false;
    for (std::size_t i = 0; i < pool.size() && !found; ++i) {
      const auto& ri = pool.rows()[i];
      if (!std::binary_search(ri.begin(), ri.end(), target)) continue;
      for (std::size_t j = 0; j < pool.size() && !found; ++j) {
        if (j == i) continue;
        const auto& rj = pool.rows()[j];
        if (std::binary_search(rj.begin(), rj.end(), target)) continue;
        auto combined = xor_supports(ri, rj);
        if (combined.empty() || combined.size() > combo_weight_cap) continue;
        RowTag tag{RowSource::Balancing, "col=" + std::to_string(target),
                   static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
        if (pool.add_row(std::move(combined), std::move(tag))) {
          found = true;
          ++out.rows_added;
          --row_budget;
        }
      }
    }
    if (!found) hopeless[target] = true;
  }

  for (std::uint32_t c = 0; c < n; ++c)
    if (deficient(c)) out.unreachable_columns.push_back(c);
  out.min_weight_after =
      *std::min_element(pool.col_weights().begin(), pool.col_weights().end());
  out.max_weight_after =
      *std::max_element(pool.col_weights().begin(), pool.col_weights().end());
  return out;
}

InstanceCode build_instance_code(const Response& enrolled,
                                 const ConstructionConfig& cfg_in) {
  ConstructionConfig cfg = cfg_in;
  const std::size_t n = enrolled.size();
  if (n == 0) throw std::invalid_argument("build_instance_code: empty response");
  if (cfg.n == 0) cfg.n = n;
  if (cfg.n != n)
    throw std::invalid_argument("build_instance_code: response length " +
                                std::to_string(n) + " does not match configured " +
                                std::to_string(cfg.n));
  if (cfg.target_k == 0 || cfg.target_k >= n)
    throw std::invalid_argument("build_instance_code: target_k must be in (0, n)");
  if (cfg.sources.empty()) cfg.sources = default_sources(n);
  if (cfg.sources.empty())
    throw std::invalid_argument(
        "build_instance_code: no base construction produces length " +
        std::to_string(n));
  for (const auto& s : cfg.sources) {
    if (s.width() != n)
      throw std::invalid_argument("build_instance_code: source " + format_source(s) +
                                  " has width " + std::to_string(s.width()) +
                                  ", expected " + std::to_string(n));
  }
  if (cfg.max_rows == 0) cfg.max_rows = 5 * (n - cfg.target_k);
  if (cfg.combo_weight_cap == 0) {
    for (const auto& s : cfg.sources)
      cfg.combo_weight_cap = std::max(cfg.combo_weight_cap, 2 * s.max_row_weight());
  }

  const std::size_t target_rank = n - cfg.target_k;
  ConstructionReport report;
  report.degenerate_response =
      std::all_of(enrolled.bits.begin(), enrolled.bits.end(),
                  [](std::uint8_t b) { return b == 0; });

  std::vector<std::pair<SparseBinaryMatrix, SourceSpec>> bases;
  for (const auto& s : cfg.sources) bases.emplace_back(build_base_matrix(s), s);

  DualRowPool pool(n, enrolled.bits);
  pool.set_rank_cap(target_rank);

  // Base intake, two streaming passes over the dual rows. Coverage first:
  // once the rank cap engages, a column that no kept row touches can often
  // no longer be fixed (independent rows covering it are rejected), so rows
  // touching uncovered columns are taken before generic rank fill.
  auto uncovered = [&] {
    for (std::size_t c = 0; c < n; ++c)
      if (pool.col_weights()[c] == 0) return true;
    return false;
  };
  for (const auto& [base, spec] : bases) {
    if (!uncovered()) break;
    const RowTag tag{spec.kind, format_source(spec), -1, -1};
    for (const auto& row : base.rows) {
      if (pool.size() >= cfg.max_rows || !uncovered()) break;
      if (!pool.is_dual(row)) continue;
      bool covers_new = false;
      for (std::uint32_t c : row)
        if (pool.col_weights()[c] == 0) {
          covers_new = true;
          break;
        }
      if (covers_new) pool.add_row(row, tag);
    }
  }

  std::vector<CandidateRow> spare;  // dual but dependent rows, kept for balancing
  const std::size_t spare_limit = 4 * cfg.max_rows;
  for (const auto& [base, spec] : bases) {
    const RowTag tag{spec.kind, format_source(spec), -1, -1};
    for (const auto& row : base.rows) {
      if (!pool.is_dual(row)) continue;
      if (pool.rank() < target_rank && pool.size() < cfg.max_rows &&
          pool.would_increase_rank(row)) {
        pool.add_row(row, tag);
      } else if (spare.size() < spare_limit) {
        spare.push_back({row, tag});
      }
    }
  }
  report.rank_shortfall = pool.rank() < target_rank;
  report.base_rows = pool.size();

  if (cfg.min_col_weight == 0) {
    std::vector<std::size_t> w = pool.col_weights();
    std::sort(w.begin(), w.end());
    cfg.min_col_weight = std::max<std::size_t>(1, w[n / 2]);
  }

  // Redundancy: combinations get three quarters of the leftover budget, the
  // rest is reserved for column balancing.
  Rng combo_rng = Rng::substream(cfg.seed, 1);
  const std::size_t budget = cfg.max_rows > pool.size() ? cfg.max_rows - pool.size() : 0;
  report.combination_rows =
      augment_combinations(pool, cfg.combo_weight_cap, budget * 3 / 4, combo_rng);

  const std::size_t bal_budget =
      cfg.max_rows > pool.size() ? cfg.max_rows - pool.size() : 0;
  BalanceOutcome bal =
      balance_columns(pool, cfg.min_col_weight, cfg.combo_weight_cap, bal_budget, spare);
  report.balance_rows = bal.rows_added;
  report.min_col_weight = bal.min_weight_after;
  report.max_col_weight = bal.max_weight_after;
  report.unreachable_columns = std::move(bal.unreachable_columns);

  InstanceCode code;
  code.H = pool.to_matrix();
  code.n = n;
  code.k = n - pool.rank();
  code.seed = cfg.seed;
  code.row_tags = pool.tags();
  for (const auto& tag : code.row_tags)
    ++code.provenance_counts[row_source_name(tag.source)];
  code.config = std::move(cfg);
  code.report = std::move(report);

  for (std::uint8_t bit : syndrome(code.H, enrolled.bits))
    if (bit) throw std::logic_error("build_instance_code: enrollment not a codeword");
  return code;
}

HelperData code_offset_enroll(const Response& enrolled, const SparseBinaryMatrix& H,
                              Rng& rng, std::string code_ref) {
  if (enrolled.size() != H.n_cols)
    throw std::invalid_argument("code_offset_enroll: length mismatch");
  const auto basis = null_space_basis(H);
  BitVec codeword(H.n_cols, 0);
  for (const auto& b : basis) {
    if (rng.next() & 1u)
      for (std::size_t i = 0; i < codeword.size(); ++i) codeword[i] ^= b[i];
  }
  HelperData h;
  h.kind = HelperData::Kind::CodeOffset;
  h.payload.resize(H.n_cols);
  for (std::size_t i = 0; i < H.n_cols; ++i)
    h.payload[i] = enrolled.bits[i] ^ codeword[i];
  h.code_ref = std::move(code_ref);
  return h;
}

std::optional<Response> code_offset_reproduce(const Response& readout,
                                              const HelperData& helper,
                                              const BitflipDecoder& decoder,
                                              const SoftWeights& soft,
                                              std::size_t max_iters) {
  if (helper.kind != HelperData::Kind::CodeOffset)
    throw std::invalid_argument("code_offset_reproduce: wrong helper kind");
  if (readout.size() != helper.payload.size())
    throw std::invalid_argument("code_offset_reproduce: length mismatch");
  BitVec received(readout.size());
  for (std::size_t i = 0; i < received.size(); ++i)
    received[i] = readout.bits[i] ^ helper.payload[i];
  const DecodeResult res = decoder.decode(received, soft, max_iters);
  if (!res.converged) return std::nullopt;
  Response recovered;
  recovered.bits.resize(res.word.size());
  for (std::size_t i = 0; i < res.word.size(); ++i)
    recovered.bits[i] = res.word[i] ^ helper.payload[i];
  return recovered;
}

HelperData syndrome_enroll(const Response& enrolled, const SparseBinaryMatrix& H,
                           std::string code_ref) {
  HelperData h;
  h.kind = HelperData::Kind::Syndrome;
  h.payload = syndrome(H, enrolled.bits);
  h.code_ref = std::move(code_ref);
  return h;
}

std::optional<Response> syndrome_reproduce(const Response& readout,
                                           const HelperData& helper,
                                           const BitflipDecoder& decoder,
                                           const SoftWeights& soft,
                                           std::size_t max_iters) {
  if (helper.kind != HelperData::Kind::Syndrome)
    throw std::invalid_argument("syndrome_reproduce: wrong helper kind");
  BitVec s = syndrome(decoder.matrix(), readout.bits);
  if (s.size() != helper.payload.size())
    throw std::invalid_argument("syndrome_reproduce: helper length mismatch");
  for (std::size_t i = 0; i < s.size(); ++i) s[i] ^= helper.payload[i];
  const DecodeResult res = decoder.decode_syndrome(std::move(s), soft, max_iters);
  if (!res.converged) return std::nullopt;
  Response recovered;
  recovered.bits.resize(readout.size());
  for (std::size_t i = 0; i < readout.size(); ++i)
    recovered.bits[i] = readout.bits[i] ^ res.word[i];
  return recovered;
}

void write_instance_code(const InstanceCode& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("write_instance_code: cannot open " + path.string());
  out << "# pufsketch-instance-code v1\n";
  out << "# n " << code.n << '\n';
  out << "# k " << code.k << '\n';
  out << "# seed " << code.seed << '\n';
  out << "# shortfall " << (code.report.rank_shortfall ? 1 : 0) << '\n';
  out << "# provenance";
  for (const auto& [name, count] : code.provenance_counts)
    out << ' ' << name << '=' << count;
  out << '\n';
  write_matrix(code.H, out);
  if (!out)
    throw std::runtime_error("write_instance_code: write failed for " + path.string());
}

InstanceCode read_instance_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_instance_code: cannot open " + path.string());
  InstanceCode code;
  while (in >> std::ws, in.peek() == '#') {
    std::string line;
    std::getline(in, line);
    std::istringstream ls(line.substr(1));
    std::string key;
    ls >> key;
    if (key == "n")
      ls >> code.n;
    else if (key == "k")
      ls >> code.k;
    else if (key == "seed")
      ls >> code.seed;
    else if (key == "shortfall") {
      int v = 0;
      ls >> v;
      code.report.rank_shortfall = v != 0;
    } else if (key == "provenance") {
      std::string item;
      while (ls >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
          throw std::runtime_error("read_instance_code: malformed provenance");
        code.provenance_counts[item.substr(0, eq)] =
            std::stoull(item.substr(eq + 1));
      }
    }
    // Unknown keys are ignored for forward compatibility.
  }
  code.H = read_matrix(in);
  if (code.n == 0) code.n = code.H.n_cols;
  if (code.H.n_cols != code.n)
    throw std::runtime_error("read_instance_code: header/matrix width mismatch");
  const std::size_t rank = rank_gf2(code.H);
  if (code.n - rank != code.k)
    throw std::runtime_error("read_instance_code: stored k does not match the matrix");
  code.config.n = code.n;
  code.config.target_k = code.k;
  code.config.seed = code.seed;
  return code;
}

namespace {

std::string hex_encode(const BitVec& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  const std::size_t n_bytes = (bits.size() + 7) / 8;
  for (std::size_t byte = 0; byte < n_bytes; ++byte) {
    unsigned v = 0;
    for (std::size_t bit = 0; bit < 8; ++bit) {
      const std::size_t i = byte * 8 + bit;
      if (i < bits.size() && bits[i]) v |= 1u << bit;
    }
    out.push_back(digits[v >> 4]);
    out.push_back(digits[v & 0xf]);
  }
  return out;
}

BitVec hex_decode(const std::string& hex, std::size_t n_bits) {
  if (hex.size() != 2 * ((n_bits + 7) / 8))
    throw std::runtime_error("helper data: hex length mismatch");
  auto nibble = [](char ch) -> unsigned {
    if (ch >= '0' && ch <= '9') return static_cast<unsigned>(ch - '0');
    if (ch >= 'a' && ch <= 'f') return static_cast<unsigned>(ch - 'a' + 10);
    throw std::runtime_error("helper data: invalid hex digit");
  };
  BitVec bits(n_bits, 0);
  for (std::size_t i = 0; i < n_bits; ++i) {
    const unsigned byte = (nibble(hex[2 * (i / 8)]) << 4) | nibble(hex[2 * (i / 8) + 1]);
    bits[i] = static_cast<std::uint8_t>((byte >> (i % 8)) & 1u);
  }
  return bits;
}

}  // namespace

void write_helper_data(const HelperData& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_helper_data: cannot open " + path.string());
  out << (h.kind == HelperData::Kind::CodeOffset ? "code-offset" : "syndrome") << ' '
      << (h.code_ref.empty() ? "-" : h.code_ref) << ' ' << h.payload.size() << ' '
      << hex_encode(h.payload) << '\n';
}

HelperData read_helper_data(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_helper_data: cannot open " + path.string());
  std::string kind, ref, hex;
  std::size_t n_bits = 0;
  if (!(in >> kind >> ref >> n_bits >> hex))
    throw std::runtime_error("read_helper_data: malformed file");
  HelperData h;
  if (kind == "code-offset")
    h.kind = HelperData::Kind::CodeOffset;
  else if (kind == "syndrome")
    h.kind = HelperData::Kind::Syndrome;
  else
    throw std::runtime_error("read_helper_data: unknown kind '" + kind + "'");
  h.code_ref = ref;
  h.payload = hex_decode(hex, n_bits);
  return h;
}

}  // namespace pufsketch
