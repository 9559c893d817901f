#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pufsketch/rs_ldpc.hpp"

using namespace pufsketch;

namespace {

std::size_t weight(const std::vector<unsigned>& cw) {
  std::size_t w = 0;
  for (unsigned s : cw) w += s != 0;
  return w;
}

std::set<std::vector<unsigned>> all_members(const RsBase& base) {
  std::set<std::vector<unsigned>> all;
  for (const auto& coset : base.cosets)
    for (const auto& cw : coset) all.insert(cw);
  return all;
}

}  // namespace

TEST_CASE("shortened base code over GF(4), rho = 3") {
  const RsBase base = build_rs_base(4, 3);
  CHECK(base.q() == 4);
  CHECK(base.rho == 3);
  REQUIRE(base.cosets.size() == 4);
  for (const auto& coset : base.cosets) CHECK(coset.size() == 4);
  // The cosets partition all 16 codewords.
  CHECK(all_members(base).size() == 16);

  // Dimension 2: the code is closed under addition of the two generators.
  const auto& g = base.generator;
  REQUIRE(g.size() == 2);
  const auto members = all_members(base);
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      std::vector<unsigned> cw(3);
      for (unsigned j = 0; j < 3; ++j)
        cw[j] = base.field.add(base.field.mul(a, g[0][j]), base.field.mul(b, g[1][j]));
      CHECK(members.count(cw) == 1);
    }
  }

  // Minimum distance rho - 1: every nonzero codeword has weight >= 2.
  for (const auto& cw : members) {
    if (weight(cw) == 0) continue;
    CHECK(weight(cw) >= 2);
  }

  // First coset is the scalar line through the full-weight codeword.
  CHECK(weight(base.full_weight_codeword) == 3);
  std::set<std::vector<unsigned>> scalar_line;
  for (unsigned beta = 0; beta < 4; ++beta) {
    std::vector<unsigned> cw(3);
    for (unsigned j = 0; j < 3; ++j)
      cw[j] = base.field.mul(beta, base.full_weight_codeword[j]);
    scalar_line.insert(cw);
  }
  const std::set<std::vector<unsigned>> first(base.cosets[0].begin(),
                                              base.cosets[0].end());
  CHECK(first == scalar_line);
}

TEST_CASE("rho = 2 base code still partitions into q cosets") {
  const RsBase base = build_rs_base(4, 2);
  CHECK(base.cosets.size() == 4);
  CHECK(all_members(base).size() == 16);
  for (const auto& coset : base.cosets) CHECK(coset.size() == 4);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_rs_base(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_rs_base(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_rs_base(6, 2), std::invalid_argument);  // not a prime power
  const RsBase base = build_rs_base(4, 3);
  CHECK_THROWS_AS(build_rs_ldpc(base, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_rs_ldpc(base, 5), std::invalid_argument);
}

TEST_CASE("location-vector expansion") {
  const GaloisField f = GaloisField::from_order(4);
  // Zero symbols map to index 0 of each length-q block.
  CHECK(z_expand({0, 0, 0}, f) == std::vector<std::uint32_t>{0, 4, 8});
  // (alpha^0, alpha^1) lands at offsets 1 and 2 of its blocks.
  CHECK(z_expand({f.exp(0), f.exp(1)}, f) == std::vector<std::uint32_t>{1, 6});
  // One 1 per block, always.
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) CHECK(z_expand({a, b}, f).size() == 2);
  CHECK_THROWS_AS(z_expand({9}, f), std::invalid_argument);
}

TEST_CASE("stacked cosets form a regular parity-check matrix") {
  const RsBase base = build_rs_base(4, 3);
  {
    const auto h = build_rs_ldpc(base, 2);
    CHECK(h.n_rows == 8);
    CHECK(h.n_cols == 12);
    for (const auto& row : h.rows) CHECK(row.size() == 3);
    for (std::size_t w : h.col_weights()) CHECK(w == 2);
    // Any two rows share at most one position: checked pairwise.
    for (std::size_t i = 0; i < h.n_rows; ++i) {
      for (std::size_t j = i + 1; j < h.n_rows; ++j) {
        std::vector<std::uint32_t> common;
        std::set_intersection(h.rows[i].begin(), h.rows[i].end(), h.rows[j].begin(),
                              h.rows[j].end(), std::back_inserter(common));
        CHECK(common.size() <= 1);
      }
    }
    CHECK(check_regular(h).regular());
  }
  {
    // gamma = 1 is the first coset alone.
    const auto h = build_rs_ldpc(base, 1);
    CHECK(h.n_rows == 4);
    CHECK(h.n_cols == 12);
    for (std::size_t r = 0; r < 4; ++r)
      CHECK(h.rows[r] == z_expand(base.cosets[0][r], base.field));
  }
}

TEST_CASE("full stacks are regular for every small field") {
  for (unsigned q : {3u, 4u, 5u, 7u, 8u}) {
    for (unsigned rho = 2; rho < q; ++rho) {
      const RsBase base = build_rs_base(q, rho);
      const auto h = build_rs_ldpc(base, q);
      const auto rep = check_regular(h);
      CHECK(rep.regular());
      CHECK(rep.rho == rho);
      CHECK(rep.gamma == q);
    }
  }
}

TEST_CASE("construction is deterministic") {
  const RsBase a = build_rs_base(8, 3);
  const RsBase b = build_rs_base(8, 3);
  CHECK(a.full_weight_codeword == b.full_weight_codeword);
  CHECK(a.cosets == b.cosets);
}
