#include <doctest.h>

#include <stdexcept>

#include "pufsketch/decoder.hpp"
#include "pufsketch/geometry.hpp"
#include "pufsketch/rng.hpp"

using namespace pufsketch;

namespace {

SparseBinaryMatrix eg24_matrix() { return incidence_matrix(build_eg(2, 4)); }

BitVec unit(std::size_t n, std::size_t i) {
  BitVec v(n, 0);
  v[i] = 1;
  return v;
}

BitVec random_word(std::size_t n, Rng& rng) {
  BitVec v(n);
  for (auto& b : v) b = rng.next() & 1u;
  return v;
}

}  // namespace

TEST_CASE("syndrome weight") {
  const auto H = eg24_matrix();
  CHECK(syndrome_weight(H, BitVec(16, 0)) == 0);
  // A single error trips exactly the gamma = 5 lines through that point.
  for (std::size_t i = 0; i < 16; ++i) CHECK(syndrome_weight(H, unit(16, i)) == 5);

  SparseBinaryMatrix small(0, 4);
  small.append_row({0, 1});
  small.append_row({0, 2});
  small.append_row({0, 3});
  small.append_row({1, 2});
  small.append_row({1, 3});
  small.append_row({2, 3});
  CHECK(syndrome_weight(small, BitVec{1, 0, 0, 0}) == 3);

  // Invariance under codeword offset: all-ones is a codeword of `small`.
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    BitVec v = random_word(4, rng);
    BitVec shifted = v;
    for (auto& b : shifted) b ^= 1u;
    CHECK(syndrome_weight(small, v) == syndrome_weight(small, shifted));
  }
}

TEST_CASE("soft weights from readout agreement") {
  const BitVec a{1, 0, 1, 1};
  SUBCASE("identical readouts give delta1 everywhere") {
    const auto soft = derive_soft({a, a, a}, 10, 6);
    CHECK(soft.delta == std::vector<double>{10, 10, 10, 10});
  }
  SUBCASE("a single disagreeing position gets delta2") {
    BitVec b = a;
    b[3] ^= 1u;
    const auto soft = derive_soft({a, a, b}, 10, 6);
    CHECK(soft.delta == std::vector<double>{10, 10, 10, 6});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(derive_soft({a}, 10, 6), std::invalid_argument);
    CHECK_THROWS_AS(derive_soft({a, a}, 6, 10), std::invalid_argument);
    CHECK_THROWS_AS(derive_soft({a, a}, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(derive_soft({a, BitVec{1, 0}}, 10, 6), std::invalid_argument);
  }
}

TEST_CASE("codewords decode in zero iterations") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  const auto res = dec.decode(BitVec(16, 0), SoftWeights::uniform(16));
  CHECK(res.converged);
  CHECK(res.iterations == 0);
  CHECK(res.word == BitVec(16, 0));
}

TEST_CASE("full EG(2,4) code corrects every single-bit error in one flip") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  const auto uni = SoftWeights::uniform(16);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto res = dec.decode(unit(16, i), uni);
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.word == BitVec(16, 0));
  }
}

TEST_CASE("weight-2 exhaustive success count is pinned") {
  // Regression constant from the exhaustive sweep over all C(16,2) = 120
  // patterns on the full EG(2,4) code.
  constexpr int kPinnedCorrected = 120;
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  const auto uni = SoftWeights::uniform(16);
  int corrected = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = i + 1; j < 16; ++j) {
      BitVec r(16, 0);
      r[i] = r[j] = 1;
      const auto res = dec.decode(r, uni);
      if (res.converged && res.word == BitVec(16, 0)) ++corrected;
    }
  }
  CHECK(corrected == kPinnedCorrected);
}

TEST_CASE("converged results are codewords and traces match the dynamics") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H, /*record_trace=*/true);
  const auto uni = SoftWeights::uniform(16);
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    const BitVec r = random_word(16, rng);
    const auto res = dec.decode(r, uni);
    if (res.converged) {
      CHECK(syndrome_weight(H, res.word) == 0);
      CHECK(res.final_syndrome_weight == 0);
    } else {
      CHECK(res.final_syndrome_weight == syndrome_weight(H, res.word));
    }
    // The first recorded flip must be the argmin of eps over all positions.
    if (!res.trace.empty()) {
      const std::uint32_t flipped = res.trace.front().first;
      BitVec probe = r;
      probe[flipped] ^= 1u;
      const std::size_t w_flipped = syndrome_weight(H, probe);
      for (std::size_t i = 0; i < 16; ++i) {
        BitVec other = r;
        other[i] ^= 1u;
        CHECK(w_flipped <= syndrome_weight(H, other));
      }
      CHECK(res.trace.front().second == w_flipped);
    }
  }
}

TEST_CASE("uniform decoding commutes with codeword translation") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  const auto uni = SoftWeights::uniform(16);
  const auto codewords = null_space_basis(H);
  REQUIRE(!codewords.empty());
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const BitVec r = random_word(16, rng);
    const BitVec& c = codewords[rng.below(codewords.size())];
    BitVec shifted = r;
    for (std::size_t i = 0; i < 16; ++i) shifted[i] ^= c[i];
    const auto res_a = dec.decode(r, uni);
    const auto res_b = dec.decode(shifted, uni);
    CHECK(res_a.converged == res_b.converged);
    CHECK(res_a.iterations == res_b.iterations);
    BitVec expected = res_a.word;
    for (std::size_t i = 0; i < 16; ++i) expected[i] ^= c[i];
    CHECK(res_b.word == expected);
  }
}

TEST_CASE("syndrome-domain decoding recovers the error pattern") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  const auto uni = SoftWeights::uniform(16);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto res = dec.decode_syndrome(syndrome(H, unit(16, i)), uni);
    CHECK(res.converged);
    CHECK(res.word == unit(16, i));
  }
  CHECK_THROWS_AS(dec.decode_syndrome(BitVec(3, 0), uni), std::invalid_argument);
}

TEST_CASE("decode rejects mismatched inputs and caps iterations") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);
  CHECK_THROWS_AS(dec.decode(BitVec(5, 0), SoftWeights::uniform(16)),
                  std::invalid_argument);
  CHECK_THROWS_AS(dec.decode(BitVec(16, 0), SoftWeights::uniform(4)),
                  std::invalid_argument);
  // Non-convergence is a result state, not an error: cap at one iteration.
  Rng rng(3);
  int nonconverged = 0;
  for (int t = 0; t < 50; ++t) {
    const auto res = dec.decode(random_word(16, rng), SoftWeights::uniform(16), 1);
    CHECK(res.iterations <= 1);
    if (!res.converged) ++nonconverged;
  }
  CHECK(nonconverged > 0);
}

TEST_CASE("multi-readout reproduction") {
  const auto H = eg24_matrix();
  const BitflipDecoder dec(H);

  SUBCASE("error-free readouts return the first readout unchanged") {
    const std::vector<BitVec> readouts(3, BitVec(16, 0));
    const auto res = reproduce_multi(dec, readouts, 10, 6);
    CHECK(res.converged);
    CHECK(res.iterations == 0);
    CHECK(res.word == BitVec(16, 0));
  }

  SUBCASE("length mismatch and single readout are rejected") {
    CHECK_THROWS_AS(reproduce_multi(dec, {BitVec(16, 0), BitVec(4, 0)}, 10, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(reproduce_multi(dec, {BitVec(16, 0)}, 10, 6),
                    std::invalid_argument);
  }

  SUBCASE("three readouts beat one at equal crossover probability") {
    // Seeded Monte Carlo at p = 0.05; the acceptance suite runs the full
    // 10^4-trial comparison, this is a lighter regression check.
    const double p = 0.05;
    const int trials = 2000;
    int single_fail = 0, multi_fail = 0;
    const auto uni = SoftWeights::uniform(16);
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::substream(99, 0, static_cast<std::uint64_t>(t));
      std::vector<BitVec> readouts;
      for (int j = 0; j < 3; ++j) {
        BitVec r(16, 0);
        for (auto& b : r)
          if (rng.uniform01() < p) b ^= 1u;
        readouts.push_back(std::move(r));
      }
      const auto single = dec.decode(readouts[0], uni);
      if (!single.converged || single.word != BitVec(16, 0)) ++single_fail;
      const auto multi = reproduce_multi(dec, readouts, 10, 6);
      if (!multi.converged || multi.word != BitVec(16, 0)) ++multi_fail;
    }
    CHECK(multi_fail < single_fail);
  }
}
