#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pufsketch/sparse_matrix.hpp"

namespace pufsketch {

/// Per-position flip penalties. delta[i] is delta1 where all readouts agree
/// at position i and delta2 elsewhere (delta1 > delta2 > 0), or all zero in
/// single-readout mode.
struct SoftWeights {
  std::vector<double> delta;
  double delta1 = 0.0;
  double delta2 = 0.0;

  static SoftWeights uniform(std::size_t n) {
    return SoftWeights{std::vector<double>(n, 0.0), 0.0, 0.0};
  }
};

/// Requires at least two readouts of equal length and delta1 > delta2 > 0.
SoftWeights derive_soft(const std::vector<BitVec>& readouts, double delta1,
                        double delta2);

struct DecodeResult {
  BitVec word;
  bool converged = false;
  std::size_t iterations = 0;              // number of flips performed
  std::size_t final_syndrome_weight = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> trace;  // (flip, weight)
};

/// Hamming weight of H v.
std::size_t syndrome_weight(const SparseBinaryMatrix& H, const BitVec& v);

/// Iterative bitflip decoder: while the syndrome is nonzero, flip the
/// position j minimising eps_j = WT(r + u_j) + delta_j (lowest index on
/// ties). Terminates on syndrome weight zero, on the iteration cap, or when
/// a previously visited word recurs. One iteration costs O(#ones in H): the
/// weight change of each candidate flip is read off the current syndrome.
class BitflipDecoder {
 public:
  explicit BitflipDecoder(const SparseBinaryMatrix& H, bool record_trace = false);

  /// max_iters = 0 selects the default cap of one flip per code position.
  DecodeResult decode(const BitVec& r, const SoftWeights& soft,
                      std::size_t max_iters = 0) const;

  /// Same dynamics driven from a bare syndrome; the returned word is the
  /// estimated error pattern (all-zero start).
  DecodeResult decode_syndrome(BitVec synd, const SoftWeights& soft,
                               std::size_t max_iters = 0) const;

  const SparseBinaryMatrix& matrix() const { return *H_; }

 private:
  DecodeResult run(BitVec word, BitVec synd, const SoftWeights& soft,
                   std::size_t max_iters) const;

  const SparseBinaryMatrix* H_;
  std::vector<std::vector<std::uint32_t>> cols_;  // checks containing each position
  std::vector<std::uint64_t> flip_keys_;          // XOR word-hash keys
  bool record_trace_ = false;
};

DecodeResult bitflip_decode(const SparseBinaryMatrix& H, const BitVec& r,
                            const SoftWeights& soft, std::size_t max_iters = 0);

/// Decodes all m readouts with the shared soft weights; the first converged
/// result wins, otherwise the one with the smallest final syndrome weight.
DecodeResult reproduce_multi(const BitflipDecoder& decoder,
                             const std::vector<BitVec>& readouts, double delta1,
                             double delta2, std::size_t max_iters = 0);
DecodeResult reproduce_multi(const SparseBinaryMatrix& H,
                             const std::vector<BitVec>& readouts, double delta1,
                             double delta2, std::size_t max_iters = 0);

}  // namespace pufsketch
