#include "pufsketch/decoder.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "pufsketch/rng.hpp"

namespace pufsketch {

SoftWeights derive_soft(const std::vector<BitVec>& readouts, double delta1,
                        double delta2) {
  if (readouts.size() < 2)
    throw std::invalid_argument("derive_soft: need at least two readouts");
  if (!(delta1 > delta2 && delta2 > 0.0))
    throw std::invalid_argument("derive_soft: need delta1 > delta2 > 0");
  const std::size_t n = readouts.front().size();
  for (const auto& r : readouts)
    if (r.size() != n) throw std::invalid_argument("derive_soft: length mismatch");

  SoftWeights soft{std::vector<double>(n, delta2), delta1, delta2};
  for (std::size_t i = 0; i < n; ++i) {
    bool agree = true;
    for (std::size_t j = 1; j < readouts.size() && agree; ++j)
      agree = readouts[j][i] == readouts[0][i];
    if (agree) soft.delta[i] = delta1;
  }
  return soft;
}

std::size_t syndrome_weight(const SparseBinaryMatrix& H, const BitVec& v) {
  std::size_t w = 0;
  for (std::uint8_t b : syndrome(H, v)) w += b;
  return w;
}

BitflipDecoder::BitflipDecoder(const SparseBinaryMatrix& H, bool record_trace)
    : H_(&H), cols_(H.n_cols), flip_keys_(H.n_cols), record_trace_(record_trace) {
  for (std::size_t r = 0; r < H.n_rows; ++r)
    for (std::uint32_t c : H.rows[r]) cols_[c].push_back(static_cast<std::uint32_t>(r));
  for (std::size_t i = 0; i < H.n_cols; ++i) flip_keys_[i] = mix64(i + 1);
}

DecodeResult BitflipDecoder::decode(const BitVec& r, const SoftWeights& soft,
                                    std::size_t max_iters) const {
  if (r.size() != H_->n_cols)
    throw std::invalid_argument("BitflipDecoder: word length mismatch");
  return run(r, syndrome(*H_, r), soft, max_iters);
}

DecodeResult BitflipDecoder::decode_syndrome(BitVec synd, const SoftWeights& soft,
                                             std::size_t max_iters) const {
  if (synd.size() != H_->n_rows)
    throw std::invalid_argument("BitflipDecoder: syndrome length mismatch");
  return run(BitVec(H_->n_cols, 0), std::move(synd), soft, max_iters);
}

DecodeResult BitflipDecoder::run(BitVec word, BitVec synd, const SoftWeights& soft,
                                 std::size_t max_iters) const {
  const std::size_t n = H_->n_cols;
  if (soft.delta.size() != n)
    throw std::invalid_argument("BitflipDecoder: soft weight length mismatch");
  if (max_iters == 0) max_iters = n > 0 ? n : 1;

  long long w = 0;
  for (std::uint8_t b : synd) w += b;

  DecodeResult res;
  res.word = std::move(word);
  res.final_syndrome_weight = static_cast<std::size_t>(w);
  if (w == 0) {
    res.converged = true;
    return res;
  }

  // XOR-linear word hash for cycle detection; states repeat exactly when
  // their hashes do up to 64-bit collisions.
  std::uint64_t state = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (res.word[i]) state ^= flip_keys_[i];
  std::unordered_set<std::uint64_t> seen{state};

  std::vector<long long> gain(n);
  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    // WT(r + u_i) = w + gain[i]: flipping i toggles exactly the checks
    // containing i.
    std::size_t best = 0;
    double best_eps = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      long long g = 0;
      for (std::uint32_t c : cols_[i]) g += synd[c] ? -1 : 1;
      gain[i] = g;
      const double eps = static_cast<double>(w + g) + soft.delta[i];
      if (eps < best_eps) {
        best_eps = eps;
        best = i;
      }
    }

    res.word[best] ^= 1u;
    for (std::uint32_t c : cols_[best]) synd[c] ^= 1u;
    w += gain[best];
    res.iterations = iter;
    if (record_trace_)
      res.trace.emplace_back(static_cast<std::uint32_t>(best),
                             static_cast<std::size_t>(w));
    if (w == 0) {
      res.converged = true;
      break;
    }
    state ^= flip_keys_[best];
    if (!seen.insert(state).second) break;  // revisited word, would cycle
  }
  res.final_syndrome_weight = static_cast<std::size_t>(w);
  return res;
}

DecodeResult bitflip_decode(const SparseBinaryMatrix& H, const BitVec& r,
                            const SoftWeights& soft, std::size_t max_iters) {
  return BitflipDecoder(H).decode(r, soft, max_iters);
}

DecodeResult reproduce_multi(const BitflipDecoder& decoder,
                             const std::vector<BitVec>& readouts, double delta1,
                             double delta2, std::size_t max_iters) {
  const SoftWeights soft = derive_soft(readouts, delta1, delta2);
  DecodeResult best;
  bool have_best = false;
  for (const auto& r : readouts) {
    DecodeResult res = decoder.decode(r, soft, max_iters);
    if (res.converged) return res;
    if (!have_best || res.final_syndrome_weight < best.final_syndrome_weight) {
      best = std::move(res);
      have_best = true;
    }
  }
  return best;
}

DecodeResult reproduce_multi(const SparseBinaryMatrix& H,
                             const std::vector<BitVec>& readouts, double delta1,
                             double delta2, std::size_t max_iters) {
  return reproduce_multi(BitflipDecoder(H), readouts, delta1, delta2, max_iters);
}

}  // namespace pufsketch
