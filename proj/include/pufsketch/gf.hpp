#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pufsketch {

/// Table-based arithmetic for GF(p^s), p prime, p^s <= 2^16.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients of the residue polynomial, lowest degree
/// first (plain bit packing for p = 2). Construction is deterministic:
/// the modulus is the monic irreducible polynomial of degree s with the
/// smallest encoding, and the primitive element is the smallest generator
/// of the multiplicative group. Instances are immutable after construction
/// and safe to share across threads.
class GaloisField {
 public:
  GaloisField(unsigned characteristic, unsigned degree);

  /// Builds GF(q) after factoring q = p^s; throws if q is not a prime power.
  static GaloisField from_order(unsigned q);

  /// Returns (p, s) with q = p^s, or throws std::invalid_argument.
  static std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return s_; }

  /// Modulus coefficients, lowest degree first; size degree()+1, monic.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  unsigned primitive_element() const { return primitive_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;  // throws std::domain_error for a = 0
  unsigned pow(unsigned a, std::uint64_t e) const;

  /// alpha^i for 0 <= i < q-1.
  unsigned exp(unsigned i) const;
  /// Discrete log base alpha; throws std::domain_error for a = 0.
  unsigned log(unsigned a) const;

  const std::vector<unsigned>& exp_table() const { return exp_; }
  const std::vector<unsigned>& log_table() const { return log_; }

 private:
  void check_element(unsigned a) const;

  unsigned p_ = 0;
  unsigned s_ = 0;
  unsigned q_ = 0;
  unsigned primitive_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> exp_;  // q-1 entries, exp_[i] = alpha^i
  std::vector<unsigned> log_;  // q entries, log_[0] unused
};

}  // namespace pufsketch
