#pragma once

#include <cstdint>
#include <vector>

#include "pufsketch/gf.hpp"
#include "pufsketch/sparse_matrix.hpp"

namespace pufsketch {

/// Shortened Reed-Solomon base code C_b(rho, 2, rho-1) over GF(q), obtained
/// from the RS code C(q-1, q-rho+1, rho-1) by deleting the first q-rho-1
/// information symbols, together with its partition into q cosets of the
/// scalar multiples of a fixed full-weight codeword.
struct RsBase {
  GaloisField field;
  unsigned rho = 0;
  std::vector<std::vector<unsigned>> generator;            // 2 x rho
  std::vector<unsigned> full_weight_codeword;              // coset-defining c
  std::vector<std::vector<std::vector<unsigned>>> cosets;  // q x q x rho

  unsigned q() const { return field.size(); }
};

/// Requires q a prime power and 1 < rho < q. The full-weight codeword is the
/// lexicographically smallest one and cosets are listed by their smallest
/// member, so the first coset is {beta * c}; construction is deterministic.
RsBase build_rs_base(unsigned q, unsigned rho);

/// Location-vector expansion: each symbol becomes a one-hot block of length
/// q under the element ordering (0, alpha^0, ..., alpha^(q-2)). Returns the
/// support of the resulting binary vector of length len(codeword) * q.
std::vector<std::uint32_t> z_expand(const std::vector<unsigned>& codeword,
                                    const GaloisField& field);

/// Stacks the z-expanded cosets A_1..A_gamma into a (gamma q) x (rho q)
/// parity-check matrix with row weight rho and column weight gamma.
SparseBinaryMatrix build_rs_ldpc(const RsBase& base, unsigned gamma);

}  // namespace pufsketch
