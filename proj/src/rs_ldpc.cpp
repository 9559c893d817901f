#include "pufsketch/rs_ldpc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pufsketch {

RsBase build_rs_base(unsigned q, unsigned rho) {
  GaloisField field = GaloisField::from_order(q);
  if (rho <= 1 || rho >= q)
    throw std::invalid_argument("build_rs_base: need 1 < rho < q, got rho=" +
                                std::to_string(rho) + " q=" + std::to_string(q));

  // RS codewords are evaluations of polynomials of degree <= q-rho at
  // alpha^0..alpha^(q-2). The subcode vanishing on the first q-rho-1
  // positions, punctured there, is the shortened code: its codewords are
  // (a + b x) * h(x) evaluated at the kept points, where h collects the
  // enforced roots.
  const unsigned deleted = q - rho - 1;
  std::vector<unsigned> eval_points(rho);
  for (unsigned j = 0; j < rho; ++j) eval_points[j] = field.exp(deleted + j);
  std::vector<unsigned> h(rho, 1);
  for (unsigned j = 0; j < rho; ++j)
    for (unsigned i = 0; i < deleted; ++i)
      h[j] = field.mul(h[j], field.sub(eval_points[j], field.exp(i)));
  for (unsigned j = 0; j < rho; ++j)
    if (h[j] == 0) throw std::logic_error("build_rs_base: zero weight factor");

  auto codeword = [&](unsigned a, unsigned b) {
    std::vector<unsigned> c(rho);
    for (unsigned j = 0; j < rho; ++j)
      c[j] = field.mul(h[j], field.add(a, field.mul(b, eval_points[j])));
    return c;
  };

  std::vector<std::vector<unsigned>> all;
  all.reserve(static_cast<std::size_t>(q) * q);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) all.push_back(codeword(a, b));
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::logic_error("build_rs_base: codewords not distinct");

  std::vector<std::vector<unsigned>> generator{codeword(1, 0), codeword(0, 1)};
  RsBase base{std::move(field), rho, std::move(generator), {}, {}};

  // Smallest full-weight codeword; (a,b) = (1,0) guarantees one exists.
  for (const auto& c : all) {
    if (std::find(c.begin(), c.end(), 0u) == c.end()) {
      base.full_weight_codeword = c;
      break;
    }
  }

  std::set<std::vector<unsigned>> used;
  for (const auto& rep : all) {
    if (used.count(rep)) continue;
    std::vector<std::vector<unsigned>> coset;
    for (unsigned beta = 0; beta < q; ++beta) {
      std::vector<unsigned> member(rho);
      for (unsigned j = 0; j < rho; ++j)
        member[j] = base.field.add(rep[j],
                                   base.field.mul(beta, base.full_weight_codeword[j]));
      coset.push_back(std::move(member));
    }
    std::sort(coset.begin(), coset.end());
    for (const auto& member : coset)
      if (!used.insert(member).second)
        throw std::logic_error("build_rs_base: cosets overlap");
    base.cosets.push_back(std::move(coset));
  }
  if (base.cosets.size() != q) throw std::logic_error("build_rs_base: coset count");
  return base;
}

std::vector<std::uint32_t> z_expand(const std::vector<unsigned>& codeword,
                                    const GaloisField& field) {
  const unsigned q = field.size();
  std::vector<std::uint32_t> support;
  support.reserve(codeword.size());
  for (std::size_t j = 0; j < codeword.size(); ++j) {
    const unsigned symbol = codeword[j];
    if (symbol >= q) throw std::invalid_argument("z_expand: symbol out of range");
    const unsigned offset = symbol == 0 ? 0 : 1 + field.log(symbol);
    support.push_back(static_cast<std::uint32_t>(j * q + offset));
  }
  return support;
}

SparseBinaryMatrix build_rs_ldpc(const RsBase& base, unsigned gamma) {
  const unsigned q = base.q();
  if (gamma < 1 || gamma > q)
    throw std::invalid_argument("build_rs_ldpc: need 1 <= gamma <= q");
  SparseBinaryMatrix m(0, static_cast<std::size_t>(base.rho) * q);
  for (unsigned i = 0; i < gamma; ++i)
    for (const auto& cw : base.cosets[i]) m.append_row(z_expand(cw, base.field));
  return m;
}

}  // namespace pufsketch
