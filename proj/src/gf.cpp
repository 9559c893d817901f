#include "pufsketch/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pufsketch {
namespace {

constexpr unsigned kMaxFieldSize = 1u << 16;

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly decode_poly(unsigned enc, unsigned p) {
  Poly f;
  while (enc != 0) {
    f.push_back(enc % p);
    enc /= p;
  }
  return f;
}

unsigned encode_poly(const Poly& f, unsigned p) {
  unsigned enc = 0;
  for (std::size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
  return enc;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a modulo a monic divisor g.
Poly poly_rem(Poly a, const Poly& g, unsigned p) {
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dg;
      for (std::size_t i = 0; i < dg; ++i)
        a[shift + i] = (a[shift + i] + p - (lead * g[i]) % p) % p;
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t s = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= s; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly g = decode_poly(static_cast<unsigned>(enc), p);
      g.resize(d, 0);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

unsigned slow_mul(unsigned a, unsigned b, const Poly& modulus, unsigned p) {
  Poly prod = poly_mul(decode_poly(a, p), decode_poly(b, p), p);
  return encode_poly(poly_rem(std::move(prod), modulus, p), p);
}

}  // namespace

GaloisField::GaloisField(unsigned characteristic, unsigned degree)
    : p_(characteristic), s_(degree) {
  if (!is_prime(p_))
    throw std::invalid_argument("GaloisField: characteristic must be prime, got " +
                                std::to_string(p_));
  if (s_ < 1) throw std::invalid_argument("GaloisField: degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s_; ++i) {
    q *= p_;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("GaloisField: field size exceeds 2^16");
  }
  q_ = static_cast<unsigned>(q);

  // Smallest monic irreducible modulus of degree s.
  for (unsigned enc = 0; enc < q_; ++enc) {
    Poly f = decode_poly(enc, p_);
    f.resize(s_, 0);
    f.push_back(1);
    if (is_irreducible(f, p_)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("GaloisField: no modulus found");

  // Smallest primitive element, checked against the prime factors of q-1.
  const unsigned group = q_ - 1;
  std::vector<unsigned> factors;
  {
    unsigned m = group;
    for (unsigned d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);
  }
  auto pow_slow = [&](unsigned a, unsigned e) {
    unsigned r = 1;
    unsigned base = a;
    while (e != 0) {
      if (e & 1u) r = slow_mul(r, base, modulus_, p_);
      base = slow_mul(base, base, modulus_, p_);
      e >>= 1;
    }
    return r;
  };
  for (unsigned g = 1; g < q_; ++g) {
    bool primitive = true;
    for (unsigned f : factors) {
      if (pow_slow(g, group / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw std::logic_error("GaloisField: no primitive element");

  exp_.assign(group, 1);
  for (unsigned i = 1; i < group; ++i)
    exp_[i] = slow_mul(exp_[i - 1], primitive_, modulus_, p_);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  for (unsigned i = 0; i < group; ++i) {
    const unsigned v = exp_[i];
    if (v == 0 || seen[v]) throw std::logic_error("GaloisField: degenerate exp table");
    seen[v] = true;
    log_[v] = i;
  }
}

GaloisField GaloisField::from_order(unsigned q) {
  auto [p, s] = factor_prime_power(q);
  return GaloisField(p, s);
}

std::pair<unsigned, unsigned> GaloisField::factor_prime_power(unsigned q) {
  if (q < 2) throw std::invalid_argument("GaloisField: order must be >= 2");
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  unsigned s = 0;
  unsigned m = q;
  while (m % p == 0) {
    m /= p;
    ++s;
  }
  if (m != 1)
    throw std::invalid_argument("GaloisField: " + std::to_string(q) +
                                " is not a prime power");
  return {p, s};
}

void GaloisField::check_element(unsigned a) const {
  if (a >= q_)
    throw std::invalid_argument("GaloisField: element " + std::to_string(a) +
                                " out of range for GF(" + std::to_string(q_) + ")");
}

unsigned GaloisField::add(unsigned a, unsigned b) const {
  check_element(a);
  check_element(b);
  if (p_ == 2) return a ^ b;
  unsigned r = 0;
  unsigned scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

unsigned GaloisField::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned GaloisField::neg(unsigned a) const {
  check_element(a);
  if (p_ == 2) return a;
  unsigned r = 0;
  unsigned scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

unsigned GaloisField::mul(unsigned a, unsigned b) const {
  check_element(a);
  check_element(b);
  if (a == 0 || b == 0) return 0;
  const unsigned group = q_ - 1;
  return exp_[(log_[a] + log_[b]) % group];
}

unsigned GaloisField::inv(unsigned a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
  const unsigned group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

unsigned GaloisField::pow(unsigned a, std::uint64_t e) const {
  check_element(a);
  if (a == 0) return e == 0 ? 1u : 0u;
  const unsigned group = q_ - 1;
  const std::uint64_t idx = (static_cast<std::uint64_t>(log_[a]) * (e % group)) % group;
  return exp_[static_cast<unsigned>(idx)];
}

unsigned GaloisField::exp(unsigned i) const {
  if (i >= q_ - 1) throw std::invalid_argument("GaloisField: exponent out of range");
  return exp_[i];
}

unsigned GaloisField::log(unsigned a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("GaloisField: log of zero");
  return log_[a];
}

}  // namespace pufsketch
