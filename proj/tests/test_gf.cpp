#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "pufsketch/gf.hpp"

using pufsketch::GaloisField;

namespace {

// Brute-force oracle: multiplicative order of a nonzero element.
unsigned element_order(const GaloisField& f, unsigned a) {
  unsigned x = a;
  unsigned order = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++order;
  }
  return order;
}

}  // namespace

TEST_CASE("GF(2) is the trivial table") {
  GaloisField f(2, 1);
  CHECK(f.size() == 2);
  CHECK(f.exp_table() == std::vector<unsigned>{1});
  CHECK(f.add(1, 1) == 0);
  CHECK(f.mul(1, 1) == 1);
}

TEST_CASE("GF(4) uses the unique irreducible quadratic") {
  // Oracle: a quadratic over GF(2) is irreducible iff it has no root; only
  // x^2 + x + 1 among the four monic candidates qualifies.
  int irreducible_count = 0;
  std::vector<unsigned> the_one;
  for (unsigned c1 = 0; c1 < 2; ++c1) {
    for (unsigned c0 = 0; c0 < 2; ++c0) {
      bool has_root = false;
      for (unsigned x = 0; x < 2; ++x)
        if (((x * x + c1 * x + c0) % 2) == 0) has_root = true;
      if (!has_root) {
        ++irreducible_count;
        the_one = {c0, c1, 1};
      }
    }
  }
  REQUIRE(irreducible_count == 1);
  REQUIRE(the_one == std::vector<unsigned>{1, 1, 1});

  GaloisField f(2, 2);
  CHECK(f.size() == 4);
  CHECK(f.modulus() == the_one);

  // x * 1 = x; x * x = x + 1 mod x^2+x+1; x is encoded as 2, x+1 as 3.
  CHECK(f.mul(2, 1) == 2);
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.inv(1) == 1);
  CHECK(f.mul(2, 3) == 1);  // x (x+1) = x^2 + x = 1
  CHECK(f.inv(2) == 3);
}

TEST_CASE("GF(3) picks 2 as primitive element") {
  GaloisField f(3, 1);
  CHECK(f.primitive_element() == 2);
  CHECK(f.exp_table() == std::vector<unsigned>{1, 2});
  CHECK(f.mul(2, 2) == 1);  // 4 mod 3
  CHECK(f.inv(2) == 2);
  CHECK(f.add(2, 2) == 1);
  CHECK(f.sub(0, 1) == 2);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(GaloisField(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(2, 17), std::invalid_argument);  // 2^17 > cap
  CHECK_THROWS_AS(GaloisField::from_order(12), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::from_order(1), std::invalid_argument);
  GaloisField f(2, 2);
  CHECK_THROWS_AS(f.mul(4, 1), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.log(0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    GaloisField f = GaloisField::from_order(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("nonzero elements satisfy a^(q-1) = 1") {
  for (unsigned q : {4u, 8u, 9u, 27u, 64u, 128u, 256u}) {
    GaloisField f = GaloisField::from_order(q);
    for (unsigned a = 1; a < q; ++a) CHECK(f.pow(a, q - 1) == 1);
  }
}

TEST_CASE("exp table enumerates the multiplicative group") {
  for (unsigned q : {4u, 9u, 16u, 25u, 64u}) {
    GaloisField f = GaloisField::from_order(q);
    std::set<unsigned> seen(f.exp_table().begin(), f.exp_table().end());
    CHECK(seen.size() == q - 1);
    CHECK(seen.count(0) == 0);
    for (unsigned i = 0; i < q - 1; ++i) CHECK(f.log(f.exp(i)) == i);
    // The chosen primitive element is the smallest one.
    const unsigned g = f.primitive_element();
    CHECK(element_order(f, g) == q - 1);
    for (unsigned a = 1; a < g; ++a) CHECK(element_order(f, a) < q - 1);
  }
}

TEST_CASE("construction is deterministic") {
  GaloisField a(2, 4);
  GaloisField b(2, 4);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.primitive_element() == b.primitive_element());
  CHECK(a.exp_table() == b.exp_table());
}
