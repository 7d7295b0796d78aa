#include <random>

#include "doctest.h"
#include "frobkern/field.hpp"

using namespace fk;

namespace {

// Exact C(x, t) for small |x|, t via a falling factorial over t!.
__int128 exact_binom(std::int64_t x, int t) {
  __int128 num = 1, den = 1;
  for (int i = 0; i < t; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  for (int p : {2, 3, 5, 7, 11}) {
    const Field& f = Field::get(p);
    CHECK(f.q() == p);
    CHECK(f.degree() == 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == (a * b) % p);
        CHECK(f.sub(a, b) == ((a - b) % p + p) % p);
      }
    for (int a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == p - 1);
    CHECK(f.from_int(3 * p + 1) == 1 % p);
  }
}

TEST_CASE("extension fields satisfy the field axioms") {
  std::mt19937_64 rng(7);
  for (int q : {4, 8, 9, 25, 27, 49, 121}) {
    const Field& f = Field::get(q);
    std::uniform_int_distribution<int> d(0, q - 1);
    for (int t = 0; t < 400; ++t) {
      elem a = d(rng), b = d(rng), c = d(rng);
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      CHECK(f.inverse_frobenius(f.frobenius(a)) == a);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    // the multiplicative group has order q - 1 and some element generates it
    bool generator = false;
    for (int a = 1; a < q; ++a) {
      CHECK(f.pow(a, q - 1) == 1);
      int order = 1;
      for (elem x = a; x != 1; x = f.mul(x, a)) ++order;
      generator = generator || order == q - 1;
    }
    CHECK(generator);
    for (int a = 0; a < q; ++a) CHECK(f.in_prime_field(a) == (f.pow(a, f.p()) == a));
  }
}

TEST_CASE("digit encoding round trips") {
  const Field& f = Field::get(27);
  for (int a = 0; a < 27; ++a) CHECK(f.from_digits(f.digits(a)) == a);
}

TEST_CASE("unsupported sizes are rejected") {
  CHECK_THROWS_AS(Field::get(6), FieldError);
  CHECK_THROWS_AS(Field::get(512), FieldError);
  CHECK_THROWS_AS(Field::get(5).inv(0), FieldError);
}

TEST_CASE("binomials mod p agree with exact binomials") {
  for (int p : {3, 5, 7})
    for (std::int64_t x = -60; x <= 60; ++x)
      for (int t = 0; t <= 12; ++t) {
        __int128 e = exact_binom(x, t) % p;
        if (e < 0) e += p;
        CHECK(binom_mod_p(x, t, p) == static_cast<int>(e));
      }
}

TEST_CASE("integer helpers") {
  CHECK(valuation(75, 5) == 2);
  CHECK(valuation(-54, 3) == 3);
  CHECK(valuation(7, 5) == 0);
  CHECK_THROWS(valuation(0, 5));
  CHECK(ipow(5, 3) == 125);
  CHECK(mod_floor(-1, 5) == 4);
  CHECK(prime_power(49) == std::pair<int, int>{7, 2});
  CHECK(prime_power(12) == std::pair<int, int>{0, 0});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
