#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fk {

using elem = std::uint8_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GF(q) for a prime power q <= 256, elements encoded as base-p digit strings
// of their coordinates in the polynomial basis 1, t, ..., t^{k-1}.
class Field {
 public:
  // Cached per q; the returned reference lives for the whole program.
  static const Field& get(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }
  // Monic defining polynomial, low coefficient first (size k+1). {0,1} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  elem add(elem a, elem b) const { return add_[a * q_ + b]; }
  elem sub(elem a, elem b) const { return add_[a * q_ + neg_[b]]; }
  elem mul(elem a, elem b) const { return mul_[a * q_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem inv(elem a) const;
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, std::uint64_t e) const;
  elem frobenius(elem a) const { return frob_[a]; }
  elem inverse_frobenius(elem a) const;

  // Image of an integer in the prime subfield.
  elem from_int(std::int64_t v) const;
  // Coordinates in the polynomial basis.
  std::vector<int> digits(elem a) const;
  elem from_digits(const std::vector<int>& d) const;
  bool in_prime_field(elem a) const { return a < p_; }

  const elem* add_row(elem a) const { return &add_[a * q_]; }
  const elem* mul_row(elem a) const { return &mul_[a * q_]; }

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  explicit Field(int q);

  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<elem> add_, mul_, neg_, inv_, frob_;
};

bool is_prime(std::int64_t n);
// Returns {p, k} with q = p^k, or {0, 0} if q is not a prime power.
std::pair<int, int> prime_power(std::int64_t q);
std::int64_t ipow(std::int64_t b, int e);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
// p-adic valuation of a nonzero integer.
int valuation(std::int64_t x, std::int64_t p);
// Binomial coefficient C(x, t) mod p for any integer x and t >= 0 (Lucas).
int binom_mod_p(std::int64_t x, std::int64_t t, int p);

}  // namespace fk
