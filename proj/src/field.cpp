#include "frobkern/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fk {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(std::int64_t q) {
  if (q < 2) return {0, 0};
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), k};
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int valuation(std::int64_t x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int binom_mod_p(std::int64_t x, std::int64_t t, int p) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  // C(x, t) mod p is periodic in x with period p^m once p^m > t.
  std::int64_t pm = p;
  while (pm <= t) pm *= p;
  std::int64_t n = mod_floor(x, pm);
  if (n < t) return 0;
  std::int64_t result = 1;
  while (t > 0) {
    int a = static_cast<int>(n % p), b = static_cast<int>(t % p);
    if (b > a) return 0;
    // small binomial via multiplicative formula mod p
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
      num = num * (a - i) % p;
      den = den * (i + 1) % p;
    }
    std::int64_t dinv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) dinv = dinv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * dinv % p) % p;
    n /= p;
    t /= p;
  }
  return static_cast<int>(result);
}

namespace {

using poly = std::vector<int>;

void trim(poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

poly poly_mod(poly a, const poly& m, int p) {
  trim(a);
  int lead_inv = 1;
  for (int i = 1; i < p; ++i)
    if (i * m.back() % p == 1) lead_inv = i;
  while (a.size() >= m.size()) {
    int c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<int>(mod_floor(a[shift + i] - c * m[i], p));
    trim(a);
  }
  return a;
}

bool irreducible(const poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  // trial division by all monic polynomials of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    std::int64_t count = ipow(p, d);
    for (std::int64_t code = 0; code < count; ++code) {
      poly g(d + 1);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

poly find_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  std::int64_t count = ipow(p, k);
  for (std::int64_t code = 0; code < count; ++code) {
    poly f(k + 1);
    std::int64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace

Field::Field(int q) : q_(q) {
  auto [p, k] = prime_power(q);
  if (p == 0 || q > 256) throw FieldError("unsupported field size " + std::to_string(q));
  p_ = p;
  k_ = k;
  modulus_ = find_irreducible(p, k);
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  frob_.assign(q, 0);
  std::vector<poly> el(q);
  for (int a = 0; a < q; ++a) el[a] = digits(static_cast<elem>(a));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (el[a][i] + el[b][i]) % p;
      add_[a * q + b] = from_digits(s);
      poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + el[a][i] * el[b][j]) % p;
      poly r = k == 1 ? prod : poly_mod(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q + b] = from_digits(r);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<elem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<elem>(b);
    }
    frob_[a] = pow(static_cast<elem>(a), static_cast<std::uint64_t>(p));
  }
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  return *it->second;
}

elem Field::inv(elem a) const {
  if (a == 0) throw FieldError("division by zero");
  return inv_[a];
}

elem Field::pow(elem a, std::uint64_t e) const {
  elem r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

elem Field::inverse_frobenius(elem a) const {
  elem r = a;
  for (int i = 1; i < k_; ++i) r = frob_[r];
  return r;
}

elem Field::from_int(std::int64_t v) const { return static_cast<elem>(mod_floor(v, p_)); }

std::vector<int> Field::digits(elem a) const {
  std::vector<int> d(k_);
  int v = a;
  for (int i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

elem Field::from_digits(const std::vector<int>& d) const {
  int v = 0;
  for (int i = k_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
  return static_cast<elem>(v);
}

}  // namespace fk
