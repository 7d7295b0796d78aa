#include "frobkern/radical.hpp"

#include <random>
#include <stdexcept>

namespace fk {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

// ---- polynomials over F_q, low degree first ----

using Poly = std::vector<elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const Field& f) {
  trim(a);
  const elem lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    elem c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, const Field& f) {
  Poly r{1};
  base = poly_mod(base, m, f);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, f), m, f);
    base = poly_mod(poly_mul(base, base, f), m, f);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---- Galois ring GR(p^m, k) = (Z/p^m)[t]/(lift of the field modulus) ----

struct GaloisRing {
  std::int64_t p, mod;
  int k;
  std::vector<std::int64_t> modulus;  // monic, low degree first, size k+1

  using El = std::vector<std::int64_t>;

  El mul(const El& a, const El& b) const {
    std::vector<std::int64_t> c(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % mod;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
      std::int64_t v = c[d];
      if (!v) continue;
      for (int j = 0; j < k; ++j) c[d - k + j] = ((c[d - k + j] - v * modulus[j]) % mod + mod) % mod;
      c[d] = 0;
    }
    c.resize(k);
    return c;
  }
};

using GRMatrix = std::vector<GaloisRing::El>;  // row-major n*n

GRMatrix gr_mul(const GaloisRing& r, const GRMatrix& a, const GRMatrix& b, std::size_t n) {
  GRMatrix c(n * n, GaloisRing::El(r.k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const auto& x = a[i * n + l];
      bool zero = true;
      for (auto v : x)
        if (v) zero = false;
      if (zero) continue;
      for (std::size_t j = 0; j < n; ++j) {
        auto prod = r.mul(x, b[l * n + j]);
        auto& dst = c[i * n + j];
        for (int t = 0; t < r.k; ++t) dst[t] = (dst[t] + prod[t]) % r.mod;
      }
    }
  return c;
}

// g_i(x) = Tr(lift(x)^{p^i}) / p^i mod p, as a field element.
elem trace_form(const Field& f, const FpMatrix& x, int i) {
  const std::size_t n = x.rows();
  GaloisRing r{f.p(), ipow(f.p(), i + 1), f.degree(), {}};
  for (int c : f.modulus()) r.modulus.push_back(c);
  GRMatrix a(n * n), acc;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto d = f.digits(x(s, t));
      a[s * n + t] = GaloisRing::El(d.begin(), d.end());
    }
  for (int j = 0; j < i; ++j) {
    acc = a;
    for (int e = 1; e < f.p(); ++e) acc = gr_mul(r, acc, a, n);
    a = std::move(acc);
  }
  GaloisRing::El tr(r.k, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (int t = 0; t < r.k; ++t) tr[t] = (tr[t] + a[s * n + s][t]) % r.mod;
  const std::int64_t pi = ipow(f.p(), i);
  std::vector<int> dig(r.k);
  for (int t = 0; t < r.k; ++t) {
    if (tr[t] % pi != 0) throw std::logic_error("trace form not divisible by p^i");
    dig[t] = static_cast<int>((tr[t] / pi) % f.p());
  }
  return f.from_digits(dig);
}

std::vector<elem> flatten(const FpMatrix& m) { return m.data(); }

FpMatrix combine(const std::vector<FpMatrix>& basis, const std::vector<elem>& c) {
  const Field& f = basis[0].field();
  FpMatrix m(f, basis[0].rows(), basis[0].cols());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (c[j])
      for (std::size_t i = 0; i < m.rows(); ++i) axpy(f, m.row(i), basis[j].row(i), c[j], m.cols());
  return m;
}

}  // namespace

bool is_irreducible(const Field& f, const std::vector<elem>& poly) {
  Poly g = poly;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t d = g.size() - 1;
  if (d == 1) return true;
  Poly x{0, 1}, h = x;
  for (std::size_t i = 1; 2 * i <= d; ++i) {
    h = poly_powmod(h, static_cast<std::uint64_t>(f.q()), g, f);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = f.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(g, diff, f).size() > 1) return false;
  }
  return true;
}

std::vector<std::vector<elem>> jacobson_radical(const std::vector<FpMatrix>& basis) {
  if (basis.empty()) return {};
  const Field& f = basis[0].field();
  const std::size_t m = basis.size(), n = basis[0].rows();
  int l = 0;
  while (ipow(f.p(), l + 1) <= static_cast<std::int64_t>(n)) ++l;
  std::vector<std::vector<elem>> ideal;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<elem> e(m, 0);
    e[j] = 1;
    ideal.push_back(e);
  }
  for (int i = 0; i <= l && !ideal.empty(); ++i) {
    const std::size_t s = ideal.size();
    FpMatrix psi(f, m, s);
    for (std::size_t j = 0; j < s; ++j) {
      FpMatrix a = combine(basis, ideal[j]);
      for (std::size_t b = 0; b < m; ++b) {
        elem v = trace_form(f, a * basis[b], i);
        for (int t = 0; t < i; ++t) v = f.inverse_frobenius(v);
        psi(b, j) = v;
      }
    }
    FpMatrix ker = psi.nullspace();
    std::vector<std::vector<elem>> next;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<elem> v(m, 0);
      for (std::size_t j = 0; j < s; ++j)
        if (ker(j, c))
          for (std::size_t t = 0; t < m; ++t) v[t] = f.add(v[t], f.mul(ker(j, c), ideal[j][t]));
      next.push_back(v);
    }
    ideal = std::move(next);
  }
  return ideal;
}

std::optional<FpMatrix> fitting_idempotent(const FpMatrix& x) {
  const Field& f = x.field();
  const std::size_t n = x.rows();
  FpMatrix y = x.power(static_cast<unsigned>(n));
  FpMatrix t = y.transpose();
  auto piv = t.rref_in_place();
  const std::size_t r = piv.size();
  if (r == 0 || r == n) return std::nullopt;
  FpMatrix im(f, n, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i) im(i, k) = t(k, i);
  FpMatrix q = hstack({im, y.nullspace()});
  FpMatrix d(f, n, n);
  for (std::size_t k = 0; k < r; ++k) d(k, k) = 1;
  return q * d * q.inverse();
}

LocalityCertificate analyze_local(const std::vector<FpMatrix>& basis, std::uint64_t seed,
                                  std::size_t exhaustive_bound) {
  LocalityCertificate cert;
  if (basis.empty()) {
    cert.detail = "empty algebra";
    return cert;
  }
  const Field& f = basis[0].field();
  const std::size_t m = basis.size(), n = basis[0].rows();
  cert.algebra_dim = m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, f.q() - 1);
  auto random_coords = [&](std::size_t len) {
    std::vector<elem> c(len);
    for (auto& x : c) x = static_cast<elem>(dist(rng));
    return c;
  };

  TrackedEchelon ecoords(f, n * n, m);
  for (auto& b : basis)
    if (ecoords.add_or_express(flatten(b))) throw std::invalid_argument("algebra basis is not independent");
  auto coords_of = [&](const FpMatrix& x) { return ecoords.express(flatten(x)); };

  auto search_idempotent = [&]() -> std::optional<FpMatrix> {
    auto try_element = [&](const FpMatrix& x) -> std::optional<FpMatrix> {
      for (int c = 0; c < f.q(); ++c) {
        FpMatrix y = x - FpMatrix::identity(f, n).scaled(static_cast<elem>(c));
        auto e = fitting_idempotent(y);
        if (e && *e * *e == *e && coords_of(*e)) return e;
      }
      return std::nullopt;
    };
    for (int t = 0; t < 64; ++t)
      if (auto e = try_element(combine(basis, random_coords(m)))) return e;
    double total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= f.q();
    if (total <= static_cast<double>(exhaustive_bound)) {
      std::vector<elem> c(m, 0);
      for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(total); ++code) {
        std::uint64_t v = code;
        for (auto& x : c) {
          x = static_cast<elem>(v % f.q());
          v /= f.q();
        }
        if (auto e = try_element(combine(basis, c))) return e;
      }
    }
    return std::nullopt;
  };

  auto jcoords = jacobson_radical(basis);
  cert.radical_dim = jcoords.size();
  EchelonBasis jspan(f, m);
  for (auto& v : jcoords) jspan.insert(v);
  std::vector<FpMatrix> jmats;
  for (auto& v : jcoords) jmats.push_back(combine(basis, v));

  // J must be a nilpotent two-sided ideal.
  for (auto& a : jmats)
    for (auto& b : basis)
      for (const FpMatrix& prod : {FpMatrix(a * b), FpMatrix(b * a)}) {
        auto c = coords_of(prod);
        if (!c || !jspan.reduce(*c)) {
          cert.detail = "computed radical is not a two-sided ideal";
          return cert;
        }
      }
  {
    std::vector<FpMatrix> layer = jmats;
    std::size_t steps = 0;
    while (!layer.empty()) {
      if (++steps > n + 1) {
        cert.detail = "computed radical is not nilpotent";
        return cert;
      }
      EchelonBasis span(f, n * n);
      std::vector<FpMatrix> next;
      for (auto& a : layer)
        for (auto& b : jmats) {
          FpMatrix c = a * b;
          if (span.insert(flatten(c))) next.push_back(c);
        }
      layer = std::move(next);
    }
  }

  const std::size_t d = m - jcoords.size();
  if (d == 0) {
    cert.detail = "radical contains the identity";
    return cert;
  }
  if (d == 1) {
    cert.local = Verdict::Yes;
    cert.generator = FpMatrix::identity(f, n);
    cert.min_poly = {f.neg(1), 1};
    cert.detail = "E/J is the base field";
    return cert;
  }

  std::vector<bool> is_piv(m, false);
  for (auto c : jspan.pivots()) is_piv[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < m; ++j)
    if (!is_piv[j]) comp.push_back(j);
  auto quotient_coords = [&](const FpMatrix& x) {
    auto c = coords_of(x);
    if (!c) throw std::logic_error("product left the algebra");
    jspan.reduce(*c);
    std::vector<elem> q(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) q[i] = (*c)[comp[i]];
    return q;
  };

  bool commutative = true;
  for (std::size_t i = 0; i < comp.size() && commutative; ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      auto q = quotient_coords(basis[comp[i]] * basis[comp[j]] - basis[comp[j]] * basis[comp[i]]);
      for (auto x : q)
        if (x) commutative = false;
      if (!commutative) break;
    }

  if (commutative) {
    auto test = [&](const std::vector<elem>& c) -> bool {
      std::vector<elem> full(m, 0);
      for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = c[i];
      FpMatrix x = combine(basis, full);
      TrackedEchelon pw(f, d, d + 1);
      FpMatrix power = FpMatrix::identity(f, n);
      for (std::size_t t = 0; t <= d; ++t) {
        auto expr = pw.add_or_express(quotient_coords(power));
        if (expr) {
          if (t != d) return false;
          Poly mp(d + 1, 0);
          for (std::size_t j = 0; j < d; ++j) mp[j] = f.neg((*expr)[j]);
          mp[d] = 1;
          if (!is_irreducible(f, mp)) return false;
          cert.generator = x;
          cert.min_poly = mp;
          return true;
        }
        power = power * x;
      }
      return false;
    };
    bool found = false;
    for (int t = 0; t < 32 && !found; ++t) found = test(random_coords(d));
    double total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= f.q();
    bool exhausted = false;
    if (!found && total <= static_cast<double>(exhaustive_bound)) {
      std::vector<elem> c(d, 0);
      for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(total) && !found; ++code) {
        std::uint64_t v = code;
        for (auto& x : c) {
          x = static_cast<elem>(v % f.q());
          v /= f.q();
        }
        found = test(c);
      }
      exhausted = !found;
    }
    if (found) {
      cert.local = Verdict::Yes;
      cert.detail = "E/J is a field of degree " + std::to_string(d) + " over the base field";
      return cert;
    }
    if (!exhausted) {
      cert.detail = "no field generator found for commutative E/J";
    }
  }

  if (auto e = search_idempotent()) {
    cert.local = Verdict::No;
    cert.idempotent = e;
    cert.detail = "nontrivial idempotent found";
    return cert;
  }
  if (cert.detail.empty()) cert.detail = "no idempotent found although E/J is not a field";
  return cert;
}

}  // namespace fk
