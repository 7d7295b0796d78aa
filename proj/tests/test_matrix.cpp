#include <random>

#include "doctest.h"
#include "frobkern/matrix.hpp"

using namespace fk;

namespace {

FpMatrix naive_product(const FpMatrix& a, const FpMatrix& b) {
  const Field& f = a.field();
  FpMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

// Random matrix of prescribed rank as a product of random n x k and k x m factors.
FpMatrix random_of_rank(const Field& f, std::size_t n, std::size_t m, std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    FpMatrix a = FpMatrix::random(f, n, k, rng) * FpMatrix::random(f, k, m, rng);
    if (a.rank() == k) return a;
  }
}

std::vector<elem> col(const FpMatrix& m, std::size_t j) {
  std::vector<elem> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

}  // namespace

TEST_CASE("products agree with the triple loop") {
  std::mt19937_64 rng(1);
  for (int q : {2, 5, 9}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 10; ++t) {
      auto a = FpMatrix::random(f, 1 + rng() % 30, 1 + rng() % 30, rng);
      auto b = FpMatrix::random(f, a.cols(), 1 + rng() % 30, rng);
      CHECK(a * b == naive_product(a, b));
    }
  }
}

TEST_CASE("rank, nullspace and inverse") {
  std::mt19937_64 rng(2);
  for (int q : {3, 7, 25}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 20; ++t) {
      std::size_t n = 2 + rng() % 20, m = 2 + rng() % 20, k = rng() % (std::min(n, m) + 1);
      FpMatrix a = k ? random_of_rank(f, n, m, k, rng) : FpMatrix(f, n, m);
      CHECK(a.rank() == k);
      FpMatrix ns = a.nullspace();
      CHECK(ns.cols() == m - k);
      CHECK((a * ns).is_zero());
      CHECK(ns.rank() == ns.cols());
      CHECK(a.transpose().rank() == k);
    }
    FpMatrix s = random_of_rank(f, 12, 12, 12, rng);
    CHECK(s * s.inverse() == FpMatrix::identity(f, 12));
    CHECK(s.invertible());
    CHECK_THROWS(random_of_rank(f, 6, 6, 5, rng).inverse());
  }
}

TEST_CASE("kron satisfies the mixed product rule") {
  std::mt19937_64 rng(3);
  const Field& f = Field::get(5);
  auto a = FpMatrix::random(f, 3, 4, rng), b = FpMatrix::random(f, 2, 3, rng);
  auto c = FpMatrix::random(f, 4, 2, rng), d = FpMatrix::random(f, 3, 5, rng);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  CHECK(kron(a, b).rows() == 6);
}

TEST_CASE("stacking and block diagonal") {
  std::mt19937_64 rng(4);
  const Field& f = Field::get(7);
  auto a = FpMatrix::random(f, 3, 3, rng), b = FpMatrix::random(f, 2, 2, rng);
  auto d = block_diag(a, b);
  CHECK(d.rows() == 5);
  CHECK(d(0, 4) == 0);
  CHECK(d(4, 4) == b(1, 1));
  CHECK(hstack({a, a}).cols() == 6);
  CHECK(vstack({a, a}).rows() == 6);
  CHECK(d.trace() == f.add(a.trace(), b.trace()));
  CHECK(a.power(3) == a * a * a);
}

TEST_CASE("echelon bases express members of the span") {
  std::mt19937_64 rng(5);
  const Field& f = Field::get(9);
  auto gens = FpMatrix::random(f, 15, 6, rng);
  TrackedEchelon te(f, 15, 6);
  EchelonBasis eb(f, 15);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK_FALSE(te.add_or_express(col(gens, j)).has_value());
    CHECK(eb.insert(col(gens, j)));
  }
  auto coeffs = FpMatrix::random(f, 6, 1, rng);
  auto v = col(gens * coeffs, 0);
  auto x = te.express(v);
  REQUIRE(x.has_value());
  for (std::size_t j = 0; j < 6; ++j) CHECK((*x)[j] == coeffs(j, 0));
  auto w = v;
  CHECK(eb.reduce(w));
  for (int t = 0; t < 20; ++t) {
    std::vector<elem> u(15);
    for (auto& e : u) e = static_cast<elem>(rng() % 9);
    auto r = u;
    CHECK(eb.reduce(r) == te.express(u).has_value());
  }
}

TEST_CASE("scalar extension keeps entries") {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(6);
  auto a = FpMatrix::random(f, 4, 4, rng);
  auto big = a.extend_to(Field::get(9));
  CHECK(big.field().q() == 9);
  CHECK(big.rank() == a.rank());
  CHECK(big * big == (a * a).extend_to(Field::get(9)));
}
