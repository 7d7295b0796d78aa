#include <random>

#include "doctest.h"
#include "frobkern/kernels.hpp"

using namespace fk;

namespace {

// Pairs (x, y) of vectors in F_p^r with x_i y_j = x_j y_i, by direct enumeration.
std::uint64_t rank1_oracle(int p, int r) {
  std::uint64_t n = 1, count = 0;
  for (int i = 0; i < r; ++i) n *= p;
  std::vector<int> x(r), y(r);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t u = a, v = b;
      for (int i = 0; i < r; ++i, u /= p, v /= p) {
        x[i] = u % p;
        y[i] = v % p;
      }
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        for (int j = i + 1; j < r && ok; ++j) ok = (x[i] * y[j] - x[j] * y[i]) % p == 0;
      count += ok;
    }
  return count;
}

}  // namespace

TEST_CASE("parallel product equals serial product") {
  std::mt19937_64 rng(11);
  for (int q : {3, 4}) {
    const Field& f = Field::get(q);
    for (std::size_t n : {1u, 17u, 130u}) {
      auto a = FpMatrix::random(f, n, n + 3, rng), b = FpMatrix::random(f, n + 3, n, rng);
      FpMatrix c1(f, n, n), c2(f, n, n);
      kernels::matmul_serial(a, b, c1);
      kernels::matmul_parallel(a, b, c2);
      CHECK(c1 == c2);
    }
  }
}

TEST_CASE("rank-one pair counts agree with enumeration") {
  for (int p : {2, 3, 5})
    for (int r : {1, 2, 3}) {
      const Field& f = Field::get(p);
      auto oracle = rank1_oracle(p, r);
      CHECK(kernels::rank1_pairs_serial(f, r) == oracle);
      CHECK(kernels::rank1_pairs_parallel(f, r) == oracle);
    }
}

TEST_CASE("column elimination is the same with and without threads") {
  std::mt19937_64 rng(12);
  const Field& f = Field::get(7);
  auto m = FpMatrix::random(f, 40, 30, rng);
  std::vector<elem> a = m.data(), b = m.data();
  elem piv = a[5 * 30 + 2];
  if (piv == 0) a[5 * 30 + 2] = b[5 * 30 + 2] = piv = 1;
  elem inv = f.inv(piv);
  for (std::size_t j = 0; j < 30; ++j) {
    a[5 * 30 + j] = f.mul(a[5 * 30 + j], inv);
    b[5 * 30 + j] = f.mul(b[5 * 30 + j], inv);
  }
  kernels::eliminate_column(f, a, 40, 30, 5, 2, false);
  kernels::eliminate_column(f, b, 40, 30, 5, 2, true);
  CHECK(a == b);
  for (std::size_t i = 0; i < 40; ++i) CHECK(a[i * 30 + 2] == (i == 5 ? 1 : 0));
}
