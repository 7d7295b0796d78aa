#include "frobkern/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fk::kernels {

namespace {

void matmul_rows(const FpMatrix& a, const FpMatrix& b, FpMatrix& c, std::size_t i) {
  const Field& f = a.field();
  const std::size_t n = b.cols();
  elem* out = c.row(i);
  const elem* ai = a.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (ai[k]) axpy(f, out, b.row(k), ai[k], n);
}

bool rank_le_1(const Field& f, const std::vector<elem>& x, const std::vector<elem>& y) {
  const std::size_t r = x.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (f.mul(x[i], y[j]) != f.mul(x[j], y[i])) return false;
  return true;
}

void decode(std::uint64_t code, int q, std::vector<elem>& v) {
  for (auto& e : v) {
    e = static_cast<elem>(code % q);
    code /= q;
  }
}

}  // namespace

void matmul_serial(const FpMatrix& a, const FpMatrix& b, FpMatrix& c) {
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_rows(a, b, c, i);
}

void matmul_parallel(const FpMatrix& a, const FpMatrix& b, FpMatrix& c) {
  const long rows = static_cast<long>(a.rows());
  const bool big = a.rows() * a.cols() * b.cols() > (1u << 18);
#pragma omp parallel for schedule(static) if (big)
  for (long i = 0; i < rows; ++i) matmul_rows(a, b, c, static_cast<std::size_t>(i));
}

std::uint64_t rank1_pairs_serial(const Field& f, int r) {
  const std::uint64_t n = static_cast<std::uint64_t>(ipow(f.q(), r));
  std::uint64_t count = 0;
  std::vector<elem> x(r), y(r);
  for (std::uint64_t i = 0; i < n; ++i) {
    decode(i, f.q(), x);
    for (std::uint64_t j = 0; j < n; ++j) {
      decode(j, f.q(), y);
      if (rank_le_1(f, x, y)) ++count;
    }
  }
  return count;
}

std::uint64_t rank1_pairs_parallel(const Field& f, int r) {
  const long n = static_cast<long>(ipow(f.q(), r));
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (long i = 0; i < n; ++i) {
    std::vector<elem> x(r), y(r);
    decode(static_cast<std::uint64_t>(i), f.q(), x);
    for (long j = 0; j < n; ++j) {
      decode(static_cast<std::uint64_t>(j), f.q(), y);
      if (rank_le_1(f, x, y)) ++count;
    }
  }
  return count;
}

void eliminate_column(const Field& f, std::vector<elem>& m, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t col, bool parallel) {
  const elem* pr = m.data() + pivot_row * cols;
  const long nrows = static_cast<long>(rows);
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < nrows; ++i) {
    if (static_cast<std::size_t>(i) == pivot_row) continue;
    elem* ri = m.data() + static_cast<std::size_t>(i) * cols;
    elem c = ri[col];
    if (c) axpy(f, ri + col, pr + col, f.neg(c), cols - col);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fk::kernels
