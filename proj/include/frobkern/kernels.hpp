#pragma once

#include <cstdint>

#include "frobkern/matrix.hpp"

// Data-parallel hot loops, each with a serial reference used by the tests
// and the benchmark. With OpenMP disabled the parallel variants run serially.
namespace fk::kernels {

void matmul_serial(const FpMatrix& a, const FpMatrix& b, FpMatrix& c);
void matmul_parallel(const FpMatrix& a, const FpMatrix& b, FpMatrix& c);

// Number of (x, y) in F_q^r x F_q^r with all 2x2 minors x_i y_j - x_j y_i zero.
std::uint64_t rank1_pairs_serial(const Field& f, int r);
std::uint64_t rank1_pairs_parallel(const Field& f, int r);

// Eliminates the pivot column from every other row of an echelon sweep.
void eliminate_column(const Field& f, std::vector<elem>& m, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t col, bool parallel);

int max_threads();

}  // namespace fk::kernels
