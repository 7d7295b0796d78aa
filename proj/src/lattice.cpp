#include "frobkern/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fk {

Lattice::Lattice(std::size_t n, const std::vector<std::vector<std::int64_t>>& generators) : n_(n) {
  const std::size_t m = generators.size();
  IntMatrix a(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    if (generators[j].size() != n) throw std::invalid_argument("lattice generator has wrong length");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = generators[j][i];
  }
  u_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u_[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u_[i], u_[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
  };
  // row_k -= c * row_i, mirrored on U
  auto row_op = [&](std::size_t k, std::size_t i, std::int64_t c) {
    for (std::size_t j = 0; j < m; ++j) a[k][j] -= c * a[i][j];
    for (std::size_t j = 0; j < n; ++j) u_[k][j] -= c * u_[i][j];
  };
  auto col_op = [&](std::size_t k, std::size_t j, std::int64_t c) {
    for (std::size_t i = 0; i < n; ++i) a[i][k] -= c * a[i][j];
  };

  const std::size_t lim = std::min(n, m);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = n, bj = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (a[i][j] != 0 && (bi == n || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] == 0) break;
    diag_.push_back(a[t][t]);
  }
}

bool Lattice::contains(const std::vector<std::int64_t>& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector has wrong length");
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t y = 0;
    for (std::size_t j = 0; j < n_; ++j) y += u_[i][j] * v[j];
    if (i < diag_.size()) {
      if (y % diag_[i] != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace fk
