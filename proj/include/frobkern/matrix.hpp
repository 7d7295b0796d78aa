#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <random>
#include <vector>

#include "frobkern/field.hpp"

namespace fk {

// Dense row-major matrix over a finite field. Products skip zero entries of
// the left factor, so sparse-ish action matrices multiply cheaply.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMatrix identity(const Field& f, std::size_t n);
  static FpMatrix random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  const Field& field() const { return *f_; }
  bool has_field() const { return f_ != nullptr; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  elem* row(std::size_t i) { return a_.data() + i * cols_; }
  const elem* row(std::size_t i) const { return a_.data() + i * cols_; }
  const std::vector<elem>& data() const { return a_; }

  bool is_zero() const;
  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && (rows_ * cols_ == 0 || *f_ == *o.f_);
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scaled(elem c) const;
  FpMatrix transpose() const;
  FpMatrix power(unsigned e) const;
  std::vector<elem> apply(const std::vector<elem>& v) const;
  elem trace() const;

  FpMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  FpMatrix column(std::size_t j) const;

  std::size_t rank() const;
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  // Basis of {x : A x = 0} as columns.
  FpMatrix nullspace() const;
  // Throws if singular.
  FpMatrix inverse() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  // Same entries read in a field extension (digits carried over).
  FpMatrix extend_to(const Field& big) const;

 private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<elem> a_;
};

FpMatrix hstack(const std::vector<FpMatrix>& blocks);
FpMatrix vstack(const std::vector<FpMatrix>& blocks);
FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

// dst[j] += c * src[j] for j < n
inline void axpy(const Field& f, elem* dst, const elem* src, elem c, std::size_t n) {
  if (c == 0) return;
  const elem* m = f.mul_row(c);
  for (std::size_t j = 0; j < n; ++j) {
    elem s = src[j];
    if (s) dst[j] = f.add_row(dst[j])[m[s]];
  }
}

// Incrementally maintained reduced echelon basis of a subspace of F^n.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, std::size_t n) : f_(&f), n_(n) {}
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  // Reduces v in place against the basis; returns true if v became zero.
  bool reduce(std::vector<elem>& v) const;
  // Inserts v (reduced first); returns false if v was dependent.
  bool insert(std::vector<elem> v);
  const std::vector<std::vector<elem>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  // Coordinates of a vector already known to lie in the span.
  std::vector<elem> coordinates(const std::vector<elem>& v) const;
  FpMatrix as_columns() const;

 private:
  const Field* f_;
  std::size_t n_;
  std::vector<std::vector<elem>> rows_;
  std::vector<std::size_t> piv_;
};

// Echelon basis that remembers each row as a combination of the vectors
// inserted so far, so members of the span can be expressed in them.
class TrackedEchelon {
 public:
  TrackedEchelon(const Field& f, std::size_t n, std::size_t capacity = 0)
      : f_(&f), n_(n), cap_(capacity ? capacity : n) {}
  std::size_t dim() const { return rows_.size(); }

  std::size_t ambient() const { return n_; }
  // Expression of u over the inserted vectors, or nullopt if u is outside the span.
  std::optional<std::vector<elem>> express(const std::vector<elem>& u) const {
    std::vector<elem> res = u, coef(cap_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      elem c = u[piv_[i]];
      if (!c) continue;
      axpy(*f_, res.data(), rows_[i].data(), f_->neg(c), n_);
      axpy(*f_, coef.data(), track_[i].data(), c, cap_);
    }
    for (elem x : res)
      if (x) return std::nullopt;
    return coef;
  }

  // Returns nullopt and records u as inserted vector number dim() if
  // independent, otherwise the expression of u over the inserted vectors.
  std::optional<std::vector<elem>> add_or_express(const std::vector<elem>& u) {
    std::vector<elem> res = u, coef(cap_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      elem c = u[piv_[i]];
      if (!c) continue;
      axpy(*f_, res.data(), rows_[i].data(), f_->neg(c), n_);
      axpy(*f_, coef.data(), track_[i].data(), c, cap_);
    }
    std::size_t lead = 0;
    while (lead < n_ && res[lead] == 0) ++lead;
    if (lead == n_) return coef;
    if (count_ >= cap_) throw std::length_error("tracked echelon capacity exceeded");
    const std::size_t local = count_++;
    std::vector<elem> t(cap_, 0);
    for (std::size_t j = 0; j < cap_; ++j) t[j] = f_->neg(coef[j]);
    t[local] = f_->add(t[local], 1);
    elem inv = f_->inv(res[lead]);
    for (auto& x : res) x = f_->mul(x, inv);
    for (auto& x : t) x = f_->mul(x, inv);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      elem c = rows_[i][lead];
      if (!c) continue;
      axpy(*f_, rows_[i].data(), res.data(), f_->neg(c), n_);
      axpy(*f_, track_[i].data(), t.data(), f_->neg(c), cap_);
    }
    rows_.push_back(std::move(res));
    track_.push_back(std::move(t));
    piv_.push_back(lead);
    return std::nullopt;
  }

  bool independent(const std::vector<elem>& u) const {
    std::vector<elem> res = u;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      elem c = u[piv_[i]];
      if (c) axpy(*f_, res.data(), rows_[i].data(), f_->neg(c), n_);
    }
    for (elem x : res)
      if (x) return true;
    return false;
  }

 private:
  const Field* f_;
  std::size_t n_, cap_;
  std::size_t count_ = 0;
  std::vector<std::vector<elem>> rows_, track_;
  std::vector<std::size_t> piv_;
};

}  // namespace fk
