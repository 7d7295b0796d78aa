#include "frobkern/matrix.hpp"

#include <stdexcept>

#include "frobkern/kernels.hpp"

namespace fk {

namespace {
void require_same(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace

FpMatrix FpMatrix::identity(const Field& f, std::size_t n) {
  FpMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FpMatrix m(f, rows, cols);
  std::uniform_int_distribution<int> d(0, f.q() - 1);
  for (auto& x : m.a_) x = static_cast<elem>(d(rng));
  return m;
}

bool FpMatrix::is_zero() const {
  for (elem x : a_)
    if (x) return false;
  return true;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  require_same(*this, o);
  FpMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  require_same(*this, o);
  FpMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  FpMatrix c(f_ ? *f_ : o.field(), rows_, o.cols_);
  kernels::matmul_parallel(*this, o, c);
  return c;
}

FpMatrix FpMatrix::scaled(elem c) const {
  FpMatrix r(*this);
  for (auto& x : r.a_) x = f_->mul(x, c);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::power(unsigned e) const {
  FpMatrix r = identity(*f_, rows_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::vector<elem> FpMatrix::apply(const std::vector<elem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    elem s = 0;
    const elem* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j] && v[j]) s = f_->add(s, f_->mul(r[j], v[j]));
    out[i] = s;
  }
  return out;
}

elem FpMatrix::trace() const {
  elem s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s = f_->add(s, (*this)(i, i));
  return s;
}

FpMatrix FpMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  FpMatrix m(*f_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

FpMatrix FpMatrix::column(std::size_t j) const {
  FpMatrix m(*f_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
  return m;
}

std::vector<std::size_t> FpMatrix::rref_in_place() {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  const bool par = rows_ * cols_ > (1u << 16);
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t s = r;
    while (s < rows_ && (*this)(s, c) == 0) ++s;
    if (s == rows_) continue;
    if (s != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(s, j), (*this)(r, j));
    elem inv = f_->inv((*this)(r, c));
    elem* pr = row(r);
    for (std::size_t j = c; j < cols_; ++j) pr[j] = f_->mul(pr[j], inv);
    kernels::eliminate_column(*f_, a_, rows_, cols_, r, c, par);
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t FpMatrix::rank() const {
  FpMatrix t(*this);
  return t.rref_in_place().size();
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix t(*this);
  auto piv = t.rref_in_place();
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_piv[c]) free.push_back(c);
  FpMatrix n(*f_, cols_, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) n(piv[i], k) = f_->neg(t(i, free[k]));
  }
  return n;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  FpMatrix aug = hstack({*this, identity(*f_, rows_)});
  auto piv = aug.rref_in_place();
  if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] >= rows_)) throw std::domain_error("singular matrix");
  std::vector<std::size_t> rs(rows_), cs(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    rs[i] = i;
    cs[i] = rows_ + i;
  }
  return aug.submatrix(rs, cs);
}

FpMatrix FpMatrix::extend_to(const Field& big) const {
  if (big.p() != f_->p() || big.degree() % f_->degree() != 0)
    throw std::invalid_argument("not a field extension");
  if (f_->degree() != 1 && big.degree() != f_->degree())
    throw std::invalid_argument("only extensions of prime fields are supported");
  FpMatrix m(big, rows_, cols_);
  m.a_ = a_;
  return m;
}

FpMatrix hstack(const std::vector<FpMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("empty hstack");
  std::size_t rows = blocks[0].rows(), cols = 0;
  for (auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  FpMatrix m(blocks[0].field(), rows, cols);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

FpMatrix vstack(const std::vector<FpMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("empty vstack");
  std::size_t cols = blocks[0].cols(), rows = 0;
  for (auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  FpMatrix m(blocks[0].field(), rows, cols);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
  const Field& f = a.field();
  FpMatrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      elem x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l)) m(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return m;
}

bool EchelonBasis::reduce(std::vector<elem>& v) const {
  bool zero = true;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    elem c = v[piv_[i]];
    if (c) axpy(*f_, v.data(), rows_[i].data(), f_->neg(c), n_);
  }
  for (elem x : v)
    if (x) {
      zero = false;
      break;
    }
  return zero;
}

bool EchelonBasis::insert(std::vector<elem> v) {
  if (v.size() != n_) throw std::invalid_argument("echelon vector length mismatch");
  if (reduce(v)) return false;
  std::size_t c = 0;
  while (v[c] == 0) ++c;
  elem inv = f_->inv(v[c]);
  for (auto& x : v) x = f_->mul(x, inv);
  for (auto& r : rows_) {
    elem k = r[c];
    if (k) axpy(*f_, r.data(), v.data(), f_->neg(k), n_);
  }
  rows_.push_back(std::move(v));
  piv_.push_back(c);
  return true;
}

std::vector<elem> EchelonBasis::coordinates(const std::vector<elem>& v) const {
  std::vector<elem> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

FpMatrix EchelonBasis::as_columns() const {
  FpMatrix m(*f_, n_, rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t i = 0; i < n_; ++i) m(i, k) = rows_[k][i];
  return m;
}

}  // namespace fk
