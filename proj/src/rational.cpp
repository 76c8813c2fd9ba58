#include "weylcoh/rational.hpp"
#include "weylcoh/errors.hpp"

#include <stdexcept>

namespace weylcoh {

Rational to_rational(const Integer& x) {
  Rational q(x.to_mpz());
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("not a rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = to_rational(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows_if_empty) {
  std::size_t r = cols.empty() ? rows_if_empty : cols.front().size();
  RatMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw InvalidInput("RatMatrix: ragged columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("RatMatrix product: dimension mismatch");
  RatMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
    }
  return p;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (cols_ != v.size()) throw InvalidInput("RatMatrix*vector: dimension mismatch");
  RatVector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("RatMatrix difference: dimension mismatch");
  RatMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

std::optional<RatMatrix> RatMatrix::solve(const RatMatrix& b) const {
  if (b.rows_ != rows_) throw InvalidInput("RatMatrix::solve: dimension mismatch");
  const std::size_t m = rows_, n = cols_, k = b.cols_;
  RatMatrix a(m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < k; ++j) a(i, n + j) = b(i, j);
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && sgn(a(p, j)) == 0) ++p;
    if (p == m) continue;
    for (std::size_t c = 0; c < n + k; ++c) std::swap(a(p, c), a(r, c));
    Rational inv = 1 / a(r, j);
    for (std::size_t c = 0; c < n + k; ++c) a(r, c) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a(i, j)) == 0) continue;
      Rational f = a(i, j);
      for (std::size_t c = 0; c < n + k; ++c) a(i, c) -= f * a(r, c);
    }
    pivots.push_back(j);
    ++r;
  }
  if (r != n) return std::nullopt;  // not full column rank
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t c = n; c < n + k; ++c)
      if (sgn(a(i, c)) != 0) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < k; ++c) x(pivots[i], c) = a(i, n + c);
  return x;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("RatMatrix::inverse: not square");
  auto x = solve(identity(rows_));
  if (!x) throw InvalidInput("RatMatrix::inverse: singular matrix");
  return *x;
}

bool RatMatrix::is_integral() const {
  for (const auto& q : data_)
    if (q.get_den() != 1) return false;
  return true;
}

IntMatrix RatMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& q = (*this)(i, j);
      if (q.get_den() != 1) throw InvalidInput("RatMatrix::to_int: non-integral entry " + q.get_str());
      m(i, j) = Integer(mpz_class(q.get_num()));
    }
  return m;
}

std::string RatMatrix::key() const {
  std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const auto& q : data_) {
    k += q.get_str(16);
    k.push_back(',');
  }
  return k;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: size mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r = v;
  for (auto& x : r) x *= s;
  return r;
}

std::string rat_vector_key(const RatVector& v) {
  std::string k;
  for (const auto& q : v) {
    k += q.get_str(16);
    k.push_back(',');
  }
  return k;
}

}  // namespace weylcoh
