#pragma once

// Exact rationals for ambient root-system coordinates and the PGL2 check.
// Lattice and cohomology code never touches these.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/int_matrix.hpp"

namespace weylcoh {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

Rational to_rational(const Integer& x);
/// "p/q" or "p".
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator-(const RatMatrix& o) const;

  /// Inverse of a square nonsingular matrix; throws otherwise.
  RatMatrix inverse() const;
  /// Solves this * X = B for X when the system is consistent (this has full column rank).
  std::optional<RatMatrix> solve(const RatMatrix& b) const;

  bool is_integral() const;
  /// Throws if some entry is not an integer.
  IntMatrix to_int() const;
  std::string key() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
std::string rat_vector_key(const RatVector& v);

}  // namespace weylcoh
