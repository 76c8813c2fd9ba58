#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "weylcoh/integer.hpp"

namespace weylcoh {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0);
  static IntMatrix diagonal(const IntVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector column(std::size_t j) const;
  void set_column(std::size_t j, const IntVector& v);
  const std::vector<Integer>& data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& s) const;

  IntMatrix select_rows(std::span<const std::size_t> idx) const;
  IntMatrix select_columns(std::span<const std::size_t> idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] -= q * row[src]
  void row_submul(std::size_t dst, std::size_t src, const Integer& q);
  /// col[dst] -= q * col[src]
  void col_submul(std::size_t dst, std::size_t src, const Integer& q);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_permutation() const;
  Integer max_abs() const;

  /// Byte encoding of dimensions and entries; equal keys iff equal matrices.
  std::string key() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Integer& s);
bool is_zero_vector(const IntVector& v);
std::string vector_to_string(const IntVector& v);

}  // namespace weylcoh
