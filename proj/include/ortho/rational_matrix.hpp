#pragma once

// Dense exact-rational matrices. No floating point anywhere in this module.

#include "ortho/arith.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ortho {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix filled(std::size_t rows, std::size_t cols, const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const;
  RationalMatrix select_rows(std::span<const std::size_t> indices) const;
  /// [this | column of ones]
  RationalMatrix append_ones_column() const;
  RationalMatrix drop_last_column() const;

  bool is_zero() const;
  bool is_integral() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product; throws std::invalid_argument on dimension mismatch.
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b, int jobs = 0);

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

struct EchelonResult {
  RationalMatrix c;  ///< reduced column echelon form, pivot columns first
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

/// Reduced column echelon form by column operations, pivoting on the first
/// nonzero entry while walking rows top to bottom.
EchelonResult rcef(const RationalMatrix& m);

/// Rank over Q by row-parallel forward elimination (same pivot order for any job count).
std::size_t rank(const RationalMatrix& m, int jobs = 0);

/// True iff b lies in the column space of m.
bool in_column_space(const RationalMatrix& m, std::span<const Rational> b);

}  // namespace ortho
