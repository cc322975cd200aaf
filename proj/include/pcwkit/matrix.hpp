#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pcwkit/bigint.hpp"

namespace pcwkit {

/// Dense m x n matrix over GF(2). Rows are check equations, columns are
/// code bits; indices start at 0.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds a matrix from row literals, e.g. {{1,1,1,0},{0,1,1,1}}.
  /// Throws std::invalid_argument on ragged rows or entries other than 0/1.
  static BinaryMatrix from_rows(
      std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, bool value) {
    data_[r * cols_ + c] = value ? 1 : 0;
  }

  /// Column indices i with h_{j,i} = 1, ascending.
  std::vector<std::size_t> row_support(std::size_t j) const;
  /// Row indices j with h_{j,i} = 1, ascending.
  std::vector<std::size_t> col_support(std::size_t i) const;

  std::size_t row_weight(std::size_t j) const;
  std::size_t col_weight(std::size_t i) const;
  std::size_t ones_count() const;

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  BigInt& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Reads the 0/1 entries of H as literal integers.
IntMatrix lift(const BinaryMatrix& h);

/// M_{R,S}: the submatrix picking rows R and columns S, both strictly
/// increasing. Throws std::out_of_range / std::invalid_argument on bad
/// index sets.
BinaryMatrix submatrix(const BinaryMatrix& m,
                       std::span<const std::size_t> row_set,
                       std::span<const std::size_t> col_set);
IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> row_set,
                    std::span<const std::size_t> col_set);

/// M_S: all rows, columns S.
BinaryMatrix columns(const BinaryMatrix& m,
                     std::span<const std::size_t> col_set);
IntMatrix columns(const IntMatrix& m, std::span<const std::size_t> col_set);

}  // namespace pcwkit
