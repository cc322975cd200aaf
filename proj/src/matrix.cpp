#include "pcwkit/matrix.hpp"

#include <stdexcept>

namespace pcwkit {

namespace {

void check_index_set(std::span<const std::size_t> set, std::size_t limit,
                     const char* what) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (set[k] >= limit) {
      throw std::out_of_range(std::string(what) + " index out of range");
    }
    if (k > 0 && set[k] <= set[k - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  " index set must be strictly increasing");
    }
  }
}

std::vector<std::size_t> all_indices(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t k = 0; k < count; ++k) v[k] = k;
  return v;
}

}  // namespace

BinaryMatrix BinaryMatrix::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  BinaryMatrix out(m, n);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("ragged row literal");
    std::size_t c = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw std::invalid_argument("entry must be 0 or 1");
      out.set(r, c++, v == 1);
    }
    ++r;
  }
  return out;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cols_; ++i) {
    if ((*this)(j, i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> BinaryMatrix::col_support(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rows_; ++j) {
    if ((*this)(j, i)) out.push_back(j);
  }
  return out;
}

std::size_t BinaryMatrix::row_weight(std::size_t j) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < cols_; ++i) w += (*this)(j, i);
  return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t i) const {
  std::size_t w = 0;
  for (std::size_t j = 0; j < rows_; ++j) w += (*this)(j, i);
  return w;
}

std::size_t BinaryMatrix::ones_count() const {
  std::size_t w = 0;
  for (auto v : data_) w += v;
  return w;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  IntMatrix out(m, n);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("ragged row literal");
    std::size_t c = 0;
    for (long long v : row) out(r, c++) = v;
    ++r;
  }
  return out;
}

IntMatrix lift(const BinaryMatrix& h) {
  IntMatrix out(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      out(r, c) = h(r, c) ? 1 : 0;
    }
  }
  return out;
}

BinaryMatrix submatrix(const BinaryMatrix& m,
                       std::span<const std::size_t> row_set,
                       std::span<const std::size_t> col_set) {
  check_index_set(row_set, m.rows(), "row");
  check_index_set(col_set, m.cols(), "column");
  BinaryMatrix out(row_set.size(), col_set.size());
  for (std::size_t a = 0; a < row_set.size(); ++a) {
    for (std::size_t b = 0; b < col_set.size(); ++b) {
      out.set(a, b, m(row_set[a], col_set[b]));
    }
  }
  return out;
}

IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> row_set,
                    std::span<const std::size_t> col_set) {
  check_index_set(row_set, m.rows(), "row");
  check_index_set(col_set, m.cols(), "column");
  IntMatrix out(row_set.size(), col_set.size());
  for (std::size_t a = 0; a < row_set.size(); ++a) {
    for (std::size_t b = 0; b < col_set.size(); ++b) {
      out(a, b) = m(row_set[a], col_set[b]);
    }
  }
  return out;
}

BinaryMatrix columns(const BinaryMatrix& m,
                     std::span<const std::size_t> col_set) {
  const auto rows = all_indices(m.rows());
  return submatrix(m, rows, col_set);
}

IntMatrix columns(const IntMatrix& m, std::span<const std::size_t> col_set) {
  const auto rows = all_indices(m.rows());
  return submatrix(m, rows, col_set);
}

}  // namespace pcwkit
