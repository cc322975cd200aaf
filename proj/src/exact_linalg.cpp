#include "pcwkit/exact_linalg.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcwkit {

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant requires a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: the division by the previous pivot is exact.
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

BigInt permanent(const IntMatrix& m, std::size_t max_dim) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent requires a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n > max_dim) {
    throw std::invalid_argument(
        "permanent dimension exceeds the cap of " + std::to_string(max_dim) +
        " (Ryser enumeration would take too long)");
  }

  // Ryser: perm(M) = (-1)^n * sum over nonempty column subsets T of
  // (-1)^{|T|} * prod_j (sum of row j over T). Gray-code order keeps the
  // row sums updated with one column per step.
  std::vector<BigInt> row_sums(n);
  BigInt total = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  int parity = 0;  // (-1)^{|T|} of the current subset
  for (std::uint64_t counter = 1; counter < limit; ++counter) {
    const unsigned flip = std::countr_zero(counter);
    const bool added =
        ((counter ^ (counter >> 1)) >> flip & 1U) != 0;  // Gray code bit state
    for (std::size_t j = 0; j < n; ++j) {
      if (added) {
        row_sums[j] += m(j, flip);
      } else {
        row_sums[j] -= m(j, flip);
      }
    }
    parity ^= 1;

    BigInt prod = 1;
    bool zero = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (row_sums[j] == 0) {
        zero = true;
        break;
      }
      prod *= row_sums[j];
    }
    if (zero) continue;
    if (parity == 1) {
      total -= prod;  // |T| odd
    } else {
      total += prod;
    }
  }
  if (n % 2 == 1) total = -total;
  return total;
}

IntMatrix gram_matrix(const IntMatrix& a) {
  IntMatrix g(a.cols(), a.cols());
  for (std::size_t p = 0; p < a.cols(); ++p) {
    for (std::size_t q = p; q < a.cols(); ++q) {
      BigInt acc = 0;
      for (std::size_t r = 0; r < a.rows(); ++r) acc += a(r, p) * a(r, q);
      g(p, q) = acc;
      g(q, p) = std::move(acc);
    }
  }
  return g;
}

std::size_t rank_gf2(const BinaryMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(
      rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c)) bits[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows && !(bits[pivot][w] & mask)) ++pivot;
    if (pivot == rows) continue;
    std::swap(bits[rank], bits[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && (bits[r][w] & mask)) {
        for (std::size_t k = 0; k < words; ++k) bits[r][k] ^= bits[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  BigInt prev = 1;
  std::size_t rank = 0;
  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t k = 0; k < steps; ++k) {
    // Full pivoting: any nonzero entry of the trailing block will do.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(k, c), a(pr, c));
    }
    if (pc != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, k), a(r, pc));
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
    ++rank;
  }
  return rank;
}

}  // namespace pcwkit
