#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/pcw.hpp"

namespace testsupport {

// Leibniz-formula determinant, deliberately independent of the Bareiss
// routine under test. Only usable for tiny matrices.
inline pcwkit::BigInt reference_determinant(const pcwkit::IntMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0) return 1;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  pcwkit::BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    pcwkit::BigInt term = (inversions % 2 == 0) ? 1 : -1;
    for (std::size_t r = 0; r < k; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline pcwkit::BigInt reference_permanent(const pcwkit::IntMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0) return 1;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  pcwkit::BigInt total = 0;
  do {
    pcwkit::BigInt term = 1;
    for (std::size_t r = 0; r < k; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline pcwkit::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t k, int lo, int hi) {
  pcwkit::IntMatrix m(k, k);
  std::uniform_int_distribution<int> entry(lo, hi);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(r, c) = entry(rng);
  return m;
}

inline pcwkit::BinaryMatrix random_binary_matrix(std::mt19937_64& rng, std::size_t rows,
                                                 std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  pcwkit::BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

// A uniformly-grown random bipartite tree with `checks` check nodes and
// `bits` bit nodes (checks < bits), returned as its incidence matrix.
// Nodes join one at a time, attaching to a random placed node of the
// opposite side, so the result is always a connected tree.
inline pcwkit::BinaryMatrix random_tree_matrix(std::mt19937_64& rng, std::size_t checks,
                                               std::size_t bits) {
  pcwkit::BinaryMatrix m(checks, bits);
  std::vector<std::size_t> placed_bits{0};
  std::vector<std::size_t> placed_checks;
  std::size_t next_bit = 1;
  std::size_t next_check = 0;
  while (placed_bits.size() < bits || placed_checks.size() < checks) {
    const bool bit_left = next_bit < bits;
    const bool check_left = next_check < checks;
    const bool bit_feasible = bit_left && !placed_checks.empty();
    bool grow_bit;
    if (bit_feasible && check_left) {
      grow_bit = std::bernoulli_distribution(0.5)(rng);
    } else if (bit_feasible) {
      grow_bit = true;
    } else {
      grow_bit = false;
    }
    if (grow_bit) {
      std::uniform_int_distribution<std::size_t> pick(0, placed_checks.size() - 1);
      m.set(placed_checks[pick(rng)], next_bit, true);
      placed_bits.push_back(next_bit++);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, placed_bits.size() - 1);
      m.set(next_check, placed_bits[pick(rng)], true);
      placed_checks.push_back(next_check++);
    }
  }
  return m;
}

// Exhaustive minimum nonzero codeword weight; 0 when the code is trivial.
inline std::size_t brute_min_distance(const pcwkit::BinaryMatrix& h) {
  const std::size_t n = h.cols();
  std::size_t best = 0;
  for (std::uint64_t word = 1; word < (std::uint64_t{1} << n); ++word) {
    std::vector<std::uint8_t> c(n, 0);
    std::size_t weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((word >> i) & 1) {
        c[i] = 1;
        ++weight;
      }
    }
    if (!pcwkit::is_codeword(h, c)) continue;
    if (best == 0 || weight < best) best = weight;
  }
  return best;
}

inline pcwkit::IntVector make_vec(std::vector<long long> entries) {
  pcwkit::IntVector v;
  for (long long x : entries) v.push_back(x);
  return v;
}

}  // namespace testsupport
