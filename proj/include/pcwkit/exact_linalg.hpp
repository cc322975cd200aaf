#pragma once

#include <cstddef>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"

namespace pcwkit {

/// Largest matrix dimension accepted by permanent() by default. Ryser's
/// formula is O(2^n * n); beyond this the call refuses instead of hanging.
inline constexpr std::size_t kDefaultPermanentCap = 24;

/// Exact integer determinant by fraction-free (Bareiss) elimination.
/// The 0x0 matrix has determinant 1. Throws std::invalid_argument for
/// non-square input.
BigInt determinant(const IntMatrix& m);

/// Exact integer permanent by Ryser's inclusion-exclusion formula with
/// Gray-code subset iteration. The 0x0 matrix has permanent 1. Throws
/// std::invalid_argument for non-square input or dimension > max_dim.
BigInt permanent(const IntMatrix& m, std::size_t max_dim = kDefaultPermanentCap);

/// The Gram matrix a^T a.
IntMatrix gram_matrix(const IntMatrix& a);

/// Row rank over GF(2), by elimination.
std::size_t rank_gf2(const BinaryMatrix& m);

/// Rank over the rationals, by fraction-free elimination with full
/// pivoting. Exact for any integer matrix.
std::size_t rank_exact(const IntMatrix& m);

}  // namespace pcwkit
