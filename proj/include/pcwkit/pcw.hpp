#pragma once

#include <cstdint>
#include <vector>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/subsets.hpp"

namespace pcwkit {

/// The det-vector based on S: nu_i = (-1)^{pos of i in S} * det(H_{S\i})
/// for i in S, with the column-deleted submatrices read over the integers;
/// zero elsewhere. Requires m < n and |S| = m+1 (std::invalid_argument
/// otherwise).
IntVector det_vector(const BinaryMatrix& h, const ColumnSubset& s);

/// The absdet-vector based on S: componentwise absolute value of the
/// det-vector, i.e. |det(H_{S\i})| on S and zero elsewhere.
IntVector absdet_vector(const BinaryMatrix& h, const ColumnSubset& s);

/// The perm-vector based on S: perm(H_{S\i}) on S and zero elsewhere.
IntVector perm_vector(const BinaryMatrix& h, const ColumnSubset& s);

/// H * v over the integers (length-m result).
IntVector z_syndrome(const BinaryMatrix& h, const IntVector& v);

/// Componentwise reduction modulo 2 into {0,1}.
std::vector<std::uint8_t> mod2_reduce(const IntVector& v);

/// True iff H * c = 0 over GF(2).
bool is_codeword(const BinaryMatrix& h, const std::vector<std::uint8_t>& c);

}  // namespace pcwkit
