#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"

namespace pcwkit {

/// One inequality of the fundamental-cone system: either a nonnegativity
/// constraint w_i >= 0 (check = npos) or a parity-check constraint
/// w_i <= sum of w over the other bits of check j.
struct ConstraintRef {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t check = npos;
  std::size_t bit = 0;

  bool is_nonnegativity() const { return check == npos; }
  bool operator==(const ConstraintRef&) const = default;
};

struct ConeReport {
  bool member = false;
  std::vector<ConstraintRef> violated;
  std::vector<ConstraintRef> active;
};

/// Exact membership test for the fundamental cone K(H): w_i >= 0 for all i
/// and w_i <= sum_{i' in I_j, i' != i} w_{i'} for every check j and every
/// i in I_j. Reports every violated and every tight constraint.
/// Throws std::invalid_argument on length mismatch.
ConeReport in_fundamental_cone(const BinaryMatrix& h, const RatVector& w);
ConeReport in_fundamental_cone(const BinaryMatrix& h, const IntVector& w);

/// True iff w lies in K(H) and its mod-2 reduction is a codeword.
bool is_unscaled_pcw(const BinaryMatrix& h, const IntVector& w);

/// AWGNC pseudo-weight ||w||_1^2 / ||w||_2^2 as an exact rational. The zero
/// vector gets value 0 with zero_vector set; it carries no weight.
struct PseudoWeight {
  BigRat value = 0;
  bool zero_vector = false;

  double as_double() const { return to_double(value); }
};

/// Throws std::invalid_argument on a negative entry.
PseudoWeight awgnc_pseudoweight(const IntVector& w);
PseudoWeight awgnc_pseudoweight(const RatVector& w);

/// Edge-of-cone test: true iff the normals of the constraints tight at w
/// span rational rank n-1. Requires w in K(H) and w != 0; throws
/// std::invalid_argument otherwise.
bool is_minimal_pcw(const BinaryMatrix& h, const IntVector& w);

/// True iff w is a positive integer multiple of a nonzero binary codeword
/// of H (normalize by the gcd of the entries, then test 0/1-ness and
/// codeword membership). The zero vector returns false.
bool is_codeword_scalar_multiple(const BinaryMatrix& h, const IntVector& w);

struct WeightHistogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> cumulative;
  std::uint64_t zero_count = 0;
  std::uint64_t total_nonzero = 0;
};

/// Cumulative counts of nonzero-vector pseudo-weights <= edge, one count
/// per edge; zero vectors are tallied separately. Comparisons are exact
/// (edges converted to rationals). Throws std::invalid_argument unless
/// edges are strictly increasing.
WeightHistogram cumulative_histogram(const std::vector<PseudoWeight>& weights,
                                     const std::vector<double>& edges);

}  // namespace pcwkit
