#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcwkit/cone.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/subsets.hpp"

namespace pcwkit {

enum class VectorKind { kDet, kAbsdet, kPerm };

const char* vector_kind_name(VectorKind kind);

struct ComputeOptions {
  VectorKind kind = VectorKind::kAbsdet;
  /// Explicit subsets to process; empty means every size-(m+1) subset in
  /// lexicographic order.
  std::vector<ColumnSubset> subsets;
  bool dedupe = false;
  bool with_minimal = false;
  unsigned threads = 1;
};

struct ComputeRow {
  ColumnSubset subset;
  IntVector vec;
  bool unscaled = false;
  PseudoWeight weight;
  /// -1 when minimality is not defined (zero vector) or was not requested.
  int minimal = -1;
};

/// Raised when a computed vector fails the unscaled-pseudo-codeword
/// re-check that the construction theorems guarantee; indicates a bug and
/// maps to a dedicated process exit code.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Computes one row per subset. Cone membership, pseudo-weight, and
/// minimality always refer to the componentwise absolute value, which for
/// the det kind is the corresponding absdet vector. Work is split into
/// contiguous lexicographic blocks across threads; the returned order is
/// the subset order regardless of thread count. With dedupe, only the
/// first row per distinct vector survives.
std::vector<ComputeRow> compute_vectors(const BinaryMatrix& h, const ComputeOptions& opt);

/// Deterministic CSV rendering of compute rows.
std::string rows_to_csv(const std::vector<ComputeRow>& rows, bool with_minimal);

}  // namespace pcwkit
