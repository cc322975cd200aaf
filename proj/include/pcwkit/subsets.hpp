#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcwkit {

/// Strictly increasing list of column indices. The pseudo-codeword
/// constructions take subsets of size m+1, but the type itself only
/// enforces sortedness and range.
class ColumnSubset {
 public:
  ColumnSubset() = default;
  /// Throws std::invalid_argument unless indices are strictly increasing.
  explicit ColumnSubset(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(std::size_t i) const;
  /// Position of i within the sorted subset; throws std::invalid_argument
  /// when i is not a member.
  std::size_t position_of(std::size_t i) const;
  /// The subset with element i removed; throws when i is not a member.
  ColumnSubset erase(std::size_t i) const;
  /// Complement within {0, ..., n-1}.
  std::vector<std::size_t> complement(std::size_t n) const;

  bool operator==(const ColumnSubset& other) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// C(n, k) saturated at 2^64 - 1. Saturation only matters for ranks that
/// could never be enumerated anyway.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Streams all C(n, k) size-k subsets of {0, ..., n-1} in lexicographic
/// order. Supports starting from an arbitrary rank so ranges can be
/// partitioned across workers.
class SubsetEnumerator {
 public:
  SubsetEnumerator(std::size_t n, std::size_t k, std::uint64_t start_rank = 0);

  std::uint64_t total() const { return total_; }
  bool done() const { return done_; }
  const ColumnSubset& current() const { return current_; }
  /// Advances to the lexicographic successor; returns false once exhausted.
  bool next();

  /// The subset of lexicographic rank r (0-based). Throws std::out_of_range
  /// for r >= C(n, k).
  static ColumnSubset unrank(std::size_t n, std::size_t k, std::uint64_t r);

 private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t total_;
  bool done_;
  ColumnSubset current_;
};

/// All size-k subsets in lexicographic order, materialized. Intended for
/// small instances; prefer SubsetEnumerator for streaming.
std::vector<ColumnSubset> all_subsets(std::size_t n, std::size_t k);

}  // namespace pcwkit
