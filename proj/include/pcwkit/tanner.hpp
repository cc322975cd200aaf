#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"

namespace pcwkit {

/// Bipartite Tanner graph of a parity-check matrix: one bit node per
/// column, one check node per row, an edge per 1-entry.
class TannerGraph {
 public:
  explicit TannerGraph(const BinaryMatrix& h);

  std::size_t bit_count() const { return bit_adj_.size(); }
  std::size_t check_count() const { return check_adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  const std::vector<std::size_t>& checks_of(std::size_t bit) const { return bit_adj_[bit]; }
  const std::vector<std::size_t>& bits_of(std::size_t check) const { return check_adj_[check]; }
  std::size_t check_degree(std::size_t check) const { return check_adj_[check].size(); }

 private:
  std::vector<std::vector<std::size_t>> bit_adj_;
  std::vector<std::vector<std::size_t>> check_adj_;
  std::size_t edges_ = 0;
};

/// Length of the shortest cycle (always even in a bipartite graph), or
/// nullopt when the graph is acyclic.
std::optional<std::size_t> girth(const TannerGraph& g);

/// True iff some pair of columns shares at least two rows. Equivalent to
/// girth == 4, but cheaper.
bool has_four_cycle(const BinaryMatrix& h);

bool is_tree(const TannerGraph& g);

/// BFS distance between two bit nodes (even), or nullopt when they lie in
/// different components. Throws std::out_of_range on a bad index.
std::optional<std::size_t> bit_distance(const TannerGraph& g, std::size_t i, std::size_t iprime);

/// Exact perfect-matching count of the bipartite graph of a square 0/1
/// matrix, by recursive backtracking. Deliberately independent of the
/// permanent routine so the two can cross-check each other. Throws
/// std::invalid_argument for a non-square matrix.
BigInt count_perfect_matchings(const BinaryMatrix& h);

/// BFS completion from a root bit: the root gets 1 and crossing a check c
/// away from the root divides by deg(c) - 1; the result is scaled to
/// integers by the product of (deg(c) - 1) over all checks of degree >= 2.
/// Requires a connected graph in which checks at the same BFS distance
/// from the root share one degree; throws std::invalid_argument (naming
/// the offending distance level) otherwise.
IntVector canonical_completion(const TannerGraph& g, std::size_t root);

struct CompletionResult {
  IntVector omega;
  IntVector nu;
  std::vector<std::size_t> jprime;
  bool verified = false;
};

/// Sign-decorated canonical completion: nu_i = +omega_i when the root
/// distance of bit i is divisible by 4, else -omega_i. J' collects the
/// checks with exactly one neighbor strictly closer to the root, and
/// verified records whether the J'-rows of H annihilate nu over the
/// integers.
CompletionResult verify_signed_completion(const BinaryMatrix& h, std::size_t root);

}  // namespace pcwkit
