#include "pcwkit/tanner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcwkit {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

/// Unified node indexing for BFS: bits are 0..n-1, checks n..n+m-1.
struct FlatGraph {
  std::size_t bits;
  std::vector<std::vector<std::size_t>> adj;

  explicit FlatGraph(const TannerGraph& g) : bits(g.bit_count()) {
    adj.resize(g.bit_count() + g.check_count());
    for (std::size_t i = 0; i < g.bit_count(); ++i) {
      for (std::size_t j : g.checks_of(i)) adj[i].push_back(bits + j);
    }
    for (std::size_t j = 0; j < g.check_count(); ++j) {
      for (std::size_t i : g.bits_of(j)) adj[bits + j].push_back(i);
    }
  }
};

std::vector<std::size_t> bfs_distances(const FlatGraph& fg, std::size_t start) {
  std::vector<std::size_t> dist(fg.adj.size(), kUnvisited);
  std::deque<std::size_t> queue;
  dist[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : fg.adj[u]) {
      if (dist[v] == kUnvisited) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

TannerGraph::TannerGraph(const BinaryMatrix& h) {
  bit_adj_.resize(h.cols());
  check_adj_.resize(h.rows());
  for (std::size_t j = 0; j < h.rows(); ++j) {
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (h(j, i)) {
        check_adj_[j].push_back(i);
        bit_adj_[i].push_back(j);
        ++edges_;
      }
    }
  }
}

std::optional<std::size_t> girth(const TannerGraph& g) {
  const FlatGraph fg(g);
  const std::size_t total = fg.adj.size();
  std::size_t best = kUnvisited;
  std::vector<std::size_t> dist(total), parent(total);
  for (std::size_t start = 0; start < total; ++start) {
    std::fill(dist.begin(), dist.end(), kUnvisited);
    std::fill(parent.begin(), parent.end(), kUnvisited);
    std::deque<std::size_t> queue;
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : fg.adj[u]) {
        if (dist[v] == kUnvisited) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == kUnvisited) return std::nullopt;
  return best;
}

bool has_four_cycle(const BinaryMatrix& h) {
  const std::size_t words = (h.rows() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(h.cols(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < h.cols(); ++i) {
    for (std::size_t j = 0; j < h.rows(); ++j) {
      if (h(j, i)) masks[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  for (std::size_t a = 0; a < h.cols(); ++a) {
    for (std::size_t b = a + 1; b < h.cols(); ++b) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common += static_cast<std::size_t>(std::popcount(masks[a][w] & masks[b][w]));
        if (common >= 2) return true;
      }
    }
  }
  return false;
}

bool is_tree(const TannerGraph& g) {
  const FlatGraph fg(g);
  const std::size_t total = fg.adj.size();
  std::size_t components = 0;
  std::vector<bool> seen(total, false);
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++components;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : fg.adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return g.edge_count() == total - components;
}

std::optional<std::size_t> bit_distance(const TannerGraph& g, std::size_t i, std::size_t iprime) {
  if (i >= g.bit_count() || iprime >= g.bit_count()) {
    throw std::out_of_range("bit index out of range");
  }
  const FlatGraph fg(g);
  const auto dist = bfs_distances(fg, i);
  if (dist[iprime] == kUnvisited) return std::nullopt;
  return dist[iprime];
}

BigInt count_perfect_matchings(const BinaryMatrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("perfect matchings need equal side sizes");
  }
  const std::size_t n = h.rows();
  if (n > 32) {
    throw std::invalid_argument("matching enumeration supports up to 32 nodes per side");
  }
  BigInt count = 0;
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col] || !h(row, col)) continue;
      used[col] = true;
      self(self, row + 1);
      used[col] = false;
    }
  };
  recurse(recurse, 0);
  return count;
}

IntVector canonical_completion(const TannerGraph& g, std::size_t root) {
  if (root >= g.bit_count()) {
    throw std::out_of_range("root bit index out of range");
  }
  const FlatGraph fg(g);
  const auto dist = bfs_distances(fg, root);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnvisited) {
      throw std::invalid_argument("canonical completion requires a connected graph");
    }
  }

  std::size_t max_check_level = 0;
  for (std::size_t j = 0; j < g.check_count(); ++j) {
    max_check_level = std::max(max_check_level, dist[fg.bits + j]);
  }
  std::vector<std::size_t> level_degree(max_check_level + 1, 0);
  for (std::size_t j = 0; j < g.check_count(); ++j) {
    const std::size_t level = dist[fg.bits + j];
    const std::size_t deg = g.check_degree(j);
    if (level_degree[level] == 0) {
      level_degree[level] = deg;
    } else if (level_degree[level] != deg) {
      std::ostringstream msg;
      msg << "checks at distance " << level << " from the root have mixed degrees";
      throw std::invalid_argument(msg.str());
    }
  }

  BigInt scale = 1;
  for (std::size_t j = 0; j < g.check_count(); ++j) {
    const std::size_t deg = g.check_degree(j);
    if (deg >= 2) scale *= BigInt(deg - 1);
  }

  std::size_t max_bit_level = 0;
  for (std::size_t i = 0; i < g.bit_count(); ++i) {
    max_bit_level = std::max(max_bit_level, dist[i]);
  }
  std::vector<BigRat> level_value(max_bit_level + 1);
  level_value[0] = 1;
  for (std::size_t level = 2; level <= max_bit_level; level += 2) {
    const std::size_t deg = level_degree[level - 1];
    level_value[level] = level_value[level - 2] / BigInt(deg - 1);
  }

  IntVector omega(g.bit_count());
  for (std::size_t i = 0; i < g.bit_count(); ++i) {
    const BigRat scaled = level_value[dist[i]] * scale;
    if (boost::multiprecision::denominator(scaled) != 1) {
      throw std::logic_error("completion scale failed to clear denominators");
    }
    omega[i] = boost::multiprecision::numerator(scaled);
  }
  return omega;
}

CompletionResult verify_signed_completion(const BinaryMatrix& h, std::size_t root) {
  const TannerGraph g(h);
  CompletionResult result;
  result.omega = canonical_completion(g, root);

  const FlatGraph fg(g);
  const auto dist = bfs_distances(fg, root);

  result.nu.resize(g.bit_count());
  for (std::size_t i = 0; i < g.bit_count(); ++i) {
    result.nu[i] = (dist[i] % 4 == 0) ? result.omega[i] : -result.omega[i];
  }

  for (std::size_t j = 0; j < g.check_count(); ++j) {
    const std::size_t level = dist[fg.bits + j];
    std::size_t closer = 0;
    for (std::size_t i : g.bits_of(j)) {
      if (dist[i] + 1 == level) ++closer;
    }
    if (closer == 1) result.jprime.push_back(j);
  }

  result.verified = true;
  for (std::size_t j : result.jprime) {
    BigInt acc = 0;
    for (std::size_t i : g.bits_of(j)) acc += result.nu[i];
    if (acc != 0) {
      result.verified = false;
      break;
    }
  }
  return result;
}

}  // namespace pcwkit
