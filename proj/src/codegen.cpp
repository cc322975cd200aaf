#include "pcwkit/codegen.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcwkit {

namespace {

/// Uniform draw from [0, bound) by rejection, so results depend only on
/// the mt19937_64 stream and not on any library's distribution internals.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

void shuffle_sockets(std::vector<std::size_t>& sockets, std::mt19937_64& rng) {
  for (std::size_t t = sockets.size(); t > 1; --t) {
    const std::uint64_t pick = bounded_draw(rng, t);
    std::swap(sockets[t - 1], sockets[pick]);
  }
}

std::vector<std::vector<std::uint64_t>> column_masks(const BinaryMatrix& h) {
  const std::size_t words = (h.rows() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(h.cols(),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < h.cols(); ++i) {
    for (std::size_t j = 0; j < h.rows(); ++j) {
      if (h(j, i)) masks[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return masks;
}

}  // namespace

BinaryMatrix example_h422() {
  return BinaryMatrix::from_rows({{1, 1, 1, 0}, {0, 1, 1, 1}});
}

BinaryMatrix dumbbell(std::size_t k) {
  if (k < 3) {
    throw std::invalid_argument("dumbbell needs cycles of at least 3 bits");
  }
  BinaryMatrix h(2 * k, 2 * k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    h.set(j, j, true);
    h.set(j, (j + 1) % k, true);
  }
  for (std::size_t j = 0; j < k; ++j) {
    h.set(k + j, k + 1 + j, true);
    h.set(k + j, k + 1 + (j + 1) % k, true);
  }
  h.set(k - 1, k, true);
  h.set(k, k, true);
  return h;
}

BinaryMatrix random_regular_ldpc(const LdpcSpec& spec) {
  if (spec.n == 0 || spec.dv == 0 || spec.dc == 0) {
    throw std::invalid_argument("LDPC parameters must be positive");
  }
  if ((spec.n * spec.dv) % spec.dc != 0) {
    throw std::invalid_argument("n*dv must be divisible by dc");
  }
  const std::size_t m = spec.n * spec.dv / spec.dc;
  const std::size_t edges = spec.n * spec.dv;

  std::vector<std::size_t> sockets;
  sockets.reserve(edges);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t d = 0; d < spec.dv; ++d) sockets.push_back(i);
  }

  std::mt19937_64 rng(spec.seed);
  constexpr std::uint64_t kAttemptBudget = 10000;
  for (std::uint64_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
    shuffle_sockets(sockets, rng);
    BinaryMatrix h(m, spec.n);
    bool parallel = false;
    for (std::size_t t = 0; t < edges && !parallel; ++t) {
      const std::size_t bit = sockets[t];
      const std::size_t check = t / spec.dc;
      if (h(check, bit)) {
        parallel = true;
      } else {
        h.set(check, bit, true);
      }
    }
    if (!parallel) return h;
  }
  throw std::runtime_error("socket pairing kept producing parallel edges");
}

std::uint64_t count_four_cycles(const BinaryMatrix& h) {
  const auto masks = column_masks(h);
  const std::size_t words = masks.empty() ? 0 : masks[0].size();
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < h.cols(); ++a) {
    for (std::size_t b = a + 1; b < h.cols(); ++b) {
      std::uint64_t common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common += static_cast<std::uint64_t>(std::popcount(masks[a][w] & masks[b][w]));
      }
      total += common * (common - 1) / 2;
    }
  }
  return total;
}

FourCycleRemoval remove_four_cycles(const BinaryMatrix& h, std::uint64_t seed,
                                    std::uint64_t max_iters) {
  if (h.rows() == 0 || h.cols() == 0 || h.ones_count() == 0) {
    throw std::invalid_argument("four-cycle removal needs a nonempty matrix");
  }
  const std::size_t dc = h.row_weight(0);
  const std::size_t dv = h.col_weight(0);
  for (std::size_t j = 0; j < h.rows(); ++j) {
    if (h.row_weight(j) != dc) {
      throw std::invalid_argument("four-cycle removal requires regular row degrees");
    }
  }
  for (std::size_t i = 0; i < h.cols(); ++i) {
    if (h.col_weight(i) != dv) {
      throw std::invalid_argument("four-cycle removal requires regular column degrees");
    }
  }

  FourCycleRemoval result;
  result.matrix = h;

  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  for (std::size_t j = 0; j < h.rows(); ++j) {
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (h(j, i)) edge_list.emplace_back(j, i);
    }
  }

  std::mt19937_64 rng(seed);
  std::uint64_t current = count_four_cycles(result.matrix);
  BinaryMatrix best = result.matrix;
  std::uint64_t best_count = current;

  while (current > 0 && result.iterations < max_iters) {
    ++result.iterations;
    const std::size_t e1 = bounded_draw(rng, edge_list.size());
    const std::size_t e2 = bounded_draw(rng, edge_list.size());
    auto [j1, i1] = edge_list[e1];
    auto [j2, i2] = edge_list[e2];
    if (j1 == j2 || i1 == i2) continue;
    if (result.matrix(j1, i2) || result.matrix(j2, i1)) continue;

    result.matrix.set(j1, i1, false);
    result.matrix.set(j2, i2, false);
    result.matrix.set(j1, i2, true);
    result.matrix.set(j2, i1, true);
    const std::uint64_t swapped = count_four_cycles(result.matrix);
    if (swapped <= current) {
      current = swapped;
      edge_list[e1] = {j1, i2};
      edge_list[e2] = {j2, i1};
      if (current < best_count) {
        best = result.matrix;
        best_count = current;
      }
    } else {
      result.matrix.set(j1, i2, false);
      result.matrix.set(j2, i1, false);
      result.matrix.set(j1, i1, true);
      result.matrix.set(j2, i2, true);
    }
  }

  if (current > 0) {
    result.matrix = std::move(best);
    current = best_count;
  }
  result.remaining_four_cycles = current;
  result.success = current == 0;
  return result;
}

}  // namespace pcwkit
