#pragma once

#include <cstddef>
#include <cstdint>

#include "pcwkit/matrix.hpp"

namespace pcwkit {

/// The 2x4 matrix [[1,1,1,0],[0,1,1,1]] of a [4,2,2] code.
BinaryMatrix example_h422();

/// Dumbbell code on two k-cycles joined by a bridge bit: bits 0..k-1 and
/// checks 0..k-1 form the first cycle, bits k+1..2k and checks k..2k-1 the
/// second, and bit k rides on checks k-1 and k (the two degree-3 checks).
/// k = 3 gives a [7,2,3] code, k = 4 a [9,2,4] code. Throws
/// std::invalid_argument for k < 3.
BinaryMatrix dumbbell(std::size_t k);

struct LdpcSpec {
  std::size_t n = 0;
  std::size_t dv = 0;
  std::size_t dc = 0;
  std::uint64_t seed = 0;
};

/// Configuration-model (dv, dc)-regular matrix: n*dv bit sockets paired
/// with a seeded shuffle against m*dc check sockets, re-drawn until no
/// parallel edges appear. Deterministic per seed. Throws
/// std::invalid_argument when n*dv is not divisible by dc and
/// std::runtime_error when the retry budget runs out.
BinaryMatrix random_regular_ldpc(const LdpcSpec& spec);

/// Number of four-cycles in the Tanner graph: sum over column pairs of
/// C(common rows, 2).
std::uint64_t count_four_cycles(const BinaryMatrix& h);

struct FourCycleRemoval {
  BinaryMatrix matrix;
  bool success = false;
  std::uint64_t iterations = 0;
  std::uint64_t remaining_four_cycles = 0;
};

/// Hill-climbing double-edge swaps: replace edges (j,i),(j',i') by
/// (j,i'),(j',i) when that creates no parallel edge and does not increase
/// the four-cycle count; stop at zero four-cycles or when the iteration
/// budget runs out (success = false carries the best matrix found).
/// Degree sequences are preserved exactly. Throws std::invalid_argument
/// unless H is degree-regular on both sides.
FourCycleRemoval remove_four_cycles(const BinaryMatrix& h, std::uint64_t seed,
                                    std::uint64_t max_iters = 10000);

}  // namespace pcwkit
