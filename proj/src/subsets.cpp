#include "pcwkit/subsets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pcwkit {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul_div(std::uint64_t acc, std::uint64_t num,
                          std::uint64_t den) {
  // acc * num / den without overflow; the division is exact for the
  // binomial recurrence acc = C(n, j-1), num = n - j + 1, den = j.
  if (acc == kSaturated) return kSaturated;
  const unsigned __int128 wide = static_cast<unsigned __int128>(acc) * num;
  const unsigned __int128 result = wide / den;
  if (result > kSaturated) return kSaturated;
  return static_cast<std::uint64_t>(result);
}
}  // namespace

ColumnSubset::ColumnSubset(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k] <= indices_[k - 1]) {
      throw std::invalid_argument("subset indices must be strictly increasing");
    }
  }
}

bool ColumnSubset::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::size_t ColumnSubset::position_of(std::size_t i) const {
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) {
    throw std::invalid_argument("index is not a member of the subset");
  }
  return static_cast<std::size_t>(it - indices_.begin());
}

ColumnSubset ColumnSubset::erase(std::size_t i) const {
  const std::size_t pos = position_of(i);
  std::vector<std::size_t> out = indices_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return ColumnSubset(std::move(out));
}

std::vector<std::size_t> ColumnSubset::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n - indices_.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < indices_.size() && indices_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    acc = sat_mul_div(acc, n - j + 1, j);
  }
  return acc;
}

SubsetEnumerator::SubsetEnumerator(std::size_t n, std::size_t k,
                                   std::uint64_t start_rank)
    : n_(n), k_(k), total_(binomial(n, k)), done_(start_rank >= total_) {
  if (k > n) throw std::invalid_argument("subset size exceeds ground set");
  if (!done_) current_ = unrank(n, k, start_rank);
}

bool SubsetEnumerator::next() {
  if (done_) return false;
  std::vector<std::size_t> idx = current_.indices();
  const std::size_t k = idx.size();
  if (k == 0) {
    done_ = true;  // the single empty subset
    return false;
  }
  // Find the rightmost element that can still move up.
  std::size_t pos = k;
  for (std::size_t t = k; t-- > 0;) {
    if (idx[t] < n_ - k + t) {
      pos = t;
      break;
    }
  }
  if (pos == k) {
    done_ = true;
    return false;
  }
  ++idx[pos];
  for (std::size_t t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  current_ = ColumnSubset(std::move(idx));
  return true;
}

ColumnSubset SubsetEnumerator::unrank(std::size_t n, std::size_t k,
                                      std::uint64_t r) {
  if (r >= binomial(n, k)) {
    throw std::out_of_range("subset rank out of range");
  }
  std::vector<std::size_t> idx;
  idx.reserve(k);
  std::size_t x = 0;
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      const std::uint64_t block = binomial(n - 1 - x, k - 1 - t);
      if (block <= r) {
        r -= block;
        ++x;
      } else {
        break;
      }
    }
    idx.push_back(x);
    ++x;
  }
  return ColumnSubset(std::move(idx));
}

std::vector<ColumnSubset> all_subsets(std::size_t n, std::size_t k) {
  std::vector<ColumnSubset> out;
  SubsetEnumerator e(n, k);
  while (!e.done()) {
    out.push_back(e.current());
    e.next();
  }
  return out;
}

}  // namespace pcwkit
