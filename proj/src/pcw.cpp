#include "pcwkit/pcw.hpp"

#include <stdexcept>

#include "pcwkit/exact_linalg.hpp"

namespace pcwkit {

namespace {

void check_subset_contract(const BinaryMatrix& h, const ColumnSubset& s) {
  if (h.rows() >= h.cols()) {
    throw std::invalid_argument("constructions require m < n");
  }
  if (s.size() != h.rows() + 1) {
    throw std::invalid_argument("subset size must be m+1");
  }
  if (s.size() > 0 && s[s.size() - 1] >= h.cols()) {
    throw std::out_of_range("subset index exceeds column count");
  }
}

}  // namespace

IntVector det_vector(const BinaryMatrix& h, const ColumnSubset& s) {
  check_subset_contract(h, s);
  IntVector nu(h.cols());
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const std::size_t i = s[pos];
    const ColumnSubset rest = s.erase(i);
    BigInt d = determinant(columns(lift(h), rest.indices()));
    if (pos % 2 == 1) d = -d;
    nu[i] = std::move(d);
  }
  return nu;
}

IntVector absdet_vector(const BinaryMatrix& h, const ColumnSubset& s) {
  IntVector omega = det_vector(h, s);
  for (BigInt& x : omega) {
    if (x < 0) x = -x;
  }
  return omega;
}

IntVector perm_vector(const BinaryMatrix& h, const ColumnSubset& s) {
  check_subset_contract(h, s);
  IntVector omega(h.cols());
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const std::size_t i = s[pos];
    const ColumnSubset rest = s.erase(i);
    omega[i] = permanent(columns(lift(h), rest.indices()));
  }
  return omega;
}

IntVector z_syndrome(const BinaryMatrix& h, const IntVector& v) {
  if (v.size() != h.cols()) {
    throw std::invalid_argument("vector length must equal column count");
  }
  IntVector s(h.rows());
  for (std::size_t j = 0; j < h.rows(); ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (h(j, i)) acc += v[i];
    }
    s[j] = std::move(acc);
  }
  return s;
}

std::vector<std::uint8_t> mod2_reduce(const IntVector& v) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = is_odd(v[k]) ? 1 : 0;
  }
  return out;
}

bool is_codeword(const BinaryMatrix& h, const std::vector<std::uint8_t>& c) {
  if (c.size() != h.cols()) {
    throw std::invalid_argument("vector length must equal column count");
  }
  for (std::size_t j = 0; j < h.rows(); ++j) {
    unsigned parity = 0;
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (h(j, i)) parity ^= (c[i] & 1U);
    }
    if (parity) return false;
  }
  return true;
}

}  // namespace pcwkit
