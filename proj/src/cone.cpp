#include "pcwkit/cone.hpp"

#include <numeric>
#include <stdexcept>

#include "pcwkit/exact_linalg.hpp"
#include "pcwkit/pcw.hpp"

namespace pcwkit {

ConeReport in_fundamental_cone(const BinaryMatrix& h, const RatVector& w) {
  if (w.size() != h.cols()) {
    throw std::invalid_argument("vector length must equal column count");
  }
  ConeReport report;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) {
      report.violated.push_back({ConstraintRef::npos, i});
    } else if (w[i] == 0) {
      report.active.push_back({ConstraintRef::npos, i});
    }
  }
  for (std::size_t j = 0; j < h.rows(); ++j) {
    BigRat row_sum = 0;
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (h(j, i)) row_sum += w[i];
    }
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (!h(j, i)) continue;
      const BigRat rest = row_sum - w[i];
      if (w[i] > rest) {
        report.violated.push_back({j, i});
      } else if (w[i] == rest) {
        report.active.push_back({j, i});
      }
    }
  }
  report.member = report.violated.empty();
  return report;
}

ConeReport in_fundamental_cone(const BinaryMatrix& h, const IntVector& w) {
  RatVector q(w.begin(), w.end());
  return in_fundamental_cone(h, q);
}

bool is_unscaled_pcw(const BinaryMatrix& h, const IntVector& w) {
  if (w.size() != h.cols()) {
    throw std::invalid_argument("vector length must equal column count");
  }
  return in_fundamental_cone(h, w).member && is_codeword(h, mod2_reduce(w));
}

namespace {

template <typename Vec>
PseudoWeight pseudoweight_impl(const Vec& w) {
  using Entry = typename Vec::value_type;
  Entry l1 = 0;
  Entry l2 = 0;
  for (const Entry& x : w) {
    if (x < 0) throw std::invalid_argument("pseudo-weight requires nonnegative entries");
    l1 += x;
    l2 += x * x;
  }
  PseudoWeight pw;
  if (l2 == 0) {
    pw.zero_vector = true;
    return pw;
  }
  pw.value = BigRat(l1) * BigRat(l1) / BigRat(l2);
  return pw;
}

}  // namespace

PseudoWeight awgnc_pseudoweight(const IntVector& w) { return pseudoweight_impl(w); }

PseudoWeight awgnc_pseudoweight(const RatVector& w) { return pseudoweight_impl(w); }

bool is_minimal_pcw(const BinaryMatrix& h, const IntVector& w) {
  const ConeReport report = in_fundamental_cone(h, w);
  if (!report.member) {
    throw std::invalid_argument("minimality is defined only for cone members");
  }
  bool nonzero = false;
  for (const BigInt& x : w) {
    if (x != 0) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) {
    throw std::invalid_argument("minimality is defined only for nonzero vectors");
  }

  const std::size_t n = h.cols();
  IntMatrix normals(report.active.size(), n);
  for (std::size_t r = 0; r < report.active.size(); ++r) {
    const ConstraintRef& c = report.active[r];
    if (c.is_nonnegativity()) {
      normals(r, c.bit) = 1;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (h(c.check, i)) normals(r, i) = 1;
      }
      normals(r, c.bit) = -1;
    }
  }
  return rank_exact(normals) == n - 1;
}

bool is_codeword_scalar_multiple(const BinaryMatrix& h, const IntVector& w) {
  if (w.size() != h.cols()) {
    throw std::invalid_argument("vector length must equal column count");
  }
  BigInt g = 0;
  for (const BigInt& x : w) {
    if (x < 0) return false;
    g = boost::multiprecision::gcd(g, x);
  }
  if (g == 0) return false;
  std::vector<std::uint8_t> c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BigInt q = w[i] / g;
    if (q != 0 && q != 1) return false;
    c[i] = static_cast<std::uint8_t>(q);
  }
  return is_codeword(h, c);
}

WeightHistogram cumulative_histogram(const std::vector<PseudoWeight>& weights,
                                     const std::vector<double>& edges) {
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (!(edges[k - 1] < edges[k])) {
      throw std::invalid_argument("histogram edges must be strictly increasing");
    }
  }
  WeightHistogram hist;
  hist.edges = edges;
  hist.cumulative.assign(edges.size(), 0);
  std::vector<BigRat> rational_edges;
  rational_edges.reserve(edges.size());
  for (double e : edges) rational_edges.emplace_back(e);
  for (const PseudoWeight& pw : weights) {
    if (pw.zero_vector) {
      ++hist.zero_count;
      continue;
    }
    ++hist.total_nonzero;
    for (std::size_t k = 0; k < rational_edges.size(); ++k) {
      if (pw.value <= rational_edges[k]) ++hist.cumulative[k];
    }
  }
  return hist;
}

}  // namespace pcwkit
