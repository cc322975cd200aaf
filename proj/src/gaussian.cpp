#include "pcwkit/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pcwkit/exact_linalg.hpp"
#include "pcwkit/pcw.hpp"

namespace pcwkit {

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

void check_gaussian_contract(const BinaryMatrix& h, const ColumnSubset& s, double eps) {
  if (!(eps > 0)) {
    throw std::invalid_argument("eps must be positive");
  }
  if (s.size() != h.rows() + 1) {
    throw std::invalid_argument("subset size must be m+1");
  }
  if (s.size() > 0 && s[s.size() - 1] >= h.cols()) {
    throw std::out_of_range("subset index exceeds column count");
  }
}

MatrixXld shifted_gram(const BinaryMatrix& h, const ColumnSubset& s, long double eps) {
  const std::size_t k = s.size();
  MatrixXld hs(h.rows(), k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t j = 0; j < h.rows(); ++j) {
      hs(j, p) = h(j, s[p]) ? 1.0L : 0.0L;
    }
  }
  MatrixXld g = hs.transpose() * hs;
  g.diagonal().array() += eps * eps;
  return g;
}

struct FactoredModel {
  long double gamma_sq = 0;
  MatrixXld cov;
};

FactoredModel factor_model(const BinaryMatrix& h, const ColumnSubset& s, long double eps) {
  const MatrixXld g = shifted_gram(h, s, eps);
  Eigen::LDLT<MatrixXld> ldlt(g);
  FactoredModel out;
  out.gamma_sq = ldlt.vectorD().prod();
  out.cov = ldlt.solve(MatrixXld::Identity(g.rows(), g.cols()));
  return out;
}

}  // namespace

Eigen::MatrixXd conditional_cov(const BinaryMatrix& h, const ColumnSubset& s, double eps) {
  check_gaussian_contract(h, s, eps);
  return factor_model(h, s, eps).cov.cast<double>();
}

double gamma_sq(const BinaryMatrix& h, const ColumnSubset& s, double eps) {
  check_gaussian_contract(h, s, eps);
  const MatrixXld g = shifted_gram(h, s, eps);
  return static_cast<double>(Eigen::LDLT<MatrixXld>(g).vectorD().prod());
}

double entropy_form(const BinaryMatrix& h, const ColumnSubset& s, std::size_t i, double eps) {
  check_gaussian_contract(h, s, eps);
  if (!s.contains(i)) {
    throw std::invalid_argument("bit must belong to the subset");
  }
  const FactoredModel model = factor_model(h, s, eps);
  const long double two_pi_e =
      2.0L * std::numbers::pi_v<long double> * std::numbers::e_v<long double>;
  const long double gamma_prime = std::sqrt(model.gamma_sq / two_pi_e);
  const long double sigma_sq = model.cov(static_cast<Eigen::Index>(s.position_of(i)),
                                         static_cast<Eigen::Index>(s.position_of(i)));
  const long double entropy = 0.5L * std::log(two_pi_e * sigma_sq);
  return static_cast<double>(gamma_prime * std::exp(entropy));
}

GaussianLimitReport verify_gaussian_limit(const BinaryMatrix& h, const ColumnSubset& s,
                                          const std::vector<double>& schedule,
                                          const GaussianTolerance& tol) {
  if (schedule.empty()) {
    throw std::invalid_argument("eps schedule must be nonempty");
  }
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0)) {
      throw std::invalid_argument("eps schedule must be positive");
    }
    if (k > 0 && !(schedule[k] < schedule[k - 1])) {
      throw std::invalid_argument("eps schedule must be strictly decreasing");
    }
  }
  check_gaussian_contract(h, s, schedule.front());

  const IntVector omega = absdet_vector(h, s);

  GaussianLimitReport report;
  report.schedule = schedule;
  report.bits.resize(h.cols());
  for (std::size_t i = 0; i < h.cols(); ++i) {
    GaussianBitRecord& rec = report.bits[i];
    rec.bit = i;
    rec.in_subset = s.contains(i);
    rec.target = omega[i] * omega[i];
    rec.products.assign(schedule.size(), 0.0);
    rec.abs_errors.assign(schedule.size(), 0.0);
  }

  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const FactoredModel model = factor_model(h, s, static_cast<long double>(schedule[k]));
    for (std::size_t p = 0; p < s.size(); ++p) {
      GaussianBitRecord& rec = report.bits[s[p]];
      const long double product =
          model.gamma_sq * model.cov(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
      const long double target = static_cast<long double>(to_double(rec.target));
      rec.products[k] = static_cast<double>(product);
      rec.abs_errors[k] = static_cast<double>(std::abs(product - target));
    }
  }

  report.all_converged = true;
  report.max_rel_error = 0.0;
  report.max_zero_error = 0.0;
  for (std::size_t i = 0; i < h.cols(); ++i) {
    GaussianBitRecord& rec = report.bits[i];
    if (!rec.in_subset) {
      rec.converged = true;
      continue;
    }
    const double final_error = rec.abs_errors.back();
    if (rec.target == 0) {
      rec.converged = final_error <= tol.zero_absolute;
      report.max_zero_error = std::max(report.max_zero_error, final_error);
    } else {
      const double rel = final_error / to_double(rec.target);
      rec.converged = rel <= tol.relative;
      report.max_rel_error = std::max(report.max_rel_error, rel);
    }
    report.all_converged = report.all_converged && rec.converged;
  }
  return report;
}

IntVector shifted_determinant_poly(const IntMatrix& b) {
  if (b.rows() != b.cols()) {
    throw std::invalid_argument("shifted determinant needs a square matrix");
  }
  const std::size_t k = b.rows();

  IntVector values(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    IntMatrix shifted = b;
    for (std::size_t d = 0; d < k; ++d) shifted(d, d) += BigInt(t);
    values[t] = determinant(shifted);
  }

  RatVector coeffs(k + 1, BigRat(0));
  for (std::size_t t = 0; t <= k; ++t) {
    // Basis polynomial prod_{s != t} (x - s), built by repeated
    // multiplication, then scaled by values[t] / prod_{s != t} (t - s).
    IntVector basis{1};
    BigInt denom = 1;
    for (std::size_t sn = 0; sn <= k; ++sn) {
      if (sn == t) continue;
      IntVector next(basis.size() + 1, BigInt(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * BigInt(sn);
      }
      basis = std::move(next);
      denom *= BigInt(t) - BigInt(sn);
    }
    const BigRat weight = BigRat(values[t]) / BigRat(denom);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      coeffs[d] += weight * BigRat(basis[d]);
    }
  }

  IntVector out(k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    if (boost::multiprecision::denominator(coeffs[d]) != 1) {
      throw std::logic_error("interpolated coefficients must be integral");
    }
    out[d] = boost::multiprecision::numerator(coeffs[d]);
  }
  return out;
}

BigRat evaluate_poly(const IntVector& coeffs, const BigRat& x) {
  BigRat acc = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    acc = acc * x + BigRat(coeffs[d]);
  }
  return acc;
}

BigRat exact_rational(long double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("exact_rational requires a finite value");
  }
  if (x == 0.0L) return BigRat(0);
  const bool negative = x < 0.0L;
  int exp = 0;
  long double mantissa = std::frexp(negative ? -x : x, &exp);
  // Scale the mantissa to an integer; 64 bits cover the x87 significand.
  mantissa = std::ldexp(mantissa, 64);
  exp -= 64;
  const auto scaled = static_cast<unsigned long long>(mantissa);
  if (static_cast<long double>(scaled) != mantissa) {
    throw std::logic_error("mantissa extraction lost precision");
  }
  BigRat out((BigInt(scaled)));
  if (exp >= 0) {
    out *= BigRat(BigInt(1) << exp);
  } else {
    out /= BigRat(BigInt(1) << (-exp));
  }
  if (negative) out = -out;
  return out;
}

BigRat exact_product_oracle(const BinaryMatrix& h, const ColumnSubset& s, std::size_t i,
                            double eps) {
  check_gaussian_contract(h, s, eps);
  if (!s.contains(i)) {
    throw std::invalid_argument("bit must belong to the subset");
  }
  const ColumnSubset rest = s.erase(i);
  const IntMatrix a = columns(lift(h), rest.indices());
  const IntMatrix b = gram_matrix(a);
  const IntVector poly = shifted_determinant_poly(b);
  const BigRat e = exact_rational(static_cast<long double>(eps));
  return evaluate_poly(poly, e * e);
}

}  // namespace pcwkit
