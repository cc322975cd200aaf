#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pcwkit/bigint.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/subsets.hpp"

namespace pcwkit {

/// Covariance R = (eps^2 I + H_S^T H_S)^{-1} of the Gaussian model
/// conditioned on the complement of S; entry (p, p) is the conditional
/// variance of the bit at position p of S. Solved via a pivoted LDLT
/// factorization carried out in extended precision. Throws
/// std::invalid_argument unless eps > 0 and |S| = m+1.
Eigen::MatrixXd conditional_cov(const BinaryMatrix& h, const ColumnSubset& s, double eps);

/// det(eps^2 I + H_S^T H_S), the squared normalization gamma^2.
double gamma_sq(const BinaryMatrix& h, const ColumnSubset& s, double eps);

/// gamma' * exp(h(U_i | U_complement)) with gamma' = gamma / sqrt(2 pi e);
/// algebraically equal to gamma * sigma_i. Throws std::invalid_argument
/// unless eps > 0 and i is a member of S.
double entropy_form(const BinaryMatrix& h, const ColumnSubset& s, std::size_t i, double eps);

struct GaussianTolerance {
  double relative = 1e-6;
  /// Bound used when the target is zero, where a relative error is
  /// undefined. The product at eps is a positive polynomial in eps^2, so
  /// an absolute bound of the same magnitude as the relative one is the
  /// attainable analogue.
  double zero_absolute = 1e-6;
};

struct GaussianBitRecord {
  std::size_t bit = 0;
  bool in_subset = false;
  /// omega_i^2 for the absdet vector of (H, S); 0 outside S.
  BigInt target = 0;
  /// gamma^2 sigma_i^2 per schedule entry; identically 0 outside S.
  std::vector<double> products;
  std::vector<double> abs_errors;
  bool converged = false;
};

struct GaussianLimitReport {
  std::vector<double> schedule;
  std::vector<GaussianBitRecord> bits;
  bool all_converged = false;
  /// Largest relative error at the smallest eps over nonzero targets.
  double max_rel_error = 0.0;
  /// Largest absolute error at the smallest eps over zero targets in S.
  double max_zero_error = 0.0;
};

/// Tracks gamma^2 sigma_i^2 along a decreasing eps schedule for every bit
/// and compares against the squared absdet vector, which the limit
/// theorem names as the eps -> 0 value. Throws std::invalid_argument for
/// an empty, non-positive, or non-decreasing schedule.
GaussianLimitReport verify_gaussian_limit(const BinaryMatrix& h, const ColumnSubset& s,
                                          const std::vector<double>& schedule,
                                          const GaussianTolerance& tol = {});

/// Coefficients c_0..c_k of det(x I + b) for a square integer matrix b,
/// computed exactly by evaluation at k+1 integer points and rational
/// interpolation.
IntVector shifted_determinant_poly(const IntMatrix& b);

/// Horner evaluation of an integer-coefficient polynomial at a rational.
BigRat evaluate_poly(const IntVector& coeffs, const BigRat& x);

/// The exact rational value of a floating-point number.
BigRat exact_rational(long double x);

/// Exact reference for gamma^2 sigma_i^2 at eps through the determinant
/// identity: det(eps^2 I + H_{S minus i}^T H_{S minus i}) evaluated in
/// rational arithmetic at the dyadic value of eps. Throws unless i is a
/// member of S.
BigRat exact_product_oracle(const BinaryMatrix& h, const ColumnSubset& s, std::size_t i,
                            double eps);

}  // namespace pcwkit
