#pragma once

#include <complex>
#include <vector>

namespace rotfix {

using Complex = std::complex<double>;

/// Dense univariate complex polynomial, coefficients in ascending order.
/// Construction trims the leading coefficients with a relative tolerance
/// of 1e-14 so degree() is trustworthy.
class Poly1 {
public:
  Poly1() : c_(1, Complex(0.0)) {}
  explicit Poly1(std::vector<Complex> coeffs, double trim_tol = 1e-14);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Complex(0.0); }

  Complex eval(Complex z) const;
  Poly1 derivative() const;

  /// Sum |c_k| |z|^k, the natural residual scale at z.
  double residual_scale(Complex z) const;

  double coefficient_scale() const;  // max |c_k|

private:
  std::vector<Complex> c_;
};

/// All complex roots, multiplicity counted, in no particular order.
/// Simultaneous Aberth-Ehrlich iteration; falls back to companion-matrix
/// eigenvalues for roots that fail the residual test
/// |p(z)| <= 1e-13 * residual_scale(z).
std::vector<Complex> all_roots(const Poly1& p);

}  // namespace rotfix
