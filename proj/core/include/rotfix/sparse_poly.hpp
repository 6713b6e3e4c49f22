#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rotfix {

using Complex = std::complex<double>;

/// Sparse multivariate polynomial with complex coefficients, stored as an
/// exponent-tuple -> coefficient map. Zero coefficients are never kept.
class SparsePoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Complex>;

  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Add c * x^exp; merges with an existing term and drops exact zeros.
  void add_term(Exponents exp, Complex c);

  static SparsePoly monomial(int nvars, Exponents exp, Complex c = 1.0);

  Complex eval(std::span<const Complex> x) const;
  Complex eval_real(std::span<const double> x) const;

  /// Partial derivative with respect to variable var.
  SparsePoly partial(int var) const;

  int total_degree() const;  // -1 for the zero polynomial

  /// Degree if every term shares one total degree, nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  bool has_real_coefficients(double tol = 0.0) const;

  /// Substitute variable var by a linear combination of the others
  /// (used to eliminate a coordinate on a hyperplane section); the
  /// returned polynomial has nvars-1 variables.
  SparsePoly eliminate_variable(int var, const std::vector<Complex>& replacement) const;

  double coefficient_scale() const;  // max |c| over terms, 0 if empty

  bool operator==(const SparsePoly& other) const = default;

private:
  int nvars_;
  TermMap terms_;
};

/// Polynomial in the two complex spin variables (alpha, beta). Tracks an
/// optional homogeneity flag so factoring can trust the total degree.
class BivariatePoly {
public:
  using Key = std::pair<int, int>;  // (alpha exponent, beta exponent)
  using TermMap = std::map<Key, Complex>;

  BivariatePoly() = default;

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(int i, int j, Complex c);

  static BivariatePoly constant(Complex c);
  static BivariatePoly monomial(int i, int j, Complex c = 1.0);

  BivariatePoly operator+(const BivariatePoly& other) const;
  BivariatePoly operator*(const BivariatePoly& other) const;
  BivariatePoly pow(int e) const;

  Complex eval(Complex alpha, Complex beta) const;

  int total_degree() const;
  std::optional<int> homogeneous_degree() const;
  void set_homogeneous(int degree) { homogeneous_ = degree; }
  std::optional<int> homogeneous_flag() const { return homogeneous_; }

  double coefficient_scale() const;

  /// Drop terms with |c| <= tol * coefficient_scale().
  BivariatePoly trimmed(double tol = 1e-14) const;

private:
  TermMap terms_;
  std::optional<int> homogeneous_;
};

/// Real trigonometric polynomial stored by its complex Fourier
/// coefficients c[m] for m >= 0 (c[-m] is implicitly conj(c[m])):
///   A(t) = c[0] + sum_{m>=1} 2 Re(c[m] e^{imt}).
class TrigPoly {
public:
  TrigPoly() : c_(1, Complex(0.0)) {}
  explicit TrigPoly(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int m) const;  // signed index, conjugate symmetry applied

  void add(int m, Complex c);  // accumulate into c[m] (m >= 0)

  double eval(double theta) const;
  double deriv(double theta) const;

  double coefficient_scale() const;  // sum of |c[m]| over all m (both signs)

private:
  std::vector<Complex> c_;
};

}  // namespace rotfix
