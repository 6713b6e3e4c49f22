#include "rotfix/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace rotfix {

Poly1::Poly1(std::vector<Complex> coeffs, double trim_tol) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, Complex(0.0));
  double scale = 0.0;
  for (const Complex& v : c_) scale = std::max(scale, std::abs(v));
  const double cut = trim_tol * scale;
  while (c_.size() > 1 && std::abs(c_.back()) <= cut) c_.pop_back();
  if (c_.size() == 1 && std::abs(c_[0]) <= cut) c_[0] = 0.0;
}

Complex Poly1::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (c_.size() == 1) return Poly1();
  std::vector<Complex> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Poly1(std::move(d), 0.0);
}

double Poly1::residual_scale(Complex z) const {
  const double az = std::abs(z);
  double acc = 0.0, zp = 1.0;
  for (const Complex& v : c_) {
    acc += std::abs(v) * zp;
    zp *= az;
  }
  return acc;
}

double Poly1::coefficient_scale() const {
  double s = 0.0;
  for (const Complex& v : c_) s = std::max(s, std::abs(v));
  return s;
}

namespace {

bool converged(const Poly1& p, Complex z) {
  return std::abs(p.eval(z)) <= 1e-13 * std::max(1e-300, p.residual_scale(z));
}

std::vector<Complex> companion_roots(const Poly1& p) {
  const int d = p.degree();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = p.coeffs().back();
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) m(i + 1, i) = 1.0;
    m(i, d - 1) = -p.coeffs()[i] / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

// One guarded Newton polish pass.
Complex polish(const Poly1& p, const Poly1& dp, Complex z) {
  for (int it = 0; it < 24; ++it) {
    const Complex pv = p.eval(z);
    const Complex dv = dp.eval(z);
    if (std::abs(dv) == 0.0) break;
    const Complex step = pv / dv;
    const Complex znew = z - step;
    if (std::abs(p.eval(znew)) >= std::abs(pv)) break;
    z = znew;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> all_roots(const Poly1& p) {
  if (p.is_zero()) throw std::invalid_argument("all_roots: zero polynomial");
  const int d = p.degree();
  if (d == 0) return {};
  if (d == 1) return {-p.coeff(0) / p.coeff(1)};

  // Roots at the origin come out exactly.
  int zeros_at_origin = 0;
  {
    const double scale = p.coefficient_scale();
    while (zeros_at_origin < d && std::abs(p.coeff(zeros_at_origin)) <= 1e-14 * scale)
      ++zeros_at_origin;
  }
  std::vector<Complex> roots(zeros_at_origin, Complex(0.0));
  if (zeros_at_origin == d) return roots;

  std::vector<Complex> work(p.coeffs().begin() + zeros_at_origin, p.coeffs().end());
  const Poly1 q(std::move(work), 0.0);
  const Poly1 dq = q.derivative();
  const int dd = q.degree();

  // Cauchy-style inclusion radius for the starting circle.
  double radius = 0.0;
  for (int k = 0; k < dd; ++k)
    radius = std::max(radius, std::abs(q.coeff(k) / q.coeffs().back()));
  radius = 1.0 + radius;

  std::vector<Complex> z(dd);
  for (int k = 0; k < dd; ++k)
    z[k] = std::polar(radius, 2.0 * M_PI * k / dd + 0.43) ;

  bool all_ok = false;
  for (int iter = 0; iter < 400 && !all_ok; ++iter) {
    all_ok = true;
    double max_step = 0.0;
    for (int k = 0; k < dd; ++k) {
      const Complex pv = q.eval(z[k]);
      if (std::abs(pv) <= 1e-14 * std::max(1e-300, q.residual_scale(z[k]))) continue;
      const Complex dv = dq.eval(z[k]);
      Complex w;
      if (dv != 0.0) {
        const Complex newton = pv / dv;
        Complex sum = 0.0;
        for (int j = 0; j < dd; ++j)
          if (j != k) sum += 1.0 / (z[k] - z[j]);
        const Complex denom = 1.0 - newton * sum;
        w = (std::abs(denom) > 1e-30) ? newton / denom : newton;
      } else {
        // nudge off the critical point
        w = Complex(1e-8 * (1.0 + std::abs(z[k])), 1e-8);
      }
      z[k] -= w;
      max_step = std::max(max_step, std::abs(w));
      all_ok = false;
    }
    if (max_step <= 1e-16 * radius) break;
  }

  // Verify; rescue stragglers with companion-matrix eigenvalues.
  bool need_fallback = false;
  for (int k = 0; k < dd; ++k) {
    z[k] = polish(q, dq, z[k]);
    if (!converged(q, z[k])) need_fallback = true;
  }
  if (need_fallback) {
    std::vector<Complex> cz = companion_roots(q);
    for (auto& r : cz) r = polish(q, dq, r);
    z = std::move(cz);
  }

  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace rotfix
