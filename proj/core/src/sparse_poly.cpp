#include "rotfix/sparse_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace rotfix {

void SparsePoly::add_term(Exponents exp, Complex c) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: exponent tuple has wrong length");
  for (int e : exp)
    if (e < 0) throw std::invalid_argument("SparsePoly: negative exponent");
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0.0) terms_.emplace(std::move(exp), c);
    return;
  }
  it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

SparsePoly SparsePoly::monomial(int nvars, Exponents exp, Complex c) {
  SparsePoly p(nvars);
  p.add_term(std::move(exp), c);
  return p;
}

Complex SparsePoly::eval(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("SparsePoly::eval: wrong number of values");
  Complex acc = 0.0;
  for (const auto& [exp, c] : terms_) {
    Complex t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < exp[v]; ++k) t *= x[v];
    acc += t;
  }
  return acc;
}

Complex SparsePoly::eval_real(std::span<const double> x) const {
  std::vector<Complex> cx(x.begin(), x.end());
  return eval(cx);
}

SparsePoly SparsePoly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("SparsePoly::partial");
  SparsePoly out(nvars_);
  for (const auto& [exp, c] : terms_) {
    if (exp[var] == 0) continue;
    Exponents e = exp;
    const double k = e[var];
    e[var] -= 1;
    out.add_term(std::move(e), c * k);
  }
  return out;
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [exp, c] : terms_) {
    int d = 0;
    for (int e : exp) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [exp, c] : terms_) {
    int d = 0;
    for (int e : exp) d += e;
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

bool SparsePoly::has_real_coefficients(double tol) const {
  for (const auto& [exp, c] : terms_)
    if (std::abs(c.imag()) > tol * std::max(1.0, std::abs(c.real()))) return false;
  return true;
}

SparsePoly SparsePoly::eliminate_variable(int var, const std::vector<Complex>& replacement) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("SparsePoly::eliminate_variable");
  if (static_cast<int>(replacement.size()) != nvars_ - 1)
    throw std::invalid_argument("eliminate_variable: replacement has wrong length");

  SparsePoly out(nvars_ - 1);
  for (const auto& [exp, c] : terms_) {
    // Start with the monomial in the remaining variables.
    Exponents base;
    base.reserve(nvars_ - 1);
    for (int v = 0; v < nvars_; ++v)
      if (v != var) base.push_back(exp[v]);

    // Multiply by (sum_j r_j y_j)^exp[var] expanded recursively.
    SparsePoly factor(nvars_ - 1);
    factor.add_term(Exponents(nvars_ - 1, 0), 1.0);
    for (int k = 0; k < exp[var]; ++k) {
      SparsePoly next(nvars_ - 1);
      for (const auto& [fe, fc] : factor.terms()) {
        for (int v = 0; v < nvars_ - 1; ++v) {
          if (replacement[v] == 0.0) continue;
          Exponents ne = fe;
          ne[v] += 1;
          next.add_term(std::move(ne), fc * replacement[v]);
        }
      }
      factor = std::move(next);
    }
    for (const auto& [fe, fc] : factor.terms()) {
      Exponents ne = fe;
      for (int v = 0; v < nvars_ - 1; ++v) ne[v] += base[v];
      out.add_term(std::move(ne), fc * c);
    }
  }
  return out;
}

double SparsePoly::coefficient_scale() const {
  double s = 0.0;
  for (const auto& [exp, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

void BivariatePoly::add_term(int i, int j, Complex c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BivariatePoly: negative exponent");
  homogeneous_.reset();
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    if (c != 0.0) terms_.emplace(Key{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

BivariatePoly BivariatePoly::constant(Complex c) {
  BivariatePoly p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::monomial(int i, int j, Complex c) {
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& other) const {
  BivariatePoly out = *this;
  out.homogeneous_.reset();
  for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
  return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& other) const {
  BivariatePoly out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : other.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivariatePoly BivariatePoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("BivariatePoly::pow: negative exponent");
  BivariatePoly acc = BivariatePoly::constant(1.0);
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Complex BivariatePoly::eval(Complex alpha, Complex beta) const {
  Complex acc = 0.0;
  for (const auto& [k, c] : terms_) {
    Complex t = c;
    for (int i = 0; i < k.first; ++i) t *= alpha;
    for (int j = 0; j < k.second; ++j) t *= beta;
    acc += t;
  }
  return acc;
}

int BivariatePoly::total_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) deg = std::max(deg, k.first + k.second);
  return deg;
}

std::optional<int> BivariatePoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [k, c] : terms_) {
    const int d = k.first + k.second;
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

double BivariatePoly::coefficient_scale() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

BivariatePoly BivariatePoly::trimmed(double tol) const {
  const double cut = tol * coefficient_scale();
  BivariatePoly out;
  for (const auto& [k, c] : terms_)
    if (std::abs(c) > cut) out.add_term(k.first, k.second, c);
  out.homogeneous_ = homogeneous_;
  if (out.homogeneous_ && out.homogeneous_degree() &&
      *out.homogeneous_degree() != *out.homogeneous_)
    out.homogeneous_.reset();
  return out;
}

TrigPoly::TrigPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, Complex(0.0));
  c_[0] = Complex(c_[0].real(), 0.0);  // real function: c0 is real
}

Complex TrigPoly::coeff(int m) const {
  const int a = std::abs(m);
  if (a >= static_cast<int>(c_.size())) return 0.0;
  return m >= 0 ? c_[a] : std::conj(c_[a]);
}

void TrigPoly::add(int m, Complex c) {
  // Only the m >= 0 half of the spectrum is stored; the m < 0 terms are
  // implied by conjugate symmetry and must not be added separately.
  if (m < 0) throw std::invalid_argument("TrigPoly::add: negative index");
  if (m >= static_cast<int>(c_.size())) c_.resize(m + 1, Complex(0.0));
  c_[m] += c;
  if (m == 0) c_[0] = Complex(c_[0].real(), 0.0);
}

double TrigPoly::eval(double theta) const {
  double acc = c_[0].real();
  const Complex e = std::polar(1.0, theta);
  Complex em = 1.0;
  for (int m = 1; m < static_cast<int>(c_.size()); ++m) {
    em *= e;
    acc += 2.0 * (c_[m] * em).real();
  }
  return acc;
}

double TrigPoly::deriv(double theta) const {
  double acc = 0.0;
  const Complex e = std::polar(1.0, theta);
  Complex em = 1.0;
  for (int m = 1; m < static_cast<int>(c_.size()); ++m) {
    em *= e;
    acc += 2.0 * (Complex(0.0, m) * c_[m] * em).real();
  }
  return acc;
}

double TrigPoly::coefficient_scale() const {
  double s = std::abs(c_[0]);
  for (int m = 1; m < static_cast<int>(c_.size()); ++m) s += 2.0 * std::abs(c_[m]);
  return s;
}

}  // namespace rotfix
