#include "rotfix/fixing.hpp"

#include <algorithm>
#include <cmath>

namespace rotfix {

namespace {

// Double-double helpers (Dekker/Knuth); enough to keep (x y)^(2k-1)
// accurate for the exponents the plane fixing function needs.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  const DD s = two_sum(p.hi, p.lo);
  return s;
}

DD dd_pow(DD base, int e) {
  DD acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc = dd_mul(acc, base);
    base = dd_mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace

double astrelin_eval(const PointSystem& s) {
  if (s.dim() != 2) throw DimensionError("astrelin_eval: planar system required");
  // Neumaier summation over the compensated powers.
  double sum = 0.0, comp = 0.0;
  auto accumulate = [&](double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  };
  for (int k = 0; k < s.size(); ++k) {
    const DD xy = two_prod(s.point(k).x(), s.point(k).y());
    const DD term = dd_pow(xy, 2 * k + 1);
    if (!std::isfinite(term.hi))
      throw std::overflow_error("astrelin_eval: term exceeds floating range");
    accumulate(term.hi);
    accumulate(term.lo);
  }
  const double result = sum + comp;
  if (!std::isfinite(result))
    throw std::overflow_error("astrelin_eval: sum exceeds floating range");
  return result;
}

double astrelin_orbit_derivative(const PointSystem& s) {
  if (s.dim() != 2) throw DimensionError("astrelin_orbit_derivative: planar system required");
  double sum = 0.0;
  for (int k = 0; k < s.size(); ++k) {
    const double x = s.point(k).x(), y = s.point(k).y();
    const double m = 2 * k + 1;
    sum += m * std::pow(x * y, 2 * k) * (x * x - y * y);
  }
  return sum;
}

TrigPoly astrelin_orbit_series(const PointSystem& s) {
  if (s.dim() != 2) throw DimensionError("astrelin_orbit_series: planar system required");
  TrigPoly a;
  for (int k = 0; k < s.size(); ++k) {
    const double x = s.point(k).x(), y = s.point(k).y();
    const double alpha = x * y;
    const double beta = 0.5 * (x * x - y * y);
    const Complex gamma(0.5 * alpha, -0.5 * beta);
    const int m = 2 * k + 1;  // odd power of the k-th bracket
    if (gamma == 0.0) continue;
    // (g e^{2it} + conj(g) e^{-2it})^m expanded binomially; only the
    // positive-frequency half is stored, the rest is conjugate-implied.
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
      const int freq = 4 * j - 2 * m;  // frequency of e^{i freq t}
      if (freq > 0) {
        Complex coeff = binom;
        for (int t = 0; t < j; ++t) coeff *= gamma;
        for (int t = 0; t < m - j; ++t) coeff *= std::conj(gamma);
        a.add(freq, coeff);
      }
      binom = binom * (m - j) / (j + 1);
    }
  }
  return a;
}

SparsePoly make_fermat(int n, int half_degree) {
  if (n < 1) throw std::invalid_argument("make_fermat: n must be positive");
  if (half_degree < 1) throw std::invalid_argument("make_fermat: half degree must be positive");
  SparsePoly f(n);
  for (int j = 0; j < n; ++j) {
    SparsePoly::Exponents e(n, 0);
    e[j] = 2 * half_degree;
    f.add_term(std::move(e), 1.0);
  }
  return f;
}

FixingSystem make_fixing_system(SparsePoly f, std::vector<int> h_exponents,
                                std::string provenance) {
  if (f.empty()) throw std::invalid_argument("fixing system: F is identically zero");
  const auto deg = f.homogeneous_degree();
  if (!deg) throw std::invalid_argument("fixing system: F is not homogeneous");
  if (*deg % 2 != 0 || *deg == 0)
    throw std::invalid_argument("fixing system: F must have positive even degree");
  const int n = f.nvars();
  if (static_cast<int>(h_exponents.size()) != n)
    throw std::invalid_argument("fixing system: H needs one exponent per variable");
  for (size_t i = 0; i < h_exponents.size(); ++i) {
    if (h_exponents[i] <= 0)
      throw std::invalid_argument("fixing system: H exponents must be positive");
    if (i > 0 && h_exponents[i - 1] <= h_exponents[i])
      throw std::invalid_argument("fixing system: H exponents must strictly decrease");
  }
  FixingSystem fs;
  fs.f = std::move(f);
  fs.h_exponents = std::move(h_exponents);
  fs.provenance = std::move(provenance);
  fs.n = n;
  fs.half_degree = *deg / 2;
  return fs;
}

bool is_catalog_provenance(const FixingSystem& fs) {
  return fs.provenance.rfind("catalog:", 0) == 0;
}

SparsePoly h_polynomial(const FixingSystem& fs) {
  SparsePoly h(fs.n);
  for (int j = 0; j < fs.n; ++j) {
    SparsePoly::Exponents e(fs.n, 0);
    e[j] = fs.h_exponents[j];
    h.add_term(std::move(e), 1.0);
  }
  return h;
}

namespace {

FixingSystem fermat_entry(int n, int half_degree, const std::string& id) {
  std::vector<int> exps(n);
  for (int j = 0; j < n; ++j) exps[j] = n - j;
  return make_fixing_system(make_fermat(n, half_degree), std::move(exps), "catalog:" + id);
}

}  // namespace

FixingSystem catalog_fixing(const std::string& id) {
  if (id == "fermat-n1") return fermat_entry(1, 1, id);
  if (id == "fermat-n2") return fermat_entry(2, 1, id);
  if (id == "fermat-n3") return fermat_entry(3, 2, id);
  if (id == "fermat-n4-fullgroup") return fermat_entry(4, 2, id);
  if (id == "vanluijk-stub")
    throw StubRequiresCoefficients(
        "catalog entry 'vanluijk-stub' is a placeholder: supply the quartic "
        "coefficients (cubics f1, f2, quadrics g1, g2 and the integer N) as a "
        "fixing-system file");
  throw UnsupportedCatalog("unknown catalog id '" + id + "'");
}

FixingSystem catalog_fixing(int n, IsometryGroup group) {
  switch (n) {
    case 1: return catalog_fixing("fermat-n1");
    case 2: return catalog_fixing("fermat-n2");
    case 3: return catalog_fixing("fermat-n3");
    case 4:
      if (group == IsometryGroup::FullIsometry) return catalog_fixing("fermat-n4-fullgroup");
      return catalog_fixing("vanluijk-stub");
    case 5:
      if (group == IsometryGroup::FullIsometry) return catalog_fixing("vanluijk-stub");
      throw UnsupportedCatalog("no catalog entry for 5 points under rotations only");
    default:
      throw UnsupportedCatalog("no catalog entry for n = " + std::to_string(n) +
                               "; supply a fixing system explicitly");
  }
}

std::vector<std::string> catalog_ids() {
  return {"fermat-n1", "fermat-n2", "fermat-n3", "fermat-n4-fullgroup", "vanluijk-stub"};
}

namespace {

// Powers of the per-point quadratic forms q_j(a, b), cached up to the
// largest exponent each variable carries.
std::vector<std::vector<BivariatePoly>> quadric_powers(const PointSystem& s,
                                                       const std::vector<int>& max_exp) {
  std::vector<std::vector<BivariatePoly>> pw(s.size());
  for (int j = 0; j < s.size(); ++j) {
    BivariatePoly q;
    const Complex c = s.xy(j);
    q.add_term(2, 0, c);
    q.add_term(0, 2, -std::conj(c));
    q.add_term(1, 1, -2.0 * s.point(j).z());
    pw[j].resize(max_exp[j] + 1);
    pw[j][0] = BivariatePoly::constant(1.0);
    for (int e = 1; e <= max_exp[j]; ++e) pw[j][e] = pw[j][e - 1] * q;
  }
  return pw;
}

}  // namespace

BivariatePoly pullback_su2(const SparsePoly& f, const PointSystem& s) {
  if (s.dim() != 3) throw DimensionError("pullback_su2: spatial system required");
  if (f.nvars() != s.size())
    throw std::invalid_argument("pullback_su2: polynomial has wrong variable count");

  std::vector<int> max_exp(s.size(), 0);
  for (const auto& [exp, c] : f.terms())
    for (int j = 0; j < s.size(); ++j) max_exp[j] = std::max(max_exp[j], exp[j]);
  const auto pw = quadric_powers(s, max_exp);

  BivariatePoly out;
  for (const auto& [exp, c] : f.terms()) {
    BivariatePoly term = BivariatePoly::constant(c);
    for (int j = 0; j < s.size(); ++j)
      if (exp[j] > 0) term = term * pw[j][exp[j]];
    out = out + term;
  }
  out = out.trimmed();
  if (const auto deg = f.homogeneous_degree(); deg && !out.empty())
    out.set_homogeneous(2 * *deg);
  return out;
}

BivariatePoly pullback_su2(const std::vector<int>& h_exponents, const PointSystem& s) {
  if (s.dim() != 3) throw DimensionError("pullback_su2: spatial system required");
  if (static_cast<int>(h_exponents.size()) != s.size())
    throw std::invalid_argument("pullback_su2: exponent list has wrong length");
  std::vector<int> max_exp = h_exponents;
  const auto pw = quadric_powers(s, max_exp);
  BivariatePoly out;
  for (int j = 0; j < s.size(); ++j) out = out + pw[j][h_exponents[j]];
  return out.trimmed();
}

OddGauge make_odd_gauge(SparsePoly g) {
  if (g.empty()) throw std::invalid_argument("odd gauge: zero polynomial");
  if (g.nvars() % 2 != 0)
    throw std::invalid_argument("odd gauge: needs 2n real variables");
  if (!g.has_real_coefficients(1e-15))
    throw std::invalid_argument("odd gauge: coefficients must be real");
  const auto deg = g.homogeneous_degree();
  if (!deg) throw std::invalid_argument("odd gauge: polynomial is not homogeneous");
  if (*deg % 2 == 0) throw std::invalid_argument("odd gauge: degree must be odd");
  return OddGauge{std::move(g), *deg};
}

double odd_g_eval(const OddGauge& gauge, const PointSystem& s, const Spin& q) {
  const auto w = project_xy(q, s);
  if (gauge.g.nvars() != 2 * s.size())
    throw std::invalid_argument("odd_g_eval: gauge variable count does not match 2n");
  std::vector<double> x(2 * s.size());
  for (int j = 0; j < s.size(); ++j) {
    x[2 * j] = w[j].real();
    x[2 * j + 1] = w[j].imag();
  }
  return gauge.g.eval_real(x).real();
}

}  // namespace rotfix
