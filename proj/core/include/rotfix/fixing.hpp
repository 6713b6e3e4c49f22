#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rotfix/geometry.hpp"
#include "rotfix/sparse_poly.hpp"

namespace rotfix {

/// Thrown by the catalog when an entry exists only as a placeholder that
/// needs externally supplied polynomial coefficients.
class StubRequiresCoefficients : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the catalog for point counts it has no entry for.
class UnsupportedCatalog : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A validated pair (F, H): F homogeneous of even degree 2d in n complex
/// variables, H = w1^p1 + ... + wn^pn with strictly decreasing exponents.
struct FixingSystem {
  SparsePoly f{1};
  std::vector<int> h_exponents;
  std::string provenance;
  int n = 0;
  int half_degree = 0;  // d, with deg F = 2d
};

/// Validates and assembles a fixing system; throws std::invalid_argument
/// when F is not homogeneous of even degree or the exponents do not
/// strictly decrease.
FixingSystem make_fixing_system(SparsePoly f, std::vector<int> h_exponents,
                                std::string provenance);

/// True when the system came from the built-in catalog (trusted entries
/// skip the certification preflight in the solvers).
bool is_catalog_provenance(const FixingSystem& fs);

enum class IsometryGroup { RotationsOnly, FullIsometry };

/// Sum of 2d-th powers of the n variables.
SparsePoly make_fermat(int n, int half_degree);

/// H as a sparse polynomial: w1^p1 + ... + wn^pn.
SparsePoly h_polynomial(const FixingSystem& fs);

/// Built-in fixing systems for small n. Entries beyond the Fermat family
/// are placeholders that throw StubRequiresCoefficients with the name of
/// the missing data.
FixingSystem catalog_fixing(int n, IsometryGroup group);
FixingSystem catalog_fixing(const std::string& id);
std::vector<std::string> catalog_ids();

/// Plane fixing function sum_k (x_k y_k)^(2k-1). Powers are evaluated in
/// compensated double-double arithmetic so the large odd exponents do not
/// shed digits; throws std::overflow_error when a term leaves the
/// floating-point range.
double astrelin_eval(const PointSystem& s);

/// Derivative of the plane fixing function along the orbit tangent
/// (-y1, x1, ..., -yn, xn), evaluated at the initial position:
/// sum_k (2k-1) (x_k y_k)^(2k-2) (x_k^2 - y_k^2).
double astrelin_orbit_derivative(const PointSystem& s);

/// Restriction of the plane fixing function to the rotation orbit as a
/// trigonometric polynomial of degree at most 4n-2.
TrigPoly astrelin_orbit_series(const PointSystem& s);

/// Substitute w_j = c_j a^2 - conj(c_j) b^2 - 2 z_j a b into a polynomial
/// in n variables; the result is flagged homogeneous when the input is.
BivariatePoly pullback_su2(const SparsePoly& f, const PointSystem& s);

/// Same substitution applied to H given by its exponent list.
BivariatePoly pullback_su2(const std::vector<int>& h_exponents, const PointSystem& s);

/// Real homogeneous polynomial of odd degree in the 2n projection
/// coordinates (Re w1, Im w1, ..., Re wn, Im wn).
struct OddGauge {
  SparsePoly g{2};
  int degree = 1;
};

/// Validates degree parity, homogeneity and realness of coefficients.
OddGauge make_odd_gauge(SparsePoly g);

/// Evaluate the odd gauge on the projections of the rotated points.
double odd_g_eval(const OddGauge& gauge, const PointSystem& s, const Spin& q);

}  // namespace rotfix
