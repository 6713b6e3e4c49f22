#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace rotfix {

using Complex = std::complex<double>;

/// Thrown when an operation receives a point system of the wrong dimension.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered list of n points in the plane (dim 2) or in space (dim 3).
/// Coinciding points are allowed and never deduplicated. For dim 2 the
/// z slot of every stored point is exactly 0.
class PointSystem {
public:
  PointSystem(int dim, std::vector<Eigen::Vector3d> points);

  /// Build a planar system from (x, y) pairs.
  static PointSystem plane(const std::vector<std::array<double, 2>>& pts);
  /// Build a spatial system from (x, y, z) triples.
  static PointSystem space(const std::vector<std::array<double, 3>>& pts);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(pts_.size()); }
  const Eigen::Vector3d& point(int j) const { return pts_[j]; }
  const std::vector<Eigen::Vector3d>& points() const { return pts_; }

  /// x_j + i y_j, the projection of point j to the Oxy plane.
  Complex xy(int j) const { return {pts_[j].x(), pts_[j].y()}; }

  /// Largest coordinate magnitude; 0 for the all-origin system.
  double coordinate_scale() const;

  /// True when every point is at the origin (within tol * scale).
  bool all_at_origin(double tol = 1e-14) const;

private:
  int dim_;
  std::vector<Eigen::Vector3d> pts_;
};

/// Rotation of the plane about the origin, canonical angle in [0, 2pi).
struct PlaneRotation {
  double theta = 0.0;

  explicit PlaneRotation(double angle = 0.0);
};

/// Unit pair (alpha, beta) of complex numbers; (alpha, beta) and
/// (-alpha, -beta) map to the same rotation of space.
struct Spin {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  static Spin identity() { return {}; }

  double norm_sq() const { return std::norm(alpha) + std::norm(beta); }
  bool is_unit(double tol = 1e-12) const;
  Spin negated() const { return {-alpha, -beta}; }
};

/// Proper rotation of space: orthogonal 3x3 matrix with determinant one.
struct Rotation3 {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();

  bool is_valid(double tol = 1e-10) const;
};

enum class OrbitTag {
  SinglePoint,      // all points at the origin
  Sphere2,          // collinear with the origin, not all zero
  RealProjective3,  // generic: orbit diffeomorphic to SO(3)
};

const char* to_string(OrbitTag tag);

/// Rank of the position vectors together with a greedy basis and the
/// coefficients expressing every dependent point in that basis.
struct DependenceProfile {
  int rank = 0;
  std::vector<int> basis;  // point indices, at most rank entries
  // coeffs[j] has rank entries; for basis points it is the unit vector.
  std::vector<std::vector<double>> coeffs;
};

struct OrbitClass {
  OrbitTag tag = OrbitTag::SinglePoint;
  DependenceProfile dependence;
};

/// Rotate a planar system by rho about the origin.
PointSystem rotate_plane(const PointSystem& s, const PlaneRotation& rho);

/// Exact quarter turn (x, y) -> (-y, x); no trigonometry involved, so
/// algebraic identities that rely on it hold bit-for-bit.
PointSystem quarter_turn(const PointSystem& s);

/// The 2-to-1 covering map: conjugation action of the unit spin on the
/// Hermitian matrix representing a point. spin_to_rotation(-q) gives the
/// identical matrix.
Rotation3 spin_to_rotation(const Spin& q);

/// Oxy projections of the rotated points as complex numbers:
/// w_j = c_j a^2 - conj(c_j) b^2 - 2 z_j a b.
std::vector<Complex> project_xy(const Spin& q, const PointSystem& s);

/// Apply the rotation covered by q to every point; result is dim 3.
PointSystem rotate_by_spin(const PointSystem& s, const Spin& q);

/// Orbit topology of the rotation-group action plus the dependence data
/// used by the space solvers. Rank threshold: singular values below
/// 1e-10 times the largest are treated as zero.
OrbitClass classify_orbit(const PointSystem& s);

/// Differential of the orbit map rho -> rho * M0 at the identity, as a
/// 3n x 3 matrix. Columns are the actions of the rotation generators
/// about the z, x and y axes (the independent directions of a Z-X-Z
/// chart at the identity, completed by the y generator). Rank 3 exactly
/// when the orbit is RealProjective3.
Eigen::MatrixXd orbit_tangent_jacobian(const PointSystem& s);

/// Determinant of the 3x3 minor of the orbit differential taken from the
/// coordinate rows (z1, x2, z2). For M0 = (1,0,0, a,b,0, ...) it equals
/// b^2, which is nonzero precisely when the first two points are not
/// collinear with the origin; this certifies the orbit map is an
/// immersion at such configurations.
double immersion_minor(const PointSystem& s);

}  // namespace rotfix
