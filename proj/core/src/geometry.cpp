#include "rotfix/geometry.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace rotfix {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace

PointSystem::PointSystem(int dim, std::vector<Eigen::Vector3d> points)
    : dim_(dim), pts_(std::move(points)) {
  if (dim_ != 2 && dim_ != 3) throw DimensionError("PointSystem: dim must be 2 or 3");
  if (pts_.empty()) throw std::invalid_argument("PointSystem: need at least one point");
  for (auto& p : pts_) {
    if (!p.allFinite()) throw std::invalid_argument("PointSystem: non-finite coordinate");
    if (dim_ == 2) p.z() = 0.0;
  }
}

PointSystem PointSystem::plane(const std::vector<std::array<double, 2>>& pts) {
  std::vector<Eigen::Vector3d> v;
  v.reserve(pts.size());
  for (const auto& p : pts) v.emplace_back(p[0], p[1], 0.0);
  return PointSystem(2, std::move(v));
}

PointSystem PointSystem::space(const std::vector<std::array<double, 3>>& pts) {
  std::vector<Eigen::Vector3d> v;
  v.reserve(pts.size());
  for (const auto& p : pts) v.emplace_back(p[0], p[1], p[2]);
  return PointSystem(3, std::move(v));
}

double PointSystem::coordinate_scale() const {
  double s = 0.0;
  for (const auto& p : pts_) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  return s;
}

bool PointSystem::all_at_origin(double tol) const {
  return coordinate_scale() <= tol;
}

PlaneRotation::PlaneRotation(double angle) : theta(wrap_angle(angle)) {
  if (!std::isfinite(angle)) throw std::invalid_argument("PlaneRotation: non-finite angle");
}

bool Spin::is_unit(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

bool Rotation3::is_valid(double tol) const {
  const Eigen::Matrix3d g = m.transpose() * m - Eigen::Matrix3d::Identity();
  return g.lpNorm<Eigen::Infinity>() <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

PointSystem rotate_plane(const PointSystem& s, const PlaneRotation& rho) {
  if (s.dim() != 2) throw DimensionError("rotate_plane: planar system required");
  const double c = std::cos(rho.theta), d = std::sin(rho.theta);
  std::vector<Eigen::Vector3d> out;
  out.reserve(s.size());
  for (const auto& p : s.points())
    out.emplace_back(c * p.x() - d * p.y(), d * p.x() + c * p.y(), 0.0);
  return PointSystem(2, std::move(out));
}

PointSystem quarter_turn(const PointSystem& s) {
  if (s.dim() != 2) throw DimensionError("quarter_turn: planar system required");
  std::vector<Eigen::Vector3d> out;
  out.reserve(s.size());
  for (const auto& p : s.points()) out.emplace_back(-p.y(), p.x(), 0.0);
  return PointSystem(2, std::move(out));
}

Rotation3 spin_to_rotation(const Spin& q) {
  if (!q.is_unit()) throw std::invalid_argument("spin_to_rotation: spin is not unit");
  const Complex a = q.alpha, b = q.beta;
  // Columns are the images of the coordinate axes under H -> rho H rho^{-1}.
  const Complex a2 = a * a, b2 = b * b, ab = a * b;
  const Complex abc = a * std::conj(b);  // alpha * conj(beta)
  const double aa = std::norm(a), bb = std::norm(b);

  Rotation3 r;
  // e1: c = 1, z = 0 -> w = a^2 - b^2, z' = 2 Re(conj(b) a)
  r.m(0, 0) = (a2 - b2).real();
  r.m(1, 0) = (a2 - b2).imag();
  r.m(2, 0) = 2.0 * abc.real();
  // e2: c = i -> w = i (a^2 + b^2), z' = -2 Im(conj(b) a)
  r.m(0, 1) = -(a2 + b2).imag();
  r.m(1, 1) = (a2 + b2).real();
  r.m(2, 1) = -2.0 * abc.imag();
  // e3: z = 1 -> w = -2 a b, z' = |a|^2 - |b|^2
  r.m(0, 2) = -2.0 * ab.real();
  r.m(1, 2) = -2.0 * ab.imag();
  r.m(2, 2) = aa - bb;
  return r;
}

std::vector<Complex> project_xy(const Spin& q, const PointSystem& s) {
  if (s.dim() != 3) throw DimensionError("project_xy: spatial system required");
  if (!q.is_unit()) throw std::invalid_argument("project_xy: spin is not unit");
  const Complex a2 = q.alpha * q.alpha;
  const Complex b2 = q.beta * q.beta;
  const Complex ab2 = 2.0 * q.alpha * q.beta;
  std::vector<Complex> w;
  w.reserve(s.size());
  for (int j = 0; j < s.size(); ++j) {
    const Complex c = s.xy(j);
    w.push_back(c * a2 - std::conj(c) * b2 - s.point(j).z() * ab2);
  }
  return w;
}

PointSystem rotate_by_spin(const PointSystem& s, const Spin& q) {
  if (s.dim() != 3) throw DimensionError("rotate_by_spin: spatial system required");
  if (!q.is_unit()) throw std::invalid_argument("rotate_by_spin: spin is not unit");
  const Complex a2 = q.alpha * q.alpha;
  const Complex b2 = q.beta * q.beta;
  const Complex ab2 = 2.0 * q.alpha * q.beta;
  const Complex abc = q.alpha * std::conj(q.beta);
  const double zz = std::norm(q.alpha) - std::norm(q.beta);
  std::vector<Eigen::Vector3d> out;
  out.reserve(s.size());
  for (int j = 0; j < s.size(); ++j) {
    const Complex c = s.xy(j);
    const double z = s.point(j).z();
    const Complex w = c * a2 - std::conj(c) * b2 - z * ab2;
    const double znew = zz * z + 2.0 * (abc * c).real();
    out.emplace_back(w.real(), w.imag(), znew);
  }
  return PointSystem(3, std::move(out));
}

OrbitClass classify_orbit(const PointSystem& s) {
  const int n = s.size();
  Eigen::MatrixXd m(n, 3);
  for (int j = 0; j < n; ++j) m.row(j) = s.point(j).transpose();

  OrbitClass oc;
  const double scale = s.coordinate_scale();
  if (scale == 0.0) {
    oc.tag = OrbitTag::SinglePoint;
    oc.dependence.coeffs.assign(n, {});
    return oc;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double thresh = 1e-10 * svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thresh) ++rank;

  DependenceProfile dep;
  dep.rank = rank;

  // Greedy basis in index order: take a point if it enlarges the span.
  Eigen::MatrixXd basis_mat(3, 0);
  for (int j = 0; j < n && static_cast<int>(dep.basis.size()) < rank; ++j) {
    Eigen::MatrixXd cand(3, basis_mat.cols() + 1);
    cand << basis_mat, s.point(j);
    Eigen::JacobiSVD<Eigen::MatrixXd> csvd(cand);
    const int ccols = static_cast<int>(cand.cols());
    int crank = 0;
    for (int i = 0; i < csvd.singularValues().size(); ++i)
      if (csvd.singularValues()(i) > 1e-10 * svd.singularValues()(0)) ++crank;
    if (crank == ccols) {
      basis_mat = cand;
      dep.basis.push_back(j);
    }
  }

  // Least-squares coefficients of every point in the chosen basis.
  dep.coeffs.resize(n);
  if (rank > 0) {
    const auto solver = basis_mat.colPivHouseholderQr();
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd c = solver.solve(s.point(j));
      dep.coeffs[j].assign(c.data(), c.data() + c.size());
    }
  } else {
    for (int j = 0; j < n; ++j) dep.coeffs[j] = {};
  }

  oc.dependence = std::move(dep);
  oc.tag = (rank <= 1) ? OrbitTag::Sphere2 : OrbitTag::RealProjective3;
  if (rank == 0) oc.tag = OrbitTag::SinglePoint;
  return oc;
}

Eigen::MatrixXd orbit_tangent_jacobian(const PointSystem& s) {
  if (s.dim() != 3) throw DimensionError("orbit_tangent_jacobian: spatial system required");
  const int n = s.size();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(3 * n, 3);
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector3d& p = s.point(k);
    // generator about Oz: (x, y, z) -> (-y, x, 0)
    j(3 * k + 0, 0) = -p.y();
    j(3 * k + 1, 0) = p.x();
    // generator about Ox: (x, y, z) -> (0, -z, y)
    j(3 * k + 1, 1) = -p.z();
    j(3 * k + 2, 1) = p.y();
    // generator about Oy: (x, y, z) -> (z, 0, -x)
    j(3 * k + 0, 2) = p.z();
    j(3 * k + 2, 2) = -p.x();
  }
  return j;
}

double immersion_minor(const PointSystem& s) {
  if (s.dim() != 3) throw DimensionError("immersion_minor: spatial system required");
  if (s.size() < 2) throw std::invalid_argument("immersion_minor: need at least two points");
  const Eigen::MatrixXd j = orbit_tangent_jacobian(s);
  Eigen::Matrix3d minor;
  minor.row(0) = j.row(2);  // z1
  minor.row(1) = j.row(3);  // x2
  minor.row(2) = j.row(5);  // z2
  return minor.determinant();
}

const char* to_string(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::SinglePoint: return "single-point";
    case OrbitTag::Sphere2: return "sphere2";
    case OrbitTag::RealProjective3: return "real-projective3";
  }
  return "unknown";
}

}  // namespace rotfix
