#include "screwalg/theorems.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace screwalg {

namespace {

double six_norm(const DualVec3& v) {
  return std::sqrt(v.realpart().squaredNorm() + v.dualpart().squaredNorm());
}

void require_proper(const DualVec3& z) {
  if (!(z.realpart().squaredNorm() > 0.0)) raise(ErrorKind::NullVector, "screw has no resultant");
}

double max_component(const Dual& d) { return std::max(std::abs(d.re()), std::abs(d.du())); }

// Intersection candidate of two lines with independent directions: the
// midpoint of their closest points.
Point3 closest_midpoint(const Line& l1, const Line& l2) {
  const Vec3 p1 = l1.closest_point().coords;
  const Vec3 p2 = l2.closest_point().coords;
  const Vec3& e1 = l1.direction();
  const Vec3& e2 = l2.direction();
  const Vec3 w = p2 - p1;
  const double b = e1.dot(e2);
  const double denom = 1.0 - b * b;
  const double t1 = (w.dot(e1) - b * w.dot(e2)) / denom;
  const double t2 = (b * w.dot(e1) - w.dot(e2)) / denom;
  return Point3(0.5 * ((p1 + t1 * e1) + (p2 + t2 * e2)));
}

}  // namespace

bool independent_over_D(std::span<const DualVec3> zs, double tol) {
  for (const auto& z : zs) require_proper(z);
  if (zs.empty()) return true;
  if (zs.size() > 3) return false;
  Eigen::Matrix<double, 3, Eigen::Dynamic> r(3, static_cast<Eigen::Index>(zs.size()));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    r.col(static_cast<Eigen::Index>(i)) = zs[i].realpart().normalized();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r);
  const auto sv = svd.singularValues();
  return sv(sv.size() - 1) > tol * sv(0);
}

bool are_proportional(const DualVec3& z1, const DualVec3& z2, double tol) {
  require_proper(z1);
  require_proper(z2);
  return six_norm(cross(z1, z2)) <= tol * six_norm(z1) * six_norm(z2);
}

std::string_view to_string(TripleTag tag) noexcept {
  switch (tag) {
    case TripleTag::IndependentBasis: return "IndependentBasis";
    case TripleTag::CommonOrthogonalLine: return "CommonOrthogonalLine";
    case TripleTag::ParallelCoplanar: return "ParallelCoplanar";
    case TripleTag::ParallelNonCoplanar: return "ParallelNonCoplanar";
    case TripleTag::ConcurrentCoplanar: return "ConcurrentCoplanar";
    case TripleTag::DependentResultants: return "DependentResultants";
  }
  return "Unknown";
}

TripleClassification classify_triple(const DualVec3& z1, const DualVec3& z2, const DualVec3& z3,
                                     double tol) {
  const std::array<DualVec3, 3> zs{z1, z2, z3};
  for (const auto& z : zs) require_proper(z);

  const double scale = z1.realpart().norm() * z2.realpart().norm() * z3.realpart().norm();
  const Dual m = mixed(z1, z2, z3);
  if (std::abs(m.re()) > tol * scale) return {TripleTag::IndependentBasis, std::nullopt};

  std::array<AxisDecomposition, 3> axes{axis_decompose(z1), axis_decompose(z2), axis_decompose(z3)};
  double length = 1.0;
  for (const auto& a : axes) length = std::max(length, a.point.coords.norm());

  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::optional<std::pair<int, int>> independent_pair;
  for (auto [i, j] : pairs) {
    if (!resultants_parallel(zs[i], zs[j], tol)) {
      independent_pair = std::make_pair(i, j);
      break;
    }
  }

  if (!independent_pair) {
    const Vec3& e = axes[0].axis.direction();
    const Vec3 d2 = axes[1].point - axes[0].point;
    const Vec3 d3 = axes[2].point - axes[0].point;
    const bool coplanar = std::abs(d2.cross(d3).dot(e)) <= tol * length * length;
    return {coplanar ? TripleTag::ParallelCoplanar : TripleTag::ParallelNonCoplanar, std::nullopt};
  }

  const auto [i, j] = *independent_pair;
  const bool zero_pitch = std::all_of(axes.begin(), axes.end(), [&](const AxisDecomposition& a) {
    return std::abs(a.pitch) <= tol * length;
  });
  if (zero_pitch) {
    const Point3 p = closest_midpoint(axes[i].axis, axes[j].axis);
    // A line's field vanishes exactly on its axis.
    const bool concurrent = std::all_of(axes.begin(), axes.end(), [&](const AxisDecomposition& a) {
      return field_at(a.axis.screw(), p).norm() <= tol * length;
    });
    if (concurrent) return {TripleTag::ConcurrentCoplanar, std::nullopt};
  }

  const Line witness = common_normal(zs[i], zs[j], tol);
  const bool orthogonal_to_all = std::all_of(axes.begin(), axes.end(), [&](const AxisDecomposition& a) {
    return max_component(dot(witness.screw(), a.axis.screw())) <= tol * length;
  });
  if (orthogonal_to_all) return {TripleTag::CommonOrthogonalLine, witness};
  return {TripleTag::DependentResultants, std::nullopt};
}

double EquilibriumReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : cosines) worst = std::max(worst, max_component(r) / scale);
  for (const auto& r : circumradius) worst = std::max(worst, max_component(r) / (scale * scale));
  for (const auto& r : sines) worst = std::max(worst, max_component(r));
  worst = std::max({worst, max_component(angle_sum), max_component(cos_sum_identity),
                    max_component(sin_sum_identity)});
  return worst;
}

EquilibriumReport equilibrium_laws(const DualVec3& x, const DualVec3& y, double tol) {
  EquilibriumReport r;
  r.x = x;
  r.y = y;
  r.z = -x - y;
  const DualVec3& z = r.z;
  r.norm_x = norm(x);
  r.norm_y = norm(y);
  r.norm_z = norm(z);
  if (resultants_parallel(x, y, tol) || resultants_parallel(y, z, tol) ||
      resultants_parallel(z, x, tol)) {
    raise(ErrorKind::DegenerateTriangle, "two sides of the triangle have parallel resultants");
  }
  const Dual pi(kPi);
  r.alpha_xy = pi - dual_angle(x, y, tol);
  r.alpha_yz = pi - dual_angle(y, z, tol);
  r.alpha_zx = pi - dual_angle(z, x, tol);

  const Dual x2 = dot(x, x);
  const Dual y2 = dot(y, y);
  const Dual z2 = dot(z, z);
  const Dual& nx = r.norm_x;
  const Dual& ny = r.norm_y;
  const Dual& nz = r.norm_z;

  r.cosines = {
      z2 - (x2 + y2 - 2.0 * nx * ny * cos(r.alpha_xy)),
      x2 - (y2 + z2 - 2.0 * ny * nz * cos(r.alpha_yz)),
      y2 - (z2 + x2 - 2.0 * nz * nx * cos(r.alpha_zx)),
  };

  const Dual ratio_xy = sin(r.alpha_xy) / nz;
  const Dual ratio_yz = sin(r.alpha_yz) / nx;
  const Dual ratio_zx = sin(r.alpha_zx) / ny;
  r.sines = {ratio_xy - ratio_yz, ratio_yz - ratio_zx};
  r.two_r = ratio_xy;

  const Dual lhs = r.two_r * r.two_r * x2 * y2 * z2;
  const Dual xy = dot(x, y);
  const Dual yz = dot(y, z);
  const Dual zx = dot(z, x);
  r.circumradius = {
      lhs - (x2 * y2 - xy * xy),
      lhs - (y2 * z2 - yz * yz),
      lhs - (z2 * x2 - zx * zx),
  };

  const Dual& a = r.alpha_xy;
  const Dual& b = r.alpha_yz;
  const Dual& c = r.alpha_zx;
  const Dual sum = a + b + c;
  r.angle_sum = sum - pi;
  r.cos_sum_identity = cos(sum) - (cos(a) * cos(b) * cos(c) - sin(a) * sin(b) * cos(c) -
                                   sin(b) * sin(c) * cos(a) - sin(c) * sin(a) * cos(b));
  r.sin_sum_identity = sin(sum) - (-sin(a) * sin(b) * sin(c) + cos(a) * cos(b) * sin(c) +
                                   cos(b) * cos(c) * sin(a) + cos(c) * cos(a) * sin(b));
  r.scale = std::max(1.0, nx.re() * ny.re() * nz.re());
  return r;
}

double PetersenMorleyReport::max_incidence() const {
  double worst = 0.0;
  for (const auto& d : incidence) worst = std::max(worst, max_component(d));
  return worst;
}

PetersenMorleyReport petersen_morley(const DualVec3& x, const DualVec3& y, const DualVec3& z,
                                     double tol) {
  for (const auto* v : {&x, &y, &z}) require_proper(*v);
  const double nx = x.realpart().norm();
  const double ny = y.realpart().norm();
  const double nz = z.realpart().norm();

  const DualVec3 xy = cross(x, y);
  const DualVec3 yz = cross(y, z);
  const DualVec3 zx = cross(z, x);
  if (xy.realpart().norm() <= tol * nx * ny || yz.realpart().norm() <= tol * ny * nz ||
      zx.realpart().norm() <= tol * nz * nx) {
    raise(ErrorKind::NonGeneric, "a pairwise cross product has no resultant");
  }

  const DualVec3 a = cross(x, yz);
  const DualVec3 b = cross(z, xy);
  const DualVec3 c = cross(y, zx);
  const double triple_scale = nx * ny * nz;
  for (const auto* v : {&a, &b, &c}) {
    if (v->realpart().norm() <= tol * triple_scale) {
      raise(ErrorKind::NonGeneric, "one of x×(y×z), z×(x×y), y×(z×x) has no resultant");
    }
  }
  if (resultants_parallel(a, b, tol)) {
    raise(ErrorKind::NonGeneric, "x×(y×z) and z×(x×y) have parallel resultants");
  }

  const Line normal = common_normal(a, b, tol);
  const Line axis_a = axis_decompose(a).axis;
  const Line axis_b = axis_decompose(b).axis;
  const Line axis_c = axis_decompose(c).axis;
  PetersenMorleyReport r{
      .a = a,
      .b = b,
      .c = c,
      .jacobi_residual = six_norm(a + b + c),
      .axis_a = axis_a,
      .axis_b = axis_b,
      .axis_c = axis_c,
      .normal = normal,
      .incidence = {dot(normal.screw(), axis_a.screw()), dot(normal.screw(), axis_b.screw()),
                    dot(normal.screw(), axis_c.screw())},
  };
  return r;
}

Dual thales_check(const DualVec3& x, const DualVec3& y, const DualVec3& z, const Dual& r, double tol) {
  for (const auto* v : {&x, &y, &z}) {
    if (v->is_pure_dual() || !approx_equal(norm(*v), r, tol)) {
      raise(ErrorKind::NotOnSphere, "screw modulus differs from the sphere radius");
    }
  }
  if ((x + y).max_abs() > tol * std::max(1.0, x.max_abs())) {
    raise(ErrorKind::NotAntipodal, "x and y are not opposite");
  }
  return dot(y - z, z - x);
}

}  // namespace screwalg
