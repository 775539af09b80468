#include "screwalg/screw_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace screwalg {

Line Line::from_screw(const DualVec3& screw, double tol) {
  const double len = screw.realpart().norm();
  if (std::abs(len - 1.0) > tol) raise(ErrorKind::NotUnit, "line resultant must have unit length");
  const Vec3 e = screw.realpart() / len;
  const Vec3 m = screw.dualpart() / len;
  const double pitch = e.dot(m);
  if (std::abs(pitch) >= tol) raise(ErrorKind::NonZeroPitch, "a line must have zero pitch");
  return Line(DualVec3(e, m - pitch * e));
}

DualVec3 AxisDecomposition::reconstruct() const {
  return Dual(magnitude, magnitude * pitch) * axis.screw();
}

Line line_from_point_direction(const Point3& p, const Vec3& e, double tol) {
  if (std::abs(e.norm() - 1.0) > tol) raise(ErrorKind::NotUnit, "line direction must be a unit vector");
  return Line::from_screw(DualVec3(e, p.coords.cross(e)), tol);
}

Vec3 field_at(const DualVec3& z, const Point3& p) {
  return z.dualpart() + z.realpart().cross(p.coords);
}

double comoment(const DualVec3& z1, const DualVec3& z2) { return dot(z1, z2).du(); }

DualVec3 commutator(const DualVec3& z1, const DualVec3& z2) { return cross(z1, z2); }

AxisDecomposition axis_decompose(const DualVec3& z) {
  const Dual n = norm(z);
  const Vec3& s = z.realpart();
  const DualVec3 u = inv(n) * z;
  AxisDecomposition out{
      .magnitude = n.re(),
      .pitch = n.du() / n.re(),
      .axis = Line::from_screw(u, 1e-6),
      .point = Point3(s.cross(z.dualpart()) / s.squaredNorm()),
  };
  return out;
}

bool resultants_parallel(const DualVec3& a, const DualVec3& b, double tol) {
  const Vec3& ra = a.realpart();
  const Vec3& rb = b.realpart();
  return ra.cross(rb).norm() <= tol * ra.norm() * rb.norm();
}

Dual dual_angle(const DualVec3& x, const DualVec3& y, double tol) {
  const Dual nx = norm(x);
  const Dual ny = norm(y);
  if (resultants_parallel(x, y, tol)) {
    return x.realpart().dot(y.realpart()) > 0.0 ? Dual(0.0) : Dual(kPi);
  }
  return acos_principal(dot(x, y) / (nx * ny), tol);
}

Line common_normal(const DualVec3& x, const DualVec3& y, double tol) {
  norm(x);
  norm(y);
  if (resultants_parallel(x, y, tol)) {
    raise(ErrorKind::ParallelResultants, "common normal of axes with parallel resultants");
  }
  return Line::from_screw(normalized(cross(x, y)), 1e-6);
}

bool axes_intersect(const DualVec3& x, const DualVec3& y, double tol) {
  if (std::abs(dot(x, x).re() - 1.0) > tol || std::abs(dot(y, y).re() - 1.0) > tol) {
    raise(ErrorKind::NotUnit, "axes_intersect expects unit screws");
  }
  if (resultants_parallel(x, y, tol)) {
    raise(ErrorKind::ParallelResultants, "axes_intersect expects independent resultants");
  }
  return std::abs(dot(x, y).du()) <= tol;
}

Motor motor_reduce(const DualVec3& z, const Point3& p) { return {z.realpart(), field_at(z, p)}; }

DualVec3 motor_unreduce(const Point3& p, const Motor& m) {
  return DualVec3(m.resultant, m.moment - m.resultant.cross(p.coords));
}

DualMat3 frame_from_point(const Point3& p) {
  // D_ij = ε_ijk P^k is -hat(P).
  return DualMat3(Mat3::Identity(), -skew(p.coords));
}

Point3 point_from_frame(const DualMat3& u, double tol) { return Point3(frame_translation(u, tol)); }

}  // namespace screwalg
