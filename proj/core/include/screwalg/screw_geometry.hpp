#pragma once

#include <utility>

#include "screwalg/dual_linalg.hpp"

namespace screwalg {

/// A point of Euclidean space, stored as its displacement from the canonical
/// origin O₀.
struct Point3 {
  Vec3 coords = Vec3::Zero();

  Point3() = default;
  explicit Point3(const Vec3& c) : coords(c) {}
  Point3(double x, double y, double z) : coords(x, y, z) {}

  static Point3 origin() { return {}; }

  friend Vec3 operator-(const Point3& b, const Point3& a) { return b.coords - a.coords; }
  friend Point3 operator+(const Point3& p, const Vec3& v) { return Point3(p.coords + v); }
};

/// An oriented line: a unit screw of zero pitch (a spear).
///
/// Construction canonicalizes the motor: the resultant is renormalized and the
/// (sub-tolerance) pitch component is removed from the moment.
class Line {
 public:
  /// Throws NotUnit if |resultant| deviates from 1 by more than tol, and
  /// NonZeroPitch if |pitch| ≥ tol.
  static Line from_screw(const DualVec3& screw, double tol = kDefaultTol);

  const DualVec3& screw() const noexcept { return screw_; }
  const Vec3& direction() const noexcept { return screw_.realpart(); }
  const Vec3& moment() const noexcept { return screw_.dualpart(); }
  /// Point of the line closest to O₀.
  Point3 closest_point() const { return Point3(direction().cross(moment())); }

  Line reversed() const { return Line(-screw_); }

 private:
  explicit Line(const DualVec3& screw) : screw_(screw) {}
  DualVec3 screw_;
};

/// z = a·e^{εp}·u with a > 0, p the pitch and u the axis line.
struct AxisDecomposition {
  double magnitude = 0.0;
  double pitch = 0.0;
  Line axis;
  /// Point of the axis closest to O₀, s × 𝓼(O₀) / (s·s). This is a
  /// convention: every point of the axis is equally valid.
  Point3 point;

  DualVec3 reconstruct() const;
};

/// Resultant and field value at the reduction point.
struct Motor {
  Vec3 resultant = Vec3::Zero();
  Vec3 moment = Vec3::Zero();
};

Line line_from_point_direction(const Point3& p, const Vec3& e, double tol = kDefaultTol);

/// Value of the screw field at P: 𝓼(P) = 𝓼(O₀) + s × (P - O₀).
Vec3 field_at(const DualVec3& z, const Point3& p);

/// ⟨z₁, z₂⟩ = Du(z₁∘z₂).
double comoment(const DualVec3& z1, const DualVec3& z2);

/// The commutator of screws, i.e. minus the Lie bracket of the fields. Its
/// motor is the cross product of the motors.
DualVec3 commutator(const DualVec3& z1, const DualVec3& z2);

/// Throws NullVector for z ∈ εM.
AxisDecomposition axis_decompose(const DualVec3& z);

/// Dual angle Θ = θ + εd between the axes of x and y.
///
/// When the resultants are parallel within tol the result is exactly 0 or π:
/// the distance between parallel axes is not representable in Θ.
Dual dual_angle(const DualVec3& x, const DualVec3& y, double tol = kDefaultTol);

/// The line meeting both axes orthogonally, oriented along x × y.
/// Throws ParallelResultants when the resultants are parallel within tol.
Line common_normal(const DualVec3& x, const DualVec3& y, double tol = kDefaultTol);

/// For unit screws with independent resultants: true iff the axes intersect,
/// tested as |Du(x∘y)| ≤ tol.
bool axes_intersect(const DualVec3& x, const DualVec3& y, double tol = kDefaultTol);

/// Motor reduction at P.
Motor motor_reduce(const DualVec3& z, const Point3& p);
DualVec3 motor_unreduce(const Point3& p, const Motor& m);

/// The frame whose basis elements are the axis lines through P parallel to the
/// canonical directions: I + εD with D_ij = ε_ijk P^k.
DualMat3 frame_from_point(const Point3& p);
Point3 point_from_frame(const DualMat3& u, double tol = kDefaultTol);

/// True when |Re(a × b)| ≤ tol·|Re a|·|Re b|.
bool resultants_parallel(const DualVec3& a, const DualVec3& b, double tol = kDefaultTol);

}  // namespace screwalg
