#pragma once

#include <optional>
#include <span>
#include <utility>

#include "screwalg/dual_linalg.hpp"
#include "screwalg/screw_geometry.hpp"

// Screws as equiprojective vector fields on Euclidean space, with textbook
// line geometry. Nothing here goes through the dual-number machinery; the
// only bridge is to_module/from_module, so this layer can serve as an
// independent reference for the D-module implementation.

namespace screwalg::oracle {

/// The field P ↦ value_at_origin + resultant × P.
struct ClassicalScrew {
  Vec3 resultant = Vec3::Zero();
  Vec3 value_at_origin = Vec3::Zero();

  friend ClassicalScrew operator+(const ClassicalScrew& a, const ClassicalScrew& b) {
    return {a.resultant + b.resultant, a.value_at_origin + b.value_at_origin};
  }
  friend ClassicalScrew operator*(double k, const ClassicalScrew& a) {
    return {k * a.resultant, k * a.value_at_origin};
  }
};

/// A line given by a point and a unit direction.
struct PointDirectionLine {
  Vec3 point = Vec3::Zero();
  Vec3 direction = Vec3::UnitX();
};

Vec3 oracle_field(const ClassicalScrew& c, const Point3& p);

/// The operator 𝓔: the constant field equal to the resultant.
ClassicalScrew constant_part(const ClassicalScrew& c);

/// The screw of an oriented line, P ↦ e × (P - O).
ClassicalScrew line_screw(const PointDirectionLine& line);

/// s₁·𝓼₂(P) + 𝓼₁(P)·s₂ evaluated at P.
double oracle_comoment(const ClassicalScrew& c1, const ClassicalScrew& c2, const Point3& p);
/// Same, evaluated at three fixed non-collinear points; throws
/// OracleInconsistent if the values disagree beyond tol (relative).
double oracle_comoment(const ClassicalScrew& c1, const ClassicalScrew& c2, double tol = kDefaultTol);

/// The field P ↦ s₁ × 𝓼₂(P) + 𝓼₁(P) × s₂, rebuilt from its value at P.
ClassicalScrew oracle_commutator(const ClassicalScrew& c1, const ClassicalScrew& c2, const Point3& p);
ClassicalScrew oracle_commutator(const ClassicalScrew& c1, const ClassicalScrew& c2,
                                 double tol = kDefaultTol);

struct DistanceAngle {
  double distance = 0.0;
  double angle = 0.0;
  /// Closest points on the first and second line; empty for parallel lines.
  std::optional<std::pair<Vec3, Vec3>> closest;
};

/// Angle between directions and distance between two lines with unit
/// directions. Parallel lines use the perpendicular offset.
DistanceAngle line_distance_angle(const PointDirectionLine& l1, const PointDirectionLine& l2,
                                  double tol = kDefaultTol);

struct FieldSample {
  Point3 point;
  Vec3 value = Vec3::Zero();
};

struct FitResult {
  ClassicalScrew screw;
  double max_residual = 0.0;
};

/// Least-squares fit of the constitutive equation 𝓼(Q) - 𝓼(P) = s × (Q - P)
/// over every sample pair, then of 𝓼(O₀) over every sample.
///
/// Needs at least three non-collinear sample points (DegenerateSamples).
/// Throws NotEquiprojective when some sample misses the fitted field by more
/// than tol·max(1, largest sampled value).
FitResult delassus_fit(std::span<const FieldSample> samples, double tol = kDefaultTol);

/// Largest violation of 𝓼(P)·(Q-P) = 𝓼(Q)·(Q-P) over all sample pairs.
double equiprojectivity_defect(std::span<const FieldSample> samples);

/// Motor reduction at O₀ in both directions (the isomorphism β and its inverse).
DualVec3 to_module(const ClassicalScrew& c);
ClassicalScrew from_module(const DualVec3& z);

}  // namespace screwalg::oracle
