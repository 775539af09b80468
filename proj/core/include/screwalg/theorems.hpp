#pragma once

#include <array>
#include <optional>
#include <span>

#include "screwalg/dual_linalg.hpp"
#include "screwalg/screw_geometry.hpp"

namespace screwalg {

/// True iff the resultants are R-linearly independent (rank test on their
/// singular values with relative tolerance tol). Throws NullVector for any
/// element of εM.
bool independent_over_D(std::span<const DualVec3> zs, double tol = kDefaultTol);

/// z₁ and z₂ are proportional iff z₁ × z₂ = 0.
bool are_proportional(const DualVec3& z1, const DualVec3& z2, double tol = kDefaultTol);

enum class TripleTag {
  IndependentBasis,
  CommonOrthogonalLine,
  ParallelCoplanar,
  ParallelNonCoplanar,
  ConcurrentCoplanar,
  /// Dependent resultants, yet the axes share no orthogonal line.
  DependentResultants,
};

std::string_view to_string(TripleTag tag) noexcept;

struct TripleClassification {
  TripleTag tag = TripleTag::IndependentBasis;
  /// Present exactly when tag == CommonOrthogonalLine.
  std::optional<Line> witness;
};

TripleClassification classify_triple(const DualVec3& z1, const DualVec3& z2, const DualVec3& z3,
                                     double tol = kDefaultTol);

/// Residuals of the triangle laws for x + y + z = 0, with z := -x - y and
/// α := π - Θ. Every residual is a Dual that vanishes in exact arithmetic.
struct EquilibriumReport {
  DualVec3 x, y, z;
  Dual norm_x, norm_y, norm_z;
  Dual alpha_xy, alpha_yz, alpha_zx;
  /// z² - (x² + y² - 2|x||y| cos α_xy) and its two cyclic versions.
  std::array<Dual, 3> cosines;
  /// sin α_xy/|z| - sin α_yz/|x| and sin α_yz/|x| - sin α_zx/|y|.
  std::array<Dual, 2> sines;
  /// The common ratio of the law of sines, 2R.
  Dual two_r;
  /// 4R²|x|²|y|²|z|² - (|x|²|y|² - (x∘y)²) and cyclic versions.
  std::array<Dual, 3> circumradius;
  /// α_xy + α_yz + α_zx - π.
  Dual angle_sum;
  /// cos(A+B+C) and sin(A+B+C) minus their triple-angle expansions.
  Dual cos_sum_identity;
  Dual sin_sum_identity;
  /// Product of the real parts of |x|, |y|, |z|, floored at 1.
  double scale = 1.0;

  /// Largest component among the scale-relative residuals (cosines,
  /// circumradius) and the absolute ones (sines, angle sum, identities).
  double max_residual() const;
};

/// Throws NullVector if x, y or z lies in εM and DegenerateTriangle if any
/// pair has parallel resultants.
EquilibriumReport equilibrium_laws(const DualVec3& x, const DualVec3& y, double tol = kDefaultTol);

struct PetersenMorleyReport {
  /// a = x × (y × z), b = z × (x × y), c = y × (z × x).
  DualVec3 a, b, c;
  /// |a + b + c| (Jacobi identity).
  double jacobi_residual = 0.0;
  /// Axes of a, b and c: the lines n_(yz)x, n_(xy)z, n_(zx)y.
  Line axis_a, axis_b, axis_c;
  /// Common normal of the axes of a and b.
  Line normal;
  /// N∘â, N∘b̂, N∘ĉ.
  std::array<Dual, 3> incidence;

  double max_incidence() const;
};

/// Throws NonGeneric when a pairwise cross product or one of a, b, c has a
/// vanishing resultant, or when a and b have parallel resultants.
PetersenMorleyReport petersen_morley(const DualVec3& x, const DualVec3& y, const DualVec3& z,
                                     double tol = kDefaultTol);

/// For x, y, z on the sphere |·| = r with x = -y, returns (y - z)∘(z - x).
/// Throws NotOnSphere or NotAntipodal.
Dual thales_check(const DualVec3& x, const DualVec3& y, const DualVec3& z, const Dual& r,
                  double tol = kDefaultTol);

}  // namespace screwalg
