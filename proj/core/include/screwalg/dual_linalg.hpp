#pragma once

#include <array>
#include <iosfwd>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "screwalg/dual.hpp"

namespace screwalg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kDefaultTol = 1e-9;

/// Element of the rank-3 free D-module M, written in the fixed canonical
/// positive orthonormal basis. Equivalently the motor of a screw reduced at
/// the canonical origin: realpart is the resultant, dualpart the field value
/// at the origin.
class DualVec3 {
 public:
  DualVec3() : re_(Vec3::Zero()), du_(Vec3::Zero()) {}
  explicit DualVec3(const Vec3& re, const Vec3& du = Vec3::Zero()) : re_(re), du_(du) {}
  DualVec3(const Dual& x, const Dual& y, const Dual& z)
      : re_(x.re(), y.re(), z.re()), du_(x.du(), y.du(), z.du()) {}

  /// Canonical basis element m_i, i ∈ {0,1,2}.
  static DualVec3 basis(int i) { return DualVec3(Vec3::Unit(i)); }
  /// ε·v, an element of εM.
  static DualVec3 pure_dual(const Vec3& v) { return DualVec3(Vec3::Zero(), v); }

  const Vec3& realpart() const noexcept { return re_; }
  const Vec3& dualpart() const noexcept { return du_; }

  Dual operator[](int i) const { return {re_[i], du_[i]}; }

  bool is_pure_dual() const { return re_.isZero(0.0); }

  DualVec3 operator-() const { return DualVec3(-re_, -du_); }
  DualVec3& operator+=(const DualVec3& o) {
    re_ += o.re_;
    du_ += o.du_;
    return *this;
  }
  DualVec3& operator-=(const DualVec3& o) {
    re_ -= o.re_;
    du_ -= o.du_;
    return *this;
  }
  friend DualVec3 operator+(DualVec3 a, const DualVec3& b) { return a += b; }
  friend DualVec3 operator-(DualVec3 a, const DualVec3& b) { return a -= b; }
  friend DualVec3 operator*(const Dual& k, const DualVec3& v) {
    return DualVec3(k.re() * v.re_, k.re() * v.du_ + k.du() * v.re_);
  }
  friend DualVec3 operator*(const DualVec3& v, const Dual& k) { return k * v; }
  friend DualVec3 operator*(double k, const DualVec3& v) { return DualVec3(k * v.re_, k * v.du_); }

  /// Largest absolute component over both parts.
  double max_abs() const { return std::max(re_.cwiseAbs().maxCoeff(), du_.cwiseAbs().maxCoeff()); }
  /// Exact componentwise equality; use approx_equal for computed values.
  friend bool operator==(const DualVec3& a, const DualVec3& b) { return a.re_ == b.re_ && a.du_ == b.du_; }

 private:
  Vec3 re_;
  Vec3 du_;
};

bool approx_equal(const DualVec3& a, const DualVec3& b, double tol);
std::ostream& operator<<(std::ostream& os, const DualVec3& v);

/// 3×3 dual matrix. Acting on DualVec3 it uses the column convention
/// (apply(B, x) = B·x). When a matrix stands for a frame its rows are the
/// frame's basis elements, expressed in the canonical basis.
class DualMat3 {
 public:
  DualMat3() : re_(Mat3::Zero()), du_(Mat3::Zero()) {}
  explicit DualMat3(const Mat3& re, const Mat3& du = Mat3::Zero()) : re_(re), du_(du) {}

  static DualMat3 identity() { return DualMat3(Mat3::Identity()); }
  static DualMat3 from_rows(const std::array<DualVec3, 3>& rows);

  const Mat3& realpart() const noexcept { return re_; }
  const Mat3& dualpart() const noexcept { return du_; }

  Dual operator()(int i, int j) const { return {re_(i, j), du_(i, j)}; }
  DualVec3 row(int i) const { return DualVec3(re_.row(i).transpose(), du_.row(i).transpose()); }
  std::array<DualVec3, 3> rows() const { return {row(0), row(1), row(2)}; }

  DualMat3 transpose() const { return DualMat3(re_.transpose(), du_.transpose()); }

  friend DualMat3 operator*(const DualMat3& a, const DualMat3& b) {
    return DualMat3(a.re_ * b.re_, a.re_ * b.du_ + a.du_ * b.re_);
  }
  friend DualMat3 operator+(const DualMat3& a, const DualMat3& b) {
    return DualMat3(a.re_ + b.re_, a.du_ + b.du_);
  }
  friend DualMat3 operator-(const DualMat3& a, const DualMat3& b) {
    return DualMat3(a.re_ - b.re_, a.du_ - b.du_);
  }

  double max_abs() const { return std::max(re_.cwiseAbs().maxCoeff(), du_.cwiseAbs().maxCoeff()); }
  friend bool operator==(const DualMat3& a, const DualMat3& b) { return a.re_ == b.re_ && a.du_ == b.du_; }

 private:
  Mat3 re_;
  Mat3 du_;
};

bool approx_equal(const DualMat3& a, const DualMat3& b, double tol);
std::ostream& operator<<(std::ostream& os, const DualMat3& m);

DualVec3 mat_apply(const DualMat3& m, const DualVec3& x);

// --- products -------------------------------------------------------------

/// x∘y. Its real part is the dot product of resultants, its dual part the
/// screw scalar product (comoment) ⟨x, y⟩.
Dual dot(const DualVec3& x, const DualVec3& y);

DualVec3 cross(const DualVec3& x, const DualVec3& y);

/// [x, y, z] = (x × y)∘z.
Dual mixed(const DualVec3& x, const DualVec3& y, const DualVec3& z);

/// |x| = √(x∘x). Throws NullVector for x ∈ εM.
Dual norm(const DualVec3& x);

/// x / |x|.
DualVec3 normalized(const DualVec3& x);

// --- bases and frames -----------------------------------------------------

/// Orthonormalizes a D-basis. Each intermediate c_i must have
/// Re(c_i∘c_i) ≥ 1e-12·scale², where scale is the largest resultant norm of the
/// inputs; otherwise DegenerateBasis.
std::array<DualVec3, 3> gram_schmidt(const DualVec3& b1, const DualVec3& b2, const DualVec3& b3);

/// Orientation class of a basis relative to the canonical one: the sign of the
/// determinant of the real part of the change matrix (+1, -1, or 0 when the
/// vectors do not form a basis).
int orientation(const std::array<DualVec3, 3>& basis);

/// Matrix of the operator x ↦ b × x.
DualMat3 hat(const DualVec3& b);

/// Inverse of hat: b = ½ Σ m_i × B(m_i). Throws NotAntisymmetric when
/// B + Bᵀ exceeds tol (scaled by the matrix magnitude).
DualVec3 vee(const DualMat3& b, double tol = kDefaultTol);

/// Exponential of b× in so(3, D): the dual Rodrigues formula with φ = |b|,
/// reducing to I + hat(b) when b ∈ εM.
DualMat3 exp_so3d(const DualVec3& b);

/// True when U Uᵀ = I within tol and det Re(U) > 0.
bool is_frame(const DualMat3& u, double tol = kDefaultTol);

/// Factorization U = O (I + εA) of an orthogonal positive dual matrix.
struct FrameDecomposition {
  Mat3 rotation;   ///< O, real special orthogonal
  Mat3 generator;  ///< A, real antisymmetric
};
FrameDecomposition decompose_frame(const DualMat3& u, double tol = kDefaultTol);

/// Displacement of the frame's point from the canonical origin.
/// With U = O(I + εA), this is d with A_ij = ε_ijk d^k.
Vec3 frame_translation(const DualMat3& u, double tol = kDefaultTol);

/// O' - O = ½ ε⁻¹ Σ m_i × m_i' for two frames given by their rows.
///
/// Corresponding rows must share their real parts; pass align = true to first
/// rotate `to` by the real rotation Re(from)·Re(to)ᵀ, which leaves its point
/// unchanged. Throws ProjectionMismatch if the real parts still differ and
/// NotPureDual if the half-sum has a real part beyond tol.
Vec3 displacement(const DualMat3& from, const DualMat3& to, bool align = false,
                  double tol = kDefaultTol);

/// Gram matrix of the real bilinear form ⟨x, y⟩ = Du(x∘y) on the real basis
/// {m_1, m_2, m_3, εm_1, εm_2, εm_3} of M.
Eigen::Matrix<double, 6, 6> comoment_gram(const std::array<DualVec3, 3>& frame);

/// Real 3-vector helpers shared by the higher layers.
Mat3 skew(const Vec3& v);
Vec3 unskew(const Mat3& s);

}  // namespace screwalg
