#include "screwalg/dual_linalg.hpp"

#include <algorithm>
#include <ostream>

#include <Eigen/Dense>

namespace screwalg {

Mat3 skew(const Vec3& v) {
  Mat3 s;
  s << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return s;
}

Vec3 unskew(const Mat3& s) {
  return 0.5 * Vec3(s(2, 1) - s(1, 2), s(0, 2) - s(2, 0), s(1, 0) - s(0, 1));
}

bool approx_equal(const DualVec3& a, const DualVec3& b, double tol) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const DualVec3& v) {
  return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
}

DualMat3 DualMat3::from_rows(const std::array<DualVec3, 3>& rows) {
  Mat3 re;
  Mat3 du;
  for (int i = 0; i < 3; ++i) {
    re.row(i) = rows[i].realpart().transpose();
    du.row(i) = rows[i].dualpart().transpose();
  }
  return DualMat3(re, du);
}

bool approx_equal(const DualMat3& a, const DualMat3& b, double tol) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const DualMat3& m) {
  for (int i = 0; i < 3; ++i) {
    os << "[" << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2) << "]";
    if (i < 2) os << "\n";
  }
  return os;
}

DualVec3 mat_apply(const DualMat3& m, const DualVec3& x) {
  return DualVec3(m.realpart() * x.realpart(),
                  m.realpart() * x.dualpart() + m.dualpart() * x.realpart());
}

Dual dot(const DualVec3& x, const DualVec3& y) {
  return {x.realpart().dot(y.realpart()),
          x.realpart().dot(y.dualpart()) + x.dualpart().dot(y.realpart())};
}

DualVec3 cross(const DualVec3& x, const DualVec3& y) {
  return DualVec3(x.realpart().cross(y.realpart()),
                  x.realpart().cross(y.dualpart()) + x.dualpart().cross(y.realpart()));
}

Dual mixed(const DualVec3& x, const DualVec3& y, const DualVec3& z) { return dot(cross(x, y), z); }

Dual norm(const DualVec3& x) {
  const Dual sq = dot(x, x);
  if (!(sq.re() > 0.0)) raise(ErrorKind::NullVector, "modulus of an element of εM");
  return sqrt(sq);
}

DualVec3 normalized(const DualVec3& x) { return inv(norm(x)) * x; }

std::array<DualVec3, 3> gram_schmidt(const DualVec3& b1, const DualVec3& b2, const DualVec3& b3) {
  const double scale = std::max({b1.realpart().norm(), b2.realpart().norm(), b3.realpart().norm()});
  const double pivot_floor = 1e-12 * scale * scale;

  // Modified Gram-Schmidt with one reorthogonalization pass; the formal
  // procedure is unchanged, the second pass only removes rounding drift.
  const std::array<DualVec3, 3> input{b1, b2, b3};
  std::array<DualVec3, 3> m;
  for (int i = 0; i < 3; ++i) {
    DualVec3 ci = input[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < i; ++j) ci -= dot(ci, m[j]) * m[j];
    }
    const Dual sq = dot(ci, ci);
    if (!(sq.re() > pivot_floor) || scale == 0.0) {
      raise(ErrorKind::DegenerateBasis, "input vectors do not form a D-basis");
    }
    m[i] = inv(sqrt(sq)) * ci;
  }
  return m;
}

int orientation(const std::array<DualVec3, 3>& basis) {
  const double det = DualMat3::from_rows(basis).realpart().determinant();
  return (det > 0.0) - (det < 0.0);
}

DualMat3 hat(const DualVec3& b) { return DualMat3(skew(b.realpart()), skew(b.dualpart())); }

DualVec3 vee(const DualMat3& b, double tol) {
  const DualMat3 sym = b + b.transpose();
  if (sym.max_abs() > tol * std::max(1.0, b.max_abs())) {
    raise(ErrorKind::NotAntisymmetric, "matrix is not ∘-antisymmetric");
  }
  DualVec3 out;
  for (int i = 0; i < 3; ++i) {
    const DualVec3 mi = DualVec3::basis(i);
    out += cross(mi, mat_apply(b, mi));
  }
  return 0.5 * out;
}

DualMat3 exp_so3d(const DualVec3& b) {
  const DualMat3 k = hat(b);
  if (b.is_pure_dual()) return DualMat3::identity() + k;
  const Dual phi = norm(b);
  const Dual s = sinc(phi);
  const Dual c = cosc(phi);
  const DualMat3 k2 = k * k;
  const auto scaled = [](const Dual& a, const DualMat3& m) {
    return DualMat3(a.re() * m.realpart(), a.re() * m.dualpart() + a.du() * m.realpart());
  };
  return DualMat3::identity() + scaled(s, k) + scaled(c, k2);
}

bool is_frame(const DualMat3& u, double tol) {
  const Mat3& o = u.realpart();
  const Mat3& d = u.dualpart();
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  const bool orthogonal = (o * o.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol;
  const bool dual_orthogonal =
      (o * d.transpose() + d * o.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
  return orthogonal && dual_orthogonal && o.determinant() > 0.0;
}

FrameDecomposition decompose_frame(const DualMat3& u, double tol) {
  if (!is_frame(u, tol)) raise(ErrorKind::NotAFrame, "matrix is not orthogonal with positive real part");
  const Mat3& o = u.realpart();
  Mat3 a = o.transpose() * u.dualpart();
  a = 0.5 * (a - a.transpose());
  return {o, a};
}

Vec3 frame_translation(const DualMat3& u, double tol) {
  // A_ij = ε_ijk d^k, so d = -unskew(A).
  return -unskew(decompose_frame(u, tol).generator);
}

Vec3 displacement(const DualMat3& from, const DualMat3& to, bool align, double tol) {
  if (!is_frame(from, tol) || !is_frame(to, tol)) {
    raise(ErrorKind::NotAFrame, "displacement requires two orthogonal positive frames");
  }
  DualMat3 target = to;
  if (align) target = DualMat3(from.realpart() * to.realpart().transpose()) * to;
  if ((target.realpart() - from.realpart()).cwiseAbs().maxCoeff() > tol) {
    raise(ErrorKind::ProjectionMismatch, "frames project to different bases of V");
  }
  DualVec3 half_sum;
  for (int i = 0; i < 3; ++i) half_sum += cross(from.row(i), target.row(i));
  half_sum = 0.5 * half_sum;
  const double scale = std::max(1.0, half_sum.dualpart().cwiseAbs().maxCoeff());
  if (half_sum.realpart().cwiseAbs().maxCoeff() > tol * scale) {
    raise(ErrorKind::NotPureDual, "½ Σ m_i × m_i' has a nonzero resultant");
  }
  // ε⁻¹ : εM → V
  return half_sum.dualpart();
}

Eigen::Matrix<double, 6, 6> comoment_gram(const std::array<DualVec3, 3>& frame) {
  std::array<DualVec3, 6> real_basis;
  for (int i = 0; i < 3; ++i) {
    real_basis[i] = frame[i];
    real_basis[i + 3] = Dual::epsilon() * frame[i];
  }
  Eigen::Matrix<double, 6, 6> g;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) g(i, j) = dot(real_basis[i], real_basis[j]).du();
  }
  return g;
}

}  // namespace screwalg
