#include "screwalg/classical_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace screwalg::oracle {

namespace {

const std::array<Point3, 3> kProbePoints{
    Point3(1.7, -0.3, 2.1),
    Point3(-2.4, 0.9, 0.5),
    Point3(0.2, 3.1, -1.3),
};

}  // namespace

Vec3 oracle_field(const ClassicalScrew& c, const Point3& p) {
  return c.value_at_origin + c.resultant.cross(p.coords);
}

ClassicalScrew constant_part(const ClassicalScrew& c) { return {Vec3::Zero(), c.resultant}; }

ClassicalScrew line_screw(const PointDirectionLine& line) {
  // e × (P - O) at P = O₀
  return {line.direction, line.direction.cross(-line.point)};
}

double oracle_comoment(const ClassicalScrew& c1, const ClassicalScrew& c2, const Point3& p) {
  return c1.resultant.dot(oracle_field(c2, p)) + oracle_field(c1, p).dot(c2.resultant);
}

double oracle_comoment(const ClassicalScrew& c1, const ClassicalScrew& c2, double tol) {
  std::array<double, 3> values{};
  for (std::size_t i = 0; i < kProbePoints.size(); ++i) {
    values[i] = oracle_comoment(c1, c2, kProbePoints[i]);
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
  if (*hi - *lo > tol * scale) {
    raise(ErrorKind::OracleInconsistent, "comoment depends on the evaluation point");
  }
  return values[0];
}

ClassicalScrew oracle_commutator(const ClassicalScrew& c1, const ClassicalScrew& c2, const Point3& p) {
  const Vec3 s = c1.resultant.cross(c2.resultant);
  const Vec3 at_p = c1.resultant.cross(oracle_field(c2, p)) + oracle_field(c1, p).cross(c2.resultant);
  // transport back to O₀ with the constitutive equation
  return {s, at_p + s.cross(-p.coords)};
}

ClassicalScrew oracle_commutator(const ClassicalScrew& c1, const ClassicalScrew& c2, double tol) {
  const ClassicalScrew first = oracle_commutator(c1, c2, kProbePoints[0]);
  for (std::size_t i = 1; i < kProbePoints.size(); ++i) {
    const ClassicalScrew other = oracle_commutator(c1, c2, kProbePoints[i]);
    const double scale = std::max(1.0, first.value_at_origin.norm());
    if ((other.value_at_origin - first.value_at_origin).norm() > tol * scale) {
      raise(ErrorKind::OracleInconsistent, "commutator is not a screw field");
    }
  }
  return first;
}

DistanceAngle line_distance_angle(const PointDirectionLine& l1, const PointDirectionLine& l2, double tol) {
  const Vec3& e1 = l1.direction;
  const Vec3& e2 = l2.direction;
  const Vec3 w = l2.point - l1.point;
  DistanceAngle out;
  out.angle = std::acos(std::clamp(e1.dot(e2), -1.0, 1.0));
  const Vec3 n = e1.cross(e2);
  if (n.norm() <= tol) {
    out.distance = (w - w.dot(e1) * e1).norm();
    return out;
  }
  out.distance = std::abs(w.dot(n)) / n.norm();
  // Closest points A = p1 + t1 e1, B = p2 + t2 e2 with (B - A) ⟂ e1, e2.
  const double b = e1.dot(e2);
  const double denom = 1.0 - b * b;
  const double t1 = (w.dot(e1) - b * w.dot(e2)) / denom;
  const double t2 = (b * w.dot(e1) - w.dot(e2)) / denom;
  out.closest = std::make_pair(Vec3(l1.point + t1 * e1), Vec3(l2.point + t2 * e2));
  return out;
}

double equiprojectivity_defect(std::span<const FieldSample> samples) {
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const Vec3 d = samples[j].point - samples[i].point;
      worst = std::max(worst, std::abs(samples[i].value.dot(d) - samples[j].value.dot(d)));
    }
  }
  return worst;
}

FitResult delassus_fit(std::span<const FieldSample> samples, double tol) {
  if (samples.size() < 3) raise(ErrorKind::DegenerateSamples, "need at least three samples");

  Eigen::MatrixXd offsets(3, static_cast<Eigen::Index>(samples.size() - 1));
  double extent = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    offsets.col(static_cast<Eigen::Index>(i - 1)) = samples[i].point - samples[0].point;
    extent = std::max(extent, offsets.col(static_cast<Eigen::Index>(i - 1)).norm());
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> offsets_svd(offsets);
  const auto sv = offsets_svd.singularValues();
  if (extent == 0.0 || sv.size() < 2 || sv(1) <= 1e-9 * extent) {
    raise(ErrorKind::DegenerateSamples, "sample points are collinear");
  }

  // s × d = -[d]× s, so each pair contributes -[Q-P]× s = 𝓼(Q) - 𝓼(P).
  const std::size_t n = samples.size();
  const auto rows = static_cast<Eigen::Index>(3 * n * (n - 1) / 2);
  Eigen::MatrixXd a(rows, 3);
  Eigen::VectorXd rhs(rows);
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 d = samples[j].point - samples[i].point;
      a.block<3, 3>(r, 0) = -skew(d);
      rhs.segment<3>(r) = samples[j].value - samples[i].value;
      r += 3;
    }
  }
  const Vec3 s = a.colPivHouseholderQr().solve(rhs);

  Vec3 origin_value = Vec3::Zero();
  for (const auto& sample : samples) origin_value += sample.value - s.cross(sample.point.coords);
  origin_value /= static_cast<double>(n);

  FitResult out{{s, origin_value}, 0.0};
  double value_scale = 1.0;
  for (const auto& sample : samples) {
    value_scale = std::max(value_scale, sample.value.norm());
    out.max_residual =
        std::max(out.max_residual, (oracle_field(out.screw, sample.point) - sample.value).norm());
  }
  if (out.max_residual > tol * value_scale) {
    raise(ErrorKind::NotEquiprojective, "samples are not the values of a screw field");
  }
  return out;
}

DualVec3 to_module(const ClassicalScrew& c) { return DualVec3(c.resultant, c.value_at_origin); }

ClassicalScrew from_module(const DualVec3& z) { return {z.realpart(), z.dualpart()}; }

}  // namespace screwalg::oracle
