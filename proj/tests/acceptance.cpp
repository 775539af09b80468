// Acceptance run: every criterion at its stated case count, tolerance and time
// limit. Prints one PASS/FAIL line per criterion; exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cli.hpp"
#include "screwalg/classical_oracle.hpp"
#include "screwalg/io.hpp"
#include "screwalg/theorems.hpp"
#include "support/generators.hpp"

using namespace screwalg;
using screwalg::testing::Gen;
using screwalg::testing::mag;

namespace {

const Vec3 X = Vec3::UnitX(), Y = Vec3::UnitY(), Z = Vec3::UnitZ();
constexpr double kUlp = std::numeric_limits<double>::epsilon();

// Counts cases and tracks the worst error-to-tolerance ratio over all checks.
struct Tally {
  long cases = 0;
  long failures = 0;
  double worst = 0.0;
  std::string first_failure;

  void check(double err, double tol, const char* what) {
    const double ratio = tol > 0.0 ? err / tol : (err == 0.0 ? 0.0 : INFINITY);
    if (!(ratio <= 1.0)) {
      if (failures == 0) first_failure = std::string(what) + " err=" + std::to_string(err);
      ++failures;
    }
    if (ratio > worst || std::isnan(ratio)) worst = ratio;
  }
  void require(bool ok, const char* what) { check(ok ? 0.0 : 1.0, 0.5, what); }
};

double six_norm(const DualVec3& v) { return std::sqrt(v.realpart().squaredNorm() + v.dualpart().squaredNorm()); }
double max_diff(const Vec3& a, const Vec3& b) { return (a - b).cwiseAbs().maxCoeff(); }
double max_diff(const DualVec3& a, const DualVec3& b) { return (a - b).max_abs(); }
double max_diff(const DualMat3& a, const DualMat3& b) { return (a - b).max_abs(); }
double dual_size(const Dual& d) { return std::abs(d.re()) + std::abs(d.du()); }
double sin_between(const Vec3& a, const Vec3& b) { return a.normalized().cross(b.normalized()).norm(); }

// Throws inside a criterion count as one failure rather than aborting the run.
Tally guarded(const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    ++t.failures;
    t.first_failure = std::string("exception: ") + e.what();
  }
  return t;
}

void dual_arithmetic(Tally& t) {
  Gen g(1001);
  const double h = 1e-6;
  auto fd = [h](auto f, double a) { return (f(a + h) - f(a - h)) / (2 * h); };
  auto rel = [](double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); };
  for (int i = 0; i < 10000; ++i, ++t.cases) {
    const Dual a = g.dual(), b = g.dual(), c = g.dual();
    const double abc = dual_size(a) * dual_size(b) * dual_size(c);
    t.check(mag(a * b - b * a), 0.0, "commutativity");
    t.check(mag((a * b) * c - a * (b * c)), 4 * kUlp * abc, "associativity");
    t.check(mag(a * (b + c) - (a * b + a * c)), 4 * kUlp * dual_size(a) * (dual_size(b) + dual_size(c)),
            "distributivity");
    t.check(mag((a + b) + c - (a + (b + c))), 4 * kUlp * (dual_size(a) + dual_size(b) + dual_size(c)),
            "additive associativity");

    const Dual x = g.invertible_dual();
    t.check(mag(x * inv(x) - Dual(1.0)), 1e-14, "inverse");
    t.check(mag(conj(conj(x)) - x), 0.0, "conjugation involution");
    t.check(std::abs((x * conj(x)).du()), 0.0, "x x* is real");

    const double re = g.uniform(0.1, 4.0), du = g.uniform(-3.0, 3.0);
    const Dual y(re, du);
    t.check(rel(sqrt(y).du(), du * fd([](double s) { return std::sqrt(s); }, re)), 1e-6, "sqrt derivative");
    t.check(rel(sin(y).du(), du * fd([](double s) { return std::sin(s); }, re)), 1e-6, "sin derivative");
    t.check(rel(cos(y).du(), du * fd([](double s) { return std::cos(s); }, re)), 1e-6, "cos derivative");
    t.check(rel(exp(y).du(), du * fd([](double s) { return std::exp(s); }, re)), 1e-6, "exp derivative");

    const Dual w(g.uniform(0.05, 5.0), g.uniform(-5.0, 5.0));
    t.check(mag(sqrt(w * w) - w) / std::max(1.0, dual_size(w)), 1e-12, "sqrt(x²)");
    t.check(mag(sqrt(w) * sqrt(w) - w) / std::max(1.0, dual_size(w)), 1e-12, "sqrt(x)²");
  }
}

void module_identities(Tally& t) {
  Gen g(1002);
  for (int i = 0; i < 10000; ++i, ++t.cases) {
    const DualVec3 x = g.dualvec(), y = g.dualvec(), z = g.dualvec(), u = g.dualvec();
    const Dual a = g.dual(), b = g.dual();
    const double s3 = six_norm(x) * six_norm(y) * six_norm(z);
    const double s4 = s3 * six_norm(u);

    t.check(six_norm(cross(x, cross(y, z)) + cross(z, cross(x, y)) + cross(y, cross(z, x))), 1e-12 * s3, "Jacobi");
    t.check(mag(dot(cross(x, y), cross(z, u)) - (dot(x, z) * dot(y, u) - dot(x, u) * dot(y, z))), 1e-12 * s4,
            "Lagrange");
    t.check(mag(mixed(x, y, z) - mixed(y, z, x)), 1e-12 * s3, "mixed cyclic");
    t.check(mag(mixed(x, y, z) - mixed(z, x, y)), 1e-12 * s3, "mixed cyclic");
    t.check(mag(mixed(x, y, z) + mixed(y, x, z)), 1e-12 * s3, "mixed antisymmetric");
    t.check(mag(mixed(x, x, y)), 1e-12 * s3, "mixed repeated");

    const double sab = std::max(1.0, dual_size(a) + dual_size(b));
    t.check(mag(dot(a * x + b * z, y) - (a * dot(x, y) + b * dot(z, y))), 1e-12 * sab * s3 / six_norm(z) * 10,
            "left D-linearity");
    t.check(mag(dot(y, a * x + b * z) - (a * dot(y, x) + b * dot(y, z))), 1e-12 * sab * s3 / six_norm(z) * 10,
            "right D-linearity");
    t.check(mag(dot(x, y) - dot(y, x)), 0.0, "symmetry");

    if (i % 10 == 0) {
      const Eigen::Matrix<double, 6, 6> gram = comoment_gram(g.frame().rows());
      const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>>(gram).eigenvalues();
      int pos = 0, neg = 0;
      for (int k = 0; k < 6; ++k) {
        if (ev(k) > 1e-12) ++pos;
        if (ev(k) < -1e-12) ++neg;
      }
      t.require(pos == 3 && neg == 3, "signature (+,+,+,-,-,-)");
    }
  }
}

void beta_isomorphism(Tally& t) {
  Gen g(1003);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const oracle::ClassicalScrew c1 = g.classical(), c2 = g.classical();
    const DualVec3 z1 = oracle::to_module(c1), z2 = oracle::to_module(c2);
    const double scale = std::max(1.0, z1.max_abs() * z2.max_abs());
    const Dual d = dot(z1, z2);
    t.check(std::abs(d.re() - c1.resultant.dot(c2.resultant)), 1e-12 * scale, "real part of dot");
    t.check(std::abs(d.du() - oracle::oracle_comoment(c1, c2, g.point())), 1e-12 * scale * 10, "comoment");
    t.check(max_diff(cross(z1, z2), oracle::to_module(oracle::oracle_commutator(c1, c2, g.point()))),
            1e-12 * scale * 10, "commutator");
    t.check(max_diff(Dual::epsilon() * z1, oracle::to_module(oracle::constant_part(c1))), 1e-12, "ε ↔ 𝓔");
    const Point3 p = g.point();
    t.check(max_diff(field_at(z1, p), oracle::oracle_field(c1, p)), 1e-12 * scale * 10, "field");
  }
}

void line_geometry(Tally& t) {
  Gen g(1004);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const auto [l1, l2] = g.skew_pair();
    const auto o = oracle::line_distance_angle({l1.closest_point().coords, l1.direction()},
                                               {l2.closest_point().coords, l2.direction()});
    if (!o.closest) {
      t.require(false, "oracle found skew pair parallel");
      continue;
    }
    const Vec3 n = l1.direction().cross(l2.direction()).normalized();
    const double signed_d = (o.closest->second - o.closest->first).dot(n);
    const double dscale = std::max(1.0, o.distance);

    const Dual theta = dual_angle(l1.screw(), l2.screw());
    t.check(std::abs(theta.re() - o.angle), 1e-9, "θ");
    t.check(std::abs(std::abs(theta.du()) - o.distance), 1e-9 * dscale, "|d|");
    t.check(std::abs(theta.du() - signed_d), 1e-9 * dscale, "signed d");
    t.check(std::abs(comoment(l1.screw(), l2.screw()) + signed_d * std::sin(o.angle)), 1e-9 * dscale,
            "comoment = -d sin θ");

    const Line u = common_normal(l1.screw(), l2.screw());
    t.check(mag(dot(u.screw(), l1.screw())), 1e-9, "normal ∘ x");
    t.check(mag(dot(u.screw(), l2.screw())), 1e-9, "normal ∘ y");

    const DualVec3 x = g.proper_screw(), y = g.proper_screw();
    if (sin_between(x.realpart(), y.realpart()) >= 0.1) {
      const Dual lhs = norm(cross(x, y));
      const Dual rhs = norm(x) * norm(y) * sin(dual_angle(x, y));
      t.check(mag(lhs - rhs) / std::max(1.0, dual_size(rhs)), 1e-9, "|x×y| = |x||y| sin Θ");
    }
  }
}

void euclidean_construction(Tally& t) {
  Gen g(1005);
  int bases = 0;
  while (bases < 1000) {
    const DualVec3 b1 = g.dualvec(), b2 = g.dualvec(), b3 = g.dualvec();
    if (std::abs(mixed(b1, b2, b3).re()) < 0.5) continue;
    ++bases;
    const auto m = gram_schmidt(b1, b2, b3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) t.check(mag(dot(m[i], m[j]) - Dual(i == j ? 1.0 : 0.0)), 1e-12, "orthonormality");
    }
    t.require(orientation(m) == orientation({b1, b2, b3}), "orientation preserved");
  }
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const DualMat3 a = g.frame(), b = g.frame(), c = g.frame();
    const double s = std::max({1.0, frame_translation(a).norm(), frame_translation(b).norm(),
                               frame_translation(c).norm()});
    // axiom (b): (B - A) + (C - B) = C - A
    t.check(max_diff(displacement(a, b, true) + displacement(b, c, true), displacement(a, c, true)), 1e-12 * s,
            "Chasles");
    // axiom (a): a point and a vector determine exactly one point
    const Vec3 v = g.vec();
    const DualMat3 moved = frame_from_point(Point3(frame_translation(a) + v));
    t.check(max_diff(displacement(a, moved, true), v), 1e-12 * s, "point plus vector");

    const Mat3 o = g.rotation();
    const Vec3 d1 = g.vec(), d2 = g.vec();
    const DualMat3 f1 = g.frame(o, d1), f2 = g.frame(o, d2);
    t.check(max_diff(displacement(f1, f2), frame_translation(f2) - frame_translation(f1)), 1e-12 * s,
            "½ε⁻¹ Σ mᵢ × mᵢ'");
    t.check(max_diff(frame_translation(f1), d1), 1e-12 * s, "frame translation");

    const Point3 p = g.point();
    t.check(max_diff(point_from_frame(frame_from_point(p)).coords, p.coords), 1e-12, "point round trip");
    t.check(max_diff(frame_from_point(point_from_frame(f1)), frame_from_point(Point3(d1))), 1e-12 * s,
            "frame round trip");
  }
}

void axis_pitch(Tally& t) {
  Gen g(1006);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const DualVec3 z = g.proper_screw();
    const AxisDecomposition a = axis_decompose(z);
    const double scale = std::max(1.0, z.max_abs() * z.max_abs());
    t.check(field_at(z, a.point).cross(z.realpart()).norm(), 1e-9 * scale, "field parallel on axis");
    const DualVec3 rebuilt = Dual(a.magnitude) * exp(Dual(0.0, a.pitch)) * a.axis.screw();
    t.check(max_diff(rebuilt, z), 1e-10 * std::max(1.0, z.max_abs()), "a e^{εp} u");
  }
}

void theorem_suite(Tally& t) {
  Gen g(1007);
  int done = 0;
  while (done < 10000) {
    const DualVec3 x = g.proper_screw(), y = g.proper_screw(), z = -x - y;
    if (z.realpart().norm() < 0.2 || sin_between(x.realpart(), y.realpart()) < 0.1 ||
        sin_between(y.realpart(), z.realpart()) < 0.1 || sin_between(z.realpart(), x.realpart()) < 0.1) {
      continue;
    }
    ++done;
    ++t.cases;
    const EquilibriumReport r = equilibrium_laws(x, y);
    for (const auto& d : r.cosines) t.check(mag(d) / r.scale, 1e-9, "law of cosines");
    for (const auto& d : r.sines) t.check(mag(d), 1e-9, "law of sines");
    t.check(std::abs(r.angle_sum.re()), 1e-9, "angle sum real part");
    t.check(std::abs(r.angle_sum.du()), 1e-9, "angle sum dual part");
  }

  done = 0;
  while (done < 1000) {
    const DualVec3 x = g.proper_screw(1.0), y = g.proper_screw(1.0), z = g.proper_screw(1.0);
    const DualVec3 a = cross(x, cross(y, z)), b = cross(z, cross(x, y)), c = cross(y, cross(z, x));
    if (a.realpart().norm() < 0.05 || b.realpart().norm() < 0.05 || c.realpart().norm() < 0.05 ||
        sin_between(a.realpart(), b.realpart()) < 0.1 || sin_between(x.realpart(), y.realpart()) < 0.1 ||
        sin_between(y.realpart(), z.realpart()) < 0.1 || sin_between(z.realpart(), x.realpart()) < 0.1) {
      continue;
    }
    ++done;
    ++t.cases;
    t.check(petersen_morley(x, y, z).max_incidence(), 1e-9, "Petersen-Morley incidence");
  }

  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const Dual r(g.uniform(0.5, 2.0), g.uniform(-1.0, 1.0));
    const DualVec3 x = r * normalized(g.proper_screw());
    const DualVec3 z = r * normalized(g.proper_screw());
    t.check(mag(thales_check(x, -x, z, r)), 1e-12, "Thales");
  }
}

void delassus(Tally& t) {
  Gen g(1008);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    const oracle::ClassicalScrew c = g.classical();
    std::vector<oracle::FieldSample> samples;
    const int n = 3 + static_cast<int>(g.uniform(0, 6));
    for (int k = 0; k < n; ++k) {
      const Point3 p = g.point();
      samples.push_back({p, oracle::oracle_field(c, p)});
    }
    const auto fit = oracle::delassus_fit(samples);
    const double scale = std::max(1.0, std::max(c.resultant.norm(), c.value_at_origin.norm()));
    t.check(max_diff(fit.screw.resultant, c.resultant), 1e-10 * scale, "resultant recovered");
    t.check(max_diff(fit.screw.value_at_origin, c.value_at_origin), 1e-10 * scale, "moment recovered");
  }
  std::vector<oracle::FieldSample> bad;
  for (const Vec3& p : {Vec3(0, 0, 0), X, Y, Z, Vec3(2, -1, 3)}) bad.push_back({Point3(p), p.x() * X});
  bool rejected = false;
  try {
    oracle::delassus_fit(bad);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotEquiprojective;
  }
  ++t.cases;
  t.require(rejected, "(P·x̂)x̂ rejected");
}

void cli_golden(Tally& t) {
  const std::string dir = SCREWALG_TEST_DATA;
  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  auto expect = [&](std::vector<std::string> args, int code, const std::string& text, const char* what) {
    ++t.cases;
    std::string out;
    t.require(run(std::move(args), &out) == code && out.find(text) != std::string::npos, what);
  };
  expect({"line-angle", dir + "/perpendicular_lines.json"}, cli::kOk, "Theta = 1.5707963267948966 + 1ε",
         "perpendicular lines");
  expect({"screw-axis", dir + "/screw.json"}, cli::kOk, "axis: (0, 0, 1) + t*(1, 0, 0)", "screw axis");
  expect({"screw-axis", dir + "/screw.json"}, cli::kOk, "pitch: 1.5", "screw pitch");
  expect({"verify", "petersen-morley", dir + "/petersen_morley.json"}, cli::kOk, "\"ok\": true",
         "Petersen-Morley triple");
  expect({"verify", "cosines", dir + "/unbalanced.json"}, cli::kResidualFailure, "\"ok\": false", "exit 1");
  expect({"line-angle", dir + "/malformed.json"}, cli::kUsage, "", "exit 2");
  expect({"line-angle", dir + "/parallel_lines.json"}, cli::kPrecondition, "", "exit 3");
}

struct Criterion {
  int id;
  const char* name;
  void (*body)(Tally&);
  double time_limit;  // seconds, 0 when none is stated
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "dual arithmetic", dual_arithmetic, 5.0},
      {2, "module identities", module_identities, 10.0},
      {3, "beta isomorphism", beta_isomorphism, 0.0},
      {4, "line geometry", line_geometry, 0.0},
      {5, "Euclidean construction", euclidean_construction, 0.0},
      {6, "axis and pitch", axis_pitch, 0.0},
      {7, "theorem suite", theorem_suite, 60.0},
      {8, "Delassus fit", delassus, 0.0},
      {9, "CLI golden tests", cli_golden, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = guarded(c.body);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || secs < c.time_limit;
    const bool ok = t.failures == 0 && in_time;
    if (!ok) ++failed;

    std::printf("%s  %d %-24s %6ld cases  worst err/tol %.3g  %.2f s", ok ? "PASS" : "FAIL", c.id, c.name,
                t.cases, t.worst, secs);
    if (c.time_limit > 0.0) std::printf(" (limit %.0f s)", c.time_limit);
    if (t.failures > 0) std::printf("  %ld failed, first: %s", t.failures, t.first_failure.c_str());
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
