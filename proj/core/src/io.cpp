#include "screwalg/io.hpp"

#include <string>

namespace screwalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) bad("expected a number, got " + j.dump());
  return j.get<double>();
}

// Adding +0.0 turns -0.0 into 0.0 and leaves every other value alone.
double tidy(double x) { return x + 0.0; }

json dual_pair(const Dual& d) { return {{"re", tidy(d.re())}, {"du", tidy(d.du())}}; }

}  // namespace

json to_json(const Vec3& v) { return json::array({tidy(v.x()), tidy(v.y()), tidy(v.z())}); }

json to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({tidy(m(i, 0)), tidy(m(i, 1)), tidy(m(i, 2))}));
  return rows;
}

json to_json(const Dual& d) { return dual_pair(d); }

json to_json(const DualVec3& v) {
  return {{"re", to_json(v.realpart())}, {"du", to_json(v.dualpart())}};
}

json to_json(const DualMat3& m) {
  return {{"re", to_json(m.realpart())}, {"du", to_json(m.dualpart())}};
}

json to_json(const Line& l) {
  return {{"point", to_json(l.closest_point().coords)},
          {"direction", to_json(l.direction())},
          {"motor", to_json(l.screw())}};
}

json to_json(const AxisDecomposition& a) {
  return {{"magnitude", a.magnitude},
          {"pitch", a.pitch},
          {"point", to_json(a.point.coords)},
          {"direction", to_json(a.axis.direction())}};
}

json to_json(const oracle::ClassicalScrew& c) {
  return {{"resultant", to_json(c.resultant)}, {"moment", to_json(c.value_at_origin)}};
}

json to_json(const EquilibriumReport& r) {
  json j;
  j["x"] = to_json(r.x);
  j["y"] = to_json(r.y);
  j["z"] = to_json(r.z);
  j["norms"] = {dual_pair(r.norm_x), dual_pair(r.norm_y), dual_pair(r.norm_z)};
  j["alpha"] = {{"xy", dual_pair(r.alpha_xy)}, {"yz", dual_pair(r.alpha_yz)}, {"zx", dual_pair(r.alpha_zx)}};
  j["cosines_residual"] = json::array();
  for (const auto& d : r.cosines) j["cosines_residual"].push_back(dual_pair(d));
  j["sines_residual"] = json::array();
  for (const auto& d : r.sines) j["sines_residual"].push_back(dual_pair(d));
  j["two_r"] = dual_pair(r.two_r);
  j["circumradius_residual"] = json::array();
  for (const auto& d : r.circumradius) j["circumradius_residual"].push_back(dual_pair(d));
  j["angle_sum_residual"] = dual_pair(r.angle_sum);
  j["cos_sum_identity_residual"] = dual_pair(r.cos_sum_identity);
  j["sin_sum_identity_residual"] = dual_pair(r.sin_sum_identity);
  j["scale"] = r.scale;
  j["max_residual"] = r.max_residual();
  return j;
}

json to_json(const PetersenMorleyReport& r) {
  json j;
  j["a"] = to_json(r.a);
  j["b"] = to_json(r.b);
  j["c"] = to_json(r.c);
  j["jacobi_residual"] = r.jacobi_residual;
  j["axes"] = {to_json(r.axis_a), to_json(r.axis_b), to_json(r.axis_c)};
  j["common_normal"] = to_json(r.normal);
  j["incidence_residual"] = json::array();
  for (const auto& d : r.incidence) j["incidence_residual"].push_back(dual_pair(d));
  j["max_residual"] = std::max(r.max_incidence(), r.jacobi_residual);
  return j;
}

json to_json(const TripleClassification& t) {
  json j{{"tag", std::string(to_string(t.tag))}};
  if (t.witness) j["witness"] = to_json(*t.witness);
  return j;
}

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a 3-vector, got " + j.dump());
  return {number(j[0]), number(j[1]), number(j[2])};
}

Mat3 mat3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a 3x3 matrix, got " + j.dump());
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.row(i) = vec3_from_json(j[static_cast<std::size_t>(i)]).transpose();
  return m;
}

Dual dual_from_json(const json& j) {
  if (j.is_number()) return Dual(j.get<double>());
  if (j.is_string()) return parse_dual(j.get<std::string>());
  if (j.is_object()) return {number(member(j, "re")), number(member(j, "du"))};
  bad("expected a dual number, got " + j.dump());
}

DualVec3 dualvec3_from_json(const json& j) {
  return DualVec3(vec3_from_json(member(j, "re")), vec3_from_json(member(j, "du")));
}

DualMat3 dualmat3_from_json(const json& j) {
  return DualMat3(mat3_from_json(member(j, "re")), mat3_from_json(member(j, "du")));
}

Line line_from_json(const json& j, double tol) {
  if (j.is_object() && j.contains("direction")) {
    const Vec3 dir = vec3_from_json(j.at("direction"));
    if (dir.norm() == 0.0) bad("line direction must be nonzero");
    const Vec3 point = j.contains("point") ? vec3_from_json(j.at("point")) : Vec3::Zero();
    return line_from_point_direction(Point3(point), dir.normalized(), tol);
  }
  return Line::from_screw(dualvec3_from_json(j), tol);
}

DualVec3 screw_from_json(const json& j) {
  if (j.is_object() && j.contains("resultant")) {
    const Vec3 s = vec3_from_json(j.at("resultant"));
    const Vec3 m = j.contains("moment") ? vec3_from_json(j.at("moment")) : Vec3::Zero();
    const Vec3 p = j.contains("point") ? vec3_from_json(j.at("point")) : Vec3::Zero();
    return motor_unreduce(Point3(p), Motor{s, m});
  }
  if (j.is_object() && j.contains("direction")) return line_from_json(j).screw();
  return dualvec3_from_json(j);
}

std::vector<oracle::FieldSample> samples_from_json(const json& j) {
  const json& list = j.is_object() ? member(j, "samples") : j;
  if (!list.is_array()) bad("expected an array of samples");
  std::vector<oracle::FieldSample> out;
  out.reserve(list.size());
  for (const auto& s : list) {
    out.push_back({Point3(vec3_from_json(member(s, "point"))), vec3_from_json(member(s, "value"))});
  }
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace screwalg::io
