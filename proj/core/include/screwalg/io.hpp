#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "screwalg/classical_oracle.hpp"
#include "screwalg/dual_linalg.hpp"
#include "screwalg/screw_geometry.hpp"
#include "screwalg/theorems.hpp"

// JSON schemas shared by the CLI and by anyone scripting against the library.
//
//   Dual      "a+bε" | a | {"re": a, "du": b}
//   DualVec3  {"re": [x,y,z], "du": [x,y,z]}
//   DualMat3  {"re": [[..],[..],[..]], "du": [[..],[..],[..]]}   (row-major)
//   Line      {"point": [..], "direction": [..]} | DualVec3 motor form
//   Screw     DualVec3 motor at O₀
//             | {"resultant": [..], "moment": [..], "point": [..]?}
//               (moment at "point", default O₀)
//   Samples   {"samples": [{"point": [..], "value": [..]}, ...]} | bare array
//
// Parse failures throw Error(ParseError).

namespace screwalg::io {

using json = nlohmann::json;

json to_json(const Vec3& v);
json to_json(const Mat3& m);
json to_json(const Dual& d);
json to_json(const DualVec3& v);
json to_json(const DualMat3& m);
json to_json(const Line& l);
json to_json(const AxisDecomposition& a);
json to_json(const oracle::ClassicalScrew& c);
json to_json(const EquilibriumReport& r);
json to_json(const PetersenMorleyReport& r);
json to_json(const TripleClassification& t);

Vec3 vec3_from_json(const json& j);
Mat3 mat3_from_json(const json& j);
Dual dual_from_json(const json& j);
DualVec3 dualvec3_from_json(const json& j);
DualMat3 dualmat3_from_json(const json& j);
/// The direction of the point/direction form is normalized; it must be nonzero.
Line line_from_json(const json& j, double tol = kDefaultTol);
DualVec3 screw_from_json(const json& j);
std::vector<oracle::FieldSample> samples_from_json(const json& j);

/// json::parse wrapped to raise ParseError.
json parse(std::string_view text);

}  // namespace screwalg::io
