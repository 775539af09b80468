#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "screwalg/classical_oracle.hpp"
#include "screwalg/io.hpp"
#include "screwalg/theorems.hpp"

namespace screwalg::cli {

namespace {

using io::json;

constexpr double kDefaultCliTol = 1e-9;

struct Context {
  double tol;
  bool json_out;
  std::ostream& out;
  std::ostream& err;
};

std::string num(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x + 0.0);
  return std::string(buf, res.ptr);
}

std::string vec(const Vec3& v) { return "(" + num(v.x()) + ", " + num(v.y()) + ", " + num(v.z()) + ")"; }

std::string line_text(const Line& l) {
  return vec(l.closest_point().coords) + " + t*" + vec(l.direction());
}

std::string matrix_text(const DualMat3& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    s += "  [" + to_string(m(i, 0)) + ", " + to_string(m(i, 1)) + ", " + to_string(m(i, 2)) + "]\n";
  }
  return s;
}

std::string matrix_text(const Mat3& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += "  " + vec(m.row(i).transpose()) + "\n";
  return s;
}

json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse(arg);
  std::ifstream in(arg);
  if (!in) raise(ErrorKind::ParseError, "cannot read input file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

// One input holding an array (or an object with `key`) expands to its
// elements; several inputs each contribute one element.
std::vector<json> gather(const std::vector<std::string>& inputs, const char* key) {
  if (inputs.empty()) raise(ErrorKind::ParseError, "no input given");
  std::vector<json> items;
  if (inputs.size() == 1) {
    json j = load(inputs.front());
    if (j.is_object() && j.contains(key)) j = j.at(key);
    if (j.is_array()) {
      items.assign(j.begin(), j.end());
    } else {
      items.push_back(std::move(j));
    }
    return items;
  }
  for (const auto& s : inputs) items.push_back(load(s));
  return items;
}

void expect_count(const std::vector<json>& items, std::size_t n, const char* what) {
  if (items.size() != n) {
    raise(ErrorKind::ParseError,
          "expected " + std::to_string(n) + " " + what + ", got " + std::to_string(items.size()));
  }
}

std::optional<double> parse_tol(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !(v > 0.0) || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

oracle::PointDirectionLine to_oracle(const Line& l) { return {l.closest_point().coords, l.direction()}; }

int cmd_line_angle(const Context& c, const std::vector<std::string>& inputs, bool check) {
  const auto items = gather(inputs, "lines");
  expect_count(items, 2, "lines");
  const Line l1 = io::line_from_json(items[0], c.tol);
  const Line l2 = io::line_from_json(items[1], c.tol);
  const auto classical = oracle::line_distance_angle(to_oracle(l1), to_oracle(l2), c.tol);

  Dual theta;
  if (resultants_parallel(l1.screw(), l2.screw(), c.tol)) {
    if (classical.distance > c.tol * std::max(1.0, l1.closest_point().coords.norm())) {
      c.err << "error: lines are parallel and distinct; oracle distance = " << num(classical.distance) << "\n";
      return kPrecondition;
    }
    theta = Dual(l1.direction().dot(l2.direction()) > 0.0 ? 0.0 : kPi);
  } else {
    theta = dual_angle(l1.screw(), l2.screw(), c.tol);
  }

  bool agree = true;
  if (check) {
    const double scale = std::max(1.0, classical.distance);
    agree = std::abs(theta.re() - classical.angle) <= c.tol &&
            std::abs(std::abs(theta.du()) - classical.distance) <= c.tol * scale;
  }

  if (c.json_out) {
    json j{{"Theta", io::to_json(theta)}, {"theta", theta.re()}, {"d", theta.du()}};
    if (check) {
      j["check"] = {{"theta", classical.angle}, {"distance", classical.distance}, {"agree", agree}};
    }
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "Theta = " << to_string(theta) << "\n";
    c.out << "theta = " << num(theta.re()) << "\n";
    c.out << "d = " << num(theta.du()) << "\n";
    if (check) {
      c.out << "check: theta = " << num(classical.angle) << ", distance = " << num(classical.distance)
            << (agree ? " (agree)" : " (DISAGREE)") << "\n";
    }
  }
  return agree ? kOk : kResidualFailure;
}

int cmd_common_normal(const Context& c, const std::vector<std::string>& inputs) {
  const auto items = gather(inputs, "screws");
  expect_count(items, 2, "screws");
  const DualVec3 x = io::screw_from_json(items[0]);
  const DualVec3 y = io::screw_from_json(items[1]);
  const Line n = common_normal(x, y, c.tol);
  if (c.json_out) {
    c.out << io::to_json(n).dump(2) << "\n";
  } else {
    c.out << "normal: " << line_text(n) << "\n";
  }
  return kOk;
}

int cmd_screw_axis(const Context& c, const std::vector<std::string>& inputs) {
  const auto items = gather(inputs, "screws");
  expect_count(items, 1, "screw");
  const AxisDecomposition a = axis_decompose(io::screw_from_json(items[0]));
  if (c.json_out) {
    c.out << io::to_json(a).dump(2) << "\n";
  } else {
    c.out << "axis: " << line_text(a.axis) << "\n";
    c.out << "magnitude: " << num(a.magnitude) << "\n";
    c.out << "pitch: " << num(a.pitch) << "\n";
  }
  return kOk;
}

// A joint is either {"axis": <line>, "angle": <dual>} or {"matrix": <DualMat3>};
// both describe a column-convention motion operator.
DualMat3 joint_operator(const json& joint, double tol) {
  DualMat3 t;
  if (joint.is_object() && joint.contains("matrix")) {
    t = io::dualmat3_from_json(joint.at("matrix"));
  } else if (joint.is_object() && joint.contains("axis")) {
    const Line axis = io::line_from_json(joint.at("axis"), tol);
    const Dual angle = joint.contains("angle") ? io::dual_from_json(joint.at("angle")) : Dual(0.0);
    t = exp_so3d(angle * axis.screw());
  } else {
    raise(ErrorKind::ParseError, "joint needs an \"axis\" or a \"matrix\": " + joint.dump());
  }
  if (!is_frame(t, tol)) raise(ErrorKind::NotAFrame, "joint matrix is not a rigid motion");
  return t;
}

int cmd_compose(const Context& c, const std::vector<std::string>& inputs) {
  std::vector<json> joints;
  if (!inputs.empty()) joints = gather(inputs, "joints");
  DualMat3 product = DualMat3::identity();
  for (const auto& j : joints) product = product * joint_operator(j, c.tol);
  const DualMat3 frame = product.transpose();
  const Vec3 t = frame_translation(frame, c.tol);
  if (c.json_out) {
    c.out << json{{"frame", io::to_json(frame)},
                  {"rotation", io::to_json(frame.realpart())},
                  {"translation", io::to_json(t)}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "frame:\n" << matrix_text(frame);
    c.out << "rotation:\n" << matrix_text(frame.realpart());
    c.out << "translation: " << vec(t) << "\n";
  }
  return kOk;
}

double worst(std::initializer_list<Dual> ds, double scale = 1.0) {
  double w = 0.0;
  for (const auto& d : ds) w = std::max({w, std::abs(d.re()) / scale, std::abs(d.du()) / scale});
  return w;
}

int report(const Context& c, json j, bool ok) {
  j["ok"] = ok;
  j["tol"] = c.tol;
  c.out << j.dump(2) << "\n";
  return ok ? kOk : kResidualFailure;
}

int verify_equilibrium(const Context& c, const std::string& theorem, const std::vector<json>& items) {
  if (items.size() != 2 && items.size() != 3) {
    raise(ErrorKind::ParseError, "expected 2 or 3 screws, got " + std::to_string(items.size()));
  }
  const DualVec3 x = io::screw_from_json(items[0]);
  const DualVec3 y = io::screw_from_json(items[1]);
  json j{{"theorem", theorem}};
  if (items.size() == 3) {
    const DualVec3 sum = x + y + io::screw_from_json(items[2]);
    const double defect = sum.max_abs();
    j["equilibrium_residual"] = defect;
    if (defect > c.tol * std::max({1.0, x.max_abs(), y.max_abs()})) return report(c, j, false);
  }
  const EquilibriumReport r = equilibrium_laws(x, y, c.tol);
  j["report"] = io::to_json(r);
  double residual = 0.0;
  if (theorem == "cosines") {
    residual = worst({r.cosines[0], r.cosines[1], r.cosines[2]}, r.scale);
  } else if (theorem == "sines") {
    residual = std::max(worst({r.sines[0], r.sines[1]}),
                        worst({r.circumradius[0], r.circumradius[1], r.circumradius[2]}, r.scale * r.scale));
  } else {
    residual = worst({r.angle_sum, r.cos_sum_identity, r.sin_sum_identity});
  }
  j["residual"] = residual;
  return report(c, j, residual <= c.tol);
}

int verify_petersen_morley(const Context& c, const std::vector<json>& items) {
  expect_count(items, 3, "screws");
  const DualVec3 x = io::screw_from_json(items[0]);
  const DualVec3 y = io::screw_from_json(items[1]);
  const DualVec3 z = io::screw_from_json(items[2]);
  const PetersenMorleyReport r = petersen_morley(x, y, z, c.tol);
  const double scale = std::max(1.0, x.max_abs() * y.max_abs() * z.max_abs());
  const double residual = std::max(r.max_incidence(), r.jacobi_residual / scale);
  json j{{"theorem", "petersen-morley"}, {"report", io::to_json(r)}, {"residual", residual}};
  return report(c, j, residual <= c.tol);
}

int verify_thales(const Context& c, const json& input) {
  std::vector<json> items;
  std::optional<Dual> radius;
  if (input.is_object() && input.contains("screws")) {
    items.assign(input.at("screws").begin(), input.at("screws").end());
    if (input.contains("radius")) radius = io::dual_from_json(input.at("radius"));
  } else if (input.is_array()) {
    items.assign(input.begin(), input.end());
  }
  expect_count(items, 3, "screws");
  const DualVec3 x = io::screw_from_json(items[0]);
  const DualVec3 y = io::screw_from_json(items[1]);
  const DualVec3 z = io::screw_from_json(items[2]);
  const Dual r = radius ? *radius : norm(x);
  const Dual value = thales_check(x, y, z, r, c.tol);
  const double residual = worst({value}, std::max(1.0, r.re() * r.re()));
  json j{{"theorem", "thales"}, {"radius", io::to_json(r)}, {"value", io::to_json(value)}, {"residual", residual}};
  return report(c, j, residual <= c.tol);
}

int verify_delassus(const Context& c, const json& input) {
  const auto samples = io::samples_from_json(input);
  json j{{"theorem", "delassus"}, {"equiprojectivity_defect", oracle::equiprojectivity_defect(samples)}};
  try {
    const auto fit = oracle::delassus_fit(samples, c.tol);
    j["screw"] = io::to_json(fit.screw);
    j["residual"] = fit.max_residual;
    return report(c, j, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotEquiprojective) throw;
    j["error"] = e.what();
    return report(c, j, false);
  }
}

int cmd_verify(const Context& c, const std::string& theorem, const std::vector<std::string>& inputs) {
  if (theorem == "thales" || theorem == "delassus") {
    if (inputs.size() != 1) raise(ErrorKind::ParseError, theorem + " takes a single JSON input");
    const json input = load(inputs.front());
    return theorem == "thales" ? verify_thales(c, input) : verify_delassus(c, input);
  }
  const auto items = gather(inputs, "screws");
  if (theorem == "petersen-morley") return verify_petersen_morley(c, items);
  return verify_equilibrium(c, theorem, items);
}

int cmd_fit(const Context& c, const std::vector<std::string>& inputs) {
  if (inputs.size() != 1) raise(ErrorKind::ParseError, "fit takes a single JSON input");
  const auto samples = io::samples_from_json(load(inputs.front()));
  const auto fit = oracle::delassus_fit(samples, c.tol);
  if (c.json_out) {
    c.out << json{{"screw", io::to_json(fit.screw)}, {"residual", fit.max_residual}}.dump(2) << "\n";
  } else {
    c.out << "resultant: " << vec(fit.screw.resultant) << "\n";
    c.out << "moment at origin: " << vec(fit.screw.value_at_origin) << "\n";
    c.out << "residual: " << num(fit.max_residual) << "\n";
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kUsage;
    case ErrorKind::NotEquiprojective: return kResidualFailure;
    default: return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Screw algebra over the dual numbers.", "screwalg"};
  app.require_subcommand(1);

  bool json_out = false;
  double tol_flag = kDefaultCliTol;
  app.add_flag("--json", json_out, "Machine-readable JSON output");
  auto* tol_opt = app.add_option("--tol", tol_flag, "Tolerance (default 1e-9, or $SCREWALG_TOL)")
                      ->check(CLI::PositiveNumber);

  bool check = false;
  std::string theorem;

  auto* line_angle = app.add_subcommand("line-angle", "Dual angle between two lines");
  line_angle->add_flag("--check", check, "Cross-check against the classical closest-distance oracle");
  auto* normal = app.add_subcommand("common-normal", "Common normal line of two screws");
  auto* axis = app.add_subcommand("screw-axis", "Axis, magnitude and pitch of a screw");
  auto* compose = app.add_subcommand("compose", "End frame of a chain of rigid motions");
  auto* verify = app.add_subcommand("verify", "Check a theorem on user data");
  verify->add_option("theorem", theorem, "cosines|sines|anglesum|petersen-morley|thales|delassus")
      ->required()
      ->check(CLI::IsMember({"cosines", "sines", "anglesum", "petersen-morley", "thales", "delassus"}));
  auto* fit = app.add_subcommand("fit", "Fit a screw to sampled field values");
  // Inputs are taken as extras: a vector option would split "[a,b]" on commas.
  // Global flags may follow the subcommand; extras then land on the parent.
  app.allow_extras();
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    sub->allow_extras();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  double tol = kDefaultCliTol;
  if (tol_opt->count() > 0) {
    tol = tol_flag;
  } else if (const char* env = std::getenv("SCREWALG_TOL"); env != nullptr && *env != '\0') {
    const auto parsed = parse_tol(env);
    if (!parsed) {
      err << "error: SCREWALG_TOL is not a positive number: " << env << "\n";
      return kUsage;
    }
    tol = *parsed;
  }

  std::vector<std::string> inputs = app.remaining(true);
  for (const auto& in : inputs) {
    if (in.starts_with("-")) {
      err << "error: unknown option " << in << "\n";
      return kUsage;
    }
  }

  const Context c{tol, json_out, out, err};
  try {
    if (line_angle->parsed()) return cmd_line_angle(c, inputs, check);
    if (normal->parsed()) return cmd_common_normal(c, inputs);
    if (axis->parsed()) return cmd_screw_axis(c, inputs);
    if (compose->parsed()) return cmd_compose(c, inputs);
    if (verify->parsed()) return cmd_verify(c, theorem, inputs);
    if (fit->parsed()) return cmd_fit(c, inputs);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace screwalg::cli
