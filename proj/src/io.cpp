#include "sphplanks/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sphplanks {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where.empty() ? "document" : where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(join(where, key), "missing field");
  return *it;
}

double read_number(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_angle(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where, e.what());
    }
  }
  throw InputError(where, "expected a number");
}

int read_dim(const Json& j, const std::string& where) {
  const Json& d = require(j, "dim", where);
  if (!d.is_number_integer()) throw InputError(join(where, "dim"), "expected an integer");
  const int n = d.get<int>();
  if (n < 1 || n > kMaxAmbient - 1) throw InputError(join(where, "dim"), "dimension must be in 1..4");
  return n;
}

Eigen::VectorXd read_vector(const Json& j, Eigen::Index length, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array of numbers");
  if (static_cast<Eigen::Index>(j.size()) != length)
    throw InputError(where, "expected " + std::to_string(length) + " numbers, got " + std::to_string(j.size()));
  Eigen::VectorXd v(length);
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = read_number(j[i], index(where, i));
  return v;
}

Eigen::VectorXd read_unit(const Json& j, Eigen::Index length, const std::string& where) {
  Eigen::VectorXd v = read_vector(j, length, where);
  const double norm = v.norm();
  if (!(std::abs(norm - 1.0) <= 1e-9))
    throw InputError(where, "norm " + format_double(norm) + " differs from 1 by more than 1e-9");
  return v / norm;
}

/// Array of column vectors.
Eigen::MatrixXd read_columns(const Json& j, Eigen::Index length, const std::string& where, bool unit) {
  if (!j.is_array()) throw InputError(where, "expected an array of vectors");
  Eigen::MatrixXd m(length, static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    m.col(static_cast<Eigen::Index>(i)) = unit ? read_unit(j[i], length, index(where, i))
                                               : read_vector(j[i], length, index(where, i));
  return m;
}

Json vector_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json columns_json(const Eigen::MatrixXd& m) {
  Json a = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) a.push_back(vector_json(m.col(j)));
  return a;
}

// Recursive-descent reader for products and quotients of numbers and "pi".
class AngleParser {
 public:
  explicit AngleParser(const std::string& s) : s_(s) {}

  double parse() {
    skip();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1.0 : 1.0;
    double v = factor();
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*') {
        get();
        v *= factor();
      } else if (c == '/') {
        get();
        const double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else if (c == 'p') {
        v *= factor();  // implicit product, as in "3pi"
      } else {
        break;
      }
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return sign * v;
  }

 private:
  double factor() {
    skip();
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return kPi;
    }
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number or 'pi'");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw InputError("angle '" + s_ + "'", msg); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_angle(const std::string& text) {
  const double v = AngleParser(text).parse();
  if (!std::isfinite(v)) throw InputError("angle '" + text + "'", "not a finite number");
  return v;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "JSON syntax error");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

ConvexBody body_from_json(const Json& j) {
  const int n = read_dim(j, "");
  const std::string rep = require(j, "rep", "").is_string() ? j["rep"].get<std::string>() : "";
  if (rep != "H" && rep != "V" && rep != "both") throw InputError("rep", "expected \"H\", \"V\" or \"both\"");
  Eigen::MatrixXd normals(n + 1, 0), generators(n + 1, 0);
  if (rep != "V") normals = read_columns(require(j, "normals", ""), n + 1, "normals", true);
  if (rep != "H") generators = read_columns(require(j, "generators", ""), n + 1, "generators", true);
  if (normals.cols() == 0 && generators.cols() == 0)
    throw InputError(rep == "V" ? "generators" : "normals", "at least one vector is required");
  try {
    return make_body(n, normals, generators);
  } catch (const GeometryError& e) {
    throw InputError(rep == "both" ? "normals/generators" : (rep == "H" ? "normals" : "generators"), e.what());
  }
}

Json body_to_json(const ConvexBody& body, const Json& tags) {
  Json j;
  j["dim"] = body.dim();
  j["rep"] = "both";
  j["normals"] = columns_json(body.normals());
  j["generators"] = columns_json(body.generators());
  j["is_body"] = body.is_body();
  if (!tags.empty()) j["tags"] = tags;
  return j;
}

CoveringInstance covering_from_json(const Json& j) {
  const int n = read_dim(j, "");
  const Json& ball = require(j, "ball", "");
  const Eigen::VectorXd center = read_unit(require(ball, "center", "ball"), n + 1, "ball.center");
  const double radius = read_number(require(ball, "radius", "ball"), "ball.radius");
  if (!(radius >= kPi / 2 - 1e-12 && radius <= kPi + 1e-12))
    throw InputError("ball.radius", "radius must lie in [pi/2, pi]");

  if (j.contains("fan")) {
    const Json& f = j["fan"];
    const Eigen::MatrixXd plane = read_columns(require(f, "plane_basis", "fan"), n + 1, "fan.plane_basis", true);
    const Eigen::MatrixXd ridge = read_columns(require(f, "ridge_basis", "fan"), n + 1, "fan.ridge_basis", true);
    const Json& a = require(f, "boundary_angles", "fan");
    if (!a.is_array()) throw InputError("fan.boundary_angles", "expected an array");
    std::vector<double> angles;
    for (std::size_t i = 0; i < a.size(); ++i) angles.push_back(read_number(a[i], index("fan.boundary_angles", i)));
    std::vector<double> widening(angles.empty() ? 0 : angles.size() - 1, 0.0);
    if (f.contains("widening")) {
      const Json& w = f["widening"];
      if (!w.is_array() || w.size() != widening.size())
        throw InputError("fan.widening", "expected one number per lune");
      for (std::size_t i = 0; i < w.size(); ++i) widening[i] = read_number(w[i], index("fan.widening", i));
    }
    CoveringInstance inst;
    try {
      inst = radius >= kPi - 1e-12 ? make_lune_fan(n, plane, ridge, angles) : make_half_fan(n, plane, ridge, angles);
      if (std::any_of(widening.begin(), widening.end(), [](double x) { return x != 0.0; }))
        inst = widen_fan(inst, widening);
    } catch (const GeometryError& e) {
      throw InputError("fan", e.what());
    }
    if ((inst.ball.center.coords() - center).norm() > 1e-9 || std::abs(inst.ball.radius - radius) > 1e-12)
      throw InputError("ball", "does not match the ball spanned by the fan");
    return inst;
  }

  CoveringInstance inst;
  inst.ball = SphericalCap(UnitVector(center, 1e-9), std::min(radius, kPi));
  inst.construction = Construction::Custom;
  const Json& bodies = require(j, "bodies", "");
  if (!bodies.is_array() || bodies.empty()) throw InputError("bodies", "expected a nonempty array of bodies");
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    try {
      ConvexBody b = body_from_json(bodies[i]);
      if (b.dim() != n) throw InputError("dim", "differs from the covering dimension");
      inst.bodies.push_back(std::move(b));
    } catch (const InputError& e) {
      throw InputError(index("bodies", i) + "." + e.where(), e.what());
    }
  }
  return inst;
}

Json covering_to_json(const CoveringInstance& inst) {
  Json j;
  j["dim"] = inst.dim();
  j["construction"] = to_string(inst.construction);
  j["ball"] = {{"center", vector_json(inst.ball.center.coords())}, {"radius", inst.ball.radius}};
  if (inst.fan) {
    const LuneFan& f = *inst.fan;
    j["fan"] = {{"plane_basis", columns_json(f.plane_basis)},
                {"ridge_basis", columns_json(f.ridge_basis)},
                {"boundary_angles", f.boundary_angles},
                {"widening", f.widening}};
    j["inradius_sum"] = f.inradius_sum();
  }
  if (!inst.exact_inradii.empty()) j["exact_inradii"] = inst.exact_inradii;
  Json bodies = Json::array();
  for (const auto& b : inst.bodies) bodies.push_back(body_to_json(b));
  j["bodies"] = bodies;
  return j;
}

EuclideanPolytope polytope_from_json(const Json& j) {
  const int n = read_dim(j, "");
  const Eigen::MatrixXd v = read_columns(require(j, "vertices", ""), n, "vertices", false);
  if (v.cols() == 0) throw InputError("vertices", "at least one vertex is required");
  return make_polytope(v);
}

SimplexInBall simplex_from_json(const Json& j) {
  const int n = read_dim(j, "");
  const Eigen::MatrixXd v = read_columns(require(j, "vertices", ""), n, "vertices", false);
  try {
    return SimplexInBall::from_vertices(v);
  } catch (const GeometryError& e) {
    throw InputError("vertices", e.what());
  }
}

WeightFunction parse_weight(const std::string& text, int n) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "spherical") return WeightFunction::spherical(arg.empty() ? n : std::stoi(arg));
    if (kind == "constant") return WeightFunction::constant(arg.empty() ? 1.0 : std::stod(arg));
  } catch (const std::logic_error&) {
    throw InputError("--weight", "bad parameter '" + arg + "'");
  }
  throw InputError("--weight", "expected spherical[:n] or constant[:c], got '" + text + "'");
}

Json to_json(const Estimate& e) {
  Json j;
  j["value"] = e.value;
  j["std_error"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["quantity"] = to_string(e.quantity);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["pass"] = r.pass;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["slack"] = r.slack;
  j["tolerance"] = r.tolerance;
  j["tolerance_rule"] = r.tolerance_rule;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["inputs_digest"] = r.inputs_digest;
  Json extras = Json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  j["extras"] = extras;
  j["flags"] = r.flags;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(vector_json(x));
  j["witnesses"] = w;
  Json subs = Json::array();
  for (const auto& s : r.subchecks) subs.push_back(to_json(s));
  j["subchecks"] = subs;
  return j;
}

namespace {

void csv_rows(const VerificationReport& r, const std::string& prefix, std::ostringstream& out) {
  const std::string name = prefix.empty() ? r.claim : prefix + "/" + r.claim;
  out << name << ',' << (r.pass ? "true" : "false") << ',' << format_double(r.lhs.value) << ','
      << format_double(r.lhs.std_error) << ',' << format_double(r.rhs.value) << ',' << format_double(r.rhs.std_error)
      << ',' << format_double(r.slack) << ',' << format_double(r.tolerance) << ',' << r.samples << ',' << r.seed
      << ',' << r.inputs_digest << '\n';
  for (const auto& s : r.subchecks) csv_rows(s, name, out);
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "claim,pass,lhs,lhs_std_error,rhs,rhs_std_error,slack,tolerance,samples,seed,inputs_digest\n";
  csv_rows(r, "", out);
  return out.str();
}

std::string to_csv(const Estimate& e, const std::string& label) {
  std::ostringstream out;
  out << "quantity,value,std_error,samples,seed\n"
      << label << ',' << format_double(e.value) << ',' << format_double(e.std_error) << ',' << e.samples << ','
      << e.seed << '\n';
  return out.str();
}

}  // namespace sphplanks
