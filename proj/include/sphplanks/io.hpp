#ifndef SPHPLANKS_IO_HPP
#define SPHPLANKS_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sphplanks/convex_body.hpp"
#include "sphplanks/covering.hpp"
#include "sphplanks/gnomonic.hpp"
#include "sphplanks/linhart.hpp"
#include "sphplanks/report.hpp"
#include "sphplanks/weight.hpp"

namespace sphplanks {

using Json = nlohmann::ordered_json;

/// Malformed input; `where` names the file position or field.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses a real or a multiple of pi: "0.5", "pi", "-pi/3", "3pi/4",
/// "3*pi/4", "2*pi", "pi*0.25".
double parse_angle(const std::string& text);

/// Reads JSON text, reporting syntax errors with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// Body file: {"dim", "rep": "H"|"V"|"both", "normals", "generators", "tags"}.
/// Vectors need length dim+1 and unit norm within 1e-9.
ConvexBody body_from_json(const Json& j);
Json body_to_json(const ConvexBody& body, const Json& tags = Json::object());

/// Covering file: ball, construction tag, bodies, and the fan data when the
/// instance is a fan.
CoveringInstance covering_from_json(const Json& j);
Json covering_to_json(const CoveringInstance& inst);

/// Polytope file: {"dim", "vertices"}.
EuclideanPolytope polytope_from_json(const Json& j);
/// Simplex file: {"dim", "vertices"} checked by SimplexInBall::from_vertices.
SimplexInBall simplex_from_json(const Json& j);

/// "spherical", "spherical:<n>", "constant", "constant:<c>".
WeightFunction parse_weight(const std::string& text, int n);

Json to_json(const Estimate& e);
Json to_json(const VerificationReport& r);

/// Header plus one row for the report and one per subcheck (recursively,
/// claim names joined by '/').
std::string to_csv(const VerificationReport& r);
std::string to_csv(const Estimate& e, const std::string& label);

}  // namespace sphplanks

#endif  // SPHPLANKS_IO_HPP
