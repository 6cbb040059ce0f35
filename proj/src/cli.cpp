#include "sphplanks/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sphplanks/generate.hpp"
#include "sphplanks/io.hpp"
#include "sphplanks/measure.hpp"

namespace sphplanks {

namespace {

struct Common {
  std::size_t samples = 0;
  std::string seed;
  unsigned threads = 1;
  std::string format = "json";
  bool timing = false;
  int dim = 0;
};

std::uint64_t parse_seed(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw InputError(where, "expected an unsigned 64-bit seed, got '" + text + "'");
  return v;
}

std::uint64_t resolve_seed(const Common& c) {
  if (!c.seed.empty()) return parse_seed(c.seed, "--seed");
  if (const char* env = std::getenv("SPHERE_PLANKS_SEED"); env && *env) return parse_seed(env, "SPHERE_PLANKS_SEED");
  return 1;
}

McOptions options(const Common& c, int n) {
  McOptions o;
  o.samples = c.samples ? c.samples : default_samples(n);
  o.seed = resolve_seed(c);
  o.threads = std::max(1u, c.threads);
  return o;
}

void check_dim(const Common& c, int file_dim) {
  if (c.dim != 0 && c.dim != file_dim)
    throw InputError("--dim", "is " + std::to_string(c.dim) + " but the input has dim " + std::to_string(file_dim));
}

std::string csv_of_object(const Json& j) {
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [k, v] : j.items()) out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  return out.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int emit(const VerificationReport& r) {
    if (common_.format == "csv") {
      out_ << to_csv(r);
    } else {
      Json j = to_json(r);
      add_timing(j);
      out_ << j.dump(2) << '\n';
    }
    return r.pass ? kExitOk : kExitFail;
  }

  int emit(const Estimate& e, const std::string& label) {
    if (common_.format == "csv") {
      out_ << to_csv(e, label);
    } else {
      Json j = to_json(e);
      add_timing(j);
      out_ << j.dump(2) << '\n';
    }
    return kExitOk;
  }

  int emit(Json j) {
    if (common_.format == "csv") {
      out_ << csv_of_object(j);
    } else {
      add_timing(j);
      out_ << j.dump(2) << '\n';
    }
    return kExitOk;
  }

  Common common_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

 private:
  void add_timing(Json& j) {
    if (!common_.timing) return;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    j["wall_clock_seconds"] = secs;
    err_ << "wall clock: " << secs << " s\n";
  }

  std::ostream& out_;
  std::ostream& err_;
};

void add_common(CLI::App* cmd, Common& c, bool sampling) {
  if (sampling) {
    cmd->add_option("--samples", c.samples, "Monte Carlo sample count (default depends on dimension)");
    cmd->add_option("--threads", c.threads, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--seed", c.seed, "64-bit seed (default: $SPHERE_PLANKS_SEED, else 1)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--timing", c.timing, "Add wall-clock time to the output and print it to stderr");
  cmd->add_option("--dim", c.dim, "Sphere dimension n; checked against input files");
}

ConvexBody load_body(const std::string& path, const Common& c) {
  try {
    ConvexBody b = body_from_json(read_json_file(path));
    check_dim(c, b.dim());
    return b;
  } catch (const InputError& e) {
    if (e.where().rfind(path, 0) == 0 || e.where() == "--dim") throw;
    throw InputError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f(read_json_file(path));
  } catch (const InputError& e) {
    if (e.where().rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

double angle_option(const std::string& text, const std::string& name) {
  try {
    return parse_angle(text);
  } catch (const InputError& e) {
    throw InputError(name, e.what());
  }
}

std::vector<double> parse_gaps(const std::string& text) {
  std::vector<double> gaps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) gaps.push_back(angle_option(item, "--gaps"));
  if (gaps.empty()) throw InputError("--gaps", "expected a comma-separated list of angles");
  return gaps;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner run(out, err);
  Common& c = run.common_;
  CLI::App app{"Convex geometry on the unit sphere: measures, radii and covering bounds", "sphere-planks"};
  app.require_subcommand(1);

  std::string file;
  std::function<int()> action;

  auto file_verb = [&](const std::string& name, const std::string& help, bool sampling) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "Input JSON file")->required();
    add_common(cmd, c, sampling);
    return cmd;
  };

  // gen-body
  std::string kind = "random", angle_text = "pi/2", radius_text = "0.7";
  int vertices = 64;
  {
    CLI::App* cmd = app.add_subcommand("gen-body", "Write a body file");
    add_common(cmd, c, false);
    cmd->add_option("--kind", kind, "Body family")
        ->check(CLI::IsMember({"random", "generator-cap", "normal-cap", "lune", "octant", "hemisphere", "cap"}));
    cmd->add_option("--angle", angle_text, "Lune angle, e.g. pi/3");
    cmd->add_option("--radius", radius_text, "Cap radius for --kind cap");
    cmd->add_option("--vertices", vertices, "Boundary points for --kind cap")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      action = [&] {
        const int n = c.dim ? c.dim : 2;
        if (n < 2 || n > 4) throw InputError("--dim", "must be 2, 3 or 4");
        const std::uint64_t seed = resolve_seed(c);
        Stream stream(derive_seed(seed, 31));
        Json tags = {{"kind", kind}, {"seed", seed}};
        ConvexBody b;
        if (kind == "random") {
          b = random_body(n, stream);
        } else if (kind == "generator-cap" || kind == "normal-cap") {
          b = random_body(n, kind == "generator-cap" ? BodyKind::GeneratorCap : BodyKind::NormalCap, stream);
        } else if (kind == "lune") {
          const double a = angle_option(angle_text, "--angle");
          if (!(a > 0.0 && a <= kPi)) throw InputError("--angle", "must lie in (0, pi]");
          b = random_lune(n, a, stream).body;
          tags["lune_angle"] = a;
        } else if (kind == "octant") {
          b = octant(n);
        } else if (kind == "hemisphere") {
          b = hemisphere(UnitVector::axis(n + 1, 0));
        } else {
          const double rho = angle_option(radius_text, "--radius");
          if (!(rho > 0.0 && rho < kPi / 2)) throw InputError("--radius", "must lie in (0, pi/2)");
          b = polytopal_cap(SphericalCap(UnitVector::axis(n + 1, n), rho), vertices);
          tags["cap_radius"] = rho;
          tags["vertices"] = vertices;
        }
        return run.emit(body_to_json(b, tags));
      };
    });
  }

  // gen-fan
  std::string gaps_text, widen_text = "0";
  bool half = false, random_frame = false;
  {
    CLI::App* cmd = app.add_subcommand("gen-fan", "Write a lune-fan covering file");
    add_common(cmd, c, false);
    cmd->add_option("--gaps", gaps_text, "Comma-separated lune angles, e.g. pi,pi/2,pi/2")->required();
    cmd->add_flag("--half", half, "Angles span pi and cover a hemisphere");
    cmd->add_option("--widen", widen_text, "Extend every lune by this angle on both sides");
    cmd->add_flag("--random-frame", random_frame, "Rotate the fan by a seeded random frame");
    cmd->callback([&] {
      action = [&] {
        const int n = c.dim ? c.dim : 2;
        if (n < 2 || n > 4) throw InputError("--dim", "must be 2, 3 or 4");
        const std::vector<double> gaps = parse_gaps(gaps_text);
        Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n + 1, n + 1);
        if (random_frame) {
          Stream stream(derive_seed(resolve_seed(c), 32));
          q = random_orthogonal(n + 1, stream);
        }
        CoveringInstance inst;
        try {
          const auto angles = fan_angles_from_gaps(0.0, gaps);
          inst = half ? make_half_fan(n, q.leftCols(2), q.rightCols(n - 1), angles)
                      : make_lune_fan(n, q.leftCols(2), q.rightCols(n - 1), angles);
          const double w = angle_option(widen_text, "--widen");
          if (w != 0.0) inst = widen_fan(inst, w);
        } catch (const GeometryError& e) {
          throw InputError("--gaps", e.what());
        }
        return run.emit(covering_to_json(inst));
      };
    });
  }

  {
    CLI::App* cmd = file_verb("inradius", "Largest cap inside a body", false);
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        if (!b.is_body()) throw InputError(file, "the set has no interior points");
        const Inradius r = inradius(b);
        Json j = {{"inradius", r.radius}, {"incenter", Json::array()}, {"solver_gap", r.solver_gap}};
        for (Eigen::Index i = 0; i < r.center.coords().size(); ++i) j["incenter"].push_back(r.center.coords()[i]);
        return run.emit(j);
      };
    });
  }

  {
    CLI::App* cmd = file_verb("circumradius", "Smallest cap containing a body", false);
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        if (b.is_empty()) throw InputError(file, "the set is empty");
        const Circumradius r = circumradius(b);
        Json j = {{"circumradius", r.radius}, {"hemisphere", r.hemisphere}, {"solver_gap", r.solver_gap}};
        if (r.center) {
          Json cc = Json::array();
          for (Eigen::Index i = 0; i < r.center->coords().size(); ++i) cc.push_back(r.center->coords()[i]);
          j["circumcenter"] = cc;
        } else {
          j["circumcenter"] = nullptr;
        }
        return run.emit(j);
      };
    });
  }

  {
    CLI::App* cmd = file_verb("polar", "Write the polar body", false);
    cmd->callback([&] { action = [&] { return run.emit(body_to_json(load_body(file, c).polar())); }; });
  }

  {
    CLI::App* cmd = file_verb("volume", "Monte Carlo surface measure", true);
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        return run.emit(volume_mc(b, options(c, b.dim())), "volume");
      };
    });
  }

  {
    CLI::App* cmd = file_verb("meanwidth", "Monte Carlo spherical mean width", true);
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        return run.emit(mean_width_mc(b, options(c, b.dim())), "mean_width");
      };
    });
  }

  std::string weight_text = "spherical", mode_text = "auto";
  {
    CLI::App* cmd = file_verb("uf", "Weighted hyperplane measure of a polytope or a projected body", true);
    cmd->add_option("--weight", weight_text, "spherical[:n] or constant[:c]");
    cmd->add_option("--mode", mode_text, "Integration method")->check(CLI::IsMember({"auto", "mc", "quadrature"}));
    cmd->callback([&] {
      action = [&] {
        const Json j = read_json_file(file);
        EuclideanPolytope p;
        if (j.is_object() && j.contains("vertices")) {
          p = with_path(file, [](const Json& x) { return polytope_from_json(x); });
        } else {
          const ConvexBody b = load_body(file, c);
          p = project_body(circumcenter_frame(b), b);
        }
        check_dim(c, p.dim());
        const UfMode mode = mode_text == "mc" ? UfMode::MonteCarlo
                                              : (mode_text == "quadrature" ? UfMode::Quadrature : UfMode::Auto);
        return run.emit(uf(p, parse_weight(weight_text, p.dim()), options(c, p.dim()), mode), "uf");
      };
    });
  }

  bool antipodal = false;
  {
    CLI::App* cmd = file_verb("verify-thm1", "Check sum of inradii >= r(B) for a covering file", true);
    cmd->alias("verify-covering");
    cmd->add_flag("--antipodal", antipodal, "Also check the route through the antipodal cap");
    cmd->callback([&] {
      action = [&] {
        const CoveringInstance inst = with_path(file, [](const Json& x) { return covering_from_json(x); });
        check_dim(c, inst.dim());
        const McOptions opt = options(c, inst.dim());
        VerificationReport cover = check_covering(inst, sub_options(opt, 21));
        if (!cover.pass) {
          err << "the bodies do not cover the ball; the bound is not claimed\n";
          return run.emit(cover);
        }
        VerificationReport r = verify_covering_bound(inst, opt);
        if (antipodal) {
          r.subchecks.push_back(verify_antipodal_argument(inst, opt));
          r.finalize();
        }
        return run.emit(r);
      };
    });
  }

  {
    CLI::App* cmd = file_verb("verify-thm2", "Check sigma(K) <= (sigma_n / pi) r(K)", true);
    cmd->alias("verify-volume");
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        if (!b.is_body()) throw InputError(file, "the set has no interior points");
        return run.emit(verify_volume_bound(b, options(c, b.dim())));
      };
    });
  }

  {
    CLI::App* cmd = file_verb("verify-2-1", "Check sigma_n - 2 sigma(K*) = 2 U(K)", true);
    cmd->alias("verify-polar-identity");
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        return run.emit(check_polar_identity(b, options(c, b.dim())));
      };
    });
  }

  {
    CLI::App* cmd = file_verb("verify-projection", "Compare U(K) with U_f of the gnomonic image", true);
    cmd->callback([&] {
      action = [&] {
        const ConvexBody b = load_body(file, c);
        if (!b.is_body()) throw InputError(file, "the set has no interior points");
        try {
          return run.emit(check_projection_consistency(b, options(c, b.dim())));
        } catch (const GeometryError& e) {
          if (e.code() != ErrorCode::OutsideOpenHemisphere) throw;
          throw InputError(file, e.what());
        }
      };
    });
  }

  std::string radius_R = "1";
  int trials = 200;
  {
    CLI::App* cmd = app.add_subcommand("verify-prop", "Search random sets for U_f below the diameter segment");
    cmd->alias("verify-segment-min");
    add_common(cmd, c, true);
    cmd->add_option("--radius", radius_R, "Enclosing-ball radius R");
    cmd->add_option("--weight", weight_text, "spherical[:n] or constant[:c]");
    cmd->add_option("--trials", trials, "Random instances")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      action = [&] {
        const int n = c.dim ? c.dim : 2;
        if (n < 2 || n > 4) throw InputError("--dim", "must be 2, 3 or 4");
        const double R = angle_option(radius_R, "--radius");
        if (!(R > 0.0)) throw InputError("--radius", "must be positive");
        return run.emit(min_uf_search(n, R, parse_weight(weight_text, n), trials, options(c, n)));
      };
    });
  }

  std::string simplex_kind = "regular";
  int k = 0, vertex = -1;
  {
    CLI::App* cmd = app.add_subcommand("verify-linhart", "Average of g over spherical images against C(R, f)");
    cmd->alias("verify-image-average");
    add_common(cmd, c, true);
    cmd->add_option("file", file, "Simplex JSON file {dim, vertices}");
    cmd->add_option("--simplex", simplex_kind, "Generated simplex when no file is given")
        ->check(CLI::IsMember({"regular", "random", "segment"}));
    cmd->add_option("--k", k, "Simplex dimension (default n)");
    cmd->add_option("--radius", radius_R, "Circumradius R");
    cmd->add_option("--weight", weight_text, "spherical[:n] or constant[:c]");
    cmd->add_option("--vertex", vertex, "Single vertex index (default: all)");
    cmd->callback([&] {
      action = [&] {
        SimplexInBall s;
        if (!file.empty()) {
          s = with_path(file, [](const Json& x) { return simplex_from_json(x); });
          check_dim(c, s.dim());
        } else {
          const int n = c.dim ? c.dim : 2;
          if (n < 2 || n > 4) throw InputError("--dim", "must be 2, 3 or 4");
          const double R = angle_option(radius_R, "--radius");
          if (!(R > 0.0)) throw InputError("--radius", "must be positive");
          const int kk = simplex_kind == "segment" ? 1 : (k ? k : n);
          if (kk < 1 || kk > n) throw InputError("--k", "must lie in 1..n");
          if (simplex_kind == "segment") {
            s = diameter_segment(Eigen::VectorXd::Unit(n, 0), R);
          } else if (simplex_kind == "regular") {
            s = regular_simplex(n, kk, R);
          } else {
            Stream stream(derive_seed(resolve_seed(c), 33));
            s = random_simplex(n, kk, R, stream);
          }
        }
        const WeightFunction w = parse_weight(weight_text, s.dim());
        const McOptions opt = options(c, s.dim());
        if (vertex >= 0) {
          if (vertex > s.k()) throw InputError("--vertex", "exceeds the number of vertices");
          return run.emit(check_spherical_image_inequality(s, vertex, w, opt));
        }
        VerificationReport all;
        all.claim = "spherical_image_inequality_all_vertices";
        int passed = 0;
        for (int j = 0; j <= s.k(); ++j) {
          all.subchecks.push_back(check_spherical_image_inequality(s, j, w, sub_options(opt, 40 + j)));
          passed += all.subchecks.back().pass ? 1 : 0;
        }
        all.lhs = Estimate::exact(passed);
        all.rhs = Estimate::exact(s.k() + 1);
        all.slack = passed - (s.k() + 1);
        all.tolerance_rule = "every vertex passes";
        all.samples = opt.samples;
        all.seed = opt.seed;
        Digest d;
        d.add(all.claim).add(s.vertices()).add(w.name()).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
        all.inputs_digest = d.hex();
        all.finalize();
        return run.emit(all);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace sphplanks
