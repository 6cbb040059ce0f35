// Acceptance suite: one PASS/FAIL line per criterion. All seeds and
// tolerances are fixed here.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sphplanks/cli.hpp"
#include "sphplanks/covering.hpp"
#include "sphplanks/generate.hpp"
#include "sphplanks/io.hpp"
#include "sphplanks/linhart.hpp"
#include "sphplanks/measure.hpp"

using namespace sphplanks;

namespace {

constexpr std::uint64_t kSeed = 20261016;
constexpr std::size_t kSamples = 1'000'000;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

McOptions opts(std::uint64_t purpose, std::size_t samples = kSamples) {
  return McOptions{samples, derive_seed(kSeed, purpose), 1};
}

void lune_volume_law() {
  Stream gen(kSeed, 1);
  int ok = 0, total = 0;
  double worst = 0.0;
  for (int n : {2, 3})
    for (int i = 0; i < 20; ++i) {
      const double alpha = 0.05 + (kPi - 0.05) * gen.uniform();
      const Lune l = random_lune(n, alpha, gen);
      const Estimate v = volume_mc(l.body, opts(1000 + total));
      const double z = std::abs(v.value - sphere_area(n) / kPi * l.inradius()) / v.std_error;
      worst = std::max(worst, z);
      ok += z <= 3.0;
      ++total;
    }
  report(1, "lune volume law", ok == total, fmt("%d/%d lunes within 3 stderr, max |z| = %.3f", ok, total, worst));
}

void volume_inradius_bound() {
  Stream gen(kSeed, 2);
  int bodies_ok = 0, bodies = 0, lunes_ok = 0, lunes = 0, id = 0;
  for (int n : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      const VerificationReport r = verify_volume_bound(random_body(n, gen), opts(2000 + id++));
      bodies_ok += r.pass;
      ++bodies;
    }
    for (int i = 0; i < 5; ++i) {
      const Lune l = random_lune(n, 0.05 + (kPi - 0.05) * gen.uniform(), gen);
      const VerificationReport r = verify_volume_bound(l.body, opts(2000 + id++));
      lunes_ok += std::abs(r.slack) <= r.tolerance;
      ++lunes;
    }
  }
  const VerificationReport oct = verify_volume_bound(octant(2), opts(2999));
  const bool ok = bodies_ok == bodies && lunes_ok == lunes && oct.pass && oct.slack >= 0.8;
  report(2, "volume-inradius bound", ok,
         fmt("bodies %d/%d, lunes two-sided %d/%d, octant slack %.4f (closed form %.4f)", bodies_ok, bodies, lunes_ok,
             lunes, oct.slack, 4 * std::asin(1 / std::sqrt(3.0)) - kPi / 2));
}

void polar_identity() {
  Stream gen(kSeed, 3);
  int ok = 0;
  for (int i = 0; i < 50; ++i) ok += check_polar_identity(random_body(2 + i % 2, gen), opts(3000 + i)).pass;
  report(3, "polar identity", ok >= 49, fmt("%d/50 within 3 combined stderr (need 49)", ok));
}

void projection_consistency() {
  Stream gen(kSeed, 4);
  int ok = 0;
  for (int i = 0; i < 50; ++i)
    ok += check_projection_consistency(random_body(2 + i % 2, BodyKind::GeneratorCap, gen), opts(4000 + i)).pass;
  const double rho = 0.7;
  const int N = 256;
  const double exact = 2 * kPi * std::sin(rho);
  const double mesh = 2 * kPi * (std::sin(rho) - std::sin(std::atan(std::tan(rho) * std::cos(kPi / N))));
  const ConvexBody cap = polytopal_cap(SphericalCap(UnitVector::axis(3, 2), rho), N);
  const Estimate sphere_side = mean_width_mc(cap, opts(4100));
  const Estimate flat_side = uf(project_body(circumcenter_frame(cap), cap), WeightFunction::spherical(2), opts(4101));
  const bool s_ok = std::abs(sphere_side.value - exact) <= 3 * sphere_side.std_error + mesh;
  const bool f_ok = std::abs(flat_side.value - exact) <= 3 * flat_side.std_error + mesh;
  report(4, "gnomonic consistency", ok == 50 && s_ok && f_ok,
         fmt("%d/50 bodies agree; cap rho=0.7: sphere %.5f, projected %.7f, 2 pi sin 0.7 = %.5f, mesh bound %.2e", ok,
             sphere_side.value, flat_side.value, exact, mesh));
}

void polar_radius_duality() {
  Stream gen(kSeed, 5);
  int count = 0, ok = 0;
  double worst = 0.0;
  while (count < 100) {
    const ConvexBody k = random_body(2 + count % 3, gen);
    const Circumradius c = circumradius(k);
    if (c.hemisphere) continue;
    const double err = std::abs(inradius(k.polar()).radius - (kPi / 2 - c.radius));
    worst = std::max(worst, err);
    ok += err <= 1e-7;
    ++count;
  }
  report(5, "polar radius duality", ok == 100, fmt("%d/100 within 1e-7, max error %.2e", ok, worst));
}

void spherical_image_inequality() {
  Stream gen(kSeed, 6);
  int checks = 0, ok = 0, id = 0;
  for (int n : {2, 3})
    for (int i = 0; i < 100; ++i) {
      const double R = 0.5 + 1.5 * gen.uniform();
      const SimplexInBall t = random_simplex(n, n, R, gen);
      for (const WeightFunction& w : {WeightFunction::constant(1.0), WeightFunction::spherical(n)})
        for (int j = 0; j <= t.k(); ++j) {
          ok += check_spherical_image_inequality(t, j, w, opts(6000 + id++, 200'000)).pass;
          ++checks;
        }
    }
  int seg_ok = 0, segs = 0;
  for (int n : {2, 3})
    for (const WeightFunction& w : {WeightFunction::constant(1.0), WeightFunction::spherical(n)}) {
      Eigen::VectorXd d(n);
      sample_uniform_sphere_into(gen, d);
      const SimplexInBall s = diameter_segment(d, 0.5 + 1.5 * gen.uniform());
      for (int j = 0; j < 2; ++j) {
        const VerificationReport r = check_spherical_image_inequality(s, j, w, opts(6500 + segs));
        seg_ok += std::abs(r.slack) <= r.tolerance;
        ++segs;
      }
    }
  const VerificationReport tri =
      check_spherical_image_inequality(regular_simplex(2, 2, 1.0), 0, WeightFunction::constant(1.0), opts(6600));
  const bool tri_ok = tri.lhs.value - 3 * tri.lhs.std_error > 2 / kPi;
  report(6, "spherical-image inequality", ok == checks && seg_ok == segs && tri_ok,
         fmt("simplex vertices %d/%d, segment equality %d/%d, regular triangle lhs %.5f +- %.5f vs 2/pi = %.5f", ok,
             checks, seg_ok, segs, tri.lhs.value, tri.lhs.std_error, 2 / kPi));
}

void segment_minimizes() {
  std::string detail;
  bool ok = true;
  int k = 0;
  for (const WeightFunction& w : {WeightFunction::constant(1.0), WeightFunction::spherical(2)}) {
    const VerificationReport r = min_uf_search(2, 1.0, w, 200, opts(7000 + k++));
    ok = ok && r.pass;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s: min %.6f vs segment %.6f (bound %.6f) %s", w.name().c_str(), r.extra("min_value"),
                  r.extra("segment_value"), r.extra("lower_bound"), r.pass ? "ok" : "FAILED");
  }
  report(7, "segment minimizes U_f", ok, detail);
}

void covering_bound() {
  Stream gen(kSeed, 8);
  const McOptions cover_opt = opts(8000, 100'000);
  // Exact fans.
  int fans_ok = 0;
  double fan_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const FanFrame f = random_fan_frame(n, gen);
    const int m = 2 + static_cast<int>(gen() % 7);
    const auto gaps = random_gaps(m, 2 * kPi, 0.05, kPi, gen);
    const CoveringInstance inst = make_lune_fan(n, f.plane_basis, f.ridge_basis, fan_angles_from_gaps(2 * kPi * gen.uniform(), gaps));
    double sum = 0.0;
    for (double r : inst.exact_inradii) sum += r;
    fan_err = std::max(fan_err, std::abs(sum - kPi));
    const VerificationReport r = verify_covering_bound(inst, cover_opt);
    fans_ok += std::abs(sum - kPi) <= 1e-12 && r.pass && std::abs(r.slack) <= 1e-12;
  }

  // Perturbed covers of S^2, also checked against a smaller ball and via the antipodal cap.
  int sphere_ok = 0;
  double slack_err = 0.0, route_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const FanFrame f = random_fan_frame(2, gen);
    const int m = 3 + static_cast<int>(gen() % 5);
    const auto gaps = random_gaps(m, 2 * kPi, 0.2, kPi - 0.2, gen);
    std::vector<double> widen;
    double total = 0.0;
    for (int j = 0; j < m; ++j) total += widen.emplace_back(0.001 + 0.049 * gen.uniform());
    const CoveringInstance inst = widen_fan(
        make_lune_fan(2, f.plane_basis, f.ridge_basis, fan_angles_from_gaps(2 * kPi * gen.uniform(), gaps)), widen);
    const VerificationReport r = verify_covering_bound(inst, cover_opt);
    slack_err = std::max(slack_err, std::abs(r.slack - total));
    CoveringInstance smaller = inst;
    smaller.ball = SphericalCap(sample_uniform_sphere(2, gen), kPi / 2 + (kPi / 2) * 0.999 * gen.uniform());
    const VerificationReport rs = verify_covering_bound(smaller, cover_opt);
    const VerificationReport a = verify_antipodal_argument(smaller, cover_opt);
    route_err = std::max(route_err, std::abs(a.slack - rs.slack));
    sphere_ok += r.pass && std::abs(r.slack - total) <= 1e-7 && rs.pass && a.pass && std::abs(a.slack - rs.slack) <= 1e-9;
  }

  // Perturbed covers of a hemisphere: direct, clipped and antipodal forms.
  int half_ok = 0;
  double clip_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const FanFrame f = random_fan_frame(2, gen);
    const int m = 2 + static_cast<int>(gen() % 4);
    const auto gaps = random_gaps(m, kPi, 0.1, kPi - 0.1, gen);
    std::vector<double> widen;
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      const double room = 0.5 * (kPi - gaps[static_cast<std::size_t>(j)]);
      total += widen.emplace_back(std::min(room, 0.001 + 0.049 * gen.uniform()));
    }
    const CoveringInstance inst = widen_fan(
        make_half_fan(2, f.plane_basis, f.ridge_basis, fan_angles_from_gaps(2 * kPi * gen.uniform(), gaps)), widen);
    const VerificationReport r = verify_covering_bound(inst, cover_opt);
    const double expected_clip = kPi / 2 + total - 0.5 * (widen.front() + widen.back());
    clip_err = std::max(clip_err, std::abs(r.extra("clipped_inradius_sum") - expected_clip));
    slack_err = std::max(slack_err, std::abs(r.slack - total));
    const VerificationReport a = verify_antipodal_argument(inst, cover_opt);
    route_err = std::max(route_err, std::abs(a.slack - r.slack));
    half_ok += r.pass && std::abs(r.slack - total) <= 1e-7 &&
               std::abs(r.extra("clipped_inradius_sum") - expected_clip) <= 1e-7 && a.pass &&
               std::abs(a.slack - r.slack) <= 1e-9;
  }
  report(8, "covering bound", fans_ok == 100 && sphere_ok == 50 && half_ok == 50,
         fmt("fans %d/100 (max |sum - pi| %.1e), sphere covers %d/50, hemisphere covers %d/50, "
             "max widening mismatch %.1e, max clipped mismatch %.1e, max route gap %.1e",
             fans_ok, fan_err, sphere_ok, half_ok, slack_err, clip_err, route_err));
}

std::string dump(const VerificationReport& r) { return to_json(r).dump(2); }

void reproducibility() {
  bool ok = true;
  int compared = 0;
  auto same = [&](auto&& make) {
    std::string first;
    for (unsigned threads : {1u, 2u, 4u, 1u}) {
      const std::string s = dump(make(threads));
      if (first.empty()) first = s;
      ok = ok && s == first;
      ++compared;
    }
  };
  Stream gen(kSeed, 9);
  const ConvexBody body = random_body(3, BodyKind::GeneratorCap, gen);
  const SimplexInBall tri = random_simplex(2, 2, 1.0, gen);
  const FanFrame f = random_fan_frame(3, gen);
  const CoveringInstance cover =
      widen_fan(make_lune_fan(3, f.plane_basis, f.ridge_basis, fan_angles_from_gaps(0.0, {2.0, 2.0, 2 * kPi - 4.0})), 0.02);
  auto o = [](unsigned threads) { return McOptions{300'001, kSeed, threads}; };
  same([&](unsigned t) { return verify_volume_bound(body, o(t)); });
  same([&](unsigned t) { return check_polar_identity(body, o(t)); });
  same([&](unsigned t) { return check_projection_consistency(body, o(t)); });
  same([&](unsigned t) { return check_spherical_image_inequality(tri, 1, WeightFunction::spherical(2), o(t)); });
  same([&](unsigned t) { return min_uf_search(3, 1.0, WeightFunction::constant(1.0), 3, o(t)); });
  same([&](unsigned t) { return verify_covering_bound(cover, o(t)); });

  // Through the command-line tool as well.
  std::ostringstream gen_out, sink;
  run_cli({"gen-body", "--dim", "3", "--kind", "random", "--seed", "5"}, gen_out, sink);
  const std::string path = "acceptance_body.json";
  std::FILE* fp = std::fopen(path.c_str(), "w");
  std::fputs(gen_out.str().c_str(), fp);
  std::fclose(fp);
  std::string first;
  for (const char* threads : {"1", "3", "1"}) {
    std::ostringstream out, err;
    run_cli({"verify-2-1", path, "--samples", "200000", "--seed", "17", "--threads", threads}, out, err);
    if (first.empty()) first = out.str();
    ok = ok && out.str() == first && !first.empty();
    ++compared;
  }
  std::remove(path.c_str());
  report(9, "reproducibility", ok, fmt("%d runs over thread counts 1-4, all byte-identical: %s", compared, ok ? "yes" : "no"));
}

}  // namespace

int main() {
  lune_volume_law();
  volume_inradius_bound();
  polar_identity();
  projection_consistency();
  polar_radius_duality();
  spherical_image_inequality();
  segment_minimizes();
  covering_bound();
  reproducibility();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
