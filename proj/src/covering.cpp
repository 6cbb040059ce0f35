#include "sphplanks/covering.hpp"

#include <algorithm>
#include <numeric>

#include "sphplanks/measure.hpp"

namespace sphplanks {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double kBoundTol = 1e-7;
constexpr std::size_t kMaxWitnesses = 10;

struct CoverAccumulator {
  std::size_t total = 0;
  std::size_t uncovered = 0;
  std::vector<Eigen::VectorXd> witnesses;

  void merge(const CoverAccumulator& o) {
    total += o.total;
    uncovered += o.uncovered;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
};

void check_angles(const std::vector<double>& angles, double span, const char* who) {
  if (angles.size() < 2) throw GeometryError(ErrorCode::InvalidArgument, std::string(who) + ": need at least one lune");
  for (std::size_t i = 1; i < angles.size(); ++i) {
    const double gap = angles[i] - angles[i - 1];
    if (!(gap > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, std::string(who) + ": angles must increase");
    if (gap > kPi + kAngleTol)
      throw GeometryError(ErrorCode::InvalidArgument, std::string(who) + ": a gap exceeds pi");
  }
  if (std::abs(angles.back() - angles.front() - span) > kAngleTol)
    throw GeometryError(ErrorCode::InvalidArgument, std::string(who) + ": angles do not wrap around exactly");
}

void check_frame(int n, const Eigen::MatrixXd& plane, const Eigen::MatrixXd& ridge) {
  const int d = n + 1;
  if (n < 1 || n > kMaxAmbient - 1) throw GeometryError(ErrorCode::UnsupportedDimension, "lune fan: bad dimension");
  if (plane.rows() != d || plane.cols() != 2 || ridge.rows() != d || ridge.cols() != d - 2)
    throw GeometryError(ErrorCode::DimensionMismatch, "lune fan: frame has the wrong shape");
  Eigen::MatrixXd q(d, d);
  q << plane, ridge;
  if ((q.transpose() * q - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9)
    throw GeometryError(ErrorCode::InvalidArgument, "lune fan: frame is not orthonormal");
}

void build_lunes(CoveringInstance& inst) {
  const LuneFan& fan = *inst.fan;
  inst.bodies.clear();
  inst.exact_inradii.clear();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const Lune lune = make_lune(fan.plane_basis, fan.ridge_basis, fan.boundary_angles[i] - fan.widening[i],
                                fan.boundary_angles[i + 1] + fan.widening[i]);
    inst.bodies.push_back(lune.body);
    inst.exact_inradii.push_back(0.5 * fan.lune_angle(i));
  }
}

Eigen::VectorXd plane_direction(const LuneFan& fan, double theta) {
  return std::cos(theta) * fan.plane_basis.col(0) + std::sin(theta) * fan.plane_basis.col(1);
}

bool is_hemisphere_ball(const SphericalCap& b) { return std::abs(b.radius - kPi / 2) <= kAngleTol; }

std::vector<double> body_inradii(const CoveringInstance& inst) {
  if (inst.construction == Construction::LuneFan && inst.exact_inradii.size() == inst.bodies.size())
    return inst.exact_inradii;
  std::vector<double> r;
  for (const auto& b : inst.bodies) r.push_back(b.is_body() ? inradius(b).radius : 0.0);
  return r;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Digest& add_instance(Digest& d, const CoveringInstance& inst) {
  d.add(inst.ball.center.coords()).add(inst.ball.radius).add(std::string(to_string(inst.construction)));
  for (const auto& b : inst.bodies) add_body(d, b);
  return d;
}

template <typename Covered>
CoverAccumulator sample_cover(const SphericalCap& domain, const McOptions& opt, Covered&& covered) {
  const int d = domain.center.ambient();
  return run_batches<CoverAccumulator>(opt, [&](Stream& s, std::size_t count, CoverAccumulator& out) {
    SmallVector<double> x(d);
    for (std::size_t i = 0; i < count; ++i) {
      sample_uniform_cap_into(domain, s, x);
      ++out.total;
      if (covered(x)) continue;
      ++out.uncovered;
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.emplace_back(x);
    }
  });
}

VerificationReport cover_report(const std::string& claim, const CoverAccumulator& acc, const McOptions& opt) {
  VerificationReport r;
  r.claim = claim;
  const double frac = acc.total ? static_cast<double>(acc.uncovered) / static_cast<double>(acc.total) : 0.0;
  r.lhs = Estimate{frac, 0.0, acc.total, opt.seed, Quantity::Volume};
  r.rhs = Estimate::exact(0.0);
  r.slack = acc.uncovered ? -static_cast<double>(acc.uncovered) : 0.0;
  r.tolerance = 0.0;
  r.tolerance_rule = "every sample lies in some body (membership tolerance 1e-12)";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.extras = {{"uncovered", static_cast<double>(acc.uncovered)}, {"sampled", static_cast<double>(acc.total)}};
  r.witnesses = acc.witnesses;
  r.finalize();
  return r;
}

}  // namespace

double LuneFan::inradius_sum() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += 0.5 * lune_angle(i);
  return s;
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::LuneFan: return "lune-fan";
    case Construction::PerturbedFan: return "perturbed-fan";
    case Construction::Custom: return "custom";
  }
  return "custom";
}

std::vector<double> fan_angles_from_gaps(double theta0, const std::vector<double>& gaps) {
  std::vector<double> a{theta0};
  for (double g : gaps) a.push_back(a.back() + g);
  return a;
}

CoveringInstance make_lune_fan(int n, const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
                               const std::vector<double>& boundary_angles) {
  check_frame(n, plane_basis, ridge_basis);
  check_angles(boundary_angles, 2.0 * kPi, "make_lune_fan");
  CoveringInstance inst;
  inst.construction = Construction::LuneFan;
  inst.fan = LuneFan{plane_basis, ridge_basis, boundary_angles, std::vector<double>(boundary_angles.size() - 1, 0.0)};
  inst.ball = SphericalCap(UnitVector::normalize(plane_basis.col(0)), kPi);
  build_lunes(inst);
  return inst;
}

CoveringInstance make_half_fan(int n, const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
                               const std::vector<double>& boundary_angles) {
  check_frame(n, plane_basis, ridge_basis);
  check_angles(boundary_angles, kPi, "make_half_fan");
  CoveringInstance inst;
  inst.construction = Construction::LuneFan;
  inst.fan = LuneFan{plane_basis, ridge_basis, boundary_angles, std::vector<double>(boundary_angles.size() - 1, 0.0)};
  inst.ball = SphericalCap(UnitVector::normalize(plane_direction(*inst.fan, boundary_angles.front() + kPi / 2)),
                           kPi / 2);
  build_lunes(inst);
  return inst;
}

CoveringInstance widen_fan(const CoveringInstance& inst, const std::vector<double>& widening) {
  if (!inst.fan) throw GeometryError(ErrorCode::InvalidArgument, "widen_fan: instance is not a fan");
  if (widening.size() != inst.fan->size())
    throw GeometryError(ErrorCode::InvalidArgument, "widen_fan: one widening per lune required");
  CoveringInstance out = inst;
  for (std::size_t i = 0; i < widening.size(); ++i) {
    if (!(widening[i] >= 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "widen_fan: widening must be >= 0");
    out.fan->widening[i] += widening[i];
    if (out.fan->lune_angle(i) > kPi + kAngleTol)
      throw GeometryError(ErrorCode::InvalidArgument, "widen_fan: a widened lune exceeds angle pi");
  }
  out.construction = Construction::PerturbedFan;
  build_lunes(out);
  return out;
}

CoveringInstance widen_fan(const CoveringInstance& inst, double widening) {
  if (!inst.fan) throw GeometryError(ErrorCode::InvalidArgument, "widen_fan: instance is not a fan");
  return widen_fan(inst, std::vector<double>(inst.fan->size(), widening));
}

bool certify_fan_cover(const CoveringInstance& inst) {
  if (!inst.fan) return false;
  const LuneFan& fan = *inst.fan;
  const double start = fan.boundary_angles.front();
  const double span = fan.boundary_angles.back() - start;
  const bool full = std::abs(span - 2.0 * kPi) <= kAngleTol;
  // A full fan covers all of S^n, hence any ball; a half fan only its own
  // hemisphere.
  if (!full) {
    if (!is_hemisphere_ball(inst.ball)) return false;
    const Eigen::VectorXd mid = plane_direction(fan, start + kPi / 2);
    if ((mid - inst.ball.center.coords()).norm() > 1e-9) return false;
  }
  // Sweep the intervals in order of their left ends.
  std::vector<std::pair<double, double>> iv;
  for (std::size_t i = 0; i < fan.size(); ++i)
    iv.emplace_back(fan.boundary_angles[i] - fan.widening[i], fan.boundary_angles[i + 1] + fan.widening[i]);
  std::sort(iv.begin(), iv.end());
  double reach = start;
  for (const auto& [lo, hi] : iv) {
    if (lo > reach + kAngleTol) return false;
    reach = std::max(reach, hi);
  }
  return reach >= start + span - kAngleTol;
}

VerificationReport check_covering(const CoveringInstance& inst, const McOptions& opt) {
  for (const auto& b : inst.bodies)
    if (b.ambient() != inst.ball.center.ambient())
      throw GeometryError(ErrorCode::DimensionMismatch, "check_covering: body dimension differs from the ball");
  const auto acc = sample_cover(inst.ball, opt, [&](const auto& x) {
    return std::any_of(inst.bodies.begin(), inst.bodies.end(), [&](const ConvexBody& b) { return b.contains(x); });
  });
  VerificationReport r = cover_report("covering", acc, opt);
  Digest d;
  add_instance(d.add(r.claim), inst).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = d.hex();
  return r;
}

VerificationReport verify_covering_bound(const CoveringInstance& inst, const McOptions& opt) {
  if (!(inst.ball.radius >= kPi / 2 - kAngleTol))
    throw GeometryError(ErrorCode::InvalidArgument, "verify_covering_bound: the ball radius must be >= pi/2");
  VerificationReport cover = check_covering(inst, sub_options(opt, 21));
  if (!cover.pass) throw GeometryError(ErrorCode::NotCovering, "verify_covering_bound: the bodies do not cover the ball");

  const std::vector<double> radii = body_inradii(inst);
  VerificationReport r;
  r.claim = "covering_inradius_bound";
  r.lhs = Estimate::exact(sum(radii));
  r.rhs = Estimate::exact(inst.ball.radius);
  r.slack = r.lhs.value - r.rhs.value;
  r.tolerance = kBoundTol;
  r.tolerance_rule = "sum r(K_i) >= r(B) - 1e-7";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.extras = {{"bodies", static_cast<double>(inst.bodies.size())}};
  r.extras.emplace_back("exact_inradii", inst.construction == Construction::LuneFan ? 1.0 : 0.0);
  if (inst.fan) {
    const double expected = inst.fan->inradius_sum();
    r.extras.emplace_back("fan_inradius_sum", expected);
    r.extras.emplace_back("expected_slack", expected - inst.ball.radius);
    if (std::abs(r.slack) <= r.tolerance) r.flags.push_back("equality");
  }
  r.subchecks.push_back(cover);

  if (inst.fan) {
    VerificationReport cert;
    cert.claim = "fan_cover_certificate";
    const bool ok = certify_fan_cover(inst);
    cert.lhs = Estimate::exact(ok ? 1.0 : 0.0);
    cert.rhs = Estimate::exact(1.0);
    cert.slack = ok ? 0.0 : -1.0;
    cert.tolerance_rule = "angle intervals cover the ball's angular range";
    cert.finalize();
    r.subchecks.push_back(cert);
  }

  if (is_hemisphere_ball(inst.ball)) {
    double clipped = 0.0;
    for (const auto& b : inst.bodies) {
      const ConvexBody k = intersect_with_hemisphere(b, inst.ball);
      if (k.is_body()) clipped += inradius(k).radius;
    }
    VerificationReport strong;
    strong.claim = "clipped_inradius_bound";
    strong.lhs = Estimate::exact(clipped);
    strong.rhs = Estimate::exact(kPi / 2);
    strong.slack = clipped - kPi / 2;
    strong.tolerance = kBoundTol;
    strong.tolerance_rule = "sum r(K_i ∩ B) >= pi/2 - 1e-7";
    strong.samples = opt.samples;
    strong.seed = opt.seed;
    strong.finalize();
    r.extras.emplace_back("clipped_inradius_sum", clipped);
    r.subchecks.push_back(strong);
  }

  Digest d;
  add_instance(d.add(r.claim), inst).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = d.hex();
  r.finalize();
  return r;
}

VerificationReport verify_antipodal_argument(const CoveringInstance& inst, const McOptions& opt) {
  const std::vector<double> radii = body_inradii(inst);
  const double total = sum(radii);
  const double rb = inst.ball.radius;
  const double direct = total - rb;

  VerificationReport r;
  r.claim = "antipodal_cover_bound";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.tolerance = kBoundTol;
  r.tolerance_rule = "pi - r(B) + sum r(K_i) >= pi - 1e-7; routes agree to 1e-9";
  r.extras = {{"direct_slack", direct}};
  Digest d;
  add_instance(d.add(r.claim), inst).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = d.hex();

  if (rb >= kPi - kAngleTol) {
    // B' would be a single point; only the direct route applies.
    r.lhs = Estimate::exact(total);
    r.rhs = Estimate::exact(rb);
    r.slack = direct;
    r.flags.push_back("antipodal_route_skipped");
    r.finalize();
    return r;
  }

  const SphericalCap complement(UnitVector(-inst.ball.center.coords()), kPi - rb);
  const SphericalCap sphere(inst.ball.center, kPi);
  const auto acc = sample_cover(sphere, sub_options(opt, 22), [&](const auto& x) {
    if (complement.contains(x, 1e-12)) return true;
    return std::any_of(inst.bodies.begin(), inst.bodies.end(), [&](const ConvexBody& b) { return b.contains(x); });
  });
  r.subchecks.push_back(cover_report("sphere_covering_with_antipodal_cap", acc, sub_options(opt, 22)));

  const double lhs = (kPi - rb) + total;
  r.lhs = Estimate::exact(lhs);
  r.rhs = Estimate::exact(kPi);
  r.slack = lhs - kPi;
  r.extras.emplace_back("antipodal_radius", kPi - rb);
  r.extras.emplace_back("antipodal_slack", r.slack);

  VerificationReport agree;
  agree.claim = "routes_agree";
  agree.lhs = Estimate::exact(r.slack);
  agree.rhs = Estimate::exact(direct);
  agree.slack = -std::abs(r.slack - direct);
  agree.tolerance = 1e-9;
  agree.tolerance_rule = "|antipodal slack - direct slack| <= 1e-9";
  agree.finalize();
  r.subchecks.push_back(agree);
  r.finalize();
  return r;
}

}  // namespace sphplanks
