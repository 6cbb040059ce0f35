#include "sphplanks/measure.hpp"

#include <cmath>

namespace sphplanks {

namespace {

enum Purpose : std::uint64_t { kVolume = 1, kPolarVolume = 2, kMeanWidth = 3 };

void require_body(const ConvexBody& body, const char* what) {
  if (!body.is_body()) throw GeometryError(ErrorCode::NonBody, std::string(what) + ": set has no interior points");
}

}  // namespace

std::size_t default_samples(int n) { return n >= 4 ? 4'000'000 : 1'000'000; }

Digest& add_body(Digest& d, const ConvexBody& body) {
  return d.add(body.normals()).add(body.generators());
}

Estimate volume_mc(const ConvexBody& body, const McOptions& opt) {
  if (!body.is_body()) return Estimate{0.0, 0.0, 0, opt.seed, Quantity::Volume};
  const int d = body.ambient();
  const Accumulator acc = run_batches(opt, [&](Stream& s, std::size_t count, Accumulator& out) {
    SmallVector<double> x(d);
    for (std::size_t i = 0; i < count; ++i) {
      sample_uniform_sphere_into(s, x);
      out.add(body.contains(x) ? 1.0 : 0.0);
    }
  });
  return scaled_estimate(acc, sphere_area(body.dim()), opt, Quantity::Volume);
}

Estimate mean_width_mc(const ConvexBody& body, const McOptions& opt) {
  const int d = body.ambient();
  const Accumulator acc = run_batches(opt, [&](Stream& s, std::size_t count, Accumulator& out) {
    SmallVector<double> u(d);
    for (std::size_t i = 0; i < count; ++i) {
      sample_uniform_sphere_into(s, u);
      out.add(body.hyperplane_meets(u) ? 1.0 : 0.0);
    }
  });
  return scaled_estimate(acc, 0.5 * sphere_area(body.dim()), opt, Quantity::MeanWidth);
}

VerificationReport check_polar_identity(const ConvexBody& body, const McOptions& opt) {
  require_body(body, "check_polar_identity");
  const double sigma = sphere_area(body.dim());
  const Estimate polar_volume = volume_mc(body.polar(), sub_options(opt, kPolarVolume));
  const Estimate width = mean_width_mc(body, sub_options(opt, kMeanWidth));

  VerificationReport r;
  r.claim = "polar_identity";
  r.lhs = polar_volume;
  r.lhs.value = sigma - 2.0 * polar_volume.value;
  r.lhs.std_error = 2.0 * polar_volume.std_error;
  r.rhs = width;
  r.rhs.value = 2.0 * width.value;
  r.rhs.std_error = 2.0 * width.std_error;
  r.slack = -std::abs(r.lhs.value - r.rhs.value);
  r.tolerance = 3.0 * combined_sigma(r.lhs, r.rhs);
  r.tolerance_rule = "|sigma_n - 2 sigma(K*) - 2 U(K)| <= 3 combined stderr";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.extras = {{"sigma_n", sigma}, {"polar_volume", polar_volume.value}, {"mean_width", width.value}};
  if (!body.polar().is_body()) r.flags.push_back("polar_without_interior");
  Digest dg;
  add_body(dg.add(r.claim), body).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = dg.hex();
  r.finalize();
  return r;
}

VerificationReport verify_volume_bound(const ConvexBody& body, const McOptions& opt) {
  require_body(body, "verify_volume_bound");
  const double sigma = sphere_area(body.dim());
  const Inradius in = inradius(body);
  const Estimate volume = volume_mc(body, sub_options(opt, kVolume));

  VerificationReport r;
  r.claim = "volume_inradius_bound";
  r.lhs = volume;
  r.rhs = Estimate::exact(sigma / kPi * in.radius);
  r.slack = r.rhs.value - r.lhs.value;
  r.tolerance = 3.0 * volume.std_error;
  r.tolerance_rule = "sigma(K) - 3 stderr <= (sigma_n / pi) r(K)";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.extras = {{"inradius", in.radius}, {"sigma_n", sigma}, {"equality_slack", r.slack}};
  if (std::abs(r.slack) <= r.tolerance) r.flags.push_back("equality_within_3sigma");
  Digest dg;
  add_body(dg.add(r.claim), body).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = dg.hex();
  r.finalize();
  return r;
}

}  // namespace sphplanks
