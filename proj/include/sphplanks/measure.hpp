#ifndef SPHPLANKS_MEASURE_HPP
#define SPHPLANKS_MEASURE_HPP

#include "sphplanks/convex_body.hpp"
#include "sphplanks/montecarlo.hpp"
#include "sphplanks/report.hpp"

namespace sphplanks {

/// Default sample budget: 1e6 for n = 2, 3 and 4e6 for n = 4.
std::size_t default_samples(int n);

/// sigma(K) by rejection sampling of the uniform sphere. Sets without
/// interior points get an exact zero.
Estimate volume_mc(const ConvexBody& body, const McOptions& opt);

/// U(K) = sigma({u : u^⊥ meets K}) / 2.
Estimate mean_width_mc(const ConvexBody& body, const McOptions& opt);

/// sigma_n - 2 sigma(K*) against 2 U(K); passes within three combined
/// standard errors.
VerificationReport check_polar_identity(const ConvexBody& body, const McOptions& opt);

/// sigma(K) against (sigma_n / pi) r(K). Passes when the volume estimate is
/// not above the bound by more than three standard errors. The extra
/// "equality_slack" is bound - estimate, which vanishes for lunes.
VerificationReport verify_volume_bound(const ConvexBody& body, const McOptions& opt);

/// Digest of a body's representations.
Digest& add_body(Digest& d, const ConvexBody& body);

}  // namespace sphplanks

#endif  // SPHPLANKS_MEASURE_HPP
