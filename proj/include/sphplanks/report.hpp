#ifndef SPHPLANKS_REPORT_HPP
#define SPHPLANKS_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sphplanks/montecarlo.hpp"

namespace sphplanks {

/// Outcome of checking one claim numerically.
///
/// pass == (slack >= -tolerance) && every subcheck passes.
struct VerificationReport {
  std::string claim;
  Estimate lhs;
  Estimate rhs;
  double slack = 0.0;
  double tolerance = 0.0;
  std::string tolerance_rule;
  bool pass = false;
  std::string inputs_digest;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Named auxiliary numbers (equality slack, per-instance counts, ...).
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> flags;
  /// Points that violate the claim, e.g. uncovered samples.
  std::vector<Eigen::VectorXd> witnesses;
  std::vector<VerificationReport> subchecks;

  /// Recomputes `pass` from slack, tolerance and subchecks.
  void finalize() {
    pass = slack >= -tolerance;
    for (const auto& s : subchecks) pass = pass && s.pass;
  }

  double extra(const std::string& key) const {
    for (const auto& [k, v] : extras)
      if (k == key) return v;
    return 0.0;
  }
  bool has_flag(const std::string& f) const {
    for (const auto& x : flags)
      if (x == f) return true;
    return false;
  }
};

/// FNV-1a over raw bytes, rendered as 16 hex digits.
class Digest {
 public:
  Digest& add(const void* data, std::size_t bytes);
  Digest& add(const Eigen::MatrixXd& m);
  Digest& add(const std::string& s) { return add(s.data(), s.size()); }
  Digest& add(std::uint64_t v) { return add(&v, sizeof v); }
  Digest& add(double v) { return add(&v, sizeof v); }
  std::string hex() const;

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace sphplanks

#endif  // SPHPLANKS_REPORT_HPP
