#include "sphplanks/weight.hpp"

#include <cmath>
#include <cstdio>

#include "sphplanks/error.hpp"

namespace sphplanks {

namespace {

// int_0^x cos^k, via t = tan(theta): int_0^s (1+t^2)^{-(k+2)/2} dt = int_0^{atan s} cos^k.
double cos_power_integral(int k, double x) {
  double even = x, odd = std::sin(x);
  if (k == 0) return even;
  if (k == 1) return odd;
  double prev2 = k % 2 == 0 ? even : odd;
  for (int j = k % 2 == 0 ? 2 : 3; j <= k; j += 2)
    prev2 = std::pow(std::cos(x), j - 1) * std::sin(x) / j + (j - 1.0) / j * prev2;
  return prev2;
}

}  // namespace

WeightFunction WeightFunction::spherical(int n) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "spherical weight: n must be >= 1");
  WeightFunction w;
  w.kind_ = Kind::Spherical;
  w.n_ = n;
  return w;
}

WeightFunction WeightFunction::constant(double c) {
  if (!(c > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "constant weight must be positive");
  WeightFunction w;
  w.kind_ = Kind::Constant;
  w.c_ = c;
  return w;
}

WeightFunction WeightFunction::table(std::vector<double> t, std::vector<double> f) {
  if (t.empty() || t.size() != f.size() || t.front() != 0.0)
    throw GeometryError(ErrorCode::InvalidArgument, "table weight: need matching knots starting at t = 0");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(f[k] > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "table weight: values must be positive");
    if (k > 0 && !(t[k] > t[k - 1]))
      throw GeometryError(ErrorCode::InvalidArgument, "table weight: knots must increase");
  }
  WeightFunction w;
  w.kind_ = Kind::Table;
  w.t_ = std::move(t);
  w.f_ = std::move(f);
  return w;
}

double WeightFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::Spherical:
      return std::pow(1.0 + t * t, -0.5 * (n_ + 1));
    case Kind::Constant:
      return c_;
    case Kind::Table: {
      if (t >= t_.back()) return f_.back();
      std::size_t k = 1;
      while (t_[k] < t) ++k;
      const double a = (t - t_[k - 1]) / (t_[k] - t_[k - 1]);
      return (1.0 - a) * f_[k - 1] + a * f_[k];
    }
  }
  return 0.0;
}

double WeightFunction::cumulative(double s) const {
  if (s <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::Constant:
      return c_ * s;
    case Kind::Spherical:
      if (n_ == 2) return s / std::sqrt(1.0 + s * s);
      return cos_power_integral(n_ - 1, std::atan(s));
    case Kind::Table: {
      double total = 0.0;
      for (std::size_t k = 1; k < t_.size(); ++k) {
        const double lo = t_[k - 1];
        const double hi = std::min(t_[k], s);
        if (hi <= lo) break;
        total += 0.5 * (hi - lo) * ((*this)(lo) + (*this)(hi));
      }
      if (s > t_.back()) total += f_.back() * (s - t_.back());
      return total;
    }
  }
  return 0.0;
}

std::string WeightFunction::name() const {
  switch (kind_) {
    case Kind::Spherical: return "spherical(" + std::to_string(n_) + ")";
    case Kind::Constant: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "constant(%.17g)", c_);
      return buf;
    }
    case Kind::Table: return "table";
  }
  return "unknown";
}

}  // namespace sphplanks
