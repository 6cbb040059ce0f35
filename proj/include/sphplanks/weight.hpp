#ifndef SPHPLANKS_WEIGHT_HPP
#define SPHPLANKS_WEIGHT_HPP

#include <string>
#include <vector>

namespace sphplanks {

/// Positive continuous density f on [0, inf) of the hyperplane measure
/// nu_f, with its cumulative F(s) = int_0^s f.
class WeightFunction {
 public:
  enum class Kind { Spherical, Constant, Table };

  /// f(t) = (1 + t^2)^{-(n+1)/2}; makes U_f of a projected body equal the
  /// spherical mean width in S^n.
  static WeightFunction spherical(int n);
  static WeightFunction constant(double c = 1.0);
  /// Piecewise-linear through (t_k, f_k), t_0 = 0, held at f_last beyond
  /// the last knot. All f_k must be positive.
  static WeightFunction table(std::vector<double> t, std::vector<double> f);

  double operator()(double t) const;
  /// F(s) in closed form: s / sqrt(1 + s^2) for spherical(2), the cosine
  /// power recursion for other spherical(n), exact trapezoids for tables.
  double cumulative(double s) const;

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  double level() const { return c_; }
  std::string name() const;

 private:
  Kind kind_ = Kind::Constant;
  int n_ = 0;
  double c_ = 1.0;
  std::vector<double> t_, f_;
};

inline double cumulative_F(const WeightFunction& w, double s) { return w.cumulative(s); }

}  // namespace sphplanks

#endif  // SPHPLANKS_WEIGHT_HPP
