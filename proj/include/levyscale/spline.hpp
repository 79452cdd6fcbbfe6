#pragma once

#include <vector>

namespace levyscale {

/// Natural cubic spline on strictly increasing knots. Evaluation outside the
/// knot range extrapolates with the boundary cubic.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  double x_min() const { return xs_.front(); }
  double x_max() const { return xs_.back(); }
  bool empty() const { return xs_.empty(); }

  /// Crude bound on |f''''| from fourth divided differences of the data,
  /// used in interpolation-error budgets.
  double fourth_derivative_bound() const;

 private:
  std::size_t interval(double x) const;
  std::vector<double> xs_, ys_, m_;  // m_: second derivatives at knots
};

}  // namespace levyscale
