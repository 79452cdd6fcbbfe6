#include "levyscale/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyscale {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 3 || ys_.size() != n)
    throw std::invalid_argument("CubicSpline: need >= 3 matched knots");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw std::invalid_argument("CubicSpline: knots must increase");

  // Tridiagonal solve for natural boundary conditions (m_0 = m_{n-1} = 0).
  m_.assign(n, 0.0);
  std::vector<double> c(n, 0.0), d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = xs_[i] - xs_[i - 1];
    const double h1 = xs_[i + 1] - xs_[i];
    const double rhs = 6.0 * ((ys_[i + 1] - ys_[i]) / h1 -
                              (ys_[i] - ys_[i - 1]) / h0);
    const double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
    c[i] = h1 / diag;
    d[i] = (rhs - h0 * d[i - 1]) / diag;
  }
  for (std::size_t i = n - 2; i >= 1; --i) m_[i] = d[i] - c[i] * m_[i + 1];
}

std::size_t CubicSpline::interval(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = std::size_t(std::distance(xs_.begin(), it));
  if (i == 0) return 0;
  if (i >= xs_.size()) return xs_.size() - 2;
  return i - 1;
}

double CubicSpline::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double a = (xs_[i + 1] - x) / h;
  const double b = (x - xs_[i]) / h;
  return a * ys_[i] + b * ys_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double a = (xs_[i + 1] - x) / h;
  const double b = (x - xs_[i]) / h;
  return (ys_[i + 1] - ys_[i]) / h +
         ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h /
             6.0;
}

double CubicSpline::second_derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double a = (xs_[i + 1] - x) / h;
  const double b = (x - xs_[i]) / h;
  return a * m_[i] + b * m_[i + 1];
}

double CubicSpline::fourth_derivative_bound() const {
  if (xs_.size() < 5) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i + 4 < xs_.size(); ++i) {
    // Fourth divided difference times 4! approximates f'''' on the window.
    double dd[5];
    for (int k = 0; k < 5; ++k) dd[k] = ys_[i + std::size_t(k)];
    for (int order = 1; order <= 4; ++order)
      for (int k = 0; k + order <= 4; ++k)
        dd[k] = (dd[k + 1] - dd[k]) /
                (xs_[i + std::size_t(k + order)] - xs_[i + std::size_t(k)]);
    worst = std::max(worst, std::abs(dd[0]) * 24.0);
  }
  return worst;
}

}  // namespace levyscale
