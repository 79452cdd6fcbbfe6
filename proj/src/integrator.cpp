#include "levyscale/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "levyscale/stable.hpp"

namespace levyscale {

namespace {

constexpr double kBlowupGuard = 1e12;

long resolve_steps(double T, double h) {
  if (!(T > 0.0) || !(h > 0.0))
    throw std::invalid_argument("simulate: T and h must be positive");
  const long n = std::lround(T / h);
  if (n < 1 || std::abs(double(n) * h - T) > 1e-6 * std::max(1.0, T))
    throw std::invalid_argument("simulate: T/h must be an integer step count");
  return n;
}

void guard(const Vec& v, const char* what, long step) {
  for (int i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || std::abs(v[i]) > kBlowupGuard)
      throw BlowupError(std::string(what) +
                            " blew up (|state| > 1e12 or non-finite) at step " +
                            std::to_string(step),
                        step);
  }
}

}  // namespace

double choose_step(double eps, const ScaleSchedule& schedule,
                   double kappa_cfl) {
  if (!(kappa_cfl >= 1.0))
    throw std::invalid_argument("choose_step: kappa_cfl must be >= 1");
  return schedule.eta(eps) / kappa_cfl;
}

CoupledPath simulate_coupled(const ModelSpec& model,
                             const ScaleSchedule& schedule,
                             const NoiseParams& noise, double eps,
                             const Vec& x0, const Vec& y0, double T, double h,
                             RngStream rng) {
  const double eta = schedule.eta(eps);
  const double gamma = schedule.gamma(eps);
  const double beta = schedule.beta(eps);
  if (h > eta * (1.0 + 1e-12))
    throw std::invalid_argument(
        "simulate_coupled: h must not exceed eta_eps (fast drift unresolved)");
  const long n = resolve_steps(T, h);
  const double fast_noise = noise.amp2 * std::pow(eta, -1.0 / noise.alpha2);

  CoupledPath path;
  path.eps = eps;
  path.schedule = schedule;
  path.seed = rng.seed();
  path.stream_id = rng.stream_id();
  path.times = Vec::LinSpaced(n + 1, 0.0, double(n) * h);
  path.xs.resize(n + 1, model.d1);
  path.ys.resize(n + 1, model.d2);
  path.l1_increments.resize(n, model.d1);

  Vec x = x0, y = y0;
  path.xs.row(0) = x.transpose();
  path.ys.row(0) = y.transpose();
  for (long k = 0; k < n; ++k) {
    const double t = double(k) * h;
    const Vec bv = model.b(t, x, y);
    const Vec Hv = model.H(t, x, y);
    const Vec fv = model.f(x, y);
    const Vec cv = model.c(x, y);
    Vec dl1 = noise.amp1 *
              isotropic_stable_increment(noise.alpha1, model.d1, h, rng);
    const Vec dl2 = isotropic_stable_increment(noise.alpha2, model.d2, h, rng);
    x = x + h * bv + (h / gamma) * Hv + dl1;
    y = y + (h / eta) * fv + (h / beta) * cv + fast_noise * dl2;
    guard(x, "coupled slow component", k);
    guard(y, "coupled fast component", k);
    path.xs.row(k + 1) = x.transpose();
    path.ys.row(k + 1) = y.transpose();
    path.l1_increments.row(k) = dl1.transpose();
  }
  return path;
}

FrozenPath simulate_frozen(const ModelSpec& model, const Vec& x, const Vec& y0,
                           double T, double h, double alpha2, RngStream rng,
                           double amp2) {
  const long n = resolve_steps(T, h);
  FrozenPath path;
  path.times = Vec::LinSpaced(n + 1, 0.0, double(n) * h);
  path.ys.resize(n + 1, model.d2);
  Vec y = y0;
  path.ys.row(0) = y.transpose();
  for (long k = 0; k < n; ++k) {
    const Vec fv = model.f(x, y);
    const Vec dl2 =
        amp2 * isotropic_stable_increment(alpha2, model.d2, h, rng);
    y = y + h * fv + dl2;
    guard(y, "frozen equation", k);
    path.ys.row(k + 1) = y.transpose();
  }
  return path;
}

AveragedPath simulate_averaged(const DriftFn& drift, const Vec& x0, double T,
                               double h, const Mat& l1_increments) {
  const long n = resolve_steps(T, h);
  if (l1_increments.rows() != n || l1_increments.cols() != x0.size())
    throw std::invalid_argument(
        "simulate_averaged: increment matrix does not match the grid");
  AveragedPath path;
  path.times = Vec::LinSpaced(n + 1, 0.0, double(n) * h);
  path.xs.resize(n + 1, x0.size());
  Vec x = x0;
  path.xs.row(0) = x.transpose();
  for (long k = 0; k < n; ++k) {
    const Vec d = drift(double(k) * h, x);
    x = x + h * d + l1_increments.row(k).transpose();
    guard(x, "averaged equation", k);
    path.xs.row(k + 1) = x.transpose();
  }
  return path;
}

AveragedPath simulate_averaged_fresh(const DriftFn& drift, const Vec& x0,
                                     double T, double h, double alpha1,
                                     RngStream rng) {
  const long n = resolve_steps(T, h);
  Mat incr(n, x0.size());
  for (long k = 0; k < n; ++k)
    incr.row(k) =
        isotropic_stable_increment(alpha1, int(x0.size()), h, rng).transpose();
  return simulate_averaged(drift, x0, T, h, incr);
}

}  // namespace levyscale
