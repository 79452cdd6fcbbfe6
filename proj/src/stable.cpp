#include "levyscale/stable.hpp"

#include <cmath>
#include <stdexcept>

#include "levyscale/stats.hpp"

namespace levyscale {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::invalid_argument("stable: alpha must lie in (1, 2]");
}

// Standard symmetric alpha-stable variate, cf exp(-|u|^alpha).
double cms_standard(double alpha, RngStream& rng) {
  const double u = kPi * (rng.uniform01() - 0.5);
  const double w = rng.exponential();
  if (alpha == 2.0) {
    // Degenerate CMS: 2 sin(U) sqrt(W) is exactly N(0, 2).
    return 2.0 * std::sin(u) * std::sqrt(w);
  }
  const double a = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
  const double b =
      std::pow(std::cos((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
  return a * b;
}

}  // namespace

void StableNoiseSpec::validate() const {
  check_alpha(alpha);
  if (dim < 1) throw std::invalid_argument("StableNoiseSpec: dim must be >= 1");
  if (!(scale > 0.0))
    throw std::invalid_argument("StableNoiseSpec: scale must be positive");
}

double stable_increment_1d(double alpha, double scale, double dt,
                           RngStream& rng) {
  check_alpha(alpha);
  if (!(scale > 0.0)) throw std::invalid_argument("stable: scale must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("stable: dt must be > 0");
  return std::pow(dt * scale, 1.0 / alpha) * cms_standard(alpha, rng);
}

double positive_stable(double rho, RngStream& rng) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("positive_stable: rho must lie in (0, 1)");
  // Kanter's representation of the standard positive rho-stable law.
  const double th = kPi * rng.uniform01();
  const double w = rng.exponential();
  const double s = std::sin(th);
  return std::sin(rho * th) *
         std::pow(std::sin((1.0 - rho) * th), (1.0 - rho) / rho) *
         std::pow(s, -1.0 / rho) * std::pow(w, -(1.0 - rho) / rho);
}

Vec stable_subordinated_increment(double alpha, int dim, double dt,
                                  RngStream& rng) {
  check_alpha(alpha);
  if (dim < 1) throw std::invalid_argument("stable: dim must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("stable: dt must be > 0");
  Vec g(dim);
  for (int i = 0; i < dim; ++i) g[i] = rng.normal();
  if (alpha == 2.0) return std::sqrt(2.0 * dt) * g;
  // E exp(i u . sqrt(2S) G) = E exp(-S |u|^2); calibrating the subordinator
  // to Laplace exponent dt lam^{alpha/2} yields the symbol dt |u|^alpha.
  const double s =
      std::pow(dt, 2.0 / alpha) * positive_stable(0.5 * alpha, rng);
  return std::sqrt(2.0 * s) * g;
}

Vec isotropic_stable_increment(double alpha, int dim, double dt,
                               RngStream& rng) {
  if (dim == 1) {
    Vec v(1);
    v[0] = stable_increment_1d(alpha, 1.0, dt, rng);
    return v;
  }
  return stable_subordinated_increment(alpha, dim, dt, rng);
}

Mat increment_sequence(const StableNoiseSpec& spec, long n_steps, double dt,
                       RngStream& rng) {
  spec.validate();
  if (n_steps < 1)
    throw std::invalid_argument("increment_sequence: n_steps must be >= 1");
  if (!(dt > 0.0))
    throw std::invalid_argument("increment_sequence: dt must be > 0");
  if (n_steps > (1L << 31) / spec.dim)
    throw std::length_error("increment_sequence: requested size too large");
  Mat out(n_steps, spec.dim);
  const double scale_factor = std::pow(spec.scale, 1.0 / spec.alpha);
  for (long k = 0; k < n_steps; ++k) {
    if (spec.dim == 1) {
      out(k, 0) = stable_increment_1d(spec.alpha, spec.scale, dt, rng);
    } else {
      out.row(k) =
          scale_factor *
          isotropic_stable_increment(spec.alpha, spec.dim, dt, rng).transpose();
    }
  }
  return out;
}

double empirical_cf_check(std::span<const double> samples,
                          std::span<const double> u_grid, double alpha,
                          double dt) {
  if (samples.empty())
    throw std::invalid_argument("empirical_cf_check: empty sample");
  check_alpha(alpha);
  if (dt < 0.0) throw std::invalid_argument("empirical_cf_check: dt < 0");
  double worst = 0.0;
  for (double u : u_grid) {
    const double emp = empirical_cf_real(samples, u);
    const double target = std::exp(-dt * std::pow(std::abs(u), alpha));
    worst = std::max(worst, std::abs(emp - target));
  }
  return worst;
}

}  // namespace levyscale
