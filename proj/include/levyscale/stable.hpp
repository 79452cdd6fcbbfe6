#pragma once

#include <span>

#include "levyscale/rng.hpp"
#include "levyscale/types.hpp"

namespace levyscale {

/// Driver description for an isotropic alpha-stable process. `scale` is the
/// unit-time characteristic-function scale: E exp(i u . L_1) =
/// exp(-scale |u|^alpha). alpha = 2 is accepted as a Gaussian test limit only.
struct StableNoiseSpec {
  double alpha = 1.5;
  int dim = 1;
  double scale = 1.0;

  void validate() const;
};

/// One increment over dt of a symmetric alpha-stable process with
/// characteristic function exp(-dt scale |u|^alpha), via the
/// Chambers-Mallows-Stuck transform.
double stable_increment_1d(double alpha, double scale, double dt,
                           RngStream& rng);

/// One increment over dt of the isotropic d-dimensional alpha-stable process
/// with characteristic function exp(-dt |u|^alpha). d = 1 uses CMS directly;
/// d > 1 uses Gaussian subordination.
Vec isotropic_stable_increment(double alpha, int dim, double dt,
                               RngStream& rng);

/// Subordination route for any dim (exposed so the two constructions can be
/// compared in distribution).
Vec stable_subordinated_increment(double alpha, int dim, double dt,
                                  RngStream& rng);

/// Positive (totally skewed) rho-stable variate with Laplace transform
/// E exp(-lam S) = exp(-lam^rho), 0 < rho < 1.
double positive_stable(double rho, RngStream& rng);

/// n_steps independent increments, one row per step. Deterministic given
/// (spec, n_steps, dt, rng).
Mat increment_sequence(const StableNoiseSpec& spec, long n_steps, double dt,
                       RngStream& rng);

/// max over u_grid of |(1/N) sum cos(u x_i) - exp(-dt |u|^alpha)|.
double empirical_cf_check(std::span<const double> samples,
                          std::span<const double> u_grid, double alpha,
                          double dt);

}  // namespace levyscale
