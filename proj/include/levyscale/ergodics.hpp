#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "levyscale/integrator.hpp"
#include "levyscale/model.hpp"

namespace levyscale {

/// States drawn from a frozen trajectory after burn-in, anchored at a fixed
/// slow value x. In antithetic mode two sign-flipped trajectories are pooled
/// and rows are interleaved as (+,-) pairs.
struct FrozenEnsemble {
  Vec anchor_x;
  Mat samples;  // n x d2
  double burn_in = 0.0;
  int thin = 1;
  double h = 0.01;
  double ess = 0.0;  // effective sample size estimate
  bool antithetic = false;
};

/// Burn-in horizon (2/beta_hat) log(1/tol) from a fitted mixing rate.
double default_burn_in(double beta_hat, double tol = 1e-3);

/// Birkhoff sampling of the invariant measure of the frozen equation.
FrozenEnsemble sample_invariant(const ModelSpec& model, const Vec& x,
                                double burn_in, long n, int thin, double h,
                                double alpha2, RngStream rng,
                                bool antithetic = true);

/// Ensemble average of b(t,x,.) with batch-means standard errors.
std::pair<Vec, Vec> estimate_bbar(const ModelSpec& model, double t,
                                  const Vec& x, const FrozenEnsemble& ens);

/// Ensemble average of H(t,x,.) with standard errors (the centering residual).
std::pair<Vec, Vec> check_centering(const ModelSpec& model, double t,
                                    const Vec& x, const FrozenEnsemble& ens);

struct ContractionDiagnostic {
  Vec times;
  Vec log_distance;
  double fitted_rate = 0.0;  // |Y1 - Y2| ~ e^{-fitted_rate t}; beta_hat = 2 rate
  double r2 = 0.0;
};

/// Two frozen trajectories driven by the same noise; the fitted decay rate of
/// their distance estimates the contraction envelope.
ContractionDiagnostic contraction_diagnostic(const ModelSpec& model,
                                             const Vec& x, const Vec& y1,
                                             const Vec& y2, double T, double h,
                                             double alpha2, RngStream rng);

struct MixingDiagnostic {
  Vec times;
  Vec deviation;  // |mean g(Y_t) - g_inf|
  Vec se;
  double g_inf = 0.0;
  double fitted_rate = 0.0;
  double envelope_c = 0.0;  // smallest C with dev <= C e^{-beta t/2}(1+|y|)
  bool envelope_dominates = false;
};

MixingDiagnostic mixing_diagnostic(
    const ModelSpec& model, const std::function<double(const Vec&)>& g,
    const Vec& x, const Vec& y, double T, double h, int reps, double alpha2,
    double beta_hat, RngStream rng,
    const FrozenEnsemble* stationary = nullptr, int threads = 0);

struct MomentScanRow {
  double eps = 0.0;
  double x_mid = 0.0, x_end = 0.0;  // MoM estimates of E|X_t|^p at T/2, T
  double y_mid = 0.0, y_end = 0.0;
  double y_sup = 0.0;  // MoM estimate of E sup_{t<=T} |Y_t|^p
};

struct MomentScan {
  double p = 1.0;
  std::vector<MomentScanRow> rows;
  double sup_slope = 0.0;  // slope of log(y_sup) against log(1/eta)
};

/// Median-of-means moment table across an eps grid (heavy tails make plain
/// means unreliable at these orders).
MomentScan uniform_moment_scan(const ModelSpec& model,
                               const ScaleSchedule& schedule,
                               const NoiseParams& noise,
                               const std::vector<double>& eps_list, double p,
                               double T, int reps, int mom_groups,
                               double kappa_cfl, const Vec& x0, const Vec& y0,
                               std::uint64_t seed, int threads = 0);

/// Tabulates the centering function S(x) of a model carrying a centering
/// table (sine benchmark) by ensemble-averaging sin(y) over the x grid.
void tabulate_centering(const ModelSpec& model,
                        const std::vector<double>& x_grid, double burn_in,
                        long n, int thin, double h, double alpha2,
                        std::uint64_t seed, int threads = 0);

}  // namespace levyscale
