#pragma once

#include <cstdint>
#include <functional>

#include "levyscale/model.hpp"
#include "levyscale/rng.hpp"
#include "levyscale/types.hpp"

namespace levyscale {

/// Stability indices of the two drivers. The amplitude knobs exist for tests
/// that switch a driver off; production paths use 1.
struct NoiseParams {
  double alpha1 = 1.5;
  double alpha2 = 1.5;
  double amp1 = 1.0;
  double amp2 = 1.0;
};

/// Discretized trajectory of the coupled pair, with the slow-driver
/// increments recorded so an averaged path can be coupled pathwise.
struct CoupledPath {
  Vec times;          // n+1 nodes, uniform step
  Mat xs;             // (n+1) x d1
  Mat ys;             // (n+1) x d2
  Mat l1_increments;  // n x d1, the increments actually applied to X
  double eps = 0.0;
  ScaleSchedule schedule;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

struct FrozenPath {
  Vec times;
  Mat ys;  // (n+1) x d2
};

struct AveragedPath {
  Vec times;
  Mat xs;  // (n+1) x d1
  Regime regime = Regime::R1;
  unsigned drift_kind = 0;  // bitmask, see kDriftBbar/kDriftCbar/kDriftHbar
};

inline constexpr unsigned kDriftBbar = 1;
inline constexpr unsigned kDriftCbar = 2;
inline constexpr unsigned kDriftHbar = 4;

/// h = eta_eps / kappa_cfl, keeping the fast drift increment O(1/kappa_cfl).
double choose_step(double eps, const ScaleSchedule& schedule, double kappa_cfl);

/// Explicit jump-Euler for the coupled system. The fast driver enters as
/// eta^{-1/alpha2} times standard alpha2-stable increments over h.
CoupledPath simulate_coupled(const ModelSpec& model,
                             const ScaleSchedule& schedule,
                             const NoiseParams& noise, double eps,
                             const Vec& x0, const Vec& y0, double T, double h,
                             RngStream rng);

/// Jump-Euler for the frozen equation dY = f(x,Y) dt + dL2.
FrozenPath simulate_frozen(const ModelSpec& model, const Vec& x, const Vec& y0,
                           double T, double h, double alpha2, RngStream rng,
                           double amp2 = 1.0);

using DriftFn = std::function<Vec(double, const Vec&)>;

/// Euler path of dX = drift dt + dL1 reusing the exact increments recorded in
/// a CoupledPath, so strong-error comparisons are pathwise on a common
/// probability space.
AveragedPath simulate_averaged(const DriftFn& drift, const Vec& x0, double T,
                               double h, const Mat& l1_increments);

/// Fresh-noise variant for standalone averaged runs.
AveragedPath simulate_averaged_fresh(const DriftFn& drift, const Vec& x0,
                                     double T, double h, double alpha1,
                                     RngStream rng);

}  // namespace levyscale
