#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levyscale/rng.hpp"
#include "levyscale/spline.hpp"
#include "levyscale/types.hpp"

namespace levyscale {

/// Declared Hölder exponents of the coefficients (metadata; not verified).
struct HolderMeta {
  double v = 1.0;       // t/x regularity exponent of b and H
  double gamma = 0.5;   // y regularity margin
  double theta1 = 1.0;  // Lipschitz exponent in t
  double theta2 = 1.0;  // Lipschitz exponent in x
};

enum class Regime { R1, R2, R3, R4 };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// Power-law scale maps eta = eps^e, gamma = eps^g, beta = eps^bexp together
/// with the regime tag whose defining relations they satisfy.
struct ScaleSchedule {
  Regime regime = Regime::R1;
  double e = 1.0;
  double g = 0.125;
  double bexp = 0.5;

  double eta(double eps) const;
  double gamma(double eps) const;
  double beta(double eps) const;
};

/// Validates the exponent triple against the regime's defining relations and
/// the standing requirement eta/beta < 1. Throws ConfigError naming the
/// violated relation.
ScaleSchedule make_schedule(Regime regime, double e, double g, double bexp,
                            double alpha2, double v);

/// Closed-form ground truth a benchmark may carry.
struct AnalyticInfo {
  std::function<Vec(double, const Vec&)> bbar;
  std::function<Vec(double, const Vec&, const Vec&)> u;  // corrector value
  std::function<Mat(double, const Vec&, const Vec&)> grad_y_u;  // d1 x d2
  std::function<Mat(double, const Vec&, const Vec&)> grad_x_u;  // d1 x d1
  std::function<Vec(double, const Vec&)> cbar;
  std::function<Vec(double, const Vec&)> Hbar;
  std::function<Vec(const Vec&, RngStream&)> invariant_sampler;  // mu^x draw
};

/// Numerically tabulated centering function S(x) (sine benchmark). The table
/// is filled once by the ergodics phase; H evaluations fail loudly until then.
class CenteringTable {
 public:
  void set(std::vector<double> xs, std::vector<double> values, double se);
  bool ready() const { return ready_; }
  double operator()(double x) const;
  double se() const { return se_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& values() const { return values_; }

 private:
  CubicSpline spline_;
  std::vector<double> xs_, values_;
  double se_ = 0.0;
  bool ready_ = false;
};

/// Coefficient quadruple of the coupled system, with optional analytic
/// Jacobians and ground truth. Immutable after construction; all maps must be
/// reentrant.
struct ModelSpec {
  std::string name;
  int d1 = 1;
  int d2 = 1;
  std::function<Vec(double, const Vec&, const Vec&)> b;  // (t,x,y) -> R^d1
  std::function<Vec(double, const Vec&, const Vec&)> H;  // (t,x,y) -> R^d1
  std::function<Vec(const Vec&, const Vec&)> f;          // (x,y) -> R^d2
  std::function<Vec(const Vec&, const Vec&)> c;          // (x,y) -> R^d2
  std::function<Mat(const Vec&, const Vec&)> grad_f_y;           // d2 x d2
  std::function<Mat(double, const Vec&, const Vec&)> grad_H_y;   // d1 x d2
  std::function<Mat(double, const Vec&, const Vec&)> grad_b_y;   // d1 x d2
  HolderMeta holder;
  std::optional<AnalyticInfo> analytic;
  std::shared_ptr<CenteringTable> centering_table;  // sine benchmark only
  std::string params_digest;
};

/// Linear benchmark: f = -kappa (y - a x), b = -x + b1 y,
/// H = h(t) (y - a x) with h(t) = h0 (1 + sin(t)/2), c = c0. Carries full
/// analytic ground truth. alpha2 enters only the stationary-law sampler.
ModelSpec make_linear_benchmark(double a, double kappa, double b1, double h0,
                                double c0, double alpha2 = 1.5);

/// Sine benchmark: f = -kappa (y - a tanh x), H = h(t) (sin y - S(x)) with
/// S tabulated numerically, b = -x + b1 tanh y, c = c0. The centering table
/// must be populated (ergodics) before H is evaluated.
ModelSpec make_sine_benchmark(double a, double kappa, double h0, double c0,
                              double b1 = 0.4, double alpha2 = 1.5);

struct ProbeParams {
  int n_pairs = 10000;
  double radius = 5.0;
};

struct ConditionEntry {
  double constant = 0.0;  // worst-case estimate of the named constant
  std::string flag;       // "pass" | "warn" | "fail"
  std::string worst_probe;
};

struct ConditionReport {
  int n_pairs = 0;
  double radius = 0.0;
  ConditionEntry dissip_f, dissip_c, dissip_b, dissip_H;
  double lipschitz_bH = 0.0;  // C_T
  double lipschitz_fc = 0.0;  // C_6
  double growth_bH = 0.0;     // C_4 against 1 + K with K = 1
  double growth_f = 0.0;      // C_5
  double bound_c = 0.0;       // sup |c| over probes
  bool has_centering = false;
  double centering_residual = 0.0;
  double centering_se = 0.0;
  std::string centering_flag;

  bool any_fail() const;
  bool any_warn() const;
};

/// Estimates dissipativity, Lipschitz and growth constants on random probe
/// pairs in a box. Positive dissipativity ratios fail; dissipativity decaying
/// toward zero at the box boundary warns.
ConditionReport validate_structural_conditions(const ModelSpec& model,
                                               const ProbeParams& probe,
                                               RngStream& rng);

}  // namespace levyscale
