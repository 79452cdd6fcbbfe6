#include "levyscale/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "levyscale/stable.hpp"

namespace levyscale {

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double modulated(double h0, double t) { return h0 * (1.0 + 0.5 * std::sin(t)); }

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::R1: return "R1";
    case Regime::R2: return "R2";
    case Regime::R3: return "R3";
    case Regime::R4: return "R4";
  }
  return "R?";
}

Regime regime_from_string(const std::string& s) {
  if (s == "R1") return Regime::R1;
  if (s == "R2") return Regime::R2;
  if (s == "R3") return Regime::R3;
  if (s == "R4") return Regime::R4;
  throw ConfigError("unknown regime tag '" + s + "' (expected R1..R4)");
}

double ScaleSchedule::eta(double eps) const { return std::pow(eps, e); }
double ScaleSchedule::gamma(double eps) const { return std::pow(eps, g); }
double ScaleSchedule::beta(double eps) const { return std::pow(eps, bexp); }

ScaleSchedule make_schedule(Regime regime, double e, double g, double bexp,
                            double alpha2, double v) {
  if (!(alpha2 > 1.0 && alpha2 <= 2.0))
    throw ConfigError("make_schedule: alpha2 must lie in (1,2]");
  if (!(v > 0.0)) throw ConfigError("make_schedule: v must be positive");
  if (e < 0 || g < 0 || bexp < 0)
    throw ConfigError("make_schedule: exponents must be nonnegative");
  if (!(e > bexp))
    throw ConfigError(
        "make_schedule: standing condition eta/beta < 1 requires e > b (got "
        "e=" + fmt(e) + ", b=" + fmt(bexp) + ")");

  // eta^{1 - (1 - (1 ^ v))/alpha2} / gamma^2 -> 0 as an exponent inequality.
  const double fast_exp = e * (1.0 - (1.0 - std::min(1.0, v)) / alpha2);
  switch (regime) {
    case Regime::R1:
      if (!(fast_exp > 2.0 * g))
        throw ConfigError(
            "make_schedule: R1 requires e(1-(1-(1^v))/alpha2) > 2g");
      if (!(e > g + bexp))
        throw ConfigError("make_schedule: R1 requires e > g + b");
      break;
    case Regime::R2:
      if (!(fast_exp > 2.0 * g))
        throw ConfigError(
            "make_schedule: R2 requires e(1-(1-(1^v))/alpha2) > 2g");
      if (!nearly_equal(e, g + bexp))
        throw ConfigError("make_schedule: R2 requires e = g + b (eta = gamma beta)");
      break;
    case Regime::R3:
      if (!(g > bexp))
        throw ConfigError("make_schedule: R3 requires g > b (gamma/beta -> 0)");
      if (!nearly_equal(e, 2.0 * g))
        throw ConfigError("make_schedule: R3 requires e = 2g (eta = gamma^2)");
      break;
    case Regime::R4:
      if (!nearly_equal(e, 2.0 * g))
        throw ConfigError("make_schedule: R4 requires e = 2g (eta = gamma^2)");
      if (!nearly_equal(bexp, g))
        throw ConfigError("make_schedule: R4 requires b = g (beta = gamma)");
      break;
  }
  return ScaleSchedule{regime, e, g, bexp};
}

void CenteringTable::set(std::vector<double> xs, std::vector<double> values,
                         double se) {
  spline_ = CubicSpline(xs, values);
  xs_ = std::move(xs);
  values_ = std::move(values);
  se_ = se;
  ready_ = true;
}

double CenteringTable::operator()(double x) const {
  if (!ready_)
    throw std::runtime_error(
        "centering table not calibrated; run the ergodics phase first");
  // Clamp: the anchor map saturates outside the tabulated box.
  const double xc = std::min(std::max(x, spline_.x_min()), spline_.x_max());
  return spline_(xc);
}

ModelSpec make_linear_benchmark(double a, double kappa, double b1, double h0,
                                double c0, double alpha2) {
  if (!(kappa > 0)) throw ConfigError("linear benchmark: kappa must be > 0");
  if (std::abs(b1 * a) >= 1.0)
    throw ConfigError(
        "linear benchmark: unstable averaged drift (|b1 a| >= 1)");
  if (!(alpha2 > 1.0 && alpha2 <= 2.0))
    throw ConfigError("linear benchmark: alpha2 must lie in (1,2]");

  ModelSpec m;
  m.name = "linear";
  m.d1 = 1;
  m.d2 = 1;
  m.holder = HolderMeta{1.5, 0.5, 1.0, 1.0};
  m.b = [b1](double, const Vec& x, const Vec& y) {
    return Vec::Constant(1, -x[0] + b1 * y[0]);
  };
  m.H = [a, h0](double t, const Vec& x, const Vec& y) {
    return Vec::Constant(1, modulated(h0, t) * (y[0] - a * x[0]));
  };
  m.f = [a, kappa](const Vec& x, const Vec& y) {
    return Vec::Constant(1, -kappa * (y[0] - a * x[0]));
  };
  m.c = [c0](const Vec&, const Vec&) { return Vec::Constant(1, c0); };
  m.grad_f_y = [kappa](const Vec&, const Vec&) {
    return Mat::Constant(1, 1, -kappa);
  };
  m.grad_H_y = [h0](double t, const Vec&, const Vec&) {
    return Mat::Constant(1, 1, modulated(h0, t));
  };
  m.grad_b_y = [b1](double, const Vec&, const Vec&) {
    return Mat::Constant(1, 1, b1);
  };

  AnalyticInfo an;
  an.bbar = [a, b1](double, const Vec& x) {
    return Vec::Constant(1, (-1.0 + b1 * a) * x[0]);
  };
  an.u = [a, kappa, h0](double t, const Vec& x, const Vec& y) {
    return Vec::Constant(1, modulated(h0, t) * (y[0] - a * x[0]) / kappa);
  };
  an.grad_y_u = [kappa, h0](double t, const Vec&, const Vec&) {
    return Mat::Constant(1, 1, modulated(h0, t) / kappa);
  };
  an.grad_x_u = [a, kappa, h0](double t, const Vec&, const Vec&) {
    return Mat::Constant(1, 1, -a * modulated(h0, t) / kappa);
  };
  an.cbar = [c0, kappa, h0](double t, const Vec&) {
    return Vec::Constant(1, c0 * modulated(h0, t) / kappa);
  };
  an.Hbar = [](double, const Vec&) { return Vec::Constant(1, 0.0); };
  // Stationary law of the frozen equation: a x plus the stationary stable
  // Ornstein-Uhlenbeck law, cf exp(-|u|^{alpha2} / (kappa alpha2)).
  const double stat_scale = std::pow(kappa * alpha2, -1.0 / alpha2);
  an.invariant_sampler = [a, alpha2, stat_scale](const Vec& x, RngStream& rng) {
    return Vec::Constant(
        1, a * x[0] + stat_scale * stable_increment_1d(alpha2, 1.0, 1.0, rng));
  };
  m.analytic = std::move(an);
  m.params_digest = "linear:a=" + fmt(a) + ",kappa=" + fmt(kappa) +
                    ",b1=" + fmt(b1) + ",h0=" + fmt(h0) + ",c0=" + fmt(c0) +
                    ",alpha2=" + fmt(alpha2);
  return m;
}

ModelSpec make_sine_benchmark(double a, double kappa, double h0, double c0,
                              double b1, double alpha2) {
  if (!(kappa > 0)) throw ConfigError("sine benchmark: kappa must be > 0");
  if (!(alpha2 > 1.0 && alpha2 <= 2.0))
    throw ConfigError("sine benchmark: alpha2 must lie in (1,2]");

  ModelSpec m;
  m.name = "sine";
  m.d1 = 1;
  m.d2 = 1;
  m.holder = HolderMeta{1.5, 0.5, 1.0, 1.0};
  m.centering_table = std::make_shared<CenteringTable>();
  auto table = m.centering_table;
  m.b = [b1](double, const Vec& x, const Vec& y) {
    return Vec::Constant(1, -x[0] + b1 * std::tanh(y[0]));
  };
  m.H = [h0, table](double t, const Vec& x, const Vec& y) {
    return Vec::Constant(1,
                         modulated(h0, t) * (std::sin(y[0]) - (*table)(x[0])));
  };
  m.f = [a, kappa](const Vec& x, const Vec& y) {
    return Vec::Constant(1, -kappa * (y[0] - a * std::tanh(x[0])));
  };
  m.c = [c0](const Vec&, const Vec&) { return Vec::Constant(1, c0); };
  m.grad_f_y = [kappa](const Vec&, const Vec&) {
    return Mat::Constant(1, 1, -kappa);
  };
  m.grad_H_y = [h0](double t, const Vec&, const Vec& y) {
    return Mat::Constant(1, 1, modulated(h0, t) * std::cos(y[0]));
  };
  m.grad_b_y = [b1](double, const Vec&, const Vec& y) {
    const double ch = std::cosh(y[0]);
    return Mat::Constant(1, 1, b1 / (ch * ch));
  };

  // The frozen equation is linear in y, so the stationary law is known
  // exactly even though the averaged drifts are not.
  AnalyticInfo an;
  const double stat_scale = std::pow(kappa * alpha2, -1.0 / alpha2);
  an.invariant_sampler = [a, alpha2, stat_scale](const Vec& x, RngStream& rng) {
    return Vec::Constant(1, a * std::tanh(x[0]) +
                                stat_scale *
                                    stable_increment_1d(alpha2, 1.0, 1.0, rng));
  };
  m.analytic = std::move(an);
  m.params_digest = "sine:a=" + fmt(a) + ",kappa=" + fmt(kappa) +
                    ",h0=" + fmt(h0) + ",c0=" + fmt(c0) + ",b1=" + fmt(b1) +
                    ",alpha2=" + fmt(alpha2);
  return m;
}

namespace {

struct DissipScan {
  double worst_ratio = -std::numeric_limits<double>::infinity();
  double inner_min = std::numeric_limits<double>::infinity();   // -ratio, |.|<=r/2
  double outer_min = std::numeric_limits<double>::infinity();   // -ratio, |.|>=0.8r
  std::string worst_probe;
};

void check_finite(const Vec& v, const char* which) {
  if (!v.allFinite())
    throw std::runtime_error(std::string("model error: ") + which +
                             " returned a non-finite value on a probe");
}

Vec random_point(int dim, double radius, RngStream& rng) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = radius * (2.0 * rng.uniform01() - 1.0);
  return v;
}

std::string flag_for(const DissipScan& s) {
  if (s.worst_ratio > 0.0) return "fail";
  const double c = -s.worst_ratio;  // infimum dissipativity constant
  if (c <= 1e-12) return "warn";
  if (std::isfinite(s.inner_min) && std::isfinite(s.outer_min) &&
      s.outer_min < 0.25 * s.inner_min)
    return "warn";
  return "pass";
}

}  // namespace

bool ConditionReport::any_fail() const {
  for (const auto* e : {&dissip_f, &dissip_c, &dissip_b, &dissip_H})
    if (e->flag == "fail") return true;
  return false;
}

bool ConditionReport::any_warn() const {
  for (const auto* e : {&dissip_f, &dissip_c, &dissip_b, &dissip_H})
    if (e->flag == "warn") return true;
  return false;
}

ConditionReport validate_structural_conditions(const ModelSpec& model,
                                               const ProbeParams& probe,
                                               RngStream& rng) {
  if (probe.n_pairs < 1)
    throw std::invalid_argument("validate_structural_conditions: n_pairs < 1");
  const double r = probe.radius;

  DissipScan sf, sc, sb, sH;
  double lip_bH = 0, lip_fc = 0, c4 = 0, c5 = 0, cinf = 0;
  const auto& meta = model.holder;

  for (int k = 0; k < probe.n_pairs; ++k) {
    const double t1 = 10.0 * rng.uniform01(), t2 = 10.0 * rng.uniform01();
    const Vec x1 = random_point(model.d1, r, rng);
    const Vec x2 = random_point(model.d1, r, rng);
    const Vec y1 = random_point(model.d2, r, rng);
    const Vec y2 = random_point(model.d2, r, rng);

    const Vec f11 = model.f(x1, y1), f12 = model.f(x1, y2);
    const Vec c11 = model.c(x1, y1), c12 = model.c(x1, y2);
    const Vec b11 = model.b(t1, x1, y1), b21 = model.b(t1, x2, y1);
    const Vec H11 = model.H(t1, x1, y1), H21 = model.H(t1, x2, y1);
    for (const Vec* v : {&f11, &f12, &c11, &c12}) check_finite(*v, "f/c");
    for (const Vec* v : {&b11, &b21, &H11, &H21}) check_finite(*v, "b/H");

    const double dy2 = (y1 - y2).squaredNorm();
    const double dx2 = (x1 - x2).squaredNorm();
    auto scan = [&](DissipScan& s, double ratio, double reach,
                    const Vec& p1, const Vec& p2) {
      if (ratio > s.worst_ratio) {
        s.worst_ratio = ratio;
        std::ostringstream os;
        os << "pair (" << p1.transpose() << ") / (" << p2.transpose() << ")";
        s.worst_probe = os.str();
      }
      if (reach <= 0.5 * r) s.inner_min = std::min(s.inner_min, -ratio);
      if (reach >= 0.8 * r) s.outer_min = std::min(s.outer_min, -ratio);
    };
    if (dy2 > 1e-16) {
      const double reach_y = std::max(y1.lpNorm<Eigen::Infinity>(),
                                      y2.lpNorm<Eigen::Infinity>());
      scan(sf, (f11 - f12).dot(y1 - y2) / dy2, reach_y, y1, y2);
      scan(sc, (c11 - c12).dot(y1 - y2) / dy2, reach_y, y1, y2);
    }
    if (dx2 > 1e-16) {
      const double reach_x = std::max(x1.lpNorm<Eigen::Infinity>(),
                                      x2.lpNorm<Eigen::Infinity>());
      scan(sb, (b11 - b21).dot(x1 - x2) / dx2, reach_x, x1, x2);
      scan(sH, (H11 - H21).dot(x1 - x2) / dx2, reach_x, x1, x2);
    }

    // Lipschitz ratios across fully perturbed argument pairs.
    const Vec b22 = model.b(t2, x2, y2), H22 = model.H(t2, x2, y2);
    const Vec f22 = model.f(x2, y2), c22 = model.c(x2, y2);
    for (const Vec* v : {&b22, &H22}) check_finite(*v, "b/H");
    for (const Vec* v : {&f22, &c22}) check_finite(*v, "f/c");
    const double denom_bH = std::pow(std::abs(t1 - t2), meta.theta1) +
                            std::pow(std::sqrt(dx2), meta.theta2) +
                            std::sqrt(dy2);
    const double denom_fc =
        std::pow(std::sqrt(dx2), meta.theta2) + std::sqrt(dy2);
    if (denom_bH > 1e-12) {
      lip_bH = std::max(lip_bH, (b11 - b22).norm() / denom_bH);
      lip_bH = std::max(lip_bH, (H11 - H22).norm() / denom_bH);
    }
    if (denom_fc > 1e-12) {
      lip_fc = std::max(lip_fc, (f11 - f22).norm() / denom_fc);
      lip_fc = std::max(lip_fc, (c11 - c22).norm() / denom_fc);
    }

    // Growth envelopes; K_t is instantiated as the constant 1.
    c4 = std::max({c4, b11.norm() / 2.0, H11.norm() / 2.0});
    const double xy = x1.norm() + y1.norm();
    if (xy > 1e-6) c5 = std::max(c5, f11.norm() / xy);
    cinf = std::max(cinf, c11.norm());
  }

  ConditionReport rep;
  rep.n_pairs = probe.n_pairs;
  rep.radius = r;
  auto fill = [](const DissipScan& s) {
    ConditionEntry e;
    e.constant = -s.worst_ratio;
    e.flag = flag_for(s);
    e.worst_probe = s.worst_probe;
    return e;
  };
  rep.dissip_f = fill(sf);
  rep.dissip_c = fill(sc);
  rep.dissip_b = fill(sb);
  rep.dissip_H = fill(sH);
  rep.lipschitz_bH = lip_bH;
  rep.lipschitz_fc = lip_fc;
  rep.growth_bH = c4;
  rep.growth_f = c5;
  rep.bound_c = cinf;
  return rep;
}

}  // namespace levyscale
