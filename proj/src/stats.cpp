#include "levyscale/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace levyscale {

MeanSe mean_se(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean_se: empty sample");
  const std::size_t n = xs.size();
  const double m = std::accumulate(xs.begin(), xs.end(), 0.0) / double(n);
  if (n == 1) return {m, 0.0, 1};
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / double(n - 1) / double(n)), n};
}

MeanSe batch_means_se(std::span<const double> xs, int n_batches) {
  if (xs.empty()) throw std::invalid_argument("batch_means_se: empty sample");
  const std::size_t n = xs.size();
  if (n_batches <= 0) n_batches = int(std::floor(std::sqrt(double(n))));
  n_batches = std::max(2, std::min<int>(n_batches, int(n)));
  const std::size_t bs = n / std::size_t(n_batches);
  std::vector<double> bm;
  bm.reserve(std::size_t(n_batches));
  for (int b = 0; b < n_batches; ++b) {
    const auto begin = xs.begin() + std::ptrdiff_t(std::size_t(b) * bs);
    bm.push_back(std::accumulate(begin, begin + std::ptrdiff_t(bs), 0.0) /
                 double(bs));
  }
  MeanSe res = mean_se(bm);
  res.n = n;
  return res;
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median: empty sample");
  const std::size_t n = xs.size();
  auto mid = xs.begin() + std::ptrdiff_t(n / 2);
  std::nth_element(xs.begin(), mid, xs.end());
  if (n % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(xs.begin(), mid);
  return 0.5 * (lo + hi);
}

double median_of_means(std::span<const double> xs, int groups) {
  return median_of_means_spread(xs, groups).value;
}

MomEstimate median_of_means_spread(std::span<const double> xs, int groups) {
  if (groups < 1) throw std::invalid_argument("median_of_means: groups < 1");
  if (xs.empty() || xs.size() % std::size_t(groups) != 0)
    throw std::invalid_argument(
        "median_of_means: sample size not divisible by group count");
  const std::size_t gs = xs.size() / std::size_t(groups);
  MomEstimate est;
  est.group_means.reserve(std::size_t(groups));
  for (int g = 0; g < groups; ++g) {
    const auto begin = xs.begin() + std::ptrdiff_t(std::size_t(g) * gs);
    est.group_means.push_back(
        std::accumulate(begin, begin + std::ptrdiff_t(gs), 0.0) / double(gs));
  }
  est.value = median(est.group_means);
  std::vector<double> dev(est.group_means.size());
  for (std::size_t i = 0; i < dev.size(); ++i)
    dev[i] = std::abs(est.group_means[i] - est.value);
  est.spread = 1.4826 * median(dev) / std::sqrt(double(groups));
  return est;
}

OlsFit ols_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ols_fit: need >= 2 matched points");
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double vx = sxx - sx * sx / n;
  if (vx <= 0) throw std::invalid_argument("ols_fit: degenerate abscissae");
  OlsFit fit;
  fit.slope = (sxy - sx * sy / n) / vx;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double vy = syy - sy * sy / n;
  const double cov = sxy - sx * sy / n;
  fit.r2 = vy > 0 ? (cov * cov) / (vx * vy) : 1.0;
  return fit;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    if (sa[i] <= sb[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(double(i) / double(sa.size()) -
                             double(j) / double(sb.size())));
  }
  return d;
}

double ks_critical(double level, std::size_t n, std::size_t m) {
  // c(level) = sqrt(-ln(level/2)/2)
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  return c * std::sqrt(double(n + m) / (double(n) * double(m)));
}

double empirical_cf_real(std::span<const double> xs, double u) {
  if (xs.empty()) throw std::invalid_argument("empirical_cf_real: empty");
  double s = 0.0;
  for (double x : xs) s += std::cos(u * x);
  return s / double(xs.size());
}

std::complex<double> empirical_cf(std::span<const double> xs, double u) {
  if (xs.empty()) throw std::invalid_argument("empirical_cf: empty");
  double c = 0.0, s = 0.0;
  for (double x : xs) {
    c += std::cos(u * x);
    s += std::sin(u * x);
  }
  return {c / double(xs.size()), s / double(xs.size())};
}

double cross_correlation(std::span<const double> a,
                         std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("cross_correlation: size mismatch");
  const MeanSe ma = mean_se(a), mb = mean_se(b);
  double num = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma.mean, db = b[i] - mb.mean;
    num += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va == 0 || vb == 0) return 0.0;
  return num / std::sqrt(va * vb);
}

}  // namespace levyscale
