#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace levyscale {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

/// Plain sample mean with iid standard error.
MeanSe mean_se(std::span<const double> xs);

/// Mean with a batch-means standard error, for autocorrelated series.
/// n_batches <= 0 picks floor(sqrt(n)) batches.
MeanSe batch_means_se(std::span<const double> xs, int n_batches = 0);

double median(std::vector<double> xs);

/// Median of the per-group arithmetic means, grouping by sample order.
/// Requires xs.size() divisible by groups.
double median_of_means(std::span<const double> xs, int groups);

struct MomEstimate {
  double value = 0.0;   // median of group means
  double spread = 0.0;  // robust SE analogue: 1.4826 * MAD / sqrt(groups)
  std::vector<double> group_means;
};
MomEstimate median_of_means_spread(std::span<const double> xs, int groups);

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
OlsFit ols_fit(std::span<const double> x, std::span<const double> y);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Asymptotic KS critical value at the given significance level.
double ks_critical(double level, std::size_t n, std::size_t m);

/// (1/N) sum cos(u * x): real part of the empirical characteristic function
/// of a symmetric sample.
double empirical_cf_real(std::span<const double> xs, double u);

std::complex<double> empirical_cf(std::span<const double> xs, double u);

/// Pearson correlation of two equal-length samples.
double cross_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace levyscale
