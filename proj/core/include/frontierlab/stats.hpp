#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace frontierlab::stats {

double mean(std::span<const double> v);
double variance(std::span<const double> v);          // population (divide by n)
double sample_variance(std::span<const double> v);   // divide by n-1
double skewness(std::span<const double> v);
double excess_kurtosis(std::span<const double> v);

// Standard normal log-density and log-CDF. log_normal_cdf stays accurate in
// the far left tail where erfc underflows.
double log_normal_pdf(double x);
double log_normal_cdf(double x);

// phi(x)/Phi(x), the inverse Mills ratio, computed in log space.
double mills_ratio(double x);

// Two-sided 95% Student-t quantile for the given degrees of freedom.
double t_quantile_975(int dof);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double slope_ci95_halfwidth = 0.0;  // t_{.975,n-2} * stderr
  double r2 = 0.0;
};

// Ordinary least squares of y on x. Requires x.size() == y.size() >= 2 and
// non-degenerate x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace frontierlab::stats
