#include "frontierlab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace frontierlab::stats {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))
}

double mean(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("mean: empty range");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
  if (v.size() < 2) throw std::invalid_argument("sample_variance: need n >= 2");
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double skewness(std::span<const double> v) {
  const double m = mean(v);
  double s2 = 0.0, s3 = 0.0;
  for (double x : v) {
    const double d = x - m;
    s2 += d * d;
    s3 += d * d * d;
  }
  const double n = static_cast<double>(v.size());
  s2 /= n;
  s3 /= n;
  return s3 / std::pow(s2, 1.5);
}

double excess_kurtosis(std::span<const double> v) {
  const double m = mean(v);
  double s2 = 0.0, s4 = 0.0;
  for (double x : v) {
    const double d = x - m;
    s2 += d * d;
    s4 += d * d * d * d;
  }
  const double n = static_cast<double>(v.size());
  s2 /= n;
  s4 /= n;
  return s4 / (s2 * s2) - 3.0;
}

double log_normal_pdf(double x) { return -kLogSqrt2Pi - 0.5 * x * x; }

double log_normal_cdf(double x) {
  if (x > -8.0) {
    return std::log(0.5 * std::erfc(-x / std::sqrt(2.0)));
  }
  // Asymptotic expansion of Phi(x) for x << 0:
  //   Phi(x) ~ phi(x)/(-x) * (1 - 1/x^2 + 3/x^4 - 15/x^6)
  const double x2 = x * x;
  const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
  return log_normal_pdf(x) - std::log(-x) + std::log(series);
}

double mills_ratio(double x) {
  return std::exp(log_normal_pdf(x) - log_normal_cdf(x));
}

double t_quantile_975(int dof) {
  static constexpr double kTable[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (dof < 1) throw std::invalid_argument("t_quantile_975: dof < 1");
  if (dof <= 30) return kTable[dof - 1];
  if (dof <= 40) return 2.021;
  if (dof <= 60) return 2.000;
  if (dof <= 120) return 1.980;
  return 1.960;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need matching sizes >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    rss += r * r;
  }
  fit.r2 = (syy > 0.0) ? 1.0 - rss / syy : 1.0;
  if (x.size() > 2) {
    const int dof = static_cast<int>(x.size()) - 2;
    fit.slope_stderr = std::sqrt(rss / dof / sxx);
    fit.slope_ci95_halfwidth = t_quantile_975(dof) * fit.slope_stderr;
  } else {
    fit.slope_stderr = 0.0;
    fit.slope_ci95_halfwidth = 0.0;
  }
  (void)n;
  return fit;
}

}  // namespace frontierlab::stats
