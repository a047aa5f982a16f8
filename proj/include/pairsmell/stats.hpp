#ifndef PAIRSMELL_STATS_HPP_
#define PAIRSMELL_STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>

namespace pairsmell {
namespace stats {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);  // n-1 denominator; 0 when n < 2

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Two-sided p for a t statistic with df degrees of freedom.
double t_two_sided_p(double t, double df);

struct OlsResult {
    double slope = 0.0;
    double intercept = 0.0;
    double se_slope = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

// Ordinary least squares of y on x; p-value tests slope != 0 with n-2 df.
// Requires n >= 3 and non-constant x.
OlsResult ols(std::span<const double> xs, std::span<const double> ys);

struct WelchResult {
    double t_stat = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Pooled-SD Cohen's d; empty when the pooled deviation is zero.
std::optional<double> cohens_d_pooled(std::span<const double> a, std::span<const double> b);

}  // namespace stats
}  // namespace pairsmell

#endif  // PAIRSMELL_STATS_HPP_
