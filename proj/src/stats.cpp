#include "pairsmell/stats.hpp"

#include <cmath>
#include <limits>

#include "pairsmell/error.hpp"

namespace pairsmell {
namespace stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

namespace {

// Lentz's continued fraction for the incomplete beta function.
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-14;
    constexpr double kTiny = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double t_two_sided_p(double t, double df) {
    if (df <= 0.0) return 1.0;
    if (std::isinf(t)) return 0.0;
    const double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

OlsResult ols(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw ParameterError("OLS requires equally sized samples");
    const std::size_t n = xs.size();
    if (n < 3) throw InsufficientDataError("OLS trend fitting requires at least 3 points");

    const double xbar = mean(xs), ybar = mean(ys);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx <= 0.0) throw ParameterError("OLS requires non-constant x values");

    OlsResult r;
    r.n = n;
    r.slope = sxy / sxx;
    r.intercept = ybar - r.slope * xbar;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = ys[i] - (r.intercept + r.slope * xs[i]);
        sse += resid * resid;
    }
    const double df = static_cast<double>(n - 2);
    const double sigma2 = sse / df;
    r.se_slope = std::sqrt(sigma2 / sxx);
    if (r.se_slope > 0.0) {
        r.t_stat = r.slope / r.se_slope;
        r.p_value = t_two_sided_p(r.t_stat, df);
    } else {
        // Noiseless fit: slope is either exactly 0 or exactly nonzero.
        r.t_stat = r.slope == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        r.p_value = r.slope == 0.0 ? 1.0 : 0.0;
    }
    return r;
}

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    WelchResult r;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    if (a.empty() || b.empty()) return r;
    const double ma = mean(a), mb = mean(b);
    const double va = sample_variance(a), vb = sample_variance(b);
    const double sa = va / na, sb = vb / nb;
    const double denom = std::sqrt(sa + sb);
    if (denom <= 0.0) {
        r.p_value = ma == mb ? 1.0 : 0.0;
        r.t_stat = ma == mb ? 0.0 : std::numeric_limits<double>::infinity();
        return r;
    }
    r.t_stat = (ma - mb) / denom;
    double df_denom = 0.0;
    if (na > 1.0) df_denom += sa * sa / (na - 1.0);
    if (nb > 1.0) df_denom += sb * sb / (nb - 1.0);
    r.df = df_denom > 0.0 ? (sa + sb) * (sa + sb) / df_denom : 1.0;
    r.p_value = t_two_sided_p(r.t_stat, r.df);
    return r;
}

std::optional<double> cohens_d_pooled(std::span<const double> a, std::span<const double> b) {
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    if (na + nb < 3.0) return std::nullopt;
    const double va = sample_variance(a), vb = sample_variance(b);
    const double pooled =
        std::sqrt(((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0));
    if (pooled <= 0.0) return std::nullopt;
    return (mean(a) - mean(b)) / pooled;
}

}  // namespace stats
}  // namespace pairsmell
