#ifndef APRXLIK_SPECIAL_HPP
#define APRXLIK_SPECIAL_HPP

#include <cmath>
#include <cstdint>
#include <span>

namespace aprx {

// log(sum_i exp(x[i])) with max subtraction.
double log_sum_exp(std::span<const double> x);

// Numerically stable log(1 + exp(x)).
inline double softplus(double x) {
    if (x <= -37.0) return std::exp(x);
    if (x <= 18.0) return std::log1p(std::exp(x));
    if (x <= 33.3) return x + std::exp(-x);
    return x;
}

inline double logistic(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double log_choose(double m, double y) {
    return std::lgamma(m + 1.0) - std::lgamma(y + 1.0) - std::lgamma(m - y + 1.0);
}

// Regularized lower incomplete gamma P(a, x), by series for x < a+1 and
// Lentz continued fraction otherwise.
double gamma_p(double a, double x);

// chi^2 distribution with dof degrees of freedom.
double chi2_cdf(int dof, double x);

// Quantile by bisection on the CDF; |CDF(q) - level| <= 1e-12 at return.
double chi2_quantile(int dof, double level);

// Standard normal CDF and its inverse (Wichura's PPND16, full double accuracy).
double norm_cdf(double x);
double inv_norm_cdf(double p);

// log(2 cosh x) and signed log(2 sinh x), safe for large |x|.
inline double log_2cosh(double x) {
    x = std::fabs(x);
    return x + std::log1p(std::exp(-2.0 * x));
}
struct SignedLog {
    double sign;    // -1, 0 or +1
    double logabs;  // log |value|, -inf when sign == 0
};
inline SignedLog log_2sinh_signed(double x) {
    if (x == 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
    const double ax = std::fabs(x);
    return {x > 0.0 ? 1.0 : -1.0, ax + std::log1p(-std::exp(-2.0 * ax))};
}
// Signed log-sum-exp of signed-log terms.
SignedLog signed_log_sum(std::span<const SignedLog> terms);

}  // namespace aprx

#endif
