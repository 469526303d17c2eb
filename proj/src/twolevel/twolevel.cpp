#include "aprxlik/twolevel.hpp"

#include <cmath>

#include "aprxlik/rng.hpp"
#include "aprxlik/special.hpp"

namespace aprx::twolevel {

namespace {

constexpr std::uint64_t kSimulateTag = 0x74776f6c6576656cULL;  // stream tag for dataset simulation

constexpr double kThetaLo = 1e-4;
constexpr double kThetaHi = 10.0;

}  // namespace

std::vector<long> TwoLevelDataset::value_counts() const {
    std::vector<long> counts(static_cast<std::size_t>(m) + 1, 0);
    for (int v : y) ++counts[static_cast<std::size_t>(v)];
    return counts;
}

TwoLevelDataset simulate_two_level(int n, int m, double theta0, std::uint64_t seed) {
    if (n < 1 || m < 1) fail(Errc::invalid_argument, "simulate_two_level: n and m must be positive");
    if (theta0 < 0.0) fail(Errc::invalid_argument, "simulate_two_level: theta0 must be nonnegative");
    TwoLevelDataset d;
    d.n = n;
    d.m = m;
    d.theta0 = theta0;
    d.seed = seed;
    d.y.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::stream(seed, kSimulateTag, static_cast<std::uint64_t>(i));
        const double b = theta0 * rng.next_normal();
        d.y[static_cast<std::size_t>(i)] = rng.next_binomial(m, logistic(b));
    }
    return d;
}

int mn_schedule(long n, double a, MnReading reading) {
    if (n < 1) fail(Errc::invalid_argument, "mn_schedule: n must be positive");
    const double raw = 5.0 + 4.0 * (std::pow(static_cast<double>(n), a) - std::pow(1000.0, a));
    const long rounded = std::lround(raw);  // half-up for positive values
    if (reading == MnReading::literal_min) return static_cast<int>(std::min<long>(1, rounded));
    return static_cast<int>(std::max<long>(1, rounded));
}

double g_value(int y, int m, double theta, double b) {
    // f(b; y) with the binomial coefficient, plus the negative log normal density.
    const double f = -log_choose(m, y) + y * softplus(-b) + (m - y) * softplus(b);
    return f + 0.5 * std::log(2.0 * M_PI * theta * theta) + b * b / (2.0 * theta * theta);
}

LaplaceFit laplace_mode(int y, int m, double theta) {
    if (!(theta > 0.0)) fail(Errc::invalid_argument, "laplace_mode: theta must be positive");
    const double inv_th2 = 1.0 / (theta * theta);
    double b = std::log((y + 0.5) / (m - y + 0.5));
    bool done = false;
    for (int it = 0; it < 100; ++it) {
        const double p = logistic(b);
        const double g1 = -y + m * p + b * inv_th2;
        const double g2 = m * p * (1.0 - p) + inv_th2;
        const double step = g1 / g2;
        b -= step;
        if (std::fabs(step) <= 1e-13 * std::max(1.0, std::fabs(b))) {
            done = true;
            break;
        }
    }
    if (!done) {
        const double g1 = -y + m * logistic(b) + b * inv_th2;
        if (std::fabs(g1) > 1e-9) fail(Errc::mode_failure, "laplace_mode: Newton did not converge");
    }
    const double p = logistic(b);
    LaplaceFit fit;
    fit.b_hat = b;
    fit.g_at_mode = g_value(y, m, theta, b);
    fit.g2_at_mode = m * p * (1.0 - p) + inv_th2;
    return fit;
}

double item_loglik_laplace(int y, int m, double theta) {
    const LaplaceFit fit = laplace_mode(y, m, theta);
    return -fit.g_at_mode + 0.5 * std::log(2.0 * M_PI) - 0.5 * std::log(fit.g2_at_mode);
}

double item_loglik_quadrature(int y, int m, double theta, const QuadratureRule& rule) {
    const LaplaceFit fit = laplace_mode(y, m, theta);
    const double sigma = 1.0 / std::sqrt(fit.g2_at_mode);
    const double scale = std::sqrt(2.0) * sigma;
    const std::size_t n = rule.nodes.size();

    // log sum_j w_j exp{-g(b_hat + sqrt(2) sigma x_j) + x_j^2} + log(sqrt(2) sigma)
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> expo(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = rule.nodes[j];
        expo[j] = -g_value(y, m, theta, fit.b_hat + scale * x) + x * x + std::log(rule.weights[j]);
        mx = std::max(mx, expo[j]);
    }
    double s = 0.0;
    for (double e : expo) s += std::exp(e - mx);
    return mx + std::log(s) + std::log(scale);
}

namespace {

class TwoLevelSurface final : public LikelihoodSurface {
public:
    TwoLevelSurface(std::vector<long> counts, int m, Method method, const QuadratureRule& rule)
        : domain_(Domain::box1(kThetaLo, kThetaHi)),
          counts_(std::move(counts)),
          m_(m),
          method_(method),
          rule_(rule) {}

    int dim() const override { return 1; }
    const Domain& domain() const override { return domain_; }

    double loglik(const ParamPoint& theta) const override {
        const double th = theta[0];
        double total = 0.0;
        // Fixed-order reduction over the y values present in the dataset.
        for (std::size_t y = 0; y < counts_.size(); ++y) {
            if (counts_[y] == 0) continue;
            const int yi = static_cast<int>(y);
            const double item = method_ == Method::laplace ? item_loglik_laplace(yi, m_, th)
                                                           : item_loglik_quadrature(yi, m_, th, rule_);
            total += static_cast<double>(counts_[y]) * item;
        }
        return total;
    }

private:
    Domain domain_;
    std::vector<long> counts_;
    int m_;
    Method method_;
    const QuadratureRule& rule_;
};

}  // namespace

std::unique_ptr<LikelihoodSurface> dataset_surface(const TwoLevelDataset& dataset, Method method,
                                                   const QuadratureRule& rule) {
    return std::make_unique<TwoLevelSurface>(dataset.value_counts(), dataset.m, method, rule);
}

}  // namespace aprx::twolevel
