#ifndef APRXLIK_TWOLEVEL_HPP
#define APRXLIK_TWOLEVEL_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "aprxlik/gauss_hermite.hpp"
#include "aprxlik/surface.hpp"

namespace aprx::twolevel {

// n items, y_i successes out of m trials, with logit(p_i) = b_i and
// b_i ~ N(0, theta0^2).
struct TwoLevelDataset {
    int n = 0;
    int m = 0;
    std::vector<int> y;
    double theta0 = 0.0;
    std::uint64_t seed = 0;

    // Multiplicity of each y value in 0..m; the per-item likelihood depends
    // on i only through y_i, so dataset log-likelihoods sum over counts.
    std::vector<long> value_counts() const;
};

TwoLevelDataset simulate_two_level(int n, int m, double theta0, std::uint64_t seed);

enum class MnReading {
    clamp_below,  // max{1, round(5 + 4(n^a - 1000^a))}
    literal_min,  // min{1, ...} as printed; evaluates to 1 for n >= 1000
};

// Trials-per-item schedule m_n; half-up rounding.
int mn_schedule(long n, double a, MnReading reading = MnReading::clamp_below);

// Mode and curvature of g(b) = -log{C(m,y) p^y (1-p)^{m-y} phi(b; 0, theta)}
// with p = logit^{-1}(b); g is strictly convex in b.
struct LaplaceFit {
    double b_hat = 0.0;
    double g_at_mode = 0.0;
    double g2_at_mode = 0.0;
};

double g_value(int y, int m, double theta, double b);
LaplaceFit laplace_mode(int y, int m, double theta);

double item_loglik_laplace(int y, int m, double theta);
double item_loglik_quadrature(int y, int m, double theta, const QuadratureRule& rule = gh20());

enum class Method { laplace, quadrature };

// Dataset surface: loglik(theta) = sum_i item loglik, derivatives by the
// default finite-difference steps, domain (1e-4, 10).
std::unique_ptr<LikelihoodSurface> dataset_surface(const TwoLevelDataset& dataset, Method method,
                                                   const QuadratureRule& rule = gh20());

}  // namespace aprx::twolevel

#endif
