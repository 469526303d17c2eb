#include <cmath>
#include <ostream>

#include "aprxlik/gauss_hermite.hpp"
#include "aprxlik/harness.hpp"
#include "aprxlik/special.hpp"
#include "aprxlik/twolevel.hpp"

namespace aprx::harness {

namespace {

bool report(std::ostream& os, const char* name, bool ok, double observed, double bound) {
    os << (ok ? "[ok]   " : "[FAIL] ") << name << " (observed " << observed << ", bound " << bound << ")\n";
    return ok;
}

}  // namespace

bool selftest(std::ostream& os) {
    using namespace aprx::ising;
    bool all = true;

    // Transfer elimination against exhaustive enumeration.
    {
        double worst = 0.0;
        for (int r = 1; r <= 3; ++r)
            for (int c = 1; c <= 3; ++c)
                for (Boundary b : {Boundary::free, Boundary::periodic})
                    for (double beta : {0.0, 0.2, 0.43})
                        for (double alpha : {0.0, 0.1}) {
                            const LatticeSpec lat{r, c, b};
                            const IsingParams p{alpha, beta};
                            const double bf = brute_force_log_z(lat, p);
                            worst = std::max(worst, std::fabs(transfer_log_z(lat, p) - bf) / std::fabs(bf));
                        }
        all &= report(os, "transfer vs brute force, r,c <= 3", worst < 1e-12, worst, 1e-12);
    }
    // Kaufman closed form against enumeration on small tori.
    {
        double worst = 0.0;
        for (int n : {2, 3, 4})
            for (double beta : {0.1, 0.3, 0.43}) {
                const double bf = brute_force_log_z(LatticeSpec{n, n, Boundary::periodic}, IsingParams{0.0, beta});
                worst = std::max(worst, std::fabs(kaufman_log_z(n, n, beta) - bf) / std::fabs(bf));
            }
        all &= report(os, "kaufman vs brute force on small tori", worst < 1e-10, worst, 1e-10);
    }
    // RDA at k = rows is the identity.
    {
        const LatticeSpec lat{4, 4, Boundary::free};
        const IsingParams p{0.1, 0.3};
        const double diff = std::fabs(rda_log_z(4, lat, p) - transfer_log_z(lat, p));
        all &= report(os, "rda(k=rows) identity", diff < 1e-12, diff, 1e-12);
    }
    // Gauss-Hermite rule: weight sum and even-moment exactness.
    {
        const QuadratureRule& r = gh20();
        double wsum = 0.0;
        for (double w : r.weights) wsum += w;
        double worst = std::fabs(wsum - std::sqrt(M_PI));
        double moment = 0.0;  // x^20 e^{-x^2}: Gamma(10.5)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) moment += r.weights[j] * std::pow(r.nodes[j], 20);
        worst = std::max(worst, std::fabs(moment - std::tgamma(10.5)) / std::tgamma(10.5));
        all &= report(os, "gauss-hermite 20-node rule", worst < 1e-10, worst, 1e-10);
    }
    // Quadrature proxy stable under node doubling at experiment-scale points.
    {
        double worst = 0.0;
        for (double th : {0.1, 0.5, 1.0})
            for (int m : {5, 20, 50})
                for (int y : {0, m / 2, m})
                    worst = std::max(worst, std::fabs(twolevel::item_loglik_quadrature(y, m, th, gh20()) -
                                                      twolevel::item_loglik_quadrature(y, m, th, gh40())));
        all &= report(os, "item quadrature 20 vs 40 nodes (theta <= 1)", worst < 1e-9, worst, 1e-9);
    }
    // chi-squared quantiles.
    {
        double worst = std::fabs(chi2_quantile(2, 1.0 - std::exp(-1.0)) - 2.0);
        worst = std::max(worst, std::fabs(chi2_quantile(2, 0.5) - 2.0 * std::log(2.0)));
        worst = std::max(worst, std::fabs(chi2_quantile(1, 0.9) - 2.7055434540913567));
        all &= report(os, "chi2 quantiles", worst < 1e-9, worst, 1e-9);
    }
    // m_n schedule anchors.
    {
        const bool ok = twolevel::mn_schedule(1000, 0.2) == 5 && twolevel::mn_schedule(1000, 0.3) == 5 &&
                        twolevel::mn_schedule(10000, 0.25) == 23;
        all &= report(os, "m_n schedule anchors", ok, ok ? 0.0 : 1.0, 0.0);
    }
    // Simulation determinism.
    {
        const auto d1 = twolevel::simulate_two_level(200, 10, 0.5, 42);
        const auto d2 = twolevel::simulate_two_level(200, 10, 0.5, 42);
        const bool ok = d1.y == d2.y;
        all &= report(os, "simulation determinism", ok, ok ? 0.0 : 1.0, 0.0);
    }
    // b_beta boundary behavior and reference-integral stability.
    {
        double worst = b_beta(beta_critical - 1e-9);
        const double i1 = i_beta_reference(0.3, 500000);
        const double i2 = i_beta_reference(0.3, 1000000);
        worst = std::max(worst, std::fabs(i1 - i2));
        all &= report(os, "spectral quantities", worst < 1e-3, worst, 1e-3);
    }
    return all;
}

}  // namespace aprx::harness
