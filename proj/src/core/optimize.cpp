#include "aprxlik/optimize.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace aprx {

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol * std::max(1.0, std::fabs(a) + std::fabs(b))) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

namespace {

double pad_abs(const Domain& dom, int j, double rel) {
    const double width = dom.upper[j] - dom.lower[j];
    if (!std::isfinite(width)) return 0.0;
    return rel * width;
}

ParamPoint project(const Domain& dom, ParamPoint theta, double pad_rel) {
    for (int j = 0; j < dom.dim(); ++j) {
        const double pad = pad_abs(dom, j, pad_rel);
        theta[j] = std::min(std::max(theta[j], dom.lower[j] + pad), dom.upper[j] - pad);
    }
    return theta;
}

}  // namespace

MaximizeResult maximize(const LikelihoodSurface& surface, const ParamPoint& theta_init, const MaximizeOptions& opts) {
    const int p = surface.dim();
    if (theta_init.size() != p) fail(Errc::invalid_argument, "maximize: dimension mismatch");
    const Domain& dom = surface.domain();

    MaximizeResult res;
    res.theta_hat = project(dom, theta_init, opts.domain_pad_rel);
    res.at_hat = surface.eval(res.theta_hat, opts.fd);

    for (int it = 0; it < opts.max_iter; ++it) {
        res.iterations = it + 1;
        if (res.at_hat.score.lpNorm<1>() <= opts.tol * std::max(1.0, std::fabs(res.at_hat.loglik))) {
            res.converged = true;
            return res;
        }

        ParamPoint proposal;
        Eigen::LLT<Matrix> llt(res.at_hat.obs_info);
        if (llt.info() == Eigen::Success) {
            const Vector step = llt.solve(res.at_hat.score);
            proposal = project(dom, res.theta_hat + step, opts.domain_pad_rel);
            // Backtracking: halve toward the current point until the
            // log-likelihood does not decrease.
            bool ok = false;
            for (int h = 0; h < 60; ++h) {
                const double cand = surface.loglik(proposal);
                if (std::isfinite(cand) && cand >= res.at_hat.loglik - 1e-12 * std::max(1.0, std::fabs(res.at_hat.loglik))) {
                    ok = true;
                    break;
                }
                proposal = res.theta_hat + 0.5 * (proposal - res.theta_hat);
            }
            if (!ok) proposal = res.theta_hat;
        } else {
            // Indefinite curvature: golden-section along the coordinate with
            // the largest score component, other coordinates held fixed.
            int jmax = 0;
            res.at_hat.score.cwiseAbs().maxCoeff(&jmax);
            ParamPoint t = res.theta_hat;
            const double pad = pad_abs(dom, jmax, opts.domain_pad_rel);
            const double lo = dom.lower[jmax] + pad;
            const double hi = dom.upper[jmax] - pad;
            if (!(std::isfinite(lo) && std::isfinite(hi)))
                fail(Errc::evaluation_failure, "maximize: golden-section fallback needs a bounded domain");
            const double best = golden_section_max(
                [&](double x) {
                    t[jmax] = x;
                    return surface.loglik(t);
                },
                lo, hi, 1e-11);
            proposal = res.theta_hat;
            proposal[jmax] = best;
        }

        const double move = (proposal - res.theta_hat).lpNorm<Eigen::Infinity>();
        res.theta_hat = proposal;
        res.at_hat = surface.eval(res.theta_hat, opts.fd);
        if (move < opts.tol) {
            res.converged = true;
            return res;
        }
    }
    res.converged = false;
    return res;
}

}  // namespace aprx
