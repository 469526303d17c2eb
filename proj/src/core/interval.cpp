#include "aprxlik/interval.hpp"

#include <cmath>

#include "aprxlik/special.hpp"

namespace aprx {

namespace {

struct SideResult {
    double endpoint;
    bool truncated;
};

SideResult solve_side(const LikelihoodSurface& s, double theta_hat, double ll_hat, double target, double edge,
                      bool lower_side) {
    const double dir = lower_side ? -1.0 : 1.0;
    const double slack = 1e-6 * std::max(1.0, std::fabs(ll_hat));

    double inside = theta_hat;
    double step = 1e-4 * std::max(1.0, std::fabs(theta_hat));
    double outside = theta_hat;
    bool crossed = false;
    for (int i = 0; i < 200; ++i) {
        double cand = theta_hat + dir * step;
        bool at_edge = false;
        if ((lower_side && cand <= edge) || (!lower_side && cand >= edge)) {
            cand = edge;
            at_edge = true;
        }
        const double ll = loglik1(s, cand);
        if (ll > ll_hat + slack)
            fail(Errc::interval_failure, "lr_confidence_interval: log-likelihood rises away from theta_hat");
        if (ll < target) {
            outside = cand;
            crossed = true;
            break;
        }
        inside = cand;
        if (at_edge) return {edge, true};
        step *= 2.0;
    }
    if (!crossed) fail(Errc::interval_failure, "lr_confidence_interval: failed to bracket the drop level");

    double a = inside, b = outside;  // ll(a) >= target > ll(b)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        if (loglik1(s, mid) >= target)
            a = mid;
        else
            b = mid;
        if (std::fabs(b - a) <= 1e-12 * std::max(1.0, std::fabs(a) + std::fabs(b))) break;
    }
    return {0.5 * (a + b), false};
}

}  // namespace

LrInterval lr_confidence_interval(const LikelihoodSurface& surface, const ParamPoint& theta_hat, double level) {
    if (surface.dim() != 1) fail(Errc::invalid_argument, "lr_confidence_interval: 1-D surfaces only");
    if (!(level > 0.0 && level < 1.0)) fail(Errc::invalid_argument, "lr_confidence_interval: level must lie in (0,1)");

    const double th = theta_hat[0];
    const double ll_hat = loglik1(surface, th);
    const double drop = 0.5 * chi2_quantile(1, level);
    const double target = ll_hat - drop;

    const Domain& dom = surface.domain();
    const SideResult lo = solve_side(surface, th, ll_hat, target, dom.lower[0], true);
    const SideResult hi = solve_side(surface, th, ll_hat, target, dom.upper[0], false);

    LrInterval out;
    out.lo = lo.endpoint;
    out.hi = hi.endpoint;
    out.truncated_lo = lo.truncated;
    out.truncated_hi = hi.truncated;
    return out;
}

}  // namespace aprx
