#ifndef APRXLIK_INTERVAL_HPP
#define APRXLIK_INTERVAL_HPP

#include "aprxlik/surface.hpp"

namespace aprx {

struct LrInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool truncated_lo = false;  // endpoint is the domain edge
    bool truncated_hi = false;
};

// Likelihood-ratio interval for a 1-D surface: endpoints where
// 2{l(theta_hat) - l(theta)} = chi2_quantile(1, level), found by bisection
// outward from theta_hat on each side. If the surface never drops by that
// amount before the domain edge, the endpoint is the edge and the truncation
// flag is set.
LrInterval lr_confidence_interval(const LikelihoodSurface& surface, const ParamPoint& theta_hat, double level);

}  // namespace aprx

#endif
