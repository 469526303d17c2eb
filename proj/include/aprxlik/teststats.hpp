#ifndef APRXLIK_TESTSTATS_HPP
#define APRXLIK_TESTSTATS_HPP

#include "aprxlik/surface.hpp"

namespace aprx {

struct TestStatistics {
    double lambda = 0.0;      // likelihood ratio
    double wald = 0.0;        // (th - thR)^T J (th - thR)
    double score_stat = 0.0;  // u(thR)^T J^{-1} u(thR)
    int dof = 1;
};

// 2 * {l(full) - l(restricted)}, clamped at 0 from below. Negative values
// beyond -1e-8 indicate the "full" maximum lies below the restricted one.
double lr_statistic(const LikelihoodSurface& surface, const ParamPoint& theta_hat_full,
                    const ParamPoint& theta_hat_restricted);

// Wald and score statistics with the observed information evaluated at
// info_at (unnormalized, so the information-growth factor is internal).
// dof defaults to the full parameter dimension (point restriction).
TestStatistics wald_and_score_statistics(const LikelihoodSurface& surface, const ParamPoint& theta_hat,
                                         const ParamPoint& theta_restricted, const ParamPoint& info_at,
                                         const FdSteps& steps = {}, int dof = 0);

}  // namespace aprx

#endif
