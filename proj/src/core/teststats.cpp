#include "aprxlik/teststats.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace aprx {

namespace {

double clamp_stat(double v) {
    if (v < 0.0 && v >= -1e-10) return 0.0;
    return v;
}

}  // namespace

double lr_statistic(const LikelihoodSurface& surface, const ParamPoint& theta_hat_full,
                    const ParamPoint& theta_hat_restricted) {
    const double lf = surface.loglik(theta_hat_full);
    const double lr = surface.loglik(theta_hat_restricted);
    const double lam = 2.0 * (lf - lr);
    if (lam < -1e-8) fail(Errc::inconsistent_maximizers, "lr_statistic: full maximum below restricted maximum");
    return std::max(lam, 0.0);
}

TestStatistics wald_and_score_statistics(const LikelihoodSurface& surface, const ParamPoint& theta_hat,
                                         const ParamPoint& theta_restricted, const ParamPoint& info_at,
                                         const FdSteps& steps, int dof) {
    TestStatistics out;
    out.dof = dof > 0 ? dof : surface.dim();

    const EvalBundle at_info = surface.eval(info_at, steps);
    Eigen::LLT<Matrix> llt(at_info.obs_info);
    if (llt.info() != Eigen::Success)
        fail(Errc::singular_information, "wald_and_score_statistics: observed information not positive definite");

    const Vector diff = theta_hat - theta_restricted;
    out.wald = clamp_stat(diff.dot(at_info.obs_info * diff));

    const EvalBundle at_r = surface.eval(theta_restricted, steps);
    out.score_stat = clamp_stat(at_r.score.dot(llt.solve(at_r.score)));

    out.lambda = lr_statistic(surface, theta_hat, theta_restricted);
    return out;
}

}  // namespace aprx
