#include "aprxlik/surface.hpp"

#include <cmath>
#include <sstream>

namespace aprx {

namespace {

double checked_loglik(const LikelihoodSurface& s, const ParamPoint& theta) {
    const double v = s.loglik(theta);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "non-finite log-likelihood at stencil point (";
        for (int j = 0; j < theta.size(); ++j) os << (j ? ", " : "") << theta[j];
        os << ")";
        fail(Errc::evaluation_failure, os.str());
    }
    return v;
}

}  // namespace

EvalBundle LikelihoodSurface::eval(const ParamPoint& theta, const FdSteps& steps) const {
    if (auto a = analytic_eval(theta)) return *a;
    return fd_eval(*this, theta, steps);
}

EvalBundle fd_eval(const LikelihoodSurface& surface, const ParamPoint& theta, const FdSteps& steps) {
    const int p = surface.dim();
    if (theta.size() != p) fail(Errc::invalid_argument, "fd_eval: dimension mismatch");

    EvalBundle out;
    out.score.resize(p);
    out.obs_info.resize(p, p);
    out.loglik = checked_loglik(surface, theta);

    Vector hs(p), hi(p);
    for (int j = 0; j < p; ++j) {
        const double scale = std::max(1.0, std::fabs(theta[j]));
        hs[j] = steps.score_h_rel * scale;
        hi[j] = steps.info_h_rel * scale;
    }

    ParamPoint t = theta;
    for (int j = 0; j < p; ++j) {
        t[j] = theta[j] + hs[j];
        const double fp = checked_loglik(surface, t);
        t[j] = theta[j] - hs[j];
        const double fm = checked_loglik(surface, t);
        t[j] = theta[j];
        out.score[j] = (fp - fm) / (2.0 * hs[j]);
    }

    // Diagonal second differences reuse the info-step stencil; mixed partials
    // use the 4-point cross stencil.
    for (int j = 0; j < p; ++j) {
        t[j] = theta[j] + hi[j];
        const double fp = checked_loglik(surface, t);
        t[j] = theta[j] - hi[j];
        const double fm = checked_loglik(surface, t);
        t[j] = theta[j];
        out.obs_info(j, j) = -(fp - 2.0 * out.loglik + fm) / (hi[j] * hi[j]);
    }
    for (int j = 0; j < p; ++j) {
        for (int k = j + 1; k < p; ++k) {
            t[j] = theta[j] + hi[j];
            t[k] = theta[k] + hi[k];
            const double fpp = checked_loglik(surface, t);
            t[k] = theta[k] - hi[k];
            const double fpm = checked_loglik(surface, t);
            t[j] = theta[j] - hi[j];
            const double fmm = checked_loglik(surface, t);
            t[k] = theta[k] + hi[k];
            const double fmp = checked_loglik(surface, t);
            t[j] = theta[j];
            t[k] = theta[k];
            const double mixed = -(fpp - fpm - fmp + fmm) / (4.0 * hi[j] * hi[k]);
            out.obs_info(j, k) = mixed;
            out.obs_info(k, j) = mixed;
        }
    }
    out.obs_info = 0.5 * (out.obs_info + out.obs_info.transpose()).eval();
    return out;
}

}  // namespace aprx
