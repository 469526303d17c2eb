#ifndef APRXLIK_OPTIMIZE_HPP
#define APRXLIK_OPTIMIZE_HPP

#include "aprxlik/surface.hpp"

namespace aprx {

struct MaximizeResult {
    ParamPoint theta_hat;
    EvalBundle at_hat;
    bool converged = false;
    int iterations = 0;
};

struct MaximizeOptions {
    double tol = 1e-8;
    int max_iter = 200;
    FdSteps fd = {};
    // Evaluation points are kept this far inside the domain box so the FD
    // stencil stays in-domain.
    double domain_pad_rel = 1e-3;
};

// Newton ascent with backtracking halving, projected onto the domain box.
// Falls back to a golden-section sweep along the dominant coordinate when
// the observed information is not positive definite. Converged means
// ||score||_1 <= tol * max(1, |loglik|) or the iterate step fell below tol;
// hitting the iteration cap returns the best point with converged = false.
MaximizeResult maximize(const LikelihoodSurface& surface, const ParamPoint& theta_init,
                        const MaximizeOptions& opts = {});

// 1-D golden-section maximization of f on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-10);

}  // namespace aprx

#endif
