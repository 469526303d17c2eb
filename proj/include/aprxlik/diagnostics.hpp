#ifndef APRXLIK_DIAGNOSTICS_HPP
#define APRXLIK_DIAGNOSTICS_HPP

#include <vector>

#include "aprxlik/surface.hpp"

namespace aprx {

// Ordered evaluation points covering a parameter region; in 1-D an equally
// spaced grid. The grid maximum is the operational stand-in for the supremum.
struct RegionGrid {
    std::vector<ParamPoint> points;

    static RegionGrid linspace1(double lo, double hi, double step);
};

struct ErrorDiagnostics {
    std::vector<double> delta;  // L1 score error per grid point
    std::vector<double> gamma;  // max-column-sum information error per grid point
    double delta_sup = 0.0;
    double gamma_sup = 0.0;
    std::size_t delta_argmax = 0;
    std::size_t gamma_argmax = 0;
};

// delta = sum_j |u~_j - u_j|, gamma = max_j sum_i |J~_ij - J_ij| at one point.
struct ScoreError {
    double delta;
    double gamma;
};
ScoreError score_error(const LikelihoodSurface& exact, const LikelihoodSurface& approx, const ParamPoint& theta,
                       const FdSteps& steps = {});

ErrorDiagnostics sup_score_error(const LikelihoodSurface& exact, const LikelihoodSurface& approx,
                                 const RegionGrid& region, const FdSteps& steps = {});

}  // namespace aprx

#endif
