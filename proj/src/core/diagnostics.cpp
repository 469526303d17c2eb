#include "aprxlik/diagnostics.hpp"

#include <cmath>

namespace aprx {

RegionGrid RegionGrid::linspace1(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) fail(Errc::invalid_argument, "RegionGrid::linspace1: bad bounds or step");
    RegionGrid g;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    g.points.reserve(n);
    for (int i = 0; i < n; ++i) g.points.push_back(param1(lo + i * step));
    return g;
}

ScoreError score_error(const LikelihoodSurface& exact, const LikelihoodSurface& approx, const ParamPoint& theta,
                       const FdSteps& steps) {
    const EvalBundle e = exact.eval(theta, steps);
    const EvalBundle a = approx.eval(theta, steps);
    ScoreError out;
    out.delta = (a.score - e.score).lpNorm<1>();
    // Matrix norm: maximum absolute column sum.
    out.gamma = (a.obs_info - e.obs_info).cwiseAbs().colwise().sum().maxCoeff();
    return out;
}

ErrorDiagnostics sup_score_error(const LikelihoodSurface& exact, const LikelihoodSurface& approx,
                                 const RegionGrid& region, const FdSteps& steps) {
    if (region.points.empty()) fail(Errc::invalid_argument, "sup_score_error: empty region");
    ErrorDiagnostics d;
    d.delta.reserve(region.points.size());
    d.gamma.reserve(region.points.size());
    for (std::size_t i = 0; i < region.points.size(); ++i) {
        const ScoreError se = score_error(exact, approx, region.points[i], steps);
        d.delta.push_back(se.delta);
        d.gamma.push_back(se.gamma);
        if (se.delta > d.delta_sup) {
            d.delta_sup = se.delta;
            d.delta_argmax = i;
        }
        if (se.gamma > d.gamma_sup) {
            d.gamma_sup = se.gamma;
            d.gamma_argmax = i;
        }
    }
    return d;
}

}  // namespace aprx
