#ifndef APRXLIK_POSTERIOR_HPP
#define APRXLIK_POSTERIOR_HPP

#include <functional>
#include <vector>

#include "aprxlik/surface.hpp"

namespace aprx {

// 1-D grid posterior with trapezoid-normalized density.
struct PosteriorGrid {
    std::vector<double> grid;                // strictly increasing
    std::vector<double> log_density_unnorm;  // loglik + log prior, max-subtracted
    std::vector<double> density;             // integrates to 1 by the trapezoid rule

    double mean() const;
};

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

using LogPrior = std::function<double(double)>;

PosteriorGrid grid_posterior(const LikelihoodSurface& surface, const LogPrior& log_prior,
                             const std::vector<double>& grid);

// Same-grid variant for densities given directly in log form (used by tests
// and by the harness to reuse cached likelihood evaluations).
PosteriorGrid grid_posterior_from_logdens(std::vector<double> grid, std::vector<double> log_density);

// d_TV = 0.5 * integral |p - q|, clamped to [0, 1]. Grids must be identical.
double tv_distance(const PosteriorGrid& p, const PosteriorGrid& q);

}  // namespace aprx

#endif
