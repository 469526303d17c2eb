#include "aprxlik/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aprx {

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return s;
}

double PosteriorGrid::mean() const {
    std::vector<double> xd(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) xd[i] = grid[i] * density[i];
    return trapezoid(grid, xd);
}

PosteriorGrid grid_posterior_from_logdens(std::vector<double> grid, std::vector<double> log_density) {
    if (grid.size() < 2 || grid.size() != log_density.size())
        fail(Errc::invalid_argument, "grid_posterior: need matching grid/density of length >= 2");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) fail(Errc::invalid_argument, "grid_posterior: grid must be strictly increasing");

    double mx = -std::numeric_limits<double>::infinity();
    for (double v : log_density) mx = std::max(mx, v);
    if (!std::isfinite(mx)) fail(Errc::degenerate_posterior, "grid_posterior: no finite density on the grid");

    PosteriorGrid out;
    out.grid = std::move(grid);
    out.log_density_unnorm.resize(log_density.size());
    out.density.resize(log_density.size());
    for (std::size_t i = 0; i < log_density.size(); ++i) {
        out.log_density_unnorm[i] = log_density[i] - mx;
        out.density[i] = std::exp(out.log_density_unnorm[i]);
    }
    const double z = trapezoid(out.grid, out.density);
    if (!(z > 0.0) || !std::isfinite(z)) fail(Errc::degenerate_posterior, "grid_posterior: zero mass after exponentiation");
    for (double& d : out.density) d /= z;
    return out;
}

PosteriorGrid grid_posterior(const LikelihoodSurface& surface, const LogPrior& log_prior,
                             const std::vector<double>& grid) {
    std::vector<double> logd(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lp = log_prior(grid[i]);
        if (!std::isfinite(lp)) fail(Errc::invalid_argument, "grid_posterior: non-finite log prior on the grid");
        logd[i] = loglik1(surface, grid[i]) + lp;
    }
    return grid_posterior_from_logdens(grid, std::move(logd));
}

double tv_distance(const PosteriorGrid& p, const PosteriorGrid& q) {
    if (p.grid.size() != q.grid.size()) fail(Errc::grid_mismatch, "tv_distance: grids differ in length");
    for (std::size_t i = 0; i < p.grid.size(); ++i)
        if (p.grid[i] != q.grid[i]) fail(Errc::grid_mismatch, "tv_distance: grids differ");
    std::vector<double> ad(p.grid.size());
    for (std::size_t i = 0; i < p.grid.size(); ++i) ad[i] = std::fabs(p.density[i] - q.density[i]);
    const double tv = 0.5 * trapezoid(p.grid, ad);
    return std::min(std::max(tv, 0.0), 1.0);
}

}  // namespace aprx
