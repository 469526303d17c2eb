#include <array>
#include <cmath>
#include <map>

#include "aprxlik/ising.hpp"

namespace aprx::ising {

double c_beta(double beta) {
    if (!(beta > 0.0)) fail(Errc::domain_error, "c_beta: beta must be positive");
    const double ch = std::cosh(2.0 * beta);
    return ch * ch / std::sinh(2.0 * beta);
}

double d_beta(double beta) {
    const double ch = std::cosh(2.0 * beta);
    const double ct = 1.0 / std::tanh(2.0 * beta);
    return 4.0 * ch - 2.0 * ch * ct * ct;
}

double b_beta(double beta) {
    if (!(beta > 0.0 && beta < beta_critical)) fail(Errc::domain_error, "b_beta: beta must lie in (0, beta_c)");
    double arg = c_beta(beta) - 1.0;
    // c_beta has a quadratic minimum of 2 at beta_c; just below it the
    // computed argument can round a few ulp under 1.
    if (arg < 1.0 && arg > 1.0 - 1e-12) arg = 1.0;
    if (arg < 1.0) fail(Errc::domain_error, "b_beta: acosh argument below 1");
    return 2.0 * std::acosh(arg);
}

double f_spectral(double x, double beta) {
    const double c = c_beta(beta);
    return d_beta(beta) / std::sqrt((c - 1.0 - std::cos(x)) * (c + 1.0 - std::cos(x)));
}

double i_beta_reference(double beta, long n_points) {
    // Equal-weight trapezium of the 2*pi-periodic integrand.
    double s = 0.0;
    const double h = 2.0 * M_PI / static_cast<double>(n_points);
    for (long j = 0; j < n_points; ++j) s += f_spectral(h * static_cast<double>(j), beta);
    return s / static_cast<double>(n_points);
}

namespace {

// Least-squares slope of log(r) against n over usable rows.
double fit_rate(const std::vector<std::pair<int, double>>& pts) {
    if (pts.size() < 2) fail(Errc::invalid_argument, "trapezium_decay_check: too few usable remainders; reduce n_list");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, r] : pts) {
        const double x = n, y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(pts.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

TrapeziumDecay trapezium_decay_check(double beta, const std::vector<int>& n_list) {
    if (!(beta > 0.05 && beta < 0.42)) fail(Errc::domain_error, "trapezium_decay_check: beta must lie in (0.05, 0.42)");
    if (n_list.size() < 4) fail(Errc::invalid_argument, "trapezium_decay_check: need at least 4 values of n");

    TrapeziumDecay out;
    out.i_ref = i_beta_reference(beta);
    out.b = b_beta(beta);

    std::vector<std::pair<int, double>> pts_max, pts_comb;
    for (int n : n_list) {
        if (n < 1) fail(Errc::invalid_argument, "trapezium_decay_check: n must be positive");
        double so = 0.0, se = 0.0;
        for (int q = 0; q < n; ++q) {
            so += f_spectral(M_PI * (2.0 * q + 1.0) / n, beta);
            se += f_spectral(M_PI * (2.0 * q) / n, beta);
        }
        TrapeziumRow row;
        row.n = n;
        row.r_odd = so / n - out.i_ref;
        row.r_even = se / n - out.i_ref;
        row.r_max = std::max(std::fabs(row.r_odd), std::fabs(row.r_even));
        row.r_combined = std::fabs(0.5 * (row.r_odd + row.r_even));
        out.rows.push_back(row);
        if (row.r_max < 1e-300) fail(Errc::evaluation_failure, "trapezium_decay_check: remainder underflow; reduce n_list");
        // Entries at the double-precision noise floor would corrupt the fit.
        if (row.r_max > 1e-12) pts_max.emplace_back(n, row.r_max);
        if (row.r_combined > 1e-12) pts_comb.emplace_back(n, row.r_combined);
    }
    out.rate_parity_max = fit_rate(pts_max);
    out.rate_combined = fit_rate(pts_comb);
    return out;
}

KSchedule k_schedule(int m, double beta0, double c_mult) {
    if (m < 3) fail(Errc::invalid_argument, "k_schedule: m must be at least 3");
    const double raw = std::ceil(c_mult * std::log(static_cast<double>(m)));
    int k = raw < 2.0 ? 2 : static_cast<int>(raw);
    k = std::min(k, std::min(m, 16));
    k = std::max(k, 2);
    KSchedule out{k, false};
    out.insufficient = c_mult <= 1.0 / b_beta(beta0);
    return out;
}

std::vector<ContourCell> delta_contour(const std::vector<int>& m_list, const std::vector<int>& k_list, double alpha,
                                       double beta, int k_proxy, Boundary boundary, double h) {
    if (m_list.empty() || k_list.empty()) fail(Errc::invalid_argument, "delta_contour: empty m or k list");
    int k_max = 0;
    for (int k : k_list) k_max = std::max(k_max, k);
    if (!(k_max < k_proxy && k_proxy <= 16)) fail(Errc::invalid_proxy, "delta_contour: need max(k_list) < K <= 16");

    const double stencil[4] = {beta - h, beta - 0.5 * h, beta + 0.5 * h, beta + h};
    std::vector<ContourCell> cells;
    for (int m : m_list) {
        if (k_proxy > m) fail(Errc::invalid_proxy, "delta_contour: K exceeds m");
        // Strip log Z per (rows, stencil point); rows up to K cover every k.
        std::map<int, std::array<double, 4>> strips;
        auto strip_z = [&](int rows, int si) -> double {
            auto it = strips.find(rows);
            if (it == strips.end()) {
                std::array<double, 4> z{};
                for (int i = 0; i < 4; ++i)
                    z[i] = transfer_log_z(LatticeSpec{rows, m, boundary}, IsingParams{alpha, stencil[i]});
                it = strips.emplace(rows, z).first;
            }
            return it->second[si];
        };
        auto rda = [&](int level, int si) {
            const double mk = static_cast<double>(m - level);
            return (mk + 1.0) * strip_z(level, si) - mk * strip_z(level - 1, si);
        };
        for (int k : k_list) {
            if (k < 2) fail(Errc::invalid_argument, "delta_contour: k must be at least 2");
            auto eps = [&](int si) { return rda(k_proxy, si) - rda(k, si); };
            const double d_h = (eps(3) - eps(0)) / (2.0 * h);
            const double d_h2 = (eps(2) - eps(1)) / h;
            const double delta = std::fabs((4.0 * d_h2 - d_h) / 3.0);
            cells.push_back({m, k, std::log(delta / m)});
        }
    }
    return cells;
}

}  // namespace aprx::ising
