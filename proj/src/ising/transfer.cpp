#include <algorithm>
#include <cmath>

#include "aprxlik/ising.hpp"

namespace aprx::ising {

namespace {

// Column weights exp(alpha * sum + beta * vertical edges) for every column
// state; vertical wrap edges included for periodic lattices (self edge when
// s == 1, doubled edge when s == 2).
std::vector<double> column_weights(int s, Boundary boundary, const IsingParams& params) {
    const std::size_t n = 1ULL << s;
    std::vector<double> w(n);
    for (std::size_t state = 0; state < n; ++state) {
        int sum = 0;
        int vert = 0;
        for (int i = 0; i < s; ++i) sum += (state >> i) & 1 ? 1 : -1;
        for (int i = 0; i + 1 < s; ++i) {
            const int a = (state >> i) & 1 ? 1 : -1;
            const int b = (state >> (i + 1)) & 1 ? 1 : -1;
            vert += a * b;
        }
        if (boundary == Boundary::periodic) {
            const int a = (state >> (s - 1)) & 1 ? 1 : -1;
            const int b = state & 1 ? 1 : -1;
            vert += a * b;  // s == 1 gives the self edge (+1), s == 2 doubles the interior edge
        }
        w[state] = std::exp(params.alpha * sum + params.beta * vert);
    }
    return w;
}

// Applies the inter-column coupling exp(beta sum_i s_i t_i) as s per-bit
// 2x2 contractions, transforming weights over the previous column's states
// into weights over the next column's states.
void apply_coupling(std::vector<double>& w, int s, double beta) {
    const double ep = std::exp(beta);
    const double em = std::exp(-beta);
    const std::size_t n = w.size();
    for (int i = 0; i < s; ++i) {
        const std::size_t bit = 1ULL << i;
        for (std::size_t x = 0; x < n; ++x) {
            if (x & bit) continue;
            const double a = w[x];
            const double b = w[x | bit];
            w[x] = a * ep + b * em;
            w[x | bit] = a * em + b * ep;
        }
    }
}

double rescale(std::vector<double>& w) {
    const double mx = *std::max_element(w.begin(), w.end());
    if (!(mx > 0.0) || !std::isfinite(mx)) fail(Errc::evaluation_failure, "transfer_log_z: weights degenerated");
    for (double& v : w) v /= mx;
    return std::log(mx);
}

// One anchored (or free) sweep: returns log of the total weight.
double sweep(int s, int cols, const IsingParams& params, const std::vector<double>& colw, long anchor) {
    const std::size_t n = colw.size();
    std::vector<double> w(n, 0.0);
    double logoff = 0.0;
    if (anchor < 0) {
        w = colw;
    } else {
        w[static_cast<std::size_t>(anchor)] = colw[static_cast<std::size_t>(anchor)];
    }
    for (int c = 1; c < cols; ++c) {
        apply_coupling(w, s, params.beta);
        for (std::size_t x = 0; x < n; ++x) w[x] *= colw[x];
        logoff += rescale(w);
    }
    double total = 0.0;
    if (anchor < 0) {
        for (double v : w) total += v;
    } else {
        // Horizontal wrap back onto the anchor column.
        for (std::size_t x = 0; x < n; ++x) {
            int match = 0;
            for (int i = 0; i < s; ++i) {
                const int a = (x >> i) & 1 ? 1 : -1;
                const int b = (static_cast<std::size_t>(anchor) >> i) & 1 ? 1 : -1;
                match += a * b;
            }
            total += w[x] * std::exp(params.beta * match);
        }
    }
    return logoff + std::log(total);
}

}  // namespace

double transfer_log_z(const LatticeSpec& lattice, const IsingParams& params, int max_width) {
    int r = lattice.rows, c = lattice.cols;
    if (r < 1 || c < 1) fail(Errc::invalid_argument, "transfer_log_z: rows and cols must be positive");
    if (r > c) std::swap(r, c);  // transpose; both boundary conventions are symmetric
    if (r > max_width) fail(Errc::size_cap, "transfer_log_z: min(rows, cols) exceeds the width cap");

    const std::vector<double> colw = column_weights(r, lattice.boundary, params);
    if (lattice.boundary == Boundary::free) return sweep(r, c, params, colw, -1);

    // Periodic: condition on the first column's state and combine in log space.
    const std::size_t n = colw.size();
    std::vector<double> logs(n);
    for (std::size_t a = 0; a < n; ++a) logs[a] = sweep(r, c, params, colw, static_cast<long>(a));
    return log_sum_exp(logs);
}

double rda_log_z(int k, const LatticeSpec& lattice, const IsingParams& params, int max_width) {
    if (k < 2 || k > lattice.rows) fail(Errc::invalid_argument, "rda_log_z: need 2 <= k <= rows");
    if (k > max_width) fail(Errc::size_cap, "rda_log_z: k exceeds the width cap");
    LatticeSpec strip = lattice;
    strip.rows = k;
    const double zk = transfer_log_z(strip, params, max_width);
    strip.rows = k - 1;
    const double zk1 = transfer_log_z(strip, params, max_width);
    const double rk = static_cast<double>(lattice.rows - k);
    return (rk + 1.0) * zk - rk * zk1;
}

}  // namespace aprx::ising
