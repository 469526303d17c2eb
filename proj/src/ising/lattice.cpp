#include <cmath>

#include "aprxlik/ising.hpp"

namespace aprx::ising {

std::vector<std::pair<int, int>> LatticeSpec::edges() const {
    if (rows < 1 || cols < 1) fail(Errc::invalid_argument, "LatticeSpec: rows and cols must be positive");
    std::vector<std::pair<int, int>> out;
    const bool wrap = boundary == Boundary::periodic;
    out.reserve(static_cast<std::size_t>(2 * n_sites()));
    auto at = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            // Down neighbor.
            if (i + 1 < rows)
                out.emplace_back(at(i, j), at(i + 1, j));
            else if (wrap)
                out.emplace_back(at(i, j), at(0, j));
            // Right neighbor.
            if (j + 1 < cols)
                out.emplace_back(at(i, j), at(i, j + 1));
            else if (wrap)
                out.emplace_back(at(i, j), at(i, 0));
        }
    }
    return out;
}

SuffStats suff_stats(const SpinConfig& config, const LatticeSpec& lattice) {
    if (static_cast<long>(config.size()) != lattice.n_sites())
        fail(Errc::invalid_argument, "suff_stats: config length does not match the lattice");
    for (int s : config)
        if (s != 1 && s != -1) fail(Errc::invalid_argument, "suff_stats: spins must be +1 or -1");
    SuffStats st;
    for (int s : config) st.v0 += s;
    for (const auto& [a, b] : lattice.edges()) st.v1 += static_cast<long>(config[a]) * config[b];
    return st;
}

double brute_force_log_z(const LatticeSpec& lattice, const IsingParams& params) {
    const long n = lattice.n_sites();
    if (n > 24) fail(Errc::size_cap, "brute_force_log_z: r*c must be <= 24");
    const auto edges = lattice.edges();
    const std::uint64_t total = 1ULL << n;

    auto energy = [&](std::uint64_t x) {
        const long pop = static_cast<long>(__builtin_popcountll(x));
        const long v0 = 2 * pop - n;
        long discord = 0;
        for (const auto& [a, b] : edges) discord += static_cast<long>(((x >> a) ^ (x >> b)) & 1ULL);
        const long v1 = static_cast<long>(edges.size()) - 2 * discord;
        return params.alpha * static_cast<double>(v0) + params.beta * static_cast<double>(v1);
    };

    double mx = -std::numeric_limits<double>::infinity();
    for (std::uint64_t x = 0; x < total; ++x) mx = std::max(mx, energy(x));
    double s = 0.0;
    for (std::uint64_t x = 0; x < total; ++x) s += std::exp(energy(x) - mx);
    return mx + std::log(s);
}

}  // namespace aprx::ising
