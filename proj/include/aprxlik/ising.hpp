#ifndef APRXLIK_ISING_HPP
#define APRXLIK_ISING_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "aprxlik/special.hpp"
#include "aprxlik/surface.hpp"

namespace aprx::ising {

enum class Boundary { free, periodic };

// r x c lattice; periodic means a torus (wrap in both directions). Wrap
// edges are always added, even when they duplicate an interior edge (a
// 2-wide torus has double edges, a 1-wide torus has self edges). Every
// normalizing-constant routine and oracle shares this edge convention.
struct LatticeSpec {
    int rows = 1;
    int cols = 1;
    Boundary boundary = Boundary::free;

    long n_sites() const { return static_cast<long>(rows) * cols; }
    // Edge list as (site, site) pairs, row-major indexing.
    std::vector<std::pair<int, int>> edges() const;
};

struct IsingParams {
    double alpha = 0.0;
    double beta = 0.0;
};

using SpinConfig = std::vector<int>;  // entries in {-1, +1}, row-major

struct SuffStats {
    long v0 = 0;  // sum of spins
    long v1 = 0;  // sum of y_i y_j over lattice edges
};

SuffStats suff_stats(const SpinConfig& config, const LatticeSpec& lattice);

// Exact log normalizing constant by enumeration of all 2^(rc) configurations;
// requires rc <= 24.
double brute_force_log_z(const LatticeSpec& lattice, const IsingParams& params);

// Column-by-column variable elimination over 2^min(r,c) column states, all in
// log space with per-column rescaling. Periodic boundary handles the vertical
// wrap inside the column state and the horizontal wrap by conditioning on the
// first column (factor 2^min(r,c) extra cost).
double transfer_log_z(const LatticeSpec& lattice, const IsingParams& params, int max_width = 16);

// Reduced dependence approximation at level k:
// log Z~ = (r-k+1) log Z_{k,c} - (r-k) log Z_{k-1,c}, strips inheriting the
// lattice's boundary convention.
double rda_log_z(int k, const LatticeSpec& lattice, const IsingParams& params, int max_width = 16);

// Kaufman closed form for the zero-field torus. The product limit is
// selectable because the source formula is ambiguous; `classical` (n factors,
// q = 0..n-1) is the variant validated against brute force and is the
// default everywhere.
enum class KaufmanProduct { classical, n_plus_one };

double kaufman_log_z(int n, int m, double beta, KaufmanProduct limit = KaufmanProduct::classical);

struct KaufmanTerms {
    std::vector<double> a_odd;   // a_{2q+1, n}(beta)
    std::vector<double> a_even;  // a_{2q, n}(beta); a_0 = 2 beta + log tanh(beta), signed
    SignedLog log_a[4];          // A^(1)..A^(4)
    SignedLog log_abar;          // signed log of the sum
    double ratios[4];            // r^(i) = A^(i) / Abar, sum to 1
};

KaufmanTerms kaufman_terms(int n, int m, double beta, KaufmanProduct limit = KaufmanProduct::classical);

// Signed log of Abar_{n,m}(beta) alone (the (2 sinh 2beta)^{nm/2} powers
// cancel in epsilon, so the error path never forms full log Z values).
SignedLog kaufman_log_abar(int n, int m, double beta, KaufmanProduct limit = KaufmanProduct::classical);

// Likelihood surface in beta with alpha held fixed:
// loglik(beta) = alpha v0 + beta v1 - log Z_method(alpha, beta).
struct ZMethod {
    enum class Kind { brute, transfer, kaufman, rda, proxy } kind = Kind::transfer;
    int k = 0;  // rda level or proxy level K
    static ZMethod brute() { return {Kind::brute, 0}; }
    static ZMethod transfer() { return {Kind::transfer, 0}; }
    static ZMethod kaufman() { return {Kind::kaufman, 0}; }
    static ZMethod rda(int k) { return {Kind::rda, k}; }
    static ZMethod proxy(int K) { return {Kind::proxy, K}; }
};

std::unique_ptr<LikelihoodSurface> ising_loglik_surface(const SuffStats& stats, const LatticeSpec& lattice,
                                                        double alpha_fixed, const ZMethod& method);

// epsilon^(k)_m(beta) = log Z_{m,m} - log Z~^(k)_{m,m}; data-free. The exact
// side is either the Kaufman closed form (periodic, alpha = 0) or an RDA
// proxy at level K > k.
struct ExactRoute {
    enum class Kind { kaufman, proxy } kind = Kind::kaufman;
    int proxy_level = 0;
    double alpha = 0.0;                     // proxy route only
    Boundary boundary = Boundary::free;     // proxy route only
    static ExactRoute kaufman() { return {Kind::kaufman, 0, 0.0, Boundary::periodic}; }
    static ExactRoute proxy(int K, double alpha, Boundary b) { return {Kind::proxy, K, alpha, b}; }
};

double epsilon_k(int m, int k, double beta, const ExactRoute& route);

// |d epsilon / d beta| by central differences (h = 1e-5) with one Richardson
// extrapolation step (h and h/2).
double delta_k(int m, int k, double beta, const ExactRoute& route, double h = 1e-5);

// Spectral quantities of the supplement's integrand f(x; beta).
double c_beta(double beta);
double d_beta(double beta);
double b_beta(double beta);                 // 2 acosh(c_beta - 1), 0 < beta < beta_c
double f_spectral(double x, double beta);
double i_beta_reference(double beta, long n_points = 1000000);

inline constexpr double beta_critical = 0.44068679350977147;  // log(1 + sqrt(2)) / 2

struct TrapeziumRow {
    int n;
    double r_odd;       // S_n^(o)/n - I
    double r_even;      // S_n^(e)/n - I
    double r_max;       // max(|r_odd|, |r_even|)
    double r_combined;  // |(r_odd + r_even)/2|, the 2n-node rule remainder
};

struct TrapeziumDecay {
    double i_ref = 0.0;
    double b = 0.0;  // b_beta at this beta
    std::vector<TrapeziumRow> rows;
    double rate_parity_max = 0.0;  // slope of log r_max vs n
    double rate_combined = 0.0;    // slope of log r_combined vs n
};

TrapeziumDecay trapezium_decay_check(double beta, const std::vector<int>& n_list);

struct KSchedule {
    int k;
    bool insufficient;  // c_mult <= 1 / b_beta(beta0)
};

// k_m = clamp(ceil(c_mult ln m), 2, min(m, 16)).
KSchedule k_schedule(int m, double beta0, double c_mult);

struct ContourCell {
    int m;
    int k;
    double log_scaled_delta;  // log(delta^(k)_m / m)
};

// Proxy-exact delta over an (m, k) grid; strip normalizing constants are
// cached across k for each m.
std::vector<ContourCell> delta_contour(const std::vector<int>& m_list, const std::vector<int>& k_list, double alpha,
                                       double beta, int k_proxy, Boundary boundary = Boundary::free, double h = 1e-5);

}  // namespace aprx::ising

#endif
