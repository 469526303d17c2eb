#include <cmath>

#include "aprxlik/ising.hpp"

namespace aprx::ising {

namespace {

void check_kaufman_domain(double beta) {
    if (!(beta > 0.0 && beta <= 0.43)) fail(Errc::domain_error, "kaufman: beta must lie in (0, 0.43]");
}

// a_{l,n}(beta): acosh{c_beta - cos(pi l / n)} for l >= 1, and the signed
// a_0 = 2 beta + log tanh(beta) for l = 0 (negative for beta < ~0.66).
double a_ln(int l, int n, double beta) {
    if (l == 0) return 2.0 * beta + std::log(std::tanh(beta));
    return std::acosh(c_beta(beta) - std::cos(M_PI * l / n));
}

}  // namespace

KaufmanTerms kaufman_terms(int n, int m, double beta, KaufmanProduct limit) {
    if (n < 1 || m < 1) fail(Errc::invalid_argument, "kaufman_terms: n and m must be positive");
    check_kaufman_domain(beta);
    const int nfac = limit == KaufmanProduct::classical ? n : n + 1;

    KaufmanTerms t;
    t.a_odd.reserve(nfac);
    t.a_even.reserve(nfac);
    double log_c_odd = 0.0, log_c_even = 0.0, log_s_odd = 0.0, log_s_even = 0.0;
    double sign_s_odd = 1.0, sign_s_even = 1.0;
    for (int q = 0; q < nfac; ++q) {
        const double ao = a_ln(2 * q + 1, n, beta);
        const double ae = a_ln(2 * q, n, beta);
        t.a_odd.push_back(ao);
        t.a_even.push_back(ae);
        log_c_odd += log_2cosh(0.5 * m * ao);
        log_c_even += log_2cosh(0.5 * m * ae);
        const SignedLog so = log_2sinh_signed(0.5 * m * ao);
        const SignedLog se = log_2sinh_signed(0.5 * m * ae);
        sign_s_odd *= so.sign;
        log_s_odd += so.logabs;
        sign_s_even *= se.sign;
        log_s_even += se.logabs;
    }
    t.log_a[0] = {1.0, log_c_odd};
    t.log_a[1] = {sign_s_odd, log_s_odd};
    t.log_a[2] = {1.0, log_c_even};
    t.log_a[3] = {sign_s_even, log_s_even};
    t.log_abar = signed_log_sum(std::span<const SignedLog>(t.log_a, 4));
    if (t.log_abar.sign <= 0.0) fail(Errc::evaluation_failure, "kaufman_terms: Abar not positive");
    for (int i = 0; i < 4; ++i)
        t.ratios[i] = t.log_a[i].sign * std::exp(t.log_a[i].logabs - t.log_abar.logabs);
    return t;
}

SignedLog kaufman_log_abar(int n, int m, double beta, KaufmanProduct limit) {
    return kaufman_terms(n, m, beta, limit).log_abar;
}

double kaufman_log_z(int n, int m, double beta, KaufmanProduct limit) {
    const SignedLog abar = kaufman_log_abar(n, m, beta, limit);
    return 0.5 * static_cast<double>(n) * m * std::log(2.0 * std::sinh(2.0 * beta)) + abar.logabs - std::log(2.0);
}

double epsilon_k(int m, int k, double beta, const ExactRoute& route) {
    if (k < 2 || k > m) fail(Errc::invalid_argument, "epsilon_k: need 2 <= k <= m");
    if (route.kind == ExactRoute::Kind::kaufman) {
        // epsilon = log Z - log Z~; the (2 sinh 2 beta)^{..} powers and the
        // -log 2 terms cancel exactly ((m-k+1)k - (m-k)(k-1) - m = 0), so
        // only the Abar terms remain.
        const double lk = kaufman_log_abar(k, m, beta).logabs;
        const double lk1 = kaufman_log_abar(k - 1, m, beta).logabs;
        const double lm = kaufman_log_abar(m, m, beta).logabs;
        const double mk = static_cast<double>(m - k);
        return lm - ((mk + 1.0) * lk - mk * lk1);
    }
    if (route.proxy_level <= k) fail(Errc::invalid_proxy, "epsilon_k: proxy level K must exceed k");
    LatticeSpec lat{m, m, route.boundary};
    const IsingParams params{route.alpha, beta};
    return rda_log_z(route.proxy_level, lat, params) - rda_log_z(k, lat, params);
}

double delta_k(int m, int k, double beta, const ExactRoute& route, double h) {
    auto eps = [&](double b) { return epsilon_k(m, k, b, route); };
    const double d_h = (eps(beta + h) - eps(beta - h)) / (2.0 * h);
    const double d_h2 = (eps(beta + 0.5 * h) - eps(beta - 0.5 * h)) / h;
    return std::fabs((4.0 * d_h2 - d_h) / 3.0);
}

}  // namespace aprx::ising
