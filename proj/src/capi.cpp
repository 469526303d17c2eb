#include "aprxlik.h"

#include <cstring>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "aprxlik/harness.hpp"
#include "aprxlik/interval.hpp"
#include "aprxlik/ising.hpp"
#include "aprxlik/optimize.hpp"
#include "aprxlik/twolevel.hpp"

namespace {

thread_local std::string g_last_error;

aprxlik_status status_of(const aprx::Error& e) {
    switch (e.code()) {
        case aprx::Errc::invalid_argument:
        case aprx::Errc::grid_mismatch:
        case aprx::Errc::invalid_proxy:
            return APRXLIK_ERR_INVALID_ARGUMENT;
        case aprx::Errc::domain_error:
            return APRXLIK_ERR_DOMAIN;
        case aprx::Errc::size_cap:
            return APRXLIK_ERR_SIZE_CAP;
        case aprx::Errc::io_error:
            return APRXLIK_ERR_IO;
        default:
            return APRXLIK_ERR_NUMERIC;
    }
}

template <typename Fn>
aprxlik_status guarded(Fn&& fn) {
    try {
        fn();
        return APRXLIK_OK;
    } catch (const aprx::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return APRXLIK_ERR_NUMERIC;
    } catch (...) {
        g_last_error = "unknown error";
        return APRXLIK_ERR_NUMERIC;
    }
}

aprx::ising::Boundary parse_boundary(const char* boundary) {
    if (boundary == nullptr) aprx::fail(aprx::Errc::invalid_argument, "boundary must not be NULL");
    const std::string b = boundary;
    if (b == "free") return aprx::ising::Boundary::free;
    if (b == "periodic") return aprx::ising::Boundary::periodic;
    aprx::fail(aprx::Errc::invalid_argument, "unknown boundary '" + b + "' (expected free|periodic)");
}

aprx::ising::ZMethod parse_method(const char* method, int k) {
    if (method == nullptr) aprx::fail(aprx::Errc::invalid_argument, "method must not be NULL");
    const std::string m = method;
    if (m == "brute") return aprx::ising::ZMethod::brute();
    if (m == "transfer") return aprx::ising::ZMethod::transfer();
    if (m == "kaufman") return aprx::ising::ZMethod::kaufman();
    if (m == "rda") return aprx::ising::ZMethod::rda(k);
    aprx::fail(aprx::Errc::invalid_argument, "unknown method '" + m + "' (expected brute|transfer|kaufman|rda)");
}

template <typename T>
void require(T* p, const char* what) {
    if (p == nullptr) aprx::fail(aprx::Errc::invalid_argument, std::string(what) + " must not be NULL");
}

}  // namespace

struct aprxlik_dataset {
    aprx::twolevel::TwoLevelDataset data;
};

struct aprxlik_surface {
    std::unique_ptr<aprx::LikelihoodSurface> surface;
};

extern "C" {

const char* aprxlik_version(void) { return "0.1.0"; }

const char* aprxlik_last_error(void) { return g_last_error.c_str(); }

aprxlik_status aprxlik_ising_log_z(int rows, int cols, double alpha, double beta, const char* boundary,
                                   const char* method, int k, double* out_log_z) {
    return guarded([&] {
        require(out_log_z, "out_log_z");
        const aprx::ising::LatticeSpec lat{rows, cols, parse_boundary(boundary)};
        const aprx::ising::IsingParams params{alpha, beta};
        const aprx::ising::ZMethod zm = parse_method(method, k);
        switch (zm.kind) {
            case aprx::ising::ZMethod::Kind::brute:
                *out_log_z = aprx::ising::brute_force_log_z(lat, params);
                break;
            case aprx::ising::ZMethod::Kind::transfer:
                *out_log_z = aprx::ising::transfer_log_z(lat, params);
                break;
            case aprx::ising::ZMethod::Kind::kaufman:
                if (alpha != 0.0) aprx::fail(aprx::Errc::invalid_argument, "kaufman requires alpha = 0");
                if (lat.boundary != aprx::ising::Boundary::periodic)
                    aprx::fail(aprx::Errc::invalid_argument, "kaufman requires periodic boundary");
                *out_log_z = aprx::ising::kaufman_log_z(rows, cols, beta);
                break;
            default:
                *out_log_z = aprx::ising::rda_log_z(zm.k, lat, params);
        }
    });
}

aprxlik_status aprxlik_b_beta(double beta, double* out_b) {
    return guarded([&] {
        require(out_b, "out_b");
        *out_b = aprx::ising::b_beta(beta);
    });
}

aprxlik_status aprxlik_twolevel_simulate(int n, int m, double theta0, uint64_t seed, aprxlik_dataset** out) {
    return guarded([&] {
        require(out, "out");
        auto d = std::make_unique<aprxlik_dataset>();
        d->data = aprx::twolevel::simulate_two_level(n, m, theta0, seed);
        *out = d.release();
    });
}

void aprxlik_dataset_free(aprxlik_dataset* d) { delete d; }

aprxlik_status aprxlik_dataset_items(const aprxlik_dataset* d, int* out_y, size_t len) {
    return guarded([&] {
        require(d, "dataset");
        require(out_y, "out_y");
        if (len < d->data.y.size()) aprx::fail(aprx::Errc::invalid_argument, "out_y capacity too small");
        std::memcpy(out_y, d->data.y.data(), d->data.y.size() * sizeof(int));
    });
}

aprxlik_status aprxlik_twolevel_surface(const aprxlik_dataset* d, const char* method, aprxlik_surface** out) {
    return guarded([&] {
        require(d, "dataset");
        require(method, "method");
        require(out, "out");
        const std::string m = method;
        aprx::twolevel::Method mm;
        if (m == "laplace")
            mm = aprx::twolevel::Method::laplace;
        else if (m == "quadrature")
            mm = aprx::twolevel::Method::quadrature;
        else
            aprx::fail(aprx::Errc::invalid_argument, "unknown method '" + m + "' (expected laplace|quadrature)");
        auto s = std::make_unique<aprxlik_surface>();
        s->surface = aprx::twolevel::dataset_surface(d->data, mm);
        *out = s.release();
    });
}

aprxlik_status aprxlik_ising_surface(int rows, int cols, const char* boundary, const char* method, int k, long v0,
                                     long v1, double alpha_fixed, aprxlik_surface** out) {
    return guarded([&] {
        require(out, "out");
        const aprx::ising::LatticeSpec lat{rows, cols, parse_boundary(boundary)};
        const aprx::ising::SuffStats stats{v0, v1};
        auto s = std::make_unique<aprxlik_surface>();
        s->surface = aprx::ising::ising_loglik_surface(stats, lat, alpha_fixed, parse_method(method, k));
        *out = s.release();
    });
}

void aprxlik_surface_free(aprxlik_surface* s) { delete s; }

aprxlik_status aprxlik_surface_eval(const aprxlik_surface* s, double theta, double* out_loglik, double* out_score,
                                    double* out_obs_info) {
    return guarded([&] {
        require(s, "surface");
        const aprx::EvalBundle b = s->surface->eval(aprx::param1(theta));
        if (out_loglik) *out_loglik = b.loglik;
        if (out_score) *out_score = b.score[0];
        if (out_obs_info) *out_obs_info = b.obs_info(0, 0);
    });
}

aprxlik_status aprxlik_surface_maximize(const aprxlik_surface* s, double theta_init, double tol,
                                        double* out_theta_hat, int* out_converged) {
    return guarded([&] {
        require(s, "surface");
        require(out_theta_hat, "out_theta_hat");
        aprx::MaximizeOptions opts;
        if (tol > 0.0) opts.tol = tol;
        const aprx::MaximizeResult r = aprx::maximize(*s->surface, aprx::param1(theta_init), opts);
        *out_theta_hat = r.theta_hat[0];
        if (out_converged) *out_converged = r.converged ? 1 : 0;
    });
}

aprxlik_status aprxlik_surface_lr_interval(const aprxlik_surface* s, double theta_hat, double level, double* out_lo,
                                           double* out_hi, int* out_truncated) {
    return guarded([&] {
        require(s, "surface");
        require(out_lo, "out_lo");
        require(out_hi, "out_hi");
        const aprx::LrInterval iv = aprx::lr_confidence_interval(*s->surface, aprx::param1(theta_hat), level);
        *out_lo = iv.lo;
        *out_hi = iv.hi;
        if (out_truncated) *out_truncated = (iv.truncated_lo || iv.truncated_hi) ? 1 : 0;
    });
}

aprxlik_status aprxlik_run_experiment(const char* name, const char* config_json, uint64_t seed, int has_seed,
                                      int threads, const char* out_dir) {
    return guarded([&] {
        require(name, "name");
        require(out_dir, "out_dir");
        aprx::harness::run_experiment(name, config_json ? std::string(config_json) : std::string(), seed,
                                      has_seed != 0, threads, out_dir);
    });
}

aprxlik_status aprxlik_selftest(int verbose) {
    std::ostringstream sink;
    bool ok = false;
    const aprxlik_status st = guarded([&] { ok = aprx::harness::selftest(verbose ? std::cout : sink); });
    if (st != APRXLIK_OK) return st;
    if (!ok) {
        g_last_error = "selftest: at least one check failed";
        return APRXLIK_ERR_SELFTEST_FAILED;
    }
    return APRXLIK_OK;
}

}  // extern "C"
