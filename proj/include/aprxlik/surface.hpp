#ifndef APRXLIK_SURFACE_HPP
#define APRXLIK_SURFACE_HPP

#include <functional>
#include <memory>
#include <optional>

#include "aprxlik/types.hpp"

namespace aprx {

// Central-difference step sizes, relative to max(1, |theta_j|).
struct FdSteps {
    double score_h_rel = 1e-6;
    double info_h_rel = 1e-4;
};

// Evaluation contract shared by exact, proxy-exact and approximate
// log-likelihoods. Implementations must be deterministic for fixed data and
// safe for concurrent read-only evaluation.
class LikelihoodSurface {
public:
    virtual ~LikelihoodSurface() = default;

    virtual int dim() const = 0;
    virtual const Domain& domain() const = 0;
    virtual double loglik(const ParamPoint& theta) const = 0;

    // Analytic score/information when available; surfaces without analytic
    // derivatives fall back to finite differences in eval().
    virtual std::optional<EvalBundle> analytic_eval(const ParamPoint& /*theta*/) const { return std::nullopt; }

    EvalBundle eval(const ParamPoint& theta, const FdSteps& steps = {}) const;
};

// Score by central differences of loglik, observed information by central
// second differences, symmetrized as (A + A^T)/2. theta must be interior to
// the domain by at least 2*h_abs per coordinate.
EvalBundle fd_eval(const LikelihoodSurface& surface, const ParamPoint& theta, const FdSteps& steps = {});
inline EvalBundle fd_eval(const LikelihoodSurface& surface, const ParamPoint& theta, double h_rel) {
    return fd_eval(surface, theta, FdSteps{h_rel, h_rel});
}

// Surface defined by plain functions; used for closed-form likelihoods and
// in tests.
class FunctionSurface final : public LikelihoodSurface {
public:
    using LoglikFn = std::function<double(const ParamPoint&)>;
    using AnalyticFn = std::function<EvalBundle(const ParamPoint&)>;

    FunctionSurface(Domain domain, LoglikFn fn) : domain_(std::move(domain)), fn_(std::move(fn)) {}
    FunctionSurface(Domain domain, LoglikFn fn, AnalyticFn analytic)
        : domain_(std::move(domain)), fn_(std::move(fn)), analytic_(std::move(analytic)) {}

    int dim() const override { return domain_.dim(); }
    const Domain& domain() const override { return domain_; }
    double loglik(const ParamPoint& theta) const override { return fn_(theta); }
    std::optional<EvalBundle> analytic_eval(const ParamPoint& theta) const override {
        if (!analytic_) return std::nullopt;
        return analytic_(theta);
    }

private:
    Domain domain_;
    LoglikFn fn_;
    AnalyticFn analytic_;
};

// 1-D helpers used throughout the harness.
inline double loglik1(const LikelihoodSurface& s, double theta) { return s.loglik(param1(theta)); }

}  // namespace aprx

#endif
