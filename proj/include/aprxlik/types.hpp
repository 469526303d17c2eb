#ifndef APRXLIK_TYPES_HPP
#define APRXLIK_TYPES_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <limits>

namespace aprx {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Parameter point theta in R^p. 1-D surfaces use p = 1 throughout.
using ParamPoint = Eigen::VectorXd;

inline ParamPoint param1(double theta) {
    ParamPoint p(1);
    p[0] = theta;
    return p;
}

// Log-likelihood, score and observed information at one parameter point.
struct EvalBundle {
    double loglik = 0.0;
    Vector score;
    Matrix obs_info;
};

enum class Errc {
    invalid_argument,
    evaluation_failure,
    iteration_limit,
    mode_failure,
    inconsistent_maximizers,
    singular_information,
    singular_variability,
    interval_failure,
    grid_mismatch,
    degenerate_posterior,
    domain_error,
    size_cap,
    invalid_proxy,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Per-coordinate box constraints. Open endpoints are handled by the pad
// arguments at the call sites that need strict interiority (finite
// differences step outside the evaluation point).
struct Domain {
    Vector lower;
    Vector upper;

    static Domain unbounded(int p) {
        Domain d;
        d.lower = Vector::Constant(p, -std::numeric_limits<double>::infinity());
        d.upper = Vector::Constant(p, std::numeric_limits<double>::infinity());
        return d;
    }
    static Domain box1(double lo, double hi) {
        Domain d;
        d.lower = Vector::Constant(1, lo);
        d.upper = Vector::Constant(1, hi);
        return d;
    }
    int dim() const { return static_cast<int>(lower.size()); }
    bool contains(const ParamPoint& theta, double pad = 0.0) const {
        for (int j = 0; j < dim(); ++j) {
            if (!(theta[j] >= lower[j] + pad && theta[j] <= upper[j] - pad)) return false;
        }
        return true;
    }
    ParamPoint clamp(ParamPoint theta, double pad = 0.0) const {
        for (int j = 0; j < dim(); ++j) {
            double lo = lower[j] + pad, hi = upper[j] - pad;
            if (theta[j] < lo) theta[j] = lo;
            if (theta[j] > hi) theta[j] = hi;
        }
        return theta;
    }
};

}  // namespace aprx

#endif
