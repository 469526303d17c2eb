#include <cmath>

#include "aprxlik/ising.hpp"

namespace aprx::ising {

namespace {

class IsingSurface final : public LikelihoodSurface {
public:
    IsingSurface(SuffStats stats, LatticeSpec lattice, double alpha, ZMethod method)
        : stats_(stats), lattice_(lattice), alpha_(alpha), method_(method) {
        const bool kaufman = method_.kind == ZMethod::Kind::kaufman;
        domain_ = Domain::box1(kaufman ? 1e-6 : 0.0, 0.43);
        if (kaufman) {
            if (alpha_ != 0.0) fail(Errc::invalid_argument, "ising surface: kaufman requires alpha = 0");
            if (lattice_.boundary != Boundary::periodic)
                fail(Errc::invalid_argument, "ising surface: kaufman requires a periodic lattice");
        }
    }

    int dim() const override { return 1; }
    const Domain& domain() const override { return domain_; }

    double loglik(const ParamPoint& theta) const override {
        const double beta = theta[0];
        return alpha_ * static_cast<double>(stats_.v0) + beta * static_cast<double>(stats_.v1) - log_z(beta);
    }

private:
    double log_z(double beta) const {
        const IsingParams params{alpha_, beta};
        switch (method_.kind) {
            case ZMethod::Kind::brute:
                return brute_force_log_z(lattice_, params);
            case ZMethod::Kind::transfer:
                return transfer_log_z(lattice_, params);
            case ZMethod::Kind::kaufman:
                return kaufman_log_z(lattice_.rows, lattice_.cols, beta);
            case ZMethod::Kind::rda:
            case ZMethod::Kind::proxy:
                return rda_log_z(method_.k, lattice_, params);
        }
        fail(Errc::invalid_argument, "ising surface: unknown method");
    }

    SuffStats stats_;
    LatticeSpec lattice_;
    double alpha_;
    ZMethod method_;
    Domain domain_;
};

}  // namespace

std::unique_ptr<LikelihoodSurface> ising_loglik_surface(const SuffStats& stats, const LatticeSpec& lattice,
                                                        double alpha_fixed, const ZMethod& method) {
    return std::make_unique<IsingSurface>(stats, lattice, alpha_fixed, method);
}

}  // namespace aprx::ising
