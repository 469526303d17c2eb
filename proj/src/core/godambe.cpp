#include "aprxlik/godambe.hpp"

#include <Eigen/Cholesky>

namespace aprx {

GodambeMatrices godambe_sandwich(const std::vector<const LikelihoodSurface*>& replicates, const ParamPoint& theta,
                                 const FdSteps& steps) {
    const std::size_t r = replicates.size();
    if (r < 2) fail(Errc::invalid_argument, "godambe_sandwich: need at least 2 replicates");
    const int p = replicates[0]->dim();

    Matrix scores(p, static_cast<int>(r));
    Matrix ibar = Matrix::Zero(p, p);
    for (std::size_t i = 0; i < r; ++i) {
        const EvalBundle b = replicates[i]->eval(theta, steps);
        scores.col(static_cast<int>(i)) = b.score;
        ibar += b.obs_info;
    }
    ibar /= static_cast<double>(r);

    const Vector mean_score = scores.rowwise().mean();
    Matrix h = Matrix::Zero(p, p);
    for (std::size_t i = 0; i < r; ++i) {
        const Vector d = scores.col(static_cast<int>(i)) - mean_score;
        h += d * d.transpose();
    }
    h /= static_cast<double>(r - 1);

    Eigen::LLT<Matrix> llt(h);
    if (h.cwiseAbs().maxCoeff() == 0.0 || llt.info() != Eigen::Success)
        fail(Errc::singular_variability, "godambe_sandwich: score covariance is singular");

    GodambeMatrices out;
    out.H = h;
    out.Ibar = ibar;
    out.G = ibar * llt.solve(ibar);
    out.G = 0.5 * (out.G + out.G.transpose()).eval();
    return out;
}

}  // namespace aprx
