#ifndef APRXLIK_GODAMBE_HPP
#define APRXLIK_GODAMBE_HPP

#include <vector>

#include "aprxlik/surface.hpp"

namespace aprx {

struct GodambeMatrices {
    Matrix H;     // sample covariance of replicate scores
    Matrix Ibar;  // mean replicate observed information
    Matrix G;     // Ibar H^{-1} Ibar
};

// Monte-Carlo sandwich estimator across replicate-dataset surfaces, all
// evaluated at the same parameter point.
GodambeMatrices godambe_sandwich(const std::vector<const LikelihoodSurface*>& replicates, const ParamPoint& theta,
                                 const FdSteps& steps = {});

}  // namespace aprx

#endif
