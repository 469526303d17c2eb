#ifndef APRXLIK_GAUSS_HERMITE_HPP
#define APRXLIK_GAUSS_HERMITE_HPP

#include <vector>

namespace aprx {

// Gauss-Hermite rule for weight exp(-x^2): integral f(x) e^{-x^2} dx
// ~= sum_j w_j f(x_j). Nodes symmetric about 0, weights sum to sqrt(pi).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Golub-Welsch on the Jacobi matrix, symmetrized across the center.
QuadratureRule gauss_hermite(int n);

// Shared instances of the standard 20- and 40-node rules.
const QuadratureRule& gh20();
const QuadratureRule& gh40();

}  // namespace aprx

#endif
