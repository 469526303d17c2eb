#include "aprxlik/gauss_hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "aprxlik/types.hpp"

namespace aprx {

QuadratureRule gauss_hermite(int n) {
    if (n < 1) fail(Errc::invalid_argument, "gauss_hermite: n must be positive");
    Matrix jacobi = Matrix::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = std::sqrt(0.5 * i);
        jacobi(i, i - 1) = b;
        jacobi(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi);
    if (es.info() != Eigen::Success) fail(Errc::evaluation_failure, "gauss_hermite: eigensolver failed");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt_pi = std::sqrt(M_PI);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = sqrt_pi * v0 * v0;
    }
    // Enforce exact symmetry about zero.
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

const QuadratureRule& gh20() {
    static const QuadratureRule rule = gauss_hermite(20);
    return rule;
}

const QuadratureRule& gh40() {
    static const QuadratureRule rule = gauss_hermite(40);
    return rule;
}

}  // namespace aprx
