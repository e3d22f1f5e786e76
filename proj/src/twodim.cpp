#include "dshift/twodim.hpp"

#include "dshift/linalg.hpp"

#include <cmath>
#include <sstream>

namespace dshift {

ComplexMatrix tc_matrix(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw input_error("tc_matrix: c must lie in [0,1]");
    ComplexMatrix t = ComplexMatrix::Zero(2, 2);
    t(0, 1) = std::sqrt(1.0 - c * c);
    t(1, 1) = c;
    return t;
}

TwoDimAlgebra classify_two_dim(const ComplexMatrix& g) {
    if (g.size() == 0 || g.rows() != g.cols() || !g.allFinite())
        throw input_error("classify_two_dim: expected a finite square matrix");
    const Eigen::Index n = g.rows();

    Complex mean = g.trace() / Complex(static_cast<double>(n));
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    double g_scale = std::max(opnorm(g), 1.0);
    if (opnorm(g - mean * id) <= 1e-12 * g_scale)
        throw degeneracy_error("classify_two_dim: G is a scalar multiple of the identity");

    // Least squares for G^2 = alpha G + beta 1 over the flattened matrices.
    ComplexMatrix g2 = g * g;
    Eigen::MatrixXcd basis(n * n, 2);
    basis.col(0) = Eigen::Map<const ComplexVector>(g.data(), n * n);
    basis.col(1) = Eigen::Map<const ComplexVector>(id.data(), n * n);
    ComplexVector rhs = Eigen::Map<const ComplexVector>(g2.data(), n * n);
    ComplexVector sol = basis.colPivHouseholderQr().solve(rhs);
    double residual = (basis * sol - rhs).norm();
    if (residual > 1e-10 * std::max(rhs.norm(), 1.0))
        throw degeneracy_error("classify_two_dim: G^2 does not lie in span{1, G}");

    Complex alpha = sol(0);
    Complex beta = sol(1);

    // Shift by an eigenvalue mu of the quadratic so that G' = G - mu has
    // G'^2 = gamma G'; either root gives the same invariant.
    Complex mu = 0.5 * (alpha + std::sqrt(alpha * alpha + 4.0 * beta));
    Complex gamma = alpha - 2.0 * mu;

    double shift_norm = opnorm(g - mu * id);
    if (shift_norm <= 1e-14 * g_scale)
        throw degeneracy_error("classify_two_dim: shifted generator vanishes");

    // |gamma| / ||G'|| is the invariant after unit normalization and phase
    // rotation; it cannot exceed 1 since |gamma| is in the spectrum of G'.
    double c = std::abs(gamma) / shift_norm;
    return TwoDimAlgebra{std::min(c, 1.0)};
}

double h(double c) {
    if (!(c > 0.0 && c <= 1.0))
        throw input_error("h: c must lie in (0,1]");
    return (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / c;
}

double hom_norm(const HomSpec& spec) {
    switch (spec.kind) {
        case HomKind::m_lambda:
            return std::max(1.0, std::abs(spec.lambda));
        case HomKind::theta:
            if (!(spec.source_c >= 0.0 && spec.source_c <= 1.0))
                throw input_error("hom_norm: theta requires c in [0,1]");
            return 1.0;
        case HomKind::iota:
            if (!(spec.source_c > 0.0 && spec.source_c <= 1.0) ||
                !(spec.target_c > 0.0 && spec.target_c <= 1.0))
                throw input_error("hom_norm: iota requires c, c' in (0,1]");
            return std::max(1.0, h(spec.target_c) / h(spec.source_c));
    }
    throw input_error("hom_norm: unknown homomorphism kind");
}

double cond2x2(Complex x, Complex y) {
    double ax = std::abs(x);
    if (ax == 0.0)
        throw degeneracy_error("cond2x2: singular at x = 0");
    double s = 1.0 + ax * ax + std::norm(y);
    return (s + std::sqrt(std::max(0.0, s * s - 4.0 * ax * ax))) / (2.0 * ax);
}

}  // namespace dshift
