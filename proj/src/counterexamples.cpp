#include "dshift/counterexamples.hpp"

#include "dshift/linalg.hpp"
#include "dshift/twodim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace dshift {

namespace {

void require_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    if (a.size() == 0 || a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols())
        throw input_error(std::string(who) + ": A and B must be square of equal size");
    if (!a.allFinite() || !b.allFinite())
        throw input_error(std::string(who) + ": non-finite entries");
}

}  // namespace

GapWitness shift2zero_norms(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_pair(a, b, "shift2zero_norms");
    const Eigen::Index n = a.rows();

    ComplexMatrix column = ComplexMatrix::Zero(3 * n, 3 * n);
    column.block(0, 2 * n, n, n) = a;
    column.block(n, 2 * n, n, n) = b;

    ComplexMatrix row = ComplexMatrix::Zero(3 * n, 3 * n);
    row.block(0, n, n, n) = a;
    row.block(0, 2 * n, n, n) = b;

    GapWitness w;
    w.a = a;
    w.b = b;
    w.column_norm = opnorm(column);
    w.row_norm = opnorm(row);

    double column_closed = std::sqrt(opnorm(a.adjoint() * a + b.adjoint() * b));
    double row_closed = std::sqrt(opnorm(a * a.adjoint() + b * b.adjoint()));
    double scale = std::max({w.column_norm, w.row_norm, 1.0});
    if (std::abs(w.column_norm - column_closed) > 1e-10 * scale ||
        std::abs(w.row_norm - row_closed) > 1e-10 * scale)
        throw degeneracy_error("shift2zero_norms: block embedding and closed form disagree");
    return w;
}

double alpha_l22_witness() {
    ComplexMatrix e11 = ComplexMatrix::Zero(2, 2);
    e11(0, 0) = Complex(1);
    ComplexMatrix e12 = ComplexMatrix::Zero(2, 2);
    e12(0, 1) = Complex(1);
    GapWitness w = shift2zero_norms(e11, e12);
    return w.row_norm / w.column_norm;
}

double q0q0_quotient_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_pair(a, b, "q0q0_quotient_norm");
    double row = std::sqrt(opnorm(a * a.adjoint() + b * b.adjoint()));
    double column = std::sqrt(opnorm(a.adjoint() * a + b.adjoint() * b));
    return std::max(row, column);
}

ComplexMatrix q0q0_block(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexMatrix& c) {
    require_pair(a, b, "q0q0_block");
    if (c.rows() != a.rows() || c.cols() != a.cols())
        throw input_error("q0q0_block: C must match A and B in size");
    const Eigen::Index n = a.rows();
    ComplexMatrix out = ComplexMatrix::Zero(3 * n, 4 * n);
    out.block(0, n, n, n) = a;
    out.block(0, 2 * n, n, n) = b;
    out.block(0, 3 * n, n, n) = c;
    out.block(n, 3 * n, n, n) = b;
    out.block(2 * n, 3 * n, n, n) = a;
    return out;
}

std::pair<double, double> phi_bounds(double c, double d) {
    if (!(c > 0.0 && c <= 1.0) || !(d > 0.0 && d <= 1.0))
        throw input_error("phi_bounds: c and d must lie in (0,1]");
    double lower = std::max(c, d);
    double upper = std::sqrt(c * c + d * d - c * c * d * d);
    if (c * d < 1.0) {
        double quotient_bound = (c + d) / (1.0 - c * d);
        if (quotient_bound < 1.0) upper = std::min(upper, quotient_bound);
    }
    return {lower, upper};
}

PhiEstimate phi_bruteforce(double c, double d, long budget) {
    if (!(c > 0.0 && c <= 1.0) || !(d > 0.0 && d <= 1.0))
        throw input_error("phi_bruteforce: c and d must lie in (0,1]");
    if (budget < 1) throw input_error("phi_bruteforce: empty budget");

    ComplexMatrix tc = tc_matrix(c);
    ComplexMatrix td = tc_matrix(d);
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    std::array<ComplexMatrix, 3> basis = {kron(tc, id), kron(id, td), kron(tc, td)};
    std::array<Complex, 3> point_value = {Complex(c), Complex(d), Complex(c * d)};

    PhiEstimate est;

    // |f(c,d)| / ||f|| is scale invariant, so maximize the ratio directly.
    auto ratio = [&](const std::array<Complex, 3>& coeff) {
        ++est.evaluations;
        Complex value(0);
        ComplexMatrix f = ComplexMatrix::Zero(4, 4);
        for (int k = 0; k < 3; ++k) {
            value += coeff[static_cast<size_t>(k)] * point_value[static_cast<size_t>(k)];
            f += coeff[static_cast<size_t>(k)] * basis[static_cast<size_t>(k)];
        }
        double norm = opnorm(f);
        return norm > 0.0 ? std::abs(value) / norm : 0.0;
    };

    std::array<Complex, 3> best_coeff = {Complex(0), Complex(0), Complex(1)};
    double best = ratio(best_coeff);

    // Coarse pass: real coefficients on a symmetric grid (17 moduli, signs
    // as the two phases).
    for (int i = -8; i <= 8 && est.evaluations < budget; ++i)
        for (int j = -8; j <= 8 && est.evaluations < budget; ++j)
            for (int k = -8; k <= 8 && est.evaluations < budget; ++k) {
                std::array<Complex, 3> coeff = {Complex(i / 5.0), Complex(j / 5.0),
                                                Complex(k / 5.0)};
                double value = ratio(coeff);
                if (value > best) {
                    best = value;
                    best_coeff = coeff;
                }
            }

    // Pattern search over the six real degrees of freedom.
    double step = 0.2;
    for (int iter = 0; iter < 200 && est.evaluations < budget; ++iter) {
        bool improved = false;
        for (int slot = 0; slot < 6 && est.evaluations < budget; ++slot) {
            for (double sign : {1.0, -1.0}) {
                std::array<Complex, 3> coeff = best_coeff;
                Complex delta = (slot % 2 == 0) ? Complex(sign * step, 0.0)
                                                : Complex(0.0, sign * step);
                coeff[static_cast<size_t>(slot / 2)] += delta;
                double value = ratio(coeff);
                if (value > best) {
                    best = value;
                    best_coeff = coeff;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
        if (step < 1e-9) break;
    }

    est.value = best;
    est.certified = est.evaluations < budget;
    return est;
}

}  // namespace dshift
