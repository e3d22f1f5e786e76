#include "dshift/cayley.hpp"

#include <Eigen/LU>

#include <sstream>

namespace dshift {

namespace {

void require_square_finite(const ComplexMatrix& m, const char* who) {
    if (m.size() == 0 || !m.allFinite())
        throw input_error(std::string(who) + ": empty or non-finite matrix");
    if (m.rows() != m.cols())
        throw input_error(std::string(who) + ": expected a square matrix");
}

void require_strict_contraction(const ComplexMatrix& x, const char* who) {
    double norm = opnorm(x);
    if (norm >= 1.0) {
        std::ostringstream os;
        os << who << ": expected a strict contraction, got operator norm " << norm;
        throw input_error(os.str());
    }
}

// Right division r * m^{-1} through a transposed LU solve.
ComplexMatrix divide_right(const ComplexMatrix& r, const ComplexMatrix& m) {
    return m.transpose().partialPivLu().solve(r.transpose()).transpose();
}

}  // namespace

ComplexMatrix cayley(const ComplexMatrix& x) {
    require_square_finite(x, "cayley");
    ComplexMatrix id = ComplexMatrix::Identity(x.rows(), x.cols());
    ComplexMatrix plus = id + x;
    if (!invertible(plus))
        throw degeneracy_error("cayley: 1 + x is singular");
    return divide_right(id - x, plus);
}

PosDefReport ball_cone_roundtrip(const ComplexMatrix& x, double tol) {
    require_square_finite(x, "ball_cone_roundtrip");
    require_strict_contraction(x, "ball_cone_roundtrip");
    ComplexMatrix c = cayley(x);
    return posdef_invertible(0.5 * (c + c.adjoint()), tol);
}

ComplexMatrix psi_automorphism(const AutomorphismSpec& spec, const ComplexMatrix& x) {
    require_square_finite(x, "psi_automorphism");
    require_strict_contraction(x, "psi_automorphism");
    if (spec.a.rows() != x.rows() || spec.a.cols() != x.cols() ||
        spec.b.rows() != x.rows() || spec.b.cols() != x.cols())
        throw input_error("psi_automorphism: spec dimensions do not match the argument");
    if (!invertible(spec.a))
        throw input_error("psi_automorphism: A must be invertible");

    ComplexMatrix re_b = 0.5 * (spec.b + spec.b.adjoint());
    double b_scale = std::max(opnorm(spec.b), 1.0);
    if (opnorm(re_b) > tol::warn_hermitian * b_scale)
        throw input_error("psi_automorphism: B must have vanishing real part");
    ComplexMatrix skew_b = 0.5 * (spec.b - spec.b.adjoint());

    ComplexMatrix cone_point = spec.a * cayley(x) * spec.a.adjoint() + skew_b;
    return cayley(cone_point);
}

AutomorphismSpec inverse_spec(const AutomorphismSpec& spec) {
    if (spec.a.size() == 0 || spec.a.rows() != spec.a.cols())
        throw input_error("inverse_spec: A must be square");
    if (!invertible(spec.a))
        throw input_error("inverse_spec: A must be invertible");
    ComplexMatrix a_inv = spec.a.partialPivLu().solve(
        ComplexMatrix::Identity(spec.a.rows(), spec.a.cols()));
    return AutomorphismSpec{a_inv, -a_inv * spec.b * a_inv.adjoint()};
}

}  // namespace dshift
