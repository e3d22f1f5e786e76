#pragma once

// Shared scalar and matrix carriers plus the error taxonomy used by every
// module.  Two error families matter downstream: structurally bad input and
// numerically degenerate input.  The CLI maps them to distinct exit codes.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dshift {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Malformed input: wrong dimensions, out-of-range parameters, schema
// violations, preconditions the caller could have checked.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Well-formed input that is numerically degenerate: singular where an
// inverse is required, indefinite where positivity is required, evaluation
// at a pole, rank collapse.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace tol {

// Positivity band, relative to max(scale, 1): strictly positive requires
// min_eig > positivity * max(scale, 1).
inline constexpr double positivity = 1e-9;

// A matrix counts as invertible when its smallest singular value exceeds
// invertible * ||M||.
inline constexpr double invertible = 1e-12;

// Hermiticity defect beyond warn_hermitian * scale flags suspect input.
inline constexpr double warn_hermitian = 1e-8;

// Points closer than this in Euclidean distance count as coincident.
inline constexpr double distinct = 1e-8;

// Gram condition numbers beyond this flag the instance as ill conditioned.
inline constexpr double gram_condition = 1e12;

}  // namespace tol

// <u,v> = sum_k u_k * conj(v_k): linear in the first slot, conjugate in the
// second.  Eigen's dot conjugates its *object*, hence the flip.
inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
    return v.dot(u);
}

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

}  // namespace dshift
