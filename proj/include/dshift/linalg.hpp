#pragma once

// Dense complex linear algebra: operator norms, positive-definiteness
// verdicts with explicit boundary bands, Hermitian square roots, Kronecker
// products, and positivity of sesquilinear forms against a frame.
//
// posdef_invertible and cholesky_strictly_positive are deliberately
// independent code paths; callers cross-check one against the other.

#include <vector>

#include "dshift/types.hpp"

namespace dshift {

enum class Definiteness { strictly_positive, boundary, not_positive };

const char* to_string(Definiteness v);

struct PosDefReport {
    Definiteness verdict = Definiteness::not_positive;
    double min_eigenvalue = 0.0;
    double scale = 0.0;                // operator norm of the Hermitian part
    double hermiticity_defect = 0.0;   // operator norm of the skew part
    bool hermiticity_warning = false;
};

// Largest singular value.
double opnorm(const ComplexMatrix& m);

// Smallest singular value.
double sigma_min(const ComplexMatrix& m);

// sigma_min(m) > tol::invertible * opnorm(m), with the zero matrix singular.
bool invertible(const ComplexMatrix& m);

// Ascending eigenvalues of the Hermitized input (m + m*)/2.
RealVector herm_eigenvalues(const ComplexMatrix& m);

// Eigenvalue verdict on the Hermitized input.  Strictly positive when
// min_eig > band, boundary when |min_eig| <= band, not positive otherwise,
// where band = tol * max(scale, 1).
PosDefReport posdef_invertible(const ComplexMatrix& m, double tol = tol::positivity);

// Second opinion via complex Cholesky pivots; shares no code with
// posdef_invertible beyond Hermitization.
bool cholesky_strictly_positive(const ComplexMatrix& m, double tol = tol::positivity);

// Hermitian square root / inverse square root of a positive definite
// matrix.  Throws degeneracy_error naming the offending eigenvalue when the
// input fails strict positivity.
ComplexMatrix herm_sqrt(const ComplexMatrix& b, double tol = tol::positivity);
ComplexMatrix herm_inv_sqrt(const ComplexMatrix& b, double tol = tol::positivity);

// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Positivity of the form v, w -> <t v, w> + conj(<t w, v>) restricted to the
// span of the frame vectors: the verdict on S* t S + (S* t S)*.
PosDefReport frame_positivity(const ComplexMatrix& t,
                              const std::vector<ComplexVector>& frame,
                              double tol = tol::positivity);

}  // namespace dshift
