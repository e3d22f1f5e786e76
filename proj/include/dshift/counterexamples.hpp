#pragma once

// Executable reproductions of the quantitative counterexamples: the
// transposition gap on Shift2(0), the alpha(l22) = sqrt(2) witness, the
// Q0 (x) Q0 quotient norm, and the phi(c,d) bracket with a deterministic
// numerical estimate.

#include <utility>

#include "dshift/types.hpp"

namespace dshift {

struct GapWitness {
    ComplexMatrix a;
    ComplexMatrix b;
    double column_norm = 0.0;  // ||A*A + B*B||^{1/2}
    double row_norm = 0.0;     // ||AA* + BB*||^{1/2}
};

// Norms of the column embedding [0 0 A; 0 0 B; 0 0 0] and its transposed
// image, the row embedding [0 A B; 0 0 0; 0 0 0], computed both from the
// 3n-by-3n blocks and from the closed forms (cross-checked internally).
GapWitness shift2zero_norms(const ComplexMatrix& a, const ComplexMatrix& b);

// row_norm / column_norm for the witness pair (e11, e12): sqrt(2), the
// completely bounded norm of transposition on this two-dimensional space.
double alpha_l22_witness();

// max{ ||AA* + BB*||^{1/2}, ||A*A + B*B||^{1/2} }.
double q0q0_quotient_norm(const ComplexMatrix& a, const ComplexMatrix& b);

// The 3n-by-4n verifier block [0 A B C; 0 0 0 B; 0 0 0 A] whose norm at
// C = 0 matches q0q0_quotient_norm and never drops below it for any C.
ComplexMatrix q0q0_block(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexMatrix& c);

// (max{c,d}, min{ sqrt(c^2 + d^2 - c^2 d^2), (c+d)/(1-cd) when < 1 }).
std::pair<double, double> phi_bounds(double c, double d);

struct PhiEstimate {
    double value = 0.0;
    bool certified = true;  // false when the evaluation budget ran out
    long evaluations = 0;
};

// Deterministic grid search plus pattern refinement for
// sup{ |f(c,d)| : f in span{T_c (x) 1, 1 (x) T_d, T_c (x) T_d}, ||f|| <= 1 };
// every f in that span vanishes at (0,0).
PhiEstimate phi_bruteforce(double c, double d, long budget = 250000);

}  // namespace dshift
