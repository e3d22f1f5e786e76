#pragma once

// Two-dimensional unital operator algebras Q_c = span{1, T_c}: the complete
// invariant c, its extraction from an arbitrary 2x2-generated algebra, and
// closed forms for the norms of all unital homomorphisms between the Q_c.

#include "dshift/types.hpp"

namespace dshift {

struct TwoDimAlgebra {
    double c = 0.0;  // complete invariant in [0,1]
};

enum class HomKind { m_lambda, theta, iota };

struct HomSpec {
    HomKind kind = HomKind::theta;
    Complex lambda = Complex(0);  // m_lambda only
    double source_c = 0.0;
    double target_c = 0.0;        // iota only
};

// T_c = [[0, sqrt(1-c^2)], [0, c]]; operator norm 1 and T^2 = c T.
ComplexMatrix tc_matrix(double c);

// Extracts c from a matrix G generating a two-dimensional unital algebra:
// solve G^2 = alpha G + beta (least squares, residual below 1e-10), shift by
// an eigenvalue so the quadratic becomes G'^2 = gamma G', normalize to unit
// norm and rotate gamma onto the nonnegative axis.
TwoDimAlgebra classify_two_dim(const ComplexMatrix& g);

// h(c) = (1 + sqrt(1 - c^2)) / c on (0, 1], decreasing, h(1) = 1.
double h(double c);

double hom_norm(const HomSpec& spec);

// Condition number of [[1, y], [0, x]] in closed form.
double cond2x2(Complex x, Complex y);

}  // namespace dshift
