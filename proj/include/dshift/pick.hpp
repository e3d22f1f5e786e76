#pragma once

// Matrix-valued Nevanlinna-Pick feasibility for point ideals of the d-shift
// algebra and its transpose: ball and cone Pick matrices, exact quotient
// norms, and the compressed scalar representation.

#include <vector>

#include "dshift/kernel.hpp"
#include "dshift/linalg.hpp"
#include "dshift/types.hpp"

namespace dshift {

enum class PickVariant { ball, cone };

struct PickProblem {
    int d = 0;
    std::vector<BallPoint> nodes;
    std::vector<ComplexMatrix> targets;
    PickVariant variant = PickVariant::ball;
    bool transposed = false;
};

// Throws input_error when the problem violates its invariants.
void validate(const PickProblem& problem);

enum class Feasibility { strictly_feasible, boundary, infeasible };

const char* to_string(Feasibility v);

struct FeasibilityReport {
    Feasibility verdict = Feasibility::infeasible;
    ComplexMatrix pick_matrix;
    double min_eigenvalue = 0.0;
    double margin = 0.0;  // min_eigenvalue / scale
    double scale = 0.0;
    double gram_condition = 0.0;
    bool ill_conditioned = false;
    bool hermiticity_warning = false;
};

// Block (i,j):
//   ball       (1 - y_i y_j*) / (1 - <x_i, x_j>)
//   cone       (y_i + y_j*)   / (1 - <x_i, x_j>)
//   transposed variants use y* on the left and the conjugated kernel factor.
// Hermitian by construction.
ComplexMatrix pick_matrix(const PickProblem& problem);

// Strict interpolation feasibility in the open ball (resp. open cone) of the
// n-by-n matrices over S_d, or over the transposed algebra.
FeasibilityReport feasible(const PickProblem& problem, double tol = tol::positivity);

// Exact quotient norm of the interpolation data under ball semantics:
// opnorm of (B (x) I)^{-1/2} blockdiag(y_1..y_m) (B (x) I)^{1/2}.
double quotient_norm(const std::vector<BallPoint>& nodes,
                     const std::vector<ComplexMatrix>& targets);

// Representation matrix B^{-1/2} diag(values) B^{1/2} of a function with the
// given node values, acting on the orthonormalized kernel frame.
ComplexMatrix compressed_rep(const std::vector<BallPoint>& nodes,
                             const std::vector<Complex>& values);

}  // namespace dshift
