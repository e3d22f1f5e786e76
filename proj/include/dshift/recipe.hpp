#pragma once

// Finite-dimensional models of S_d/I for ideals cut out by jet functionals:
// Gram data of the Fantappie frame, generator actions, ball and cone
// membership, and explicit representation matrices.  Boundary nodes split
// off as scalar summands of an orthogonal direct sum.

#include <cstdint>
#include <string>
#include <vector>

#include "dshift/kernel.hpp"
#include "dshift/pick.hpp"
#include "dshift/types.hpp"

namespace dshift {

struct IdealSpec {
    int d = 0;
    std::vector<JetFunctional> functionals;
    // Optional; when empty a graded-lex monomial basis is chosen, with a
    // seeded random recombination as fallback for degenerate geometry.
    std::vector<Polynomial> generators;
    std::vector<BallPoint> boundary_nodes;
};

struct BoundarySplit {
    IdealSpec interior;
    std::vector<BallPoint> scalar_nodes;
};

// Validates the boundary data (on the sphere, pairwise distinct, distinct
// from every functional base) and separates it from the interior sub-spec.
BoundarySplit boundary_split(const IdealSpec& spec);

enum class GeneratorPolicy { given, monomial, seeded };

const char* to_string(GeneratorPolicy p);

struct QuotientModel {
    int d = 0;
    std::vector<JetFunctional> functionals;
    std::vector<Polynomial> generators;
    std::vector<KernelVector> lambda;  // Fantappie frame, lambda_j dual to l_j
    ComplexMatrix B;                   // beta_ij = l_i(lambda_j), Hermitian pd
    ComplexMatrix B_sqrt;
    ComplexMatrix B_inv_sqrt;
    std::vector<ComplexMatrix> Gamma;  // gamma_k(i,j) = l_i(g_k lambda_j)
    std::vector<ComplexMatrix> R;      // B^{-1/2} Gamma_k B^{-1/2}
    std::vector<BallPoint> boundary_nodes;
    int boundary_count = 0;
    GeneratorPolicy generator_policy = GeneratorPolicy::monomial;
    std::uint64_t generator_seed = 0;  // meaningful for the seeded policy

    int r() const { return static_cast<int>(functionals.size()); }
};

// F_{mu,nu} = sum_k coefficients[k](mu,nu) [g_k]: one n-by-n block of
// coefficients per generator.
struct QuotientElement {
    std::vector<ComplexMatrix> coefficients;

    Eigen::Index n() const { return coefficients.empty() ? 0 : coefficients.front().rows(); }
};

QuotientModel build_model(const IdealSpec& spec);

// Coordinates of [f] in the generator basis: solve (l_i(g_k)) c = (l_i(f)).
std::vector<Complex> reduce_coordinates(const QuotientModel& model, const Polynomial& f);

// The scalar class [f] inflated to matrix level n.
QuotientElement element_from_polynomial(const QuotientModel& model, const Polynomial& f,
                                        Eigen::Index n = 1);

// sum_k Gamma_k (x) F^k: outer block index = functional pair (i,j), inner
// index = matrix entry (mu,nu).
ComplexMatrix element_pairing(const QuotientModel& model, const QuotientElement& f);

// Values sum_k g_k(omega_b) F^k at the boundary nodes.
std::vector<ComplexMatrix> boundary_values(const QuotientModel& model, const QuotientElement& f);

// Strict ball membership: positivity of B(x)I - M(F) (B^{-1}(x)I) M(F)*,
// with |value| < 1 at every boundary node.
FeasibilityReport membership_ball(const QuotientModel& model, const QuotientElement& f,
                                  double tol = tol::positivity);

// Strict cone membership: positivity of Re M(F), with Re(value) positive at
// every boundary node.
FeasibilityReport membership_cone(const QuotientModel& model, const QuotientElement& f,
                                  double tol = tol::positivity);

// sum_k F^k (x) R_k, plus one scalar diagonal block per boundary node; the
// operator norm of the result is the exact quotient norm of F.
ComplexMatrix represent(const QuotientModel& model, const QuotientElement& f);

// Action matrix of an arbitrary polynomial on the orthonormalized model
// space: B^{-1/2} (l_i(g lambda_j)) B^{-1/2}.
ComplexMatrix action_matrix(const QuotientModel& model, const Polynomial& g);

}  // namespace dshift
