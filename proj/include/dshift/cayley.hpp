#pragma once

// Cayley transform between the matrix ball and the right half-plane cone,
// together with the ball automorphisms it conjugates from affine cone maps.

#include "dshift/linalg.hpp"
#include "dshift/types.hpp"

namespace dshift {

// Affine cone map X -> A X A* + B with Re B = 0; conjugating by the Cayley
// transform on both sides yields a biholomorphism of the matrix ball.
struct AutomorphismSpec {
    ComplexMatrix a;
    ComplexMatrix b;
};

// (1 - x)(1 + x)^{-1}.  Throws degeneracy_error when 1 + x is singular.
// The transform is its own inverse.
ComplexMatrix cayley(const ComplexMatrix& x);

// Positivity report of Re cayley(x) for a strict ball contraction x.
PosDefReport ball_cone_roundtrip(const ComplexMatrix& x, double tol = tol::positivity);

// cayley(A cayley(x) A* + B) for a strict contraction x.
ComplexMatrix psi_automorphism(const AutomorphismSpec& spec, const ComplexMatrix& x);

// Spec of the inverse automorphism: (A^{-1}, -A^{-1} B A^{-*}).
AutomorphismSpec inverse_spec(const AutomorphismSpec& spec);

}  // namespace dshift
