#pragma once

// Quotient distance and quotient metric of the d-shift algebra in closed
// form, the Pick-feasibility bisection oracle behind them, Mobius machinery
// on the disk, ball automorphisms, and the two-point decomposability test.

#include "dshift/kernel.hpp"
#include "dshift/types.hpp"

namespace dshift {

struct TangentVector {
    BallPoint base;           // strictly interior
    ComplexVector direction;  // length d, not all zero
};

// |l1 - l2| / |1 - l1 conj(l2)| on the closed disk.
double mobius_distance(Complex l1, Complex l2);

// Two-point quotient distance: sqrt(1 - (1-|x|^2)(1-|y|^2) / |1-<x,y>|^2)
// for interior pairs, 1 when a boundary point is involved and x != y,
// 0 at x = y.
double cstar_shift(const BallPoint& x, const BallPoint& y);

// arctanh(cstar_shift), with infinity at cstar = 1.
double c_shift(const BallPoint& x, const BallPoint& y);

// Independent oracle: bisection over t of strict Pick feasibility for the
// data {x -> 0, y -> t}.  Agrees with cstar_shift up to the bracket width.
double cstar_oracle(const BallPoint& x, const BallPoint& y, double tol = 1e-7);

// sqrt( |X|^2/(1-|a|^2) + |<a,X>|^2/(1-|a|^2)^2 ).
double metric_shift(const TangentVector& v);

// Involutive Mobius automorphism of the ball exchanging 0 and a.
BallPoint ball_automorphism(const BallPoint& a, const BallPoint& z);

// True when the two-point quotient splits as C + C, i.e. cstar >= 1 - tol.
bool pair_decomposable(const BallPoint& x, const BallPoint& y, double tol = tol::positivity);

}  // namespace dshift
