#pragma once

// Reproducing kernel data on the unit ball of C^d: kernel vectors
// u_x(z) = (1 - <z,x>)^{-1}, jet functionals (finite combinations of point
// derivatives), their Fantappie representatives, and symbolic evaluation of
// functionals on rational kernel combinations.

#include <memory>
#include <utility>
#include <vector>

#include "dshift/jets.hpp"
#include "dshift/types.hpp"

namespace dshift {

// A point of the closed unit ball.  Construction rejects points outside;
// interior() tests strict membership with a safety band.
class BallPoint {
public:
    explicit BallPoint(ComplexVector coords);

    const ComplexVector& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    double norm_sq() const { return coords_.squaredNorm(); }
    bool interior(double band = tol::positivity) const { return norm_sq() < 1.0 - band; }

private:
    ComplexVector coords_;
};

struct Monomial {
    MultiIndex alpha;
    Complex coeff;
};

// Polynomial in z_1..z_d as a monomial list.
struct Polynomial {
    int dim = 0;
    std::vector<Monomial> terms;

    Complex eval(const ComplexVector& z) const;
};

Polynomial poly_one(int dim);
Polynomial poly_coordinate(int dim, int k);
Polynomial poly_monomial(int dim, MultiIndex alpha, Complex coeff = Complex(1));
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, Complex s);
Polynomial poly_product(const Polynomial& p, const Polynomial& q);

// Functional f -> sum_alpha c_alpha (d^alpha f)(base), base interior.
struct JetFunctional {
    BallPoint base;
    std::vector<Monomial> terms;  // alpha = derivative order, coeff = c_alpha

    int order() const;  // max |alpha| over nonzero terms
};

JetFunctional make_functional(BallPoint base, std::vector<Monomial> terms);

// Finite combination sum_t coeff_t z^alpha_t (1 - <z, center_t>)^{-pole_t}.
// Covers polynomials (center 0) and all Fantappie representatives.
struct KernelVector {
    struct Term {
        Complex coeff;
        MultiIndex alpha;
        ComplexVector center;
        int pole_order = 1;
    };

    int dim = 0;
    std::vector<Term> terms;
};

KernelVector kv_from_polynomial(const Polynomial& p);
KernelVector kv_scale(const KernelVector& f, Complex s);
KernelVector kv_add(const KernelVector& f, const KernelVector& g);

// u_x evaluated at z.  Throws degeneracy_error at a pole; requires at least
// one of the two points to be interior.
Complex kernel_eval(const BallPoint& x, const BallPoint& z);

// Pointwise value of a kernel combination.
Complex kv_eval(const KernelVector& f, const ComplexVector& z);

// Gram matrix B with B_ij = <u_{x_j}, u_{x_i}> = (1 - <x_i, x_j>)^{-1} for
// pairwise distinct interior points.
ComplexMatrix gram(const std::vector<BallPoint>& points);

// Fantappie representative of l: the unique lambda with <f, lambda> = l(f),
// lambda(z) = sum_alpha conj(c_alpha) |alpha|! z^alpha (1 - <z,a>)^{-1-|alpha|}.
KernelVector fantappie_vector(const JetFunctional& l);

// Taylor jet of f around base up to total degree order.
Jet jet_expand(const KernelVector& f, const BallPoint& base, int order);

// l applied to f, evaluated symbolically through the jet of f at l's base.
Complex apply_functional(const JetFunctional& l, const KernelVector& f);

// Multiplication by a polynomial, expanded term by term.
KernelVector poly_mul(const Polynomial& g, const KernelVector& f);

}  // namespace dshift
