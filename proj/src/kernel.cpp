#include "dshift/kernel.hpp"

#include <cmath>
#include <sstream>

namespace dshift {

namespace {

constexpr double kPoleBand = 1e-12;
constexpr double kClosureSlack = 1e-12;

void require_dim(int expected, int got, const char* who) {
    if (expected != got) {
        std::ostringstream os;
        os << who << ": dimension mismatch (" << got << " against " << expected << ")";
        throw input_error(os.str());
    }
}

void require_alpha(const MultiIndex& alpha, int dim, const char* who) {
    if (static_cast<int>(alpha.size()) != dim)
        throw input_error(std::string(who) + ": multi-index length differs from the dimension");
    for (int a : alpha)
        if (a < 0) throw input_error(std::string(who) + ": negative exponent");
}

Complex pow_int(Complex z, int p) {
    Complex out(1);
    for (int k = 0; k < p; ++k) out *= z;
    return out;
}

}  // namespace

BallPoint::BallPoint(ComplexVector coords) : coords_(std::move(coords)) {
    if (coords_.size() == 0)
        throw input_error("BallPoint: empty coordinate vector");
    if (!coords_.allFinite())
        throw input_error("BallPoint: non-finite coordinates");
    if (coords_.squaredNorm() > 1.0 + kClosureSlack)
        throw input_error("BallPoint: point lies outside the closed unit ball");
}

Complex Polynomial::eval(const ComplexVector& z) const {
    require_dim(dim, static_cast<int>(z.size()), "Polynomial::eval");
    Complex out(0);
    for (const auto& t : terms) {
        Complex m = t.coeff;
        for (size_t k = 0; k < t.alpha.size(); ++k)
            m *= pow_int(z(static_cast<Eigen::Index>(k)), t.alpha[k]);
        out += m;
    }
    return out;
}

Polynomial poly_one(int dim) {
    return Polynomial{dim, {Monomial{MultiIndex(static_cast<size_t>(dim), 0), Complex(1)}}};
}

Polynomial poly_coordinate(int dim, int k) {
    if (k < 0 || k >= dim) throw input_error("poly_coordinate: index out of range");
    MultiIndex alpha(static_cast<size_t>(dim), 0);
    alpha[static_cast<size_t>(k)] = 1;
    return Polynomial{dim, {Monomial{std::move(alpha), Complex(1)}}};
}

Polynomial poly_monomial(int dim, MultiIndex alpha, Complex coeff) {
    require_alpha(alpha, dim, "poly_monomial");
    return Polynomial{dim, {Monomial{std::move(alpha), coeff}}};
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    require_dim(p.dim, q.dim, "poly_add");
    std::map<MultiIndex, Complex> merged;
    for (const auto& t : p.terms) merged[t.alpha] += t.coeff;
    for (const auto& t : q.terms) merged[t.alpha] += t.coeff;
    Polynomial out{p.dim, {}};
    for (auto& [alpha, coeff] : merged)
        if (coeff != Complex(0)) out.terms.push_back({alpha, coeff});
    return out;
}

Polynomial poly_scale(const Polynomial& p, Complex s) {
    Polynomial out = p;
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

Polynomial poly_product(const Polynomial& p, const Polynomial& q) {
    require_dim(p.dim, q.dim, "poly_product");
    std::map<MultiIndex, Complex> merged;
    for (const auto& s : p.terms)
        for (const auto& t : q.terms) merged[mi_add(s.alpha, t.alpha)] += s.coeff * t.coeff;
    Polynomial out{p.dim, {}};
    for (auto& [alpha, coeff] : merged)
        if (coeff != Complex(0)) out.terms.push_back({alpha, coeff});
    return out;
}

int JetFunctional::order() const {
    int n = 0;
    for (const auto& t : terms)
        if (t.coeff != Complex(0)) n = std::max(n, mi_degree(t.alpha));
    return n;
}

JetFunctional make_functional(BallPoint base, std::vector<Monomial> terms) {
    if (!base.interior())
        throw input_error("make_functional: base point must be strictly interior");
    bool nonzero = false;
    for (const auto& t : terms) {
        require_alpha(t.alpha, base.dim(), "make_functional");
        if (t.coeff != Complex(0)) nonzero = true;
    }
    if (!nonzero)
        throw input_error("make_functional: all coefficients vanish");
    return JetFunctional{std::move(base), std::move(terms)};
}

KernelVector kv_from_polynomial(const Polynomial& p) {
    if (p.dim < 1) throw input_error("kv_from_polynomial: bad dimension");
    KernelVector f;
    f.dim = p.dim;
    for (const auto& t : p.terms) {
        require_alpha(t.alpha, p.dim, "kv_from_polynomial");
        f.terms.push_back({t.coeff, t.alpha, ComplexVector::Zero(p.dim), 1});
    }
    return f;
}

KernelVector kv_scale(const KernelVector& f, Complex s) {
    KernelVector out = f;
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

KernelVector kv_add(const KernelVector& f, const KernelVector& g) {
    require_dim(f.dim, g.dim, "kv_add");
    KernelVector out = f;
    out.terms.insert(out.terms.end(), g.terms.begin(), g.terms.end());
    return out;
}

Complex kernel_eval(const BallPoint& x, const BallPoint& z) {
    require_dim(x.dim(), z.dim(), "kernel_eval");
    if (!x.interior() && !z.interior())
        throw input_error("kernel_eval: at least one point must be interior");
    Complex denom = Complex(1) - x.coords().dot(z.coords());
    if (std::abs(denom) <= kPoleBand)
        throw degeneracy_error("kernel_eval: evaluation at a pole");
    return Complex(1) / denom;
}

Complex kv_eval(const KernelVector& f, const ComplexVector& z) {
    require_dim(f.dim, static_cast<int>(z.size()), "kv_eval");
    Complex out(0);
    for (const auto& t : f.terms) {
        Complex denom = Complex(1) - t.center.dot(z);
        if (std::abs(denom) <= kPoleBand)
            throw degeneracy_error("kv_eval: evaluation at a pole");
        Complex m = t.coeff * pow_int(Complex(1) / denom, t.pole_order);
        for (size_t k = 0; k < t.alpha.size(); ++k)
            m *= pow_int(z(static_cast<Eigen::Index>(k)), t.alpha[k]);
        out += m;
    }
    return out;
}

ComplexMatrix gram(const std::vector<BallPoint>& points) {
    if (points.empty()) throw input_error("gram: no points");
    const int n = static_cast<int>(points.size());
    const int d = points[0].dim();
    for (const auto& p : points) {
        require_dim(d, p.dim(), "gram");
        if (!p.interior())
            throw input_error(
                "gram: boundary point; split boundary nodes off before forming the Gram matrix");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((points[static_cast<size_t>(i)].coords() -
                 points[static_cast<size_t>(j)].coords()).norm() <= tol::distinct) {
                std::ostringstream os;
                os << "gram: points " << i << " and " << j << " coincide";
                throw input_error(os.str());
            }

    ComplexMatrix b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            // <x_i, x_j> in the first-slot-linear convention.
            Complex pairing = points[static_cast<size_t>(j)].coords().dot(
                points[static_cast<size_t>(i)].coords());
            Complex value = Complex(1) / (Complex(1) - pairing);
            b(i, j) = value;
            b(j, i) = std::conj(value);
        }
        b(i, i) = Complex(b(i, i).real(), 0.0);
    }
    return b;
}

KernelVector fantappie_vector(const JetFunctional& l) {
    KernelVector out;
    out.dim = l.base.dim();
    for (const auto& t : l.terms) {
        if (t.coeff == Complex(0)) continue;
        int degree = mi_degree(t.alpha);
        double total_factorial = 1.0;
        for (int k = 2; k <= degree; ++k) total_factorial *= k;
        out.terms.push_back(
            {std::conj(t.coeff) * total_factorial, t.alpha, l.base.coords(), 1 + degree});
    }
    return out;
}

Jet jet_expand(const KernelVector& f, const BallPoint& base, int order) {
    auto table = std::make_shared<const JetTable>(f.dim, order);
    require_dim(f.dim, base.dim(), "jet_expand");
    Jet acc = jet_zero(table);
    for (const auto& t : f.terms) {
        // z^alpha around base: product of the affine jets base_k + h_k.
        Jet numerator = jet_const(table, t.coeff);
        for (size_t k = 0; k < t.alpha.size(); ++k) {
            ComplexVector e = ComplexVector::Zero(f.dim);
            e(static_cast<Eigen::Index>(k)) = Complex(1);
            Jet coord = jet_affine(table, base.coords()(static_cast<Eigen::Index>(k)), e);
            for (int rep = 0; rep < t.alpha[k]; ++rep) numerator = jet_mul(numerator, coord);
        }
        // (1 - <z, center>)^{-p} around base: reciprocal power of an affine jet.
        Complex c0 = Complex(1) - t.center.dot(base.coords());
        if (std::abs(c0) <= kPoleBand)
            throw degeneracy_error("jet_expand: expansion point lies on a pole");
        Jet denom = jet_affine(table, c0, ComplexVector(-t.center.conjugate()));
        Jet pole = jet_pow(jet_recip(denom), t.pole_order);
        acc = jet_add(acc, jet_mul(numerator, pole));
    }
    return acc;
}

Complex apply_functional(const JetFunctional& l, const KernelVector& f) {
    require_dim(f.dim, l.base.dim(), "apply_functional");
    Jet jet = jet_expand(f, l.base, l.order());
    Complex out(0);
    for (const auto& t : l.terms) {
        if (t.coeff == Complex(0)) continue;
        out += t.coeff * mi_factorial(t.alpha) * jet.at(t.alpha);
    }
    return out;
}

KernelVector poly_mul(const Polynomial& g, const KernelVector& f) {
    require_dim(f.dim, g.dim, "poly_mul");
    KernelVector out;
    out.dim = f.dim;
    for (const auto& m : g.terms) {
        require_alpha(m.alpha, g.dim, "poly_mul");
        if (m.coeff == Complex(0)) continue;
        for (const auto& t : f.terms)
            out.terms.push_back({m.coeff * t.coeff, mi_add(m.alpha, t.alpha), t.center, t.pole_order});
    }
    return out;
}

}  // namespace dshift
