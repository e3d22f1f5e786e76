#include "dshift/geometry.hpp"

#include "dshift/pick.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dshift {

namespace {

constexpr double kPoleBand = 1e-12;

void require_same_dim(const BallPoint& x, const BallPoint& y, const char* who) {
    if (x.dim() != y.dim())
        throw input_error(std::string(who) + ": points of different dimension");
}

}  // namespace

double mobius_distance(Complex l1, Complex l2) {
    if (std::abs(l1) > 1.0 + kPoleBand || std::abs(l2) > 1.0 + kPoleBand)
        throw input_error("mobius_distance: arguments must lie in the closed disk");
    Complex denom = Complex(1) - l1 * std::conj(l2);
    if (std::abs(denom) <= kPoleBand)
        throw degeneracy_error("mobius_distance: pole at conjugate boundary pair");
    return std::abs(l1 - l2) / std::abs(denom);
}

double cstar_shift(const BallPoint& x, const BallPoint& y) {
    require_same_dim(x, y, "cstar_shift");
    if ((x.coords() - y.coords()).norm() == 0.0) return 0.0;
    if (!x.interior() || !y.interior()) return 1.0;

    // <x,y>, first slot linear.
    Complex pairing = y.coords().dot(x.coords());
    double ratio = (1.0 - x.norm_sq()) * (1.0 - y.norm_sq()) / std::norm(Complex(1) - pairing);
    return std::sqrt(std::clamp(1.0 - ratio, 0.0, 1.0));
}

double c_shift(const BallPoint& x, const BallPoint& y) {
    double cstar = cstar_shift(x, y);
    if (cstar >= 1.0) return std::numeric_limits<double>::infinity();
    return std::atanh(cstar);
}

double cstar_oracle(const BallPoint& x, const BallPoint& y, double tol) {
    require_same_dim(x, y, "cstar_oracle");
    if (!x.interior() || !y.interior())
        throw input_error("cstar_oracle: both points must be interior");
    if ((x.coords() - y.coords()).norm() <= tol::distinct)
        throw input_error("cstar_oracle: points must be distinct");

    ComplexMatrix zero = ComplexMatrix::Zero(1, 1);
    auto strictly_feasible_at = [&](double t) {
        ComplexMatrix target(1, 1);
        target(0, 0) = t;
        PickProblem problem{x.dim(), {x, y}, {zero, target}, PickVariant::ball, false};
        // Sign of the smallest eigenvalue, not the banded verdict: the band
        // would bias the threshold by the tolerance width.
        return feasible(problem).min_eigenvalue > 0.0;
    };

    double lo = 0.0;
    double hi = 1.0 - 1e-12;
    if (!strictly_feasible_at(hi)) {
        for (int i = 0; i < 60 && hi - lo > 0.25 * tol; ++i) {
            double mid = 0.5 * (lo + hi);
            (strictly_feasible_at(mid) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    return 1.0;  // unreachable for distinct interior points, kept for safety
}

double metric_shift(const TangentVector& v) {
    if (!v.base.interior())
        throw input_error("metric_shift: base point must be strictly interior");
    if (v.direction.size() != v.base.dim())
        throw input_error("metric_shift: direction dimension mismatch");
    if (v.direction.norm() == 0.0)
        throw input_error("metric_shift: zero direction");

    double s = 1.0 - v.base.norm_sq();
    // <a, X>, first slot linear.
    Complex pairing = v.direction.dot(v.base.coords());
    return std::sqrt(v.direction.squaredNorm() / s + std::norm(pairing) / (s * s));
}

BallPoint ball_automorphism(const BallPoint& a, const BallPoint& z) {
    require_same_dim(a, z, "ball_automorphism");
    if (!a.interior())
        throw input_error("ball_automorphism: center must be strictly interior");
    double a2 = a.norm_sq();
    if (a2 == 0.0) return z;

    // <z,a>, first slot linear.
    Complex pairing = a.coords().dot(z.coords());
    Complex denom = Complex(1) - pairing;
    if (std::abs(denom) <= kPoleBand)
        throw degeneracy_error("ball_automorphism: pole at <z,a> = 1");

    ComplexVector proj = (pairing / a2) * a.coords();
    ComplexVector rest = z.coords() - proj;
    double s = std::sqrt(1.0 - a2);
    return BallPoint((a.coords() - proj - s * rest) / denom);
}

bool pair_decomposable(const BallPoint& x, const BallPoint& y, double tol) {
    require_same_dim(x, y, "pair_decomposable");
    if ((x.coords() - y.coords()).norm() == 0.0)
        throw input_error("pair_decomposable: points must be distinct");
    return cstar_shift(x, y) >= 1.0 - tol;
}

}  // namespace dshift
