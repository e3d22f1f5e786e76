#include <doctest.h>

#include "dshift/cayley.hpp"
#include "dshift/pick.hpp"
#include "dshift/twodim.hpp"

#include <cmath>
#include <random>

using namespace dshift;

namespace {

ComplexVector vec1(Complex a) {
    ComplexVector v(1);
    v << a;
    return v;
}

ComplexMatrix scalar(Complex v) {
    ComplexMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

PickProblem schwarz_pick(double r, double t) {
    PickProblem p;
    p.d = 1;
    p.nodes = {BallPoint(vec1(Complex(0))), BallPoint(vec1(Complex(r)))};
    p.targets = {scalar(Complex(0)), scalar(Complex(t))};
    return p;
}

struct Sampler {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    explicit Sampler(unsigned long long seed) : rng(seed) {}

    Complex draw() { return Complex(unit(rng), unit(rng)); }

    ComplexVector point(int d, double radius) {
        ComplexVector v(d);
        for (int k = 0; k < d; ++k) v(k) = draw();
        double len = v.norm();
        if (len > 0.0) v *= (radius * std::abs(unit(rng))) / len;
        return v;
    }

    std::vector<BallPoint> nodes(int d, int m, double radius) {
        std::vector<BallPoint> out;
        while (static_cast<int>(out.size()) < m) {
            ComplexVector candidate = point(d, radius);
            bool separated = true;
            for (const auto& existing : out)
                if ((existing.coords() - candidate).norm() < 0.1) separated = false;
            if (separated) out.emplace_back(candidate);
        }
        return out;
    }

    ComplexMatrix matrix(Eigen::Index n) {
        ComplexMatrix m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) = draw();
        return m;
    }
};

}  // namespace

TEST_CASE("pick matrices on fixed instances") {
    PickProblem trivial;
    trivial.d = 1;
    trivial.nodes = {BallPoint(vec1(Complex(0)))};
    trivial.targets = {scalar(Complex(0))};
    ComplexMatrix p = pick_matrix(trivial);
    REQUIRE(p.rows() == 1);
    CHECK(std::abs(p(0, 0) - Complex(1)) <= 1e-15);
    CHECK(feasible(trivial).verdict == Feasibility::strictly_feasible);

    PickProblem sp = schwarz_pick(0.5, 0.3);
    ComplexMatrix q = pick_matrix(sp);
    CHECK(std::abs(q(0, 0) - Complex(1)) <= 1e-15);
    CHECK(std::abs(q(0, 1) - Complex(1)) <= 1e-15);
    CHECK(std::abs(q(1, 0) - Complex(1)) <= 1e-15);
    CHECK(std::abs(q(1, 1) - Complex((1 - 0.09) / (1 - 0.25))) <= 1e-14);

    PickProblem cone;
    cone.d = 1;
    cone.variant = PickVariant::cone;
    cone.nodes = {BallPoint(vec1(Complex(0)))};
    cone.targets = {scalar(Complex(1))};
    CHECK(std::abs(pick_matrix(cone)(0, 0) - Complex(2)) <= 1e-15);
    CHECK(feasible(cone).verdict == Feasibility::strictly_feasible);
}

TEST_CASE("Schwarz-Pick feasibility thresholds") {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(feasible(schwarz_pick(r, r / 2)).verdict == Feasibility::strictly_feasible);
        CHECK(feasible(schwarz_pick(r, r)).verdict == Feasibility::boundary);
        if (r <= 0.4)
            CHECK(feasible(schwarz_pick(r, 2 * r)).verdict == Feasibility::infeasible);
    }
}

TEST_CASE("problem validation") {
    PickProblem p = schwarz_pick(0.5, 0.3);
    p.nodes[1] = BallPoint(vec1(Complex(0)));
    CHECK_THROWS_AS(validate(p), input_error);

    PickProblem sizes = schwarz_pick(0.5, 0.3);
    sizes.targets[1] = ComplexMatrix::Zero(2, 2);
    CHECK_THROWS_AS(validate(sizes), input_error);

    PickProblem boundary = schwarz_pick(0.5, 0.3);
    boundary.nodes[1] = BallPoint(vec1(Complex(1)));
    CHECK_THROWS_AS(validate(boundary), input_error);

    PickProblem empty;
    empty.d = 1;
    CHECK_THROWS_AS(validate(empty), input_error);
}

TEST_CASE("quotient norm closed cases") {
    std::vector<BallPoint> nodes = {BallPoint(vec1(Complex(0.2))),
                                    BallPoint(vec1(Complex(-0.4)))};
    std::vector<ComplexMatrix> zero = {ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
    CHECK(quotient_norm(nodes, zero) == 0.0);

    Sampler sampler(41);
    ComplexMatrix y = sampler.matrix(3);
    std::vector<BallPoint> one = {BallPoint(vec1(Complex(0.37)))};
    CHECK(quotient_norm(one, {y}) == doctest::Approx(opnorm(y)).epsilon(1e-12));
}

TEST_CASE("criterion equivalence on rescaled random instances") {
    Sampler sampler(42);
    std::uniform_real_distribution<double> level(0.2, 1.8);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int d = 1 + trial % 4;
        int m = 1 + trial % 6;
        Eigen::Index n = 1 + trial % 3;
        PickProblem p;
        p.d = d;
        p.nodes = sampler.nodes(d, m, 0.8);
        for (int j = 0; j < m; ++j) p.targets.push_back(sampler.matrix(n));

        double base = quotient_norm(p.nodes, p.targets);
        if (base <= 1e-6) continue;
        double want = level(sampler.rng);
        if (std::abs(want - 1.0) <= 1e-6) continue;
        for (auto& y : p.targets) y *= want / base;

        FeasibilityReport report = feasible(p);
        double norm = quotient_norm(p.nodes, p.targets);
        if (std::abs(norm - 1.0) <= 1e-7) continue;
        CHECK((report.verdict == Feasibility::strictly_feasible) == (norm < 1.0));
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("cone feasibility matches ball feasibility through the Cayley transform") {
    Sampler sampler(43);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 1 + trial % 3;
        int m = 1 + trial % 4;
        Eigen::Index n = 1 + trial % 2;

        PickProblem cone;
        cone.d = d;
        cone.variant = PickVariant::cone;
        cone.nodes = sampler.nodes(d, m, 0.75);

        PickProblem ball;
        ball.d = d;
        ball.nodes = cone.nodes;
        bool usable = true;
        for (int j = 0; j < m; ++j) {
            ComplexMatrix y = sampler.matrix(n);
            cone.targets.push_back(y);
            try {
                ball.targets.push_back(cayley(y));
            } catch (const degeneracy_error&) {
                usable = false;
                break;
            }
        }
        if (!usable) continue;

        CHECK(feasible(cone).verdict == feasible(ball).verdict);
    }
}

TEST_CASE("padding a zero coordinate leaves the pick matrix bit-identical") {
    Sampler sampler(44);
    PickProblem p;
    p.d = 2;
    p.nodes = sampler.nodes(2, 4, 0.8);
    for (int j = 0; j < 4; ++j) p.targets.push_back(sampler.matrix(2));

    PickProblem padded = p;
    padded.d = 3;
    padded.nodes.clear();
    for (const auto& x : p.nodes) {
        ComplexVector wide(3);
        wide << x.coords()(0), x.coords()(1), Complex(0);
        padded.nodes.emplace_back(wide);
    }

    ComplexMatrix a = pick_matrix(p);
    ComplexMatrix b = pick_matrix(padded);
    REQUIRE(a.rows() == b.rows());
    CHECK((a.array() == b.array()).all());
    CHECK(feasible(p).verdict == feasible(padded).verdict);
}

TEST_CASE("unitary rotation of the nodes leaves the pick matrix unchanged") {
    Sampler sampler(45);
    PickProblem p;
    p.d = 2;
    p.nodes = sampler.nodes(2, 3, 0.8);
    for (int j = 0; j < 3; ++j) p.targets.push_back(sampler.matrix(2));

    ComplexMatrix raw = sampler.matrix(2);
    Eigen::HouseholderQR<ComplexMatrix> qr(raw);
    ComplexMatrix u = qr.householderQ();

    PickProblem rotated = p;
    rotated.nodes.clear();
    for (const auto& x : p.nodes) rotated.nodes.emplace_back((u * x.coords()).eval());

    CHECK((pick_matrix(p) - pick_matrix(rotated)).norm() <= 1e-12 * pick_matrix(p).norm());
}

TEST_CASE("transposed feasibility is standard feasibility of transposed targets") {
    Sampler sampler(46);
    for (int trial = 0; trial < 20; ++trial) {
        PickProblem p;
        p.d = 2;
        p.variant = trial % 2 == 0 ? PickVariant::ball : PickVariant::cone;
        p.transposed = true;
        p.nodes = sampler.nodes(2, 3, 0.8);
        for (int j = 0; j < 3; ++j) p.targets.push_back(sampler.matrix(2));

        PickProblem straight = p;
        straight.transposed = false;
        for (auto& y : straight.targets) y = y.transpose().eval();

        CHECK(feasible(p).verdict == feasible(straight).verdict);
    }
}

TEST_CASE("compressed representation on the orthonormal frame") {
    std::vector<BallPoint> nodes = {BallPoint(vec1(Complex(0.1))),
                                    BallPoint(vec1(Complex(0.5, 0.2))),
                                    BallPoint(vec1(Complex(-0.3)))};
    std::vector<Complex> ones = {Complex(1), Complex(1), Complex(1)};
    CHECK((compressed_rep(nodes, ones) - ComplexMatrix::Identity(3, 3)).norm() <= 1e-10);

    double c = 0.7;
    std::vector<BallPoint> pair = {BallPoint(vec1(Complex(0))), BallPoint(vec1(Complex(c)))};
    ComplexMatrix rep = compressed_rep(pair, {Complex(0), Complex(c)});
    CHECK(classify_two_dim(rep).c == doctest::Approx(c).epsilon(1e-9));

    Sampler sampler(47);
    std::vector<Complex> f = {sampler.draw(), sampler.draw(), sampler.draw()};
    std::vector<Complex> g = {sampler.draw(), sampler.draw(), sampler.draw()};
    std::vector<Complex> fg = {f[0] * g[0], f[1] * g[1], f[2] * g[2]};
    ComplexMatrix product = compressed_rep(nodes, f) * compressed_rep(nodes, g);
    CHECK((product - compressed_rep(nodes, fg)).norm() <= 1e-9);
}
