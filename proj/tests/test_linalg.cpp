#include <doctest.h>

#include "dshift/linalg.hpp"

#include <Eigen/SVD>

#include <random>
#include <string>

using namespace dshift;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(unit(rng), unit(rng));
    return m;
}

double svd_opnorm(const ComplexMatrix& m) {
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

}  // namespace

TEST_CASE("hermitian eigenvalues of a fixed 2x2") {
    ComplexMatrix m(2, 2);
    m << Complex(2), Complex(1), Complex(1), Complex(2);
    RealVector eigs = herm_eigenvalues(m);
    CHECK(eigs(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigs(1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("operator norm on fixed matrices") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(2);
    CHECK(opnorm(m) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(opnorm(ComplexMatrix::Zero(3, 3)) == 0.0);
    CHECK(opnorm(ComplexMatrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("operator norm matches a dedicated SVD across the route cutoff") {
    std::mt19937_64 rng(11);
    for (Eigen::Index n : {3, 20, 63, 70}) {
        ComplexMatrix m = random_matrix(rng, n, n - 1);
        double reference = svd_opnorm(m);
        CHECK(opnorm(m) == doctest::Approx(reference).epsilon(1e-10));
    }
}

TEST_CASE("operator norm is submultiplicative and multiplicative on tensors") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix a = random_matrix(rng, 3, 3);
        ComplexMatrix b = random_matrix(rng, 4, 4);
        CHECK(opnorm(a * b.topLeftCorner(3, 3)) <=
              opnorm(a) * opnorm(b.topLeftCorner(3, 3)) + 1e-10);
        CHECK(opnorm(kron(a, b)) == doctest::Approx(opnorm(a) * opnorm(b)).epsilon(1e-10));
    }
}

TEST_CASE("kron satisfies the mixed product identity") {
    std::mt19937_64 rng(13);
    ComplexMatrix a = random_matrix(rng, 2, 3);
    ComplexMatrix b = random_matrix(rng, 3, 2);
    ComplexMatrix c = random_matrix(rng, 3, 2);
    ComplexMatrix d = random_matrix(rng, 2, 4);
    ComplexMatrix lhs = kron(a, b) * kron(c, d);
    ComplexMatrix rhs = kron((a * c).eval(), (b * d).eval());
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
}

TEST_CASE("sigma_min and the invertibility threshold") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = Complex(3);
    m(1, 1) = Complex(1e-14);
    CHECK(sigma_min(m) == doctest::Approx(1e-14).epsilon(1e-10));
    CHECK_FALSE(invertible(m));
    m(1, 1) = Complex(1e-3);
    CHECK(invertible(m));
    CHECK_FALSE(invertible(ComplexMatrix::Zero(2, 2)));
}

TEST_CASE("posdef verdicts on fixed instances") {
    CHECK(posdef_invertible(ComplexMatrix::Identity(3, 3)).verdict ==
          Definiteness::strictly_positive);
    CHECK(posdef_invertible(ComplexMatrix::Zero(3, 3)).verdict == Definiteness::boundary);
    CHECK(posdef_invertible(-ComplexMatrix::Identity(3, 3)).verdict ==
          Definiteness::not_positive);

    ComplexMatrix near = ComplexMatrix::Identity(2, 2);
    near(1, 1) = Complex(1e-12);
    CHECK(posdef_invertible(near).verdict == Definiteness::boundary);
}

TEST_CASE("posdef eigensolver route agrees with the Cholesky route off the band") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 4;
        ComplexMatrix a = random_matrix(rng, n, n);
        ComplexMatrix gram = a.adjoint() * a + ComplexMatrix::Identity(n, n);
        bool eig_route = posdef_invertible(gram).verdict == Definiteness::strictly_positive;
        CHECK(eig_route);
        CHECK(cholesky_strictly_positive(gram) == eig_route);

        ComplexMatrix shifted =
            gram - (herm_eigenvalues(gram).maxCoeff() + 1.0) * ComplexMatrix::Identity(n, n);
        CHECK(posdef_invertible(shifted).verdict == Definiteness::not_positive);
        CHECK_FALSE(cholesky_strictly_positive(shifted));
    }
}

TEST_CASE("hermitian square roots") {
    ComplexMatrix b = ComplexMatrix::Zero(2, 2);
    b(0, 0) = Complex(4);
    b(1, 1) = Complex(9);
    ComplexMatrix root = herm_sqrt(b);
    CHECK(std::abs(root(0, 0) - Complex(2)) <= 1e-12);
    CHECK(std::abs(root(1, 1) - Complex(3)) <= 1e-12);
    CHECK((herm_inv_sqrt(b) * root - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);

    std::mt19937_64 rng(15);
    ComplexMatrix a = random_matrix(rng, 4, 4);
    ComplexMatrix gram = a.adjoint() * a + 0.1 * ComplexMatrix::Identity(4, 4);
    ComplexMatrix s = herm_sqrt(gram);
    CHECK((s * s - gram).norm() <= 1e-10 * gram.norm());
}

TEST_CASE("herm_sqrt names the offending eigenvalue") {
    ComplexMatrix b = ComplexMatrix::Identity(2, 2);
    b(1, 1) = Complex(-0.25);
    try {
        herm_sqrt(b);
        FAIL("expected a degeneracy error");
    } catch (const degeneracy_error& e) {
        std::string message = e.what();
        CHECK(message.find("-0.25") != std::string::npos);
    }
}

TEST_CASE("frame positivity is invariant under frame recombination") {
    std::mt19937_64 rng(16);
    ComplexMatrix a = random_matrix(rng, 3, 3);
    ComplexMatrix t = a.adjoint() * a + 0.5 * ComplexMatrix::Identity(3, 3);

    std::vector<ComplexVector> frame;
    for (int k = 0; k < 2; ++k) frame.push_back(random_matrix(rng, 3, 1).col(0));
    PosDefReport base = frame_positivity(t, frame);
    CHECK(base.verdict == Definiteness::strictly_positive);

    // Recombine: well-conditioned change of frame, same span.
    std::vector<ComplexVector> mixed = {frame[0] + frame[1], frame[0] - frame[1]};
    CHECK(frame_positivity(t, mixed).verdict == base.verdict);

    PosDefReport negative = frame_positivity((-t).eval(), frame);
    CHECK(negative.verdict == Definiteness::not_positive);
    std::vector<ComplexVector> scaled = {2.0 * frame[0], 0.5 * frame[1]};
    CHECK(frame_positivity((-t).eval(), scaled).verdict == negative.verdict);
}
