#include "dshift/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dshift {

namespace {

void require_finite(const ComplexMatrix& m, const char* who) {
    if (m.size() == 0)
        throw input_error(std::string(who) + ": empty matrix");
    if (!m.allFinite())
        throw input_error(std::string(who) + ": non-finite entries");
}

void require_square(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << who << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
        throw input_error(os.str());
    }
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

// Singular values of small matrices via the Hermitian eigenproblem of the
// smaller Gram factor; large ones go through a dedicated SVD.
constexpr Eigen::Index kGramCutoff = 64;

}  // namespace

const char* to_string(Definiteness v) {
    switch (v) {
        case Definiteness::strictly_positive: return "strictly_positive";
        case Definiteness::boundary: return "boundary";
        case Definiteness::not_positive: return "not_positive";
    }
    return "unknown";
}

double opnorm(const ComplexMatrix& m) {
    require_finite(m, "opnorm");
    if (std::max(m.rows(), m.cols()) < kGramCutoff) {
        ComplexMatrix gram = (m.rows() >= m.cols()) ? ComplexMatrix(m.adjoint() * m)
                                                    : ComplexMatrix(m * m.adjoint());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
        double top = es.eigenvalues().maxCoeff();
        return std::sqrt(std::max(top, 0.0));
    }
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double sigma_min(const ComplexMatrix& m) {
    require_finite(m, "sigma_min");
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().minCoeff();
}

bool invertible(const ComplexMatrix& m) {
    require_square(m, "invertible");
    double top = opnorm(m);
    if (top == 0.0) return false;
    return sigma_min(m) > tol::invertible * top;
}

RealVector herm_eigenvalues(const ComplexMatrix& m) {
    require_finite(m, "herm_eigenvalues");
    require_square(m, "herm_eigenvalues");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

PosDefReport posdef_invertible(const ComplexMatrix& m, double tol) {
    require_finite(m, "posdef_invertible");
    require_square(m, "posdef_invertible");

    ComplexMatrix herm = hermitize(m);
    ComplexMatrix skew = 0.5 * (m - m.adjoint());

    PosDefReport report;
    report.scale = opnorm(herm);
    report.hermiticity_defect = opnorm(skew);
    report.hermiticity_warning = report.hermiticity_defect > tol::warn_hermitian * report.scale;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = es.eigenvalues()(0);

    double band = tol * std::max(report.scale, 1.0);
    if (report.min_eigenvalue > band)
        report.verdict = Definiteness::strictly_positive;
    else if (std::abs(report.min_eigenvalue) <= band)
        report.verdict = Definiteness::boundary;
    else
        report.verdict = Definiteness::not_positive;
    return report;
}

bool cholesky_strictly_positive(const ComplexMatrix& m, double tol) {
    require_finite(m, "cholesky_strictly_positive");
    require_square(m, "cholesky_strictly_positive");

    ComplexMatrix herm = hermitize(m);
    // Row-sum norm as the scale estimate; for Hermitian matrices it bounds
    // the operator norm from above.
    double scale = herm.cwiseAbs().rowwise().sum().maxCoeff();

    Eigen::LLT<ComplexMatrix> llt(herm);
    if (llt.info() != Eigen::Success) return false;

    ComplexMatrix lower = llt.matrixL();
    double min_pivot = lower.diagonal().real().minCoeff();
    return min_pivot * min_pivot > tol * std::max(scale, 1.0);
}

namespace {

ComplexMatrix herm_power(const ComplexMatrix& b, double exponent, double tol, const char* who) {
    PosDefReport report = posdef_invertible(b, tol);
    if (report.verdict != Definiteness::strictly_positive) {
        std::ostringstream os;
        os << who << ": matrix is not strictly positive definite (min eigenvalue "
           << report.min_eigenvalue << ")";
        throw degeneracy_error(os.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(b));
    RealVector powered = es.eigenvalues().array().pow(exponent);
    return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

ComplexMatrix herm_sqrt(const ComplexMatrix& b, double tol) {
    return herm_power(b, 0.5, tol, "herm_sqrt");
}

ComplexMatrix herm_inv_sqrt(const ComplexMatrix& b, double tol) {
    return herm_power(b, -0.5, tol, "herm_inv_sqrt");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_finite(a, "kron");
    require_finite(b, "kron");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

PosDefReport frame_positivity(const ComplexMatrix& t,
                              const std::vector<ComplexVector>& frame,
                              double tol) {
    require_square(t, "frame_positivity");
    if (frame.empty())
        throw input_error("frame_positivity: empty frame");
    ComplexMatrix s(t.rows(), static_cast<Eigen::Index>(frame.size()));
    for (size_t j = 0; j < frame.size(); ++j) {
        if (frame[j].size() != t.rows())
            throw input_error("frame_positivity: frame vector dimension mismatch");
        s.col(static_cast<Eigen::Index>(j)) = frame[j];
    }
    ComplexMatrix compressed = s.adjoint() * t * s;
    return posdef_invertible(compressed + compressed.adjoint(), tol);
}

}  // namespace dshift
