#include "dshift/pick.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dshift {

void validate(const PickProblem& problem) {
    if (problem.d < 1)
        throw input_error("PickProblem: d must be a positive integer");
    if (problem.nodes.empty())
        throw input_error("PickProblem: at least one node required");
    if (problem.targets.size() != problem.nodes.size())
        throw input_error("PickProblem: one target per node required");

    for (size_t j = 0; j < problem.nodes.size(); ++j) {
        if (problem.nodes[j].dim() != problem.d)
            throw input_error("PickProblem: node dimension differs from d");
        if (!problem.nodes[j].interior()) {
            std::ostringstream os;
            os << "PickProblem: node " << j
               << " lies on the boundary; boundary nodes are handled by the ideal machinery";
            throw input_error(os.str());
        }
    }
    for (size_t i = 0; i < problem.nodes.size(); ++i)
        for (size_t j = i + 1; j < problem.nodes.size(); ++j)
            if ((problem.nodes[i].coords() - problem.nodes[j].coords()).norm() <= tol::distinct)
                throw input_error("PickProblem: coincident nodes");

    const Eigen::Index n = problem.targets.front().rows();
    for (const auto& y : problem.targets) {
        if (y.rows() != y.cols() || y.rows() != n)
            throw input_error("PickProblem: targets must be square of a common size");
        if (!y.allFinite())
            throw input_error("PickProblem: non-finite target entries");
    }
}

const char* to_string(Feasibility v) {
    switch (v) {
        case Feasibility::strictly_feasible: return "strictly_feasible";
        case Feasibility::boundary: return "boundary";
        case Feasibility::infeasible: return "infeasible";
    }
    return "unknown";
}

ComplexMatrix pick_matrix(const PickProblem& problem) {
    validate(problem);
    const int m = static_cast<int>(problem.nodes.size());
    const Eigen::Index n = problem.targets.front().rows();
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix out(m * n, m * n);

    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            // <x_i, x_j>, first slot linear.
            Complex pairing = problem.nodes[static_cast<size_t>(j)].coords().dot(
                problem.nodes[static_cast<size_t>(i)].coords());
            Complex k = Complex(1) / (Complex(1) - pairing);
            if (problem.transposed) k = std::conj(k);

            const ComplexMatrix& yi = problem.targets[static_cast<size_t>(i)];
            const ComplexMatrix& yj = problem.targets[static_cast<size_t>(j)];
            ComplexMatrix numer;
            if (problem.variant == PickVariant::ball)
                numer = problem.transposed ? ComplexMatrix(id - yi.adjoint() * yj)
                                           : ComplexMatrix(id - yi * yj.adjoint());
            else
                numer = problem.transposed ? ComplexMatrix(yi.adjoint() + yj)
                                           : ComplexMatrix(yi + yj.adjoint());

            out.block(i * n, j * n, n, n) = k * numer;
            if (j > i)
                out.block(j * n, i * n, n, n) = (k * numer).adjoint();
        }
    }
    return out;
}

namespace {

// Condition number of the node Gram matrix, plus the ill-conditioning flag.
void gram_diagnostics(const std::vector<BallPoint>& nodes, FeasibilityReport& report) {
    RealVector eigs = herm_eigenvalues(gram(nodes));
    double lo = eigs(0);
    double hi = eigs(eigs.size() - 1);
    if (lo <= 0.0) {
        report.gram_condition = std::numeric_limits<double>::infinity();
        report.ill_conditioned = true;
        return;
    }
    report.gram_condition = hi / lo;
    report.ill_conditioned = report.gram_condition > tol::gram_condition;
}

}  // namespace

FeasibilityReport feasible(const PickProblem& problem, double tol) {
    FeasibilityReport report;
    report.pick_matrix = pick_matrix(problem);
    PosDefReport pd = posdef_invertible(report.pick_matrix, tol);

    switch (pd.verdict) {
        case Definiteness::strictly_positive: report.verdict = Feasibility::strictly_feasible; break;
        case Definiteness::boundary: report.verdict = Feasibility::boundary; break;
        case Definiteness::not_positive: report.verdict = Feasibility::infeasible; break;
    }
    report.min_eigenvalue = pd.min_eigenvalue;
    report.scale = pd.scale;
    report.margin = pd.scale > 0.0 ? pd.min_eigenvalue / pd.scale : 0.0;
    report.hermiticity_warning = pd.hermiticity_warning;
    gram_diagnostics(problem.nodes, report);
    return report;
}

double quotient_norm(const std::vector<BallPoint>& nodes,
                     const std::vector<ComplexMatrix>& targets) {
    PickProblem shell{nodes.empty() ? 0 : nodes.front().dim(), nodes, targets,
                      PickVariant::ball, false};
    validate(shell);
    const int m = static_cast<int>(nodes.size());
    const Eigen::Index n = targets.front().rows();

    ComplexMatrix b = gram(nodes);
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix diag = ComplexMatrix::Zero(m * n, m * n);
    for (int j = 0; j < m; ++j)
        diag.block(j * n, j * n, n, n) = targets[static_cast<size_t>(j)];

    // (B (x) I)^{1/2} = B^{1/2} (x) I.
    ComplexMatrix left = kron(herm_inv_sqrt(b), id);
    ComplexMatrix right = kron(herm_sqrt(b), id);
    return opnorm(left * diag * right);
}

ComplexMatrix compressed_rep(const std::vector<BallPoint>& nodes,
                             const std::vector<Complex>& values) {
    if (nodes.size() != values.size())
        throw input_error("compressed_rep: one value per node required");
    ComplexMatrix b = gram(nodes);
    ComplexVector v(static_cast<Eigen::Index>(values.size()));
    for (size_t j = 0; j < values.size(); ++j) v(static_cast<Eigen::Index>(j)) = values[j];
    return herm_inv_sqrt(b) * v.asDiagonal() * herm_sqrt(b);
}

}  // namespace dshift
