#include "dshift/recipe.hpp"

#include "dshift/linalg.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace dshift {

const char* to_string(GeneratorPolicy p) {
    switch (p) {
        case GeneratorPolicy::given: return "given";
        case GeneratorPolicy::monomial: return "monomial";
        case GeneratorPolicy::seeded: return "seeded";
    }
    return "unknown";
}

namespace {

// ===== Spec validation =====

std::vector<std::vector<size_t>> group_by_base(const std::vector<JetFunctional>& ls) {
    std::vector<std::vector<size_t>> groups;
    for (size_t j = 0; j < ls.size(); ++j) {
        bool placed = false;
        for (auto& group : groups) {
            const ComplexVector& rep = ls[group.front()].base.coords();
            double dist = (ls[j].base.coords() - rep).norm();
            if (dist <= tol::distinct) {
                if (dist > 0.0)
                    throw input_error(
                        "IdealSpec: functionals based at nearly coincident points; make the "
                        "base points equal or separate them");
                group.push_back(j);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({j});
    }
    return groups;
}

// A group of functionals at one base point must span a full jet space: the
// union of their derivative supports is downward closed, the group has one
// functional per admitted multi-index, and the coefficient matrix over the
// support is invertible.
void validate_jet_closed(const std::vector<JetFunctional>& ls,
                         const std::vector<std::vector<size_t>>& groups) {
    for (const auto& group : groups) {
        std::set<MultiIndex> support;
        for (size_t j : group)
            for (const auto& t : ls[j].terms)
                if (t.coeff != Complex(0)) support.insert(t.alpha);

        for (const auto& alpha : support) {
            MultiIndex beta(alpha.size(), 0);
            while (true) {
                if (!support.count(beta)) {
                    std::ostringstream os;
                    os << "IdealSpec: jet support at a base point is not downward closed "
                          "(missing a lower-order derivative); the functional span does not "
                          "cut out an ideal";
                    throw input_error(os.str());
                }
                size_t k = 0;
                while (k < beta.size() && beta[k] == alpha[k]) beta[k++] = 0;
                if (k == beta.size()) break;
                ++beta[k];
            }
        }

        if (group.size() != support.size()) {
            std::ostringstream os;
            os << "IdealSpec: " << group.size() << " functionals over a jet space of dimension "
               << support.size() << " at one base point; a full jet basis is required";
            throw input_error(os.str());
        }

        std::vector<MultiIndex> order(support.begin(), support.end());
        ComplexMatrix coeffs = ComplexMatrix::Zero(static_cast<Eigen::Index>(group.size()),
                                                   static_cast<Eigen::Index>(order.size()));
        for (size_t row = 0; row < group.size(); ++row)
            for (const auto& t : ls[group[row]].terms) {
                auto it = std::find(order.begin(), order.end(), t.alpha);
                if (it != order.end())
                    coeffs(static_cast<Eigen::Index>(row),
                           static_cast<Eigen::Index>(it - order.begin())) += t.coeff;
            }
        if (!invertible(coeffs))
            throw degeneracy_error(
                "IdealSpec: functionals at a base point are linearly dependent (jet "
                "coefficient matrix is rank deficient)");
    }
}

// ===== Generator selection =====

// Degree-ascending, lexicographically descending within a degree, so the
// coordinates come out as z_1, z_2, ... .
std::vector<MultiIndex> monomials_graded(int d, int max_degree) {
    std::vector<MultiIndex> out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        JetTable level(d, deg);
        std::vector<MultiIndex> slice;
        for (int i = 0; i < level.size(); ++i)
            if (mi_degree(level.at(i)) == deg) slice.push_back(level.at(i));
        std::sort(slice.begin(), slice.end(), std::greater<MultiIndex>());
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

ComplexMatrix eval_matrix(const std::vector<JetFunctional>& ls,
                          const std::vector<Polynomial>& gens) {
    const auto r = static_cast<Eigen::Index>(ls.size());
    ComplexMatrix e(r, static_cast<Eigen::Index>(gens.size()));
    for (Eigen::Index k = 0; k < e.cols(); ++k) {
        KernelVector g = kv_from_polynomial(gens[static_cast<size_t>(k)]);
        for (Eigen::Index i = 0; i < r; ++i)
            e(i, k) = apply_functional(ls[static_cast<size_t>(i)], g);
    }
    return e;
}

struct GeneratorChoice {
    std::vector<Polynomial> gens;
    GeneratorPolicy policy = GeneratorPolicy::monomial;
    std::uint64_t seed = 0;
};

constexpr std::uint64_t kGeneratorSeed = 0x5d1f7a2e9c3b4416ULL;

GeneratorChoice choose_generators(const std::vector<JetFunctional>& ls, int d,
                                  const std::vector<Polynomial>& given) {
    const size_t r = ls.size();

    if (!given.empty()) {
        if (given.size() != r)
            throw input_error("IdealSpec: the number of generators must match the number of "
                              "functionals");
        for (const auto& g : given)
            if (g.dim != d) throw input_error("IdealSpec: generator dimension mismatch");
        if (!invertible(eval_matrix(ls, given)))
            throw input_error(
                "IdealSpec: generator images are dependent modulo the ideal (evaluation "
                "matrix singular)");
        return {given, GeneratorPolicy::given, 0};
    }

    int max_order = 0;
    for (const auto& l : ls) max_order = std::max(max_order, l.order());

    int cap = 0;
    std::vector<MultiIndex> pool = monomials_graded(d, cap);
    while (pool.size() < r) pool = monomials_graded(d, ++cap);

    auto to_polys = [d](const std::vector<MultiIndex>& alphas) {
        std::vector<Polynomial> out;
        out.reserve(alphas.size());
        for (const auto& alpha : alphas) out.push_back(poly_monomial(d, alpha));
        return out;
    };

    std::vector<Polynomial> first_r = to_polys({pool.begin(), pool.begin() + static_cast<long>(r)});
    if (invertible(eval_matrix(ls, first_r)))
        return {first_r, GeneratorPolicy::monomial, 0};

    // Degenerate geometry (nodes on a subspace, say): widen the monomial
    // pool until it pairs with the functionals at full rank, then recombine
    // randomly with a fixed seed, keeping the constant as first generator.
    const int cap_limit = max_order + static_cast<int>(r) + 4;
    while (true) {
        ComplexMatrix e = eval_matrix(ls, to_polys(pool));
        Eigen::ColPivHouseholderQR<ComplexMatrix> qr(e);
        qr.setThreshold(1e-10);
        if (static_cast<size_t>(qr.rank()) >= r) break;
        if (cap > cap_limit)
            throw degeneracy_error("IdealSpec: functionals do not pair to full rank with "
                                   "polynomials of bounded degree");
        pool = monomials_graded(d, ++cap);
    }

    std::vector<Polynomial> pool_polys = to_polys(pool);
    std::mt19937_64 rng(kGeneratorSeed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Polynomial> gens;
        gens.push_back(poly_one(d));
        for (size_t k = 1; k < r; ++k) {
            Polynomial g{d, {}};
            for (const auto& p : pool_polys)
                g = poly_add(g, poly_scale(p, Complex(unit(rng), unit(rng))));
            gens.push_back(g);
        }
        if (invertible(eval_matrix(ls, gens)))
            return {gens, GeneratorPolicy::seeded, kGeneratorSeed};
    }
    throw degeneracy_error("IdealSpec: failed to find a generator basis (seeded fallback "
                           "exhausted)");
}

// ===== Report assembly =====

Feasibility from_definiteness(Definiteness v) {
    switch (v) {
        case Definiteness::strictly_positive: return Feasibility::strictly_feasible;
        case Definiteness::boundary: return Feasibility::boundary;
        case Definiteness::not_positive: return Feasibility::infeasible;
    }
    return Feasibility::infeasible;
}

int rank_of(Feasibility v) {
    switch (v) {
        case Feasibility::infeasible: return 0;
        case Feasibility::boundary: return 1;
        case Feasibility::strictly_feasible: return 2;
    }
    return 0;
}

void fold_verdict(FeasibilityReport& report, Feasibility v, double margin) {
    if (rank_of(v) < rank_of(report.verdict)) report.verdict = v;
    report.margin = std::min(report.margin, margin);
}

void gram_diagnostics(const ComplexMatrix& b, FeasibilityReport& report) {
    if (b.size() == 0) return;
    RealVector eigs = herm_eigenvalues(b);
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

FeasibilityReport report_from(const ComplexMatrix& tested, const PosDefReport& pd,
                              const QuotientModel& model) {
    FeasibilityReport report;
    report.pick_matrix = tested;
    report.verdict = from_definiteness(pd.verdict);
    report.min_eigenvalue = pd.min_eigenvalue;
    report.scale = pd.scale;
    report.margin = pd.scale > 0.0 ? pd.min_eigenvalue / pd.scale : 0.0;
    report.hermiticity_warning = pd.hermiticity_warning;
    gram_diagnostics(model.B, report);
    return report;
}

void require_interior_basis(const QuotientModel& model, const char* who) {
    if (model.r() == 0) {
        std::ostringstream os;
        os << who << ": model has no interior basis; a boundary-only quotient carries just "
              "the scalar summand structure";
        throw input_error(os.str());
    }
}

void require_element(const QuotientModel& model, const QuotientElement& f, const char* who) {
    if (f.coefficients.size() != model.generators.size())
        throw input_error(std::string(who) + ": one coefficient block per generator required");
    Eigen::Index n = f.n();
    if (n == 0) throw input_error(std::string(who) + ": empty coefficient blocks");
    for (const auto& block : f.coefficients)
        if (block.rows() != n || block.cols() != n || !block.allFinite())
            throw input_error(std::string(who) + ": coefficient blocks must be finite square "
                              "matrices of a common size");
}

}  // namespace

BoundarySplit boundary_split(const IdealSpec& spec) {
    if (spec.d < 1) throw input_error("IdealSpec: d must be a positive integer");

    BoundarySplit out;
    out.interior = spec;
    out.interior.boundary_nodes.clear();

    for (const auto& node : spec.boundary_nodes) {
        if (node.dim() != spec.d)
            throw input_error("IdealSpec: boundary node dimension mismatch");
        if (node.interior())
            throw input_error("IdealSpec: listed boundary node is interior; encode interior "
                              "points as evaluation functionals");
        out.scalar_nodes.push_back(node);
    }
    for (size_t i = 0; i < out.scalar_nodes.size(); ++i)
        for (size_t j = i + 1; j < out.scalar_nodes.size(); ++j)
            if ((out.scalar_nodes[i].coords() - out.scalar_nodes[j].coords()).norm() <=
                tol::distinct)
                throw input_error("IdealSpec: coincident boundary nodes");
    for (const auto& node : out.scalar_nodes)
        for (const auto& l : spec.functionals)
            if ((node.coords() - l.base.coords()).norm() <= tol::distinct)
                throw input_error("IdealSpec: boundary node coincides with a functional base");
    return out;
}

QuotientModel build_model(const IdealSpec& spec) {
    BoundarySplit split = boundary_split(spec);
    const auto& ls = split.interior.functionals;
    if (ls.empty() && split.scalar_nodes.empty())
        throw input_error("IdealSpec: no functionals and no boundary nodes");

    QuotientModel model;
    model.d = spec.d;
    model.functionals = ls;
    model.boundary_nodes = split.scalar_nodes;
    model.boundary_count = static_cast<int>(split.scalar_nodes.size());

    for (const auto& l : ls)
        if (l.base.dim() != spec.d)
            throw input_error("IdealSpec: functional base dimension differs from d");

    if (ls.empty()) {
        model.B = ComplexMatrix(0, 0);
        model.B_sqrt = ComplexMatrix(0, 0);
        model.B_inv_sqrt = ComplexMatrix(0, 0);
        return model;
    }

    validate_jet_closed(ls, group_by_base(ls));

    GeneratorChoice choice = choose_generators(ls, spec.d, split.interior.generators);
    model.generators = std::move(choice.gens);
    model.generator_policy = choice.policy;
    model.generator_seed = choice.seed;

    const int r = model.r();
    model.lambda.reserve(static_cast<size_t>(r));
    for (const auto& l : ls) model.lambda.push_back(fantappie_vector(l));

    ComplexMatrix b(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b(i, j) = apply_functional(ls[static_cast<size_t>(i)],
                                       model.lambda[static_cast<size_t>(j)]);
    double defect = opnorm(ComplexMatrix(0.5 * (b - b.adjoint())));
    if (defect > tol::warn_hermitian * std::max(opnorm(b), 1.0))
        throw degeneracy_error("build_model: frame Gram matrix is far from Hermitian");
    model.B = 0.5 * (b + b.adjoint());

    model.B_sqrt = herm_sqrt(model.B);
    model.B_inv_sqrt = herm_inv_sqrt(model.B);

    model.Gamma.reserve(static_cast<size_t>(r));
    model.R.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        ComplexMatrix gamma(r, r);
        for (int j = 0; j < r; ++j) {
            KernelVector glj = poly_mul(model.generators[static_cast<size_t>(k)],
                                        model.lambda[static_cast<size_t>(j)]);
            for (int i = 0; i < r; ++i)
                gamma(i, j) = apply_functional(ls[static_cast<size_t>(i)], glj);
        }
        model.Gamma.push_back(gamma);
        model.R.push_back(model.B_inv_sqrt * gamma * model.B_inv_sqrt);
    }
    return model;
}

std::vector<Complex> reduce_coordinates(const QuotientModel& model, const Polynomial& f) {
    require_interior_basis(model, "reduce_coordinates");
    if (f.dim != model.d) throw input_error("reduce_coordinates: dimension mismatch");
    ComplexMatrix e = eval_matrix(model.functionals, model.generators);
    ComplexVector rhs(model.r());
    KernelVector fk = kv_from_polynomial(f);
    for (int i = 0; i < model.r(); ++i)
        rhs(i) = apply_functional(model.functionals[static_cast<size_t>(i)], fk);
    ComplexVector sol = e.partialPivLu().solve(rhs);
    return {sol.data(), sol.data() + sol.size()};
}

QuotientElement element_from_polynomial(const QuotientModel& model, const Polynomial& f,
                                        Eigen::Index n) {
    std::vector<Complex> coords = reduce_coordinates(model, f);
    QuotientElement out;
    out.coefficients.reserve(coords.size());
    for (Complex c : coords)
        out.coefficients.push_back(c * ComplexMatrix::Identity(n, n));
    return out;
}

ComplexMatrix element_pairing(const QuotientModel& model, const QuotientElement& f) {
    require_interior_basis(model, "element_pairing");
    require_element(model, f, "element_pairing");
    const Eigen::Index n = f.n();
    ComplexMatrix m = ComplexMatrix::Zero(model.r() * n, model.r() * n);
    for (size_t k = 0; k < f.coefficients.size(); ++k)
        m += kron(model.Gamma[k], f.coefficients[k]);
    return m;
}

std::vector<ComplexMatrix> boundary_values(const QuotientModel& model,
                                           const QuotientElement& f) {
    require_interior_basis(model, "boundary_values");
    require_element(model, f, "boundary_values");
    const Eigen::Index n = f.n();
    std::vector<ComplexMatrix> out;
    out.reserve(model.boundary_nodes.size());
    for (const auto& node : model.boundary_nodes) {
        ComplexMatrix v = ComplexMatrix::Zero(n, n);
        for (size_t k = 0; k < f.coefficients.size(); ++k)
            v += model.generators[k].eval(node.coords()) * f.coefficients[k];
        out.push_back(v);
    }
    return out;
}

FeasibilityReport membership_ball(const QuotientModel& model, const QuotientElement& f,
                                  double tol) {
    ComplexMatrix m = element_pairing(model, f);
    const Eigen::Index n = f.n();
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix b_inv = model.B_inv_sqrt * model.B_inv_sqrt;
    ComplexMatrix tested = kron(model.B, id) - m * kron(b_inv, id) * m.adjoint();

    FeasibilityReport report = report_from(tested, posdef_invertible(tested, tol), model);
    for (const auto& v : boundary_values(model, f)) {
        double s = opnorm(v);
        double band = tol * std::max(s, 1.0);
        Feasibility verdict = s < 1.0 - band ? Feasibility::strictly_feasible
                             : std::abs(s - 1.0) <= band ? Feasibility::boundary
                                                         : Feasibility::infeasible;
        fold_verdict(report, verdict, 1.0 - s);
    }
    return report;
}

FeasibilityReport membership_cone(const QuotientModel& model, const QuotientElement& f,
                                  double tol) {
    ComplexMatrix m = element_pairing(model, f);
    ComplexMatrix tested = 0.5 * (m + m.adjoint());

    FeasibilityReport report = report_from(tested, posdef_invertible(tested, tol), model);
    for (const auto& v : boundary_values(model, f)) {
        PosDefReport pd = posdef_invertible(v, tol);
        fold_verdict(report, from_definiteness(pd.verdict),
                     pd.scale > 0.0 ? pd.min_eigenvalue / pd.scale : 0.0);
    }
    return report;
}

ComplexMatrix represent(const QuotientModel& model, const QuotientElement& f) {
    require_interior_basis(model, "represent");
    require_element(model, f, "represent");
    const Eigen::Index n = f.n();
    const Eigen::Index r = model.r();
    const Eigen::Index total = r * n + model.boundary_count * n;

    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    for (size_t k = 0; k < f.coefficients.size(); ++k)
        out.topLeftCorner(r * n, r * n) += kron(f.coefficients[k], model.R[k]);

    std::vector<ComplexMatrix> bvals = boundary_values(model, f);
    for (size_t b = 0; b < bvals.size(); ++b) {
        Eigen::Index off = r * n + static_cast<Eigen::Index>(b) * n;
        out.block(off, off, n, n) = bvals[b];
    }
    return out;
}

ComplexMatrix action_matrix(const QuotientModel& model, const Polynomial& g) {
    require_interior_basis(model, "action_matrix");
    if (g.dim != model.d) throw input_error("action_matrix: dimension mismatch");
    const int r = model.r();
    ComplexMatrix gamma(r, r);
    for (int j = 0; j < r; ++j) {
        KernelVector glj = poly_mul(g, model.lambda[static_cast<size_t>(j)]);
        for (int i = 0; i < r; ++i)
            gamma(i, j) = apply_functional(model.functionals[static_cast<size_t>(i)], glj);
    }
    return model.B_inv_sqrt * gamma * model.B_inv_sqrt;
}

}  // namespace dshift
