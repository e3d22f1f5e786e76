#include "dshift/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dshift {

namespace {

[[noreturn]] void bad(const std::string& what) { throw input_error("JSON schema: " + what); }

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    bad("complex values are numbers or [re, im] pairs");
}

Json vector_to_json(const ComplexVector& v) {
    Json out = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
    return out;
}

ComplexVector vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("vector must be a nonempty array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (size_t k = 0; k < j.size(); ++k)
        v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
    return v;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) bad("matrix rows must be nonempty arrays");
        if (cols == 0) cols = row.size();
        if (row.size() != cols) bad("matrix rows have unequal lengths");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < j.size(); ++i)
        for (size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                complex_from_json(j[i][k]);
    return m;
}

namespace {

MultiIndex alpha_from_json(const Json& j, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        bad("alpha must be an integer array of length d");
    MultiIndex alpha;
    for (const auto& entry : j) {
        if (!entry.is_number_integer() || entry.get<int>() < 0)
            bad("alpha entries must be nonnegative integers");
        alpha.push_back(entry.get<int>());
    }
    return alpha;
}

Json alpha_to_json(const MultiIndex& alpha) {
    Json out = Json::array();
    for (int a : alpha) out.push_back(a);
    return out;
}

std::vector<Monomial> terms_from_json(const Json& j, int d) {
    if (!j.is_array() || j.empty()) bad("term list must be a nonempty array");
    std::vector<Monomial> terms;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("alpha") || !term.contains("coeff"))
            bad("terms must be objects with alpha and coeff");
        terms.push_back({alpha_from_json(term["alpha"], d), complex_from_json(term["coeff"])});
    }
    return terms;
}

Json terms_to_json(const std::vector<Monomial>& terms) {
    Json out = Json::array();
    for (const auto& t : terms)
        out.push_back({{"alpha", alpha_to_json(t.alpha)}, {"coeff", complex_to_json(t.coeff)}});
    return out;
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) { return terms_to_json(p.terms); }

Polynomial polynomial_from_json(const Json& j, int d) {
    return Polynomial{d, terms_from_json(j, d)};
}

Json functional_to_json(const JetFunctional& l) {
    return {{"base", vector_to_json(l.base.coords())}, {"terms", terms_to_json(l.terms)}};
}

JetFunctional functional_from_json(const Json& j, int d) {
    if (!j.is_object() || !j.contains("base") || !j.contains("terms"))
        bad("functionals are objects with base and terms");
    ComplexVector base = vector_from_json(j["base"]);
    if (static_cast<int>(base.size()) != d) bad("functional base has wrong dimension");
    return make_functional(BallPoint(base), terms_from_json(j["terms"], d));
}

Json pick_problem_to_json(const PickProblem& p) {
    Json nodes = Json::array();
    for (const auto& x : p.nodes) nodes.push_back(vector_to_json(x.coords()));
    Json targets = Json::array();
    for (const auto& y : p.targets) targets.push_back(matrix_to_json(y));
    return {{"d", p.d},
            {"nodes", nodes},
            {"targets", targets},
            {"variant", p.variant == PickVariant::ball ? "ball" : "cone"},
            {"transposed", p.transposed}};
}

PickProblem pick_problem_from_json(const Json& j) {
    if (!j.is_object()) bad("pick problem must be an object");
    for (const char* field : {"d", "nodes", "targets"})
        if (!j.contains(field)) bad(std::string("pick problem: missing field ") + field);
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
        bad("pick problem: d must be a positive integer");

    PickProblem p;
    p.d = j["d"].get<int>();
    if (!j["nodes"].is_array() || j["nodes"].empty()) bad("pick problem: nodes must be nonempty");
    for (const auto& node : j["nodes"]) p.nodes.emplace_back(vector_from_json(node));
    if (!j["targets"].is_array()) bad("pick problem: targets must be an array");
    for (const auto& target : j["targets"]) p.targets.push_back(matrix_from_json(target));

    std::string variant = j.value("variant", std::string("ball"));
    if (variant == "ball")
        p.variant = PickVariant::ball;
    else if (variant == "cone")
        p.variant = PickVariant::cone;
    else
        bad("pick problem: variant must be \"ball\" or \"cone\"");
    if (j.contains("transposed") && !j["transposed"].is_boolean())
        bad("pick problem: transposed must be a boolean");
    p.transposed = j.value("transposed", false);
    validate(p);
    return p;
}

Json ideal_spec_to_json(const IdealSpec& spec) {
    Json functionals = Json::array();
    for (const auto& l : spec.functionals) functionals.push_back(functional_to_json(l));
    Json generators = Json::array();
    for (const auto& g : spec.generators) generators.push_back(polynomial_to_json(g));
    Json boundary = Json::array();
    for (const auto& node : spec.boundary_nodes) boundary.push_back(vector_to_json(node.coords()));
    return {{"d", spec.d},
            {"functionals", functionals},
            {"generators", generators},
            {"boundary_nodes", boundary}};
}

IdealSpec ideal_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("functionals"))
        bad("ideal spec must be an object with d and functionals");
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
        bad("ideal spec: d must be a positive integer");

    IdealSpec spec;
    spec.d = j["d"].get<int>();
    if (!j["functionals"].is_array()) bad("ideal spec: functionals must be an array");
    for (const auto& l : j["functionals"])
        spec.functionals.push_back(functional_from_json(l, spec.d));
    if (j.contains("generators"))
        for (const auto& g : j["generators"])
            spec.generators.push_back(polynomial_from_json(g, spec.d));
    if (j.contains("boundary_nodes"))
        for (const auto& node : j["boundary_nodes"])
            spec.boundary_nodes.emplace_back(vector_from_json(node));
    return spec;
}

Json finite_or_sentinel(double value) {
    if (std::isfinite(value)) return value;
    if (std::isnan(value)) return "nan";
    return value > 0 ? "inf" : "-inf";
}

Json feasibility_to_json(const FeasibilityReport& report) {
    return {{"verdict", to_string(report.verdict)},
            {"min_eigenvalue", report.min_eigenvalue},
            {"margin", report.margin},
            {"scale", report.scale},
            {"gram_condition", finite_or_sentinel(report.gram_condition)},
            {"ill_conditioned", report.ill_conditioned},
            {"hermiticity_warning", report.hermiticity_warning},
            {"pick_matrix", matrix_to_json(report.pick_matrix)}};
}

namespace {

void dump_rec(const Json& j, std::ostringstream& os, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent * depth), ' ');
    const std::string pad_in(static_cast<size_t>(indent * (depth + 1)), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in << Json(key).dump() << ": ";
                dump_rec(value, os, indent, depth + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            for (size_t k = 0; k < j.size(); ++k) {
                if (k) os << ",\n";
                os << pad_in;
                dump_rec(j[k], os, indent, depth + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                os << Json(v > 0 ? "inf" : (v < 0 ? "-inf" : "nan")).dump();
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << buf;
            return;
        }
        default:
            os << j.dump();
            return;
    }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
    std::ostringstream os;
    dump_rec(j, os, indent, 0);
    return os.str();
}

}  // namespace dshift
