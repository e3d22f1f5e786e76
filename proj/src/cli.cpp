#include "dshift/cli.hpp"

#include "dshift/counterexamples.hpp"
#include "dshift/geometry.hpp"
#include "dshift/json_io.hpp"
#include "dshift/linalg.hpp"
#include "dshift/twodim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace dshift::cli {

namespace {

// ===== Input helpers =====

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
}

// File-based subcommands accept either a full problem file, an object with
// "kind" and "payload" entries and an optional "tol", or the bare payload.
struct FilePayload {
    Json payload;
    std::optional<double> tol;
};

FilePayload unwrap_problem_file(const Json& file, const std::string& expected_kind) {
    if (file.is_object() && file.contains("kind") && file.contains("payload")) {
        if (!file["kind"].is_string())
            throw input_error("JSON schema: problem file kind must be a string");
        std::string kind = file["kind"].get<std::string>();
        if (kind != expected_kind)
            throw input_error("problem file kind \"" + kind +
                              "\" does not match this subcommand (expected \"" + expected_kind +
                              "\")");
        FilePayload out{file["payload"], std::nullopt};
        if (file.contains("tol")) out.tol = file["tol"].get<double>();
        return out;
    }
    return {file, std::nullopt};
}

// Accepts "0.5", "-0.5i", "i", "0.1+0.2i".
Complex parse_complex(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.empty()) throw input_error("empty complex literal");

    size_t split = std::string::npos;
    for (size_t k = 1; k < text.size(); ++k) {
        char c = text[k];
        if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') split = k;
    }

    auto to_double = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw input_error("bad numeric literal: " + s);
        return v;
    };

    try {
        if (text.back() == 'i') {
            std::string body = text.substr(0, text.size() - 1);
            if (split == std::string::npos) return Complex(0.0, to_double(body));
            return Complex(to_double(body.substr(0, split)), to_double(body.substr(split)));
        }
        if (split != std::string::npos && text.find('i') != std::string::npos)
            throw input_error("malformed complex literal: " + text);
        return Complex(to_double(text), 0.0);
    } catch (const std::exception&) {
        throw input_error("cannot parse complex literal: " + text);
    }
}

// Comma-separated components.
ComplexVector parse_point(const std::string& text, int d) {
    std::vector<Complex> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) parts.push_back(parse_complex(piece));
    if (static_cast<int>(parts.size()) != d) {
        std::ostringstream os;
        os << "expected " << d << " comma-separated components, got " << parts.size();
        throw input_error(os.str());
    }
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) v(k) = parts[static_cast<size_t>(k)];
    return v;
}

std::string format_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_point(const ComplexVector& v) {
    std::ostringstream os;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (k) os << ';';
        os << format_real(v(k).real());
        if (v(k).imag() != 0.0) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%+.17gi", v(k).imag());
            os << buf;
        }
    }
    return os.str();
}

// ===== Report rendering =====

void emit_report(const Json& report, bool as_json, std::ostream& out) {
    if (as_json) {
        out << dump_deterministic(report) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "pick_matrix" || key == "provenance") continue;
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else if (value.is_number_float())
            out << format_real(value.get<double>());
        else
            out << value.dump();
        out << "\n";
    }
}

// ===== Problem handlers =====

Json handle_pick_check(const Json& payload, double tol) {
    PickProblem problem = pick_problem_from_json(payload);
    FeasibilityReport report = feasible(problem, tol);
    Json out = feasibility_to_json(report);
    out["kind"] = "pick_check";
    out["tol"] = tol;
    if (problem.variant == PickVariant::ball) {
        std::vector<ComplexMatrix> targets = problem.targets;
        if (problem.transposed)
            for (auto& y : targets) y = y.transpose().eval();
        out["quotient_norm"] = quotient_norm(problem.nodes, targets);
    }
    out["provenance"] = {{"problem", pick_problem_to_json(problem)}};
    return out;
}

Json handle_pick_norm(const Json& payload, double tol) {
    PickProblem problem = pick_problem_from_json(payload);
    std::vector<ComplexMatrix> targets = problem.targets;
    if (problem.transposed)
        for (auto& y : targets) y = y.transpose().eval();
    double value = quotient_norm(problem.nodes, targets);
    Json out = {{"kind", "pick_norm"},
                {"value", value},
                {"strict_contraction", value < 1.0 - tol},
                {"tol", tol},
                {"provenance", {{"problem", pick_problem_to_json(problem)}}}};
    return out;
}

Json handle_ideal_build(const Json& payload, double tol) {
    IdealSpec spec = ideal_spec_from_json(
        payload.is_object() && payload.contains("ideal") ? payload["ideal"] : payload);
    QuotientModel model = build_model(spec);
    Json rs = Json::array();
    for (const auto& rk : model.R) rs.push_back(matrix_to_json(rk));
    Json gens = Json::array();
    for (const auto& g : model.generators) gens.push_back(polynomial_to_json(g));

    Json out = {{"kind", "ideal_build"},
                {"r", model.r()},
                {"boundary_count", model.boundary_count},
                {"generator_policy", to_string(model.generator_policy)},
                {"tol", tol},
                {"provenance", {{"ideal", ideal_spec_to_json(spec)}}}};
    if (model.generator_policy == GeneratorPolicy::seeded)
        out["generator_seed"] = model.generator_seed;
    if (model.r() > 0) {
        out["B"] = matrix_to_json(model.B);
        out["R"] = rs;
        out["generators"] = gens;
        RealVector eigs = herm_eigenvalues(model.B);
        out["gram_condition"] =
            finite_or_sentinel(eigs(0) > 0.0 ? eigs(eigs.size() - 1) / eigs(0)
                                             : std::numeric_limits<double>::infinity());
    }
    return out;
}

Json handle_ideal_check(const Json& payload, double tol) {
    if (!payload.is_object() || !payload.contains("ideal") || !payload.contains("element"))
        throw input_error("JSON schema: ideal_membership payload needs ideal and element");
    IdealSpec spec = ideal_spec_from_json(payload["ideal"]);
    QuotientModel model = build_model(spec);

    QuotientElement element;
    if (!payload["element"].is_array() || payload["element"].empty())
        throw input_error("JSON schema: element must be a nonempty array of matrices");
    for (const auto& block : payload["element"])
        element.coefficients.push_back(matrix_from_json(block));

    std::string variant = payload.value("variant", std::string("ball"));
    FeasibilityReport report;
    if (variant == "ball")
        report = membership_ball(model, element, tol);
    else if (variant == "cone")
        report = membership_cone(model, element, tol);
    else
        throw input_error("JSON schema: variant must be \"ball\" or \"cone\"");

    Json out = feasibility_to_json(report);
    out["kind"] = "ideal_check";
    out["variant"] = variant;
    out["represent_norm"] = opnorm(represent(model, element));
    out["tol"] = tol;
    out["provenance"] = {{"ideal", ideal_spec_to_json(spec)}};
    return out;
}

Json handle_distance(const Json& payload, double tol) {
    if (!payload.is_object() || !payload.contains("d") || !payload.contains("x") ||
        !payload.contains("y"))
        throw input_error("JSON schema: distance payload needs d, x, y");
    int d = payload["d"].get<int>();
    BallPoint x(vector_from_json(payload["x"]));
    BallPoint y(vector_from_json(payload["y"]));
    if (x.dim() != d || y.dim() != d)
        throw input_error("JSON schema: point dimension differs from d");

    double cstar = cstar_shift(x, y);
    Json out = {{"kind", "distance"},
                {"cstar", cstar},
                {"c", finite_or_sentinel(c_shift(x, y))},
                {"tol", tol}};
    if ((x.coords() - y.coords()).norm() > 0.0)
        out["decomposable"] = pair_decomposable(x, y, tol);
    if (payload.value("oracle", false)) {
        double oracle = cstar_oracle(x, y);
        out["oracle"] = oracle;
        out["oracle_gap"] = std::abs(oracle - cstar);
    }
    out["provenance"] = {{"x", vector_to_json(x.coords())}, {"y", vector_to_json(y.coords())}};
    return out;
}

Json handle_metric(const Json& payload, double tol) {
    if (!payload.is_object() || !payload.contains("d") || !payload.contains("a") ||
        !payload.contains("direction"))
        throw input_error("JSON schema: metric payload needs d, a, direction");
    int d = payload["d"].get<int>();
    BallPoint base(vector_from_json(payload["a"]));
    ComplexVector direction = vector_from_json(payload["direction"]);
    if (base.dim() != d || static_cast<int>(direction.size()) != d)
        throw input_error("JSON schema: point dimension differs from d");

    TangentVector v{base, direction};
    return {{"kind", "metric"},
            {"gamma", metric_shift(v)},
            {"tol", tol},
            {"provenance",
             {{"a", vector_to_json(base.coords())}, {"direction", vector_to_json(direction)}}}};
}

Json handle_classify2(const Json& payload, double tol) {
    ComplexMatrix g;
    if (payload.is_object() && payload.contains("matrix"))
        g = matrix_from_json(payload["matrix"]);
    else
        g = matrix_from_json(payload);
    TwoDimAlgebra algebra = classify_two_dim(g);
    Json out = {{"kind", "classify2"}, {"c", algebra.c}, {"tol", tol}};
    if (algebra.c > 0.0) out["h"] = h(algebra.c);
    out["provenance"] = {{"matrix", matrix_to_json(g)}};
    return out;
}

Json handle_phi(const Json& payload, double tol) {
    if (!payload.is_object() || !payload.contains("c") || !payload.contains("d"))
        throw input_error("JSON schema: phi payload needs c and d");
    double c = payload["c"].get<double>();
    double d = payload["d"].get<double>();
    long budget = payload.value("budget", 250000L);

    auto [lower, upper] = phi_bounds(c, d);
    PhiEstimate est = phi_bruteforce(c, d, budget);
    return {{"kind", "phi"},     {"lower", lower},
            {"upper", upper},    {"estimate", est.value},
            {"certified", est.certified}, {"evaluations", est.evaluations},
            {"in_bracket", est.value >= lower - 1e-3 && est.value <= upper + 1e-3},
            {"tol", tol}};
}

// ===== Verification suite =====

struct VerifyRow {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    std::string expected;
};

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(unit(rng), unit(rng));
    return m;
}

std::vector<VerifyRow> run_verify_suite() {
    std::vector<VerifyRow> rows;
    const double root2 = std::sqrt(2.0);

    ComplexMatrix e11 = ComplexMatrix::Zero(2, 2);
    e11(0, 0) = Complex(1);
    ComplexMatrix e12 = ComplexMatrix::Zero(2, 2);
    e12(0, 1) = Complex(1);
    GapWitness witness = shift2zero_norms(e11, e12);

    rows.push_back({"witness_column_norm", std::abs(witness.column_norm - 1.0) <= 1e-10,
                    witness.column_norm, "1 within 1e-10"});
    rows.push_back({"witness_row_norm", std::abs(witness.row_norm - root2) <= 1e-10,
                    witness.row_norm, "sqrt(2) within 1e-10"});
    rows.push_back({"alpha_l22", std::abs(alpha_l22_witness() - root2) <= 1e-10,
                    alpha_l22_witness(), "sqrt(2) within 1e-10"});

    std::mt19937_64 rng(20250814ULL);
    double max_ratio = 0.0;
    for (int k = 0; k < 1000; ++k) {
        GapWitness w = shift2zero_norms(random_matrix(rng, 2), random_matrix(rng, 2));
        if (w.column_norm > 0.0) max_ratio = std::max(max_ratio, w.row_norm / w.column_norm);
    }
    rows.push_back({"transpose_ratio_bound", max_ratio <= root2 + 1e-9, max_ratio,
                    "<= sqrt(2) + 1e-9 over 1000 samples"});

    double max_dev = 0.0;
    for (int k = 0; k < 100; ++k) {
        Eigen::Index n = 1 + static_cast<Eigen::Index>(k % 3);
        ComplexMatrix a = random_matrix(rng, n);
        ComplexMatrix b = random_matrix(rng, n);
        double formula = q0q0_quotient_norm(a, b);
        double block = opnorm(q0q0_block(a, b, ComplexMatrix::Zero(n, n)));
        max_dev = std::max(max_dev, std::abs(formula - block));
    }
    rows.push_back({"q0q0_closed_form", max_dev <= 1e-9, max_dev,
                    "block norm at C = 0 within 1e-9 over 100 samples"});

    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20; ++k) {
        ComplexMatrix a = random_matrix(rng, 2);
        ComplexMatrix b = random_matrix(rng, 2);
        double formula = q0q0_quotient_norm(a, b);
        double block = opnorm(q0q0_block(a, b, random_matrix(rng, 2)));
        min_gap = std::min(min_gap, block - formula);
    }
    rows.push_back({"q0q0_perturbation", min_gap >= -1e-9, min_gap,
                    ">= -1e-9 over 20 perturbations"});

    double worst_violation = 0.0;
    for (double c : {0.3, 0.7, 1.0})
        for (double d : {0.3, 0.7, 1.0}) {
            auto [lower, upper] = phi_bounds(c, d);
            PhiEstimate est = phi_bruteforce(c, d);
            worst_violation = std::max({worst_violation, lower - 1e-3 - est.value,
                                        est.value - upper - 1e-3});
        }
    rows.push_back({"phi_bracket", worst_violation <= 0.0, worst_violation,
                    "estimate within [lower - 1e-3, upper + 1e-3] on a 3x3 grid"});

    return rows;
}

Json verify_to_json(const std::vector<VerifyRow>& rows) {
    Json out_rows = Json::array();
    bool all = true;
    for (const auto& row : rows) {
        all = all && row.pass;
        out_rows.push_back({{"name", row.name},
                            {"pass", row.pass},
                            {"observed", row.observed},
                            {"expected", row.expected}});
    }
    return {{"kind", "verify"}, {"rows", out_rows}, {"all_pass", all}};
}

void emit_verify_table(const std::vector<VerifyRow>& rows, std::ostream& out) {
    size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    for (const auto& row : rows) {
        out << (row.pass ? "pass  " : "FAIL  ") << row.name
            << std::string(width - row.name.size() + 2, ' ') << "observed "
            << format_real(row.observed) << "  (" << row.expected << ")\n";
    }
}

// ===== Dispatch =====

Json dispatch_problem(const std::string& kind, const Json& payload, double tol) {
    if (kind == "pick") return handle_pick_check(payload, tol);
    if (kind == "ideal_membership") return handle_ideal_check(payload, tol);
    if (kind == "distance") return handle_distance(payload, tol);
    if (kind == "metric") return handle_metric(payload, tol);
    if (kind == "classify2") return handle_classify2(payload, tol);
    if (kind == "phi") return handle_phi(payload, tol);
    if (kind == "verify") return verify_to_json(run_verify_suite());
    throw input_error("unknown problem kind: " + kind);
}

int run_batch(const std::string& path, bool as_json, double default_tol, std::ostream& out) {
    Json batch = load_json_file(path);
    if (!batch.is_array()) throw input_error("batch file must be a JSON array of problem files");

    Json reports = Json::array();
    int exit_code = 0;
    for (const auto& item : batch) {
        if (!item.is_object() || !item.contains("kind") || !item.contains("payload")) {
            reports.push_back({{"error", "problem files need kind and payload"}, {"exit_code", 2}});
            exit_code = std::max(exit_code, 2);
            continue;
        }
        double tol = item.value("tol", default_tol);
        try {
            Json report = dispatch_problem(item["kind"].get<std::string>(), item["payload"], tol);
            if (item["kind"] == "verify" && !report["all_pass"].get<bool>())
                exit_code = std::max(exit_code, 1);
            reports.push_back(report);
        } catch (const input_error& e) {
            reports.push_back({{"error", e.what()}, {"exit_code", 2}});
            exit_code = std::max(exit_code, 2);
        } catch (const degeneracy_error& e) {
            reports.push_back({{"error", e.what()}, {"exit_code", 3}});
            exit_code = std::max(exit_code, 3);
        }
    }
    if (as_json) {
        out << dump_deterministic(reports) << "\n";
    } else {
        for (size_t k = 0; k < reports.size(); ++k) {
            out << "--- problem " << k << " ---\n";
            emit_report(reports[k], false, out);
        }
    }
    return exit_code;
}

// ===== Grid emission =====

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) throw input_error("grid: steps must be at least 1");
    std::vector<double> out;
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    for (int k = 0; k < steps; ++k)
        out.push_back(lo + (hi - lo) * static_cast<double>(k) / (steps - 1));
    return out;
}

ComplexVector axis_point(int d, int axis, double t) {
    if (axis < 0 || axis >= d) throw input_error("grid: axis out of range");
    ComplexVector v = ComplexVector::Zero(d);
    v(axis) = Complex(t, 0.0);
    return v;
}

int run_grid(const std::string& kind, int d, int axis, double lo, double hi, int steps,
             std::ostream& out) {
    for (double t : {lo, hi})
        if (std::abs(t) > 1.0) throw input_error("grid: range leaves the closed ball");
    std::vector<double> ts = linspace(lo, hi, steps);

    if (kind == "dist") {
        out << "x,y,cstar,c\n";
        for (double tx : ts)
            for (double ty : ts) {
                BallPoint x(axis_point(d, axis, tx));
                BallPoint y(axis_point(d, axis, ty));
                out << format_point(x.coords()) << ',' << format_point(y.coords()) << ','
                    << format_real(cstar_shift(x, y)) << ',' << format_real(c_shift(x, y))
                    << "\n";
            }
        return 0;
    }
    if (kind == "metric") {
        out << "a,direction,gamma\n";
        for (double ta : ts) {
            BallPoint base(axis_point(d, axis, ta));
            if (!base.interior()) throw input_error("grid: metric base must stay interior");
            for (int k = 0; k < d; ++k) {
                ComplexVector direction = ComplexVector::Zero(d);
                direction(k) = Complex(1.0, 0.0);
                out << format_point(base.coords()) << ',' << format_point(direction) << ','
                    << format_real(metric_shift({base, direction})) << "\n";
            }
        }
        return 0;
    }
    throw input_error("grid: kind must be dist or metric");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-dimensional quotients of the d-shift algebra: feasibility, models, "
                 "distances, and counterexample checks"};
    app.name("dshift");

    bool as_json = false;
    double tol = tol::positivity;
    std::string batch_path;
    app.add_flag("--json", as_json, "emit deterministic JSON reports");
    app.add_option("--tol", tol, "positivity tolerance band (default 1e-9)");
    app.add_option("--batch", batch_path, "process a JSON array of problem files");

    std::function<int()> action;

    // A tol recorded in the problem file applies unless --tol is given explicitly.
    auto effective_tol = [&](const std::optional<double>& file_tol) {
        if (app.count("--tol") > 0 || !file_tol) return tol;
        return *file_tol;
    };

    // pick check|norm
    auto* pick_cmd = app.add_subcommand("pick", "Nevanlinna-Pick feasibility and norms");
    pick_cmd->fallthrough();
    std::string pick_file;
    auto* pick_check_cmd = pick_cmd->add_subcommand("check", "feasibility verdict");
    pick_check_cmd->fallthrough();
    pick_check_cmd->add_option("file", pick_file, "PickProblem JSON file")->required();
    pick_check_cmd->callback([&] {
        action = [&] {
            FilePayload fp = unwrap_problem_file(load_json_file(pick_file), "pick");
            emit_report(handle_pick_check(fp.payload, effective_tol(fp.tol)), as_json, out);
            return 0;
        };
    });
    auto* pick_norm_cmd = pick_cmd->add_subcommand("norm", "exact quotient norm");
    pick_norm_cmd->fallthrough();
    pick_norm_cmd->add_option("file", pick_file, "PickProblem JSON file")->required();
    pick_norm_cmd->callback([&] {
        action = [&] {
            FilePayload fp = unwrap_problem_file(load_json_file(pick_file), "pick");
            emit_report(handle_pick_norm(fp.payload, effective_tol(fp.tol)), as_json, out);
            return 0;
        };
    });

    // ideal build|check
    auto* ideal_cmd = app.add_subcommand("ideal", "quotient models from jet functionals");
    ideal_cmd->fallthrough();
    std::string ideal_file;
    auto* ideal_build_cmd = ideal_cmd->add_subcommand("build", "construct the model");
    ideal_build_cmd->fallthrough();
    ideal_build_cmd->add_option("file", ideal_file, "IdealSpec JSON file")->required();
    ideal_build_cmd->callback([&] {
        action = [&] {
            FilePayload fp = unwrap_problem_file(load_json_file(ideal_file), "ideal_membership");
            emit_report(handle_ideal_build(fp.payload, effective_tol(fp.tol)), as_json, out);
            return 0;
        };
    });
    auto* ideal_check_cmd = ideal_cmd->add_subcommand("check", "element membership");
    ideal_check_cmd->fallthrough();
    ideal_check_cmd->add_option("file", ideal_file, "membership JSON file")->required();
    ideal_check_cmd->callback([&] {
        action = [&] {
            FilePayload fp = unwrap_problem_file(load_json_file(ideal_file), "ideal_membership");
            emit_report(handle_ideal_check(fp.payload, effective_tol(fp.tol)), as_json, out);
            return 0;
        };
    });

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "two-point quotient distance");
    dist_cmd->fallthrough();
    int dist_d = 1;
    std::string dist_x, dist_y;
    bool dist_oracle = false;
    dist_cmd->add_option("--d", dist_d, "ambient dimension")->required();
    dist_cmd->add_option("--x", dist_x, "first point, comma-separated components")->required();
    dist_cmd->add_option("--y", dist_y, "second point")->required();
    dist_cmd->add_flag("--oracle", dist_oracle, "also run the Pick bisection oracle");
    dist_cmd->callback([&] {
        action = [&] {
            Json payload = {{"d", dist_d},
                            {"x", vector_to_json(parse_point(dist_x, dist_d))},
                            {"y", vector_to_json(parse_point(dist_y, dist_d))},
                            {"oracle", dist_oracle}};
            emit_report(handle_distance(payload, tol), as_json, out);
            return 0;
        };
    });

    // metric
    auto* metric_cmd = app.add_subcommand("metric", "quotient metric at a tangent vector");
    metric_cmd->fallthrough();
    int metric_d = 1;
    std::string metric_a, metric_dir;
    metric_cmd->add_option("--d", metric_d, "ambient dimension")->required();
    metric_cmd->add_option("--a", metric_a, "base point")->required();
    metric_cmd->add_option("--dir,--X", metric_dir, "direction")->required();
    metric_cmd->callback([&] {
        action = [&] {
            Json payload = {{"d", metric_d},
                            {"a", vector_to_json(parse_point(metric_a, metric_d))},
                            {"direction", vector_to_json(parse_point(metric_dir, metric_d))}};
            emit_report(handle_metric(payload, tol), as_json, out);
            return 0;
        };
    });

    // classify2
    auto* classify_cmd = app.add_subcommand("classify2", "two-dimensional algebra invariant");
    classify_cmd->fallthrough();
    std::string classify_file;
    classify_cmd->add_option("file", classify_file, "JSON matrix or {\"matrix\": ...}")
        ->required();
    classify_cmd->callback([&] {
        action = [&] {
            FilePayload fp = unwrap_problem_file(load_json_file(classify_file), "classify2");
            emit_report(handle_classify2(fp.payload, effective_tol(fp.tol)), as_json, out);
            return 0;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the counterexample suite");
    verify_cmd->fallthrough();
    verify_cmd->callback([&] {
        action = [&] {
            std::vector<VerifyRow> rows = run_verify_suite();
            if (as_json)
                out << dump_deterministic(verify_to_json(rows)) << "\n";
            else
                emit_verify_table(rows, out);
            bool all = true;
            for (const auto& row : rows) all = all && row.pass;
            return all ? 0 : 1;
        };
    });

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "tensor-square distance bracket and estimate");
    phi_cmd->fallthrough();
    double phi_c = 0.5, phi_d = 0.5;
    long phi_budget = 250000;
    phi_cmd->add_option("--c", phi_c, "first invariant in (0,1]")->required();
    phi_cmd->add_option("--d", phi_d, "second invariant in (0,1]")->required();
    phi_cmd->add_option("--budget", phi_budget, "norm evaluation budget");
    phi_cmd->callback([&] {
        action = [&] {
            Json payload = {{"c", phi_c}, {"d", phi_d}, {"budget", phi_budget}};
            emit_report(handle_phi(payload, tol), as_json, out);
            return 0;
        };
    });

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "CSV sampling of distance or metric fields");
    grid_cmd->fallthrough();
    std::string grid_kind;
    int grid_d = 1, grid_axis = 0, grid_steps = 10;
    double grid_min = -0.9, grid_max = 0.9;
    grid_cmd->add_option("kind", grid_kind, "dist or metric")->required();
    grid_cmd->add_option("--d", grid_d, "ambient dimension");
    grid_cmd->add_option("--axis", grid_axis, "coordinate axis to sweep");
    grid_cmd->add_option("--min", grid_min, "sweep start");
    grid_cmd->add_option("--max", grid_max, "sweep end");
    grid_cmd->add_option("--steps", grid_steps, "sample count");
    grid_cmd->callback([&] {
        action = [&] { return run_grid(grid_kind, grid_d, grid_axis, grid_min, grid_max,
                                       grid_steps, out); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!batch_path.empty()) return run_batch(batch_path, as_json, tol, out);
        if (!action) {
            err << "error: no subcommand given (try --help)\n";
            return 2;
        }
        return action();
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const degeneracy_error& e) {
        err << "degeneracy error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace dshift::cli
