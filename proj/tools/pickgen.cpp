// Seeded generator of Nevanlinna-Pick problem files.  Emits a JSON array of
// problem objects on stdout, ready for `dshift --batch` or as test fixtures.
//
//   pickgen --count 20 --d 2 --m 3 --n 2 --norm 0.5 --seed 7 > suite.json
//
// With --norm the targets are rescaled so the exact quotient norm of each
// instance equals the requested value, which pins the expected verdict.

#include "dshift/json_io.hpp"
#include "dshift/pick.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace dshift;

namespace {

struct Options {
    unsigned long long seed = 1;
    int count = 10;
    int d = 2;
    int m = 3;
    int n = 1;
    double radius = 0.8;
    double norm = 0.0;  // 0 disables rescaling
    std::string variant = "ball";
    bool transposed = false;
    double tol = 0.0;  // 0 omits the field
};

PickProblem generate(std::mt19937_64& rng, const Options& opt) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto draw = [&] { return Complex(unit(rng), unit(rng)); };

    PickProblem p;
    p.d = opt.d;
    p.variant = opt.variant == "cone" ? PickVariant::cone : PickVariant::ball;
    p.transposed = opt.transposed;

    while (static_cast<int>(p.nodes.size()) < opt.m) {
        ComplexVector v(opt.d);
        for (int k = 0; k < opt.d; ++k) v(k) = draw();
        double len = v.norm();
        if (len == 0.0) continue;
        v *= (opt.radius * (0.1 + 0.9 * std::abs(unit(rng)))) / len;
        bool separated = true;
        for (const auto& existing : p.nodes)
            if ((existing.coords() - v).norm() < 0.1) separated = false;
        if (separated) p.nodes.emplace_back(v);
    }

    for (int j = 0; j < opt.m; ++j) {
        ComplexMatrix y(opt.n, opt.n);
        for (int a = 0; a < opt.n; ++a)
            for (int b = 0; b < opt.n; ++b) y(a, b) = draw();
        p.targets.push_back(y);
    }

    if (opt.norm > 0.0) {
        double base = quotient_norm(p.nodes, p.targets);
        if (base > 0.0)
            for (auto& y : p.targets) y *= opt.norm / base;
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"seeded Nevanlinna-Pick problem generator"};
    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_option("--count", opt.count, "number of problems")->check(CLI::PositiveNumber);
    app.add_option("--d", opt.d, "ambient dimension")->check(CLI::PositiveNumber);
    app.add_option("--m", opt.m, "number of nodes")->check(CLI::PositiveNumber);
    app.add_option("--n", opt.n, "target matrix size")->check(CLI::PositiveNumber);
    app.add_option("--radius", opt.radius, "node radius cap")
        ->check(CLI::Range(0.0, 0.999));
    app.add_option("--norm", opt.norm, "rescale targets to this quotient norm");
    app.add_option("--variant", opt.variant, "ball or cone")
        ->check(CLI::IsMember({"ball", "cone"}));
    app.add_flag("--transposed", opt.transposed, "transposed algebra semantics");
    app.add_option("--tol", opt.tol, "tolerance field for each problem file");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(opt.seed);
    Json suite = Json::array();
    for (int k = 0; k < opt.count; ++k) {
        Json file = {{"version", "1"},
                     {"kind", "pick"},
                     {"payload", pick_problem_to_json(generate(rng, opt))}};
        if (opt.tol > 0.0) file["tol"] = opt.tol;
        suite.push_back(file);
    }
    std::cout << dump_deterministic(suite) << "\n";
    return 0;
}
