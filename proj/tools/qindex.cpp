#include "qindex/check_suite.hpp"
#include "qindex/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitCheckFailed = 3;

struct Common {
    int m = 0;
    int k = 0;
    std::string format = "text";
    int cap = 0; // 0 = default 8m
};

qindex::EngineOptions engine_options(const Common& c) {
    qindex::EngineOptions opts;
    if (c.cap != 0) opts.numerator_cap = c.cap;
    return opts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qindex::DomainError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_ks(const std::string& s) {
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 0) throw CLI::ValidationError("--ks", "bad entry: " + item);
        ks.push_back(v);
    }
    if (ks.empty()) throw CLI::ValidationError("--ks", "needs at least one entry");
    return ks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact index formulas for quaternionic elliptic complexes"};
    app.require_subcommand(1);

    Common c;
    std::string manifold, classes_path, ks_list, suite;

    auto* formula = app.add_subcommand("formula", "print the index formula for (m, k)");
    formula->add_option("--m", c.m, "quaternionic dimension (>= 2)")->required();
    formula->add_option("--k", c.k, "complex index (>= 0)")->required();
    formula->add_option("--format", c.format, "text, latex or json")->capture_default_str();
    formula->add_option("--cap", c.cap, "numerator truncation cap override (>= 8m)");

    auto* evaluate = app.add_subcommand("evaluate", "evaluate the index on a manifold");
    evaluate->add_option("--m", c.m, "quaternionic dimension (>= 2)")->required();
    evaluate->add_option("--k", c.k, "complex index (>= 0)")->required();
    auto* mopt = evaluate->add_option("--manifold", manifold, "built-in manifold (hp)");
    auto* copt = evaluate->add_option("--classes", classes_path, "json file with monomial values");
    mopt->excludes(copt);
    evaluate->add_option("--cap", c.cap, "numerator truncation cap override (>= 8m)");

    auto* integrality = app.add_subcommand("integrality", "integer lattice of index combinations");
    integrality->add_option("--m", c.m, "quaternionic dimension (>= 2)")->required();
    integrality->add_option("--ks", ks_list, "comma-separated complex indices")->required();
    integrality->add_option("--format", c.format, "text, latex or json")->capture_default_str();
    integrality->add_option("--cap", c.cap, "numerator truncation cap override (>= 8m)");

    auto* check = app.add_subcommand("check", "run the reference check battery");
    check->add_option("--suite", suite, "check suite name (paper)")->required();

    std::vector<int> ks;
    try {
        app.parse(argc, argv);
        if (*evaluate && manifold.empty() && classes_path.empty())
            throw CLI::RequiredError("--manifold or --classes");
        if (*evaluate && !manifold.empty() && manifold != "hp")
            throw CLI::ValidationError("--manifold", "unknown manifold: " + manifold);
        if (*integrality) ks = parse_ks(ks_list);
        if (*check && suite != "paper")
            throw CLI::ValidationError("--suite", "unknown suite: " + suite);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*formula) {
            auto f = qindex::index_formula(c.m, c.k, engine_options(c));
            std::cout << qindex::render_formula(f, qindex::parse_format(c.format)) << "\n";
            return kExitOk;
        }

        if (*evaluate) {
            auto f = qindex::index_formula(c.m, c.k, engine_options(c));
            qindex::ManifoldCharData data = manifold.empty()
                                                ? qindex::parse_manifold_json(read_file(classes_path))
                                                : qindex::hp_characteristic_data(c.m);
            std::cout << qindex::to_string(qindex::evaluate_formula(f, data)) << "\n";
            return kExitOk;
        }

        if (*integrality) {
            std::vector<qindex::IndexFormula> fs;
            fs.reserve(ks.size());
            for (int k : ks) fs.push_back(qindex::index_formula(c.m, k, engine_options(c)));
            auto conds = qindex::integrality_conditions(fs);
            std::cout << qindex::render_conditions(fs, conds, qindex::parse_format(c.format));
            return kExitOk;
        }

        if (*check)
            return qindex::run_reference_checks(std::cout) ? kExitOk : kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
