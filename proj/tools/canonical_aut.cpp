// canonical-aut: automorphism groups of surfaces w^2 = F10(x,y,z)
// in the weighted projective space P(1,1,2,5).

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "canonaut/canonaut.hpp"

namespace {

using namespace canonaut;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidSurface = 2;
constexpr int kExitNumericalBreakdown = 3;

void print_analysis_text(const AnalysisReport& r, std::ostream& os) {
    os << "equation:     " << r.equation << "\n";
    os << "valid:        " << (r.valid ? "yes" : "no") << "\n";
    os << "support |Y|:  " << r.support_size << "\n";
    if (!r.valid) {
        for (const auto& v : r.validity.violations)
            os << "  violation " << v.code << ": " << v.message << "\n";
        return;
    }
    os << "order:        " << r.order << "\n";
    os << "scalar kernel: C_" << r.kernel_order << "\n";
    os << "mobius image: " << r.mobius_type << "\n";
    os << "structure:    " << r.structure.human_name;
    if (r.structure.shape == StructureDescriptor::Shape::central_extension)
        os << (r.structure.split ? "  (split central extension)"
                                 : "  (non-split central extension)");
    os << "\n";
    os << "generators:   " << r.generators.size() << "\n";
    for (const auto& w : r.warnings) os << "note: " << w << "\n";
}

int run_analyze(const std::string& equation, const Tolerances& tol, bool as_json) {
    AnalysisReport report = analyze_equation(equation, tol);
    if (as_json)
        std::cout << to_json(report).dump() << "\n";
    else
        print_analysis_text(report, std::cout);
    return report.valid ? kExitOk : kExitInvalidSurface;
}

int run_validate(const std::string& equation, const Tolerances& tol, bool as_json) {
    SurfaceForm sf = complete_square(parse_polynomial(equation)).normalized();
    ValidityReport report = validate(sf, tol.cluster);
    if (as_json) {
        std::cout << to_json(report).dump() << "\n";
    } else {
        std::cout << "valid: " << (report.is_valid ? "yes" : "no")
                  << "  (|Y| = " << report.support_size << ")\n";
        for (const auto& v : report.violations)
            std::cout << "  violation " << v.code << ": " << v.message << "\n";
        for (const auto& w : report.warnings) std::cout << "  note: " << w << "\n";
    }
    return report.is_valid ? kExitOk : kExitInvalidSurface;
}

std::string batch_line_result(const std::string& equation, const Tolerances& tol) {
    try {
        return to_json(analyze_equation(equation, tol)).dump();
    } catch (const parse_error& e) {
        auto j = error_json("parse_error", e.what());
        j["equation"] = equation;
        return j.dump();
    } catch (const infinite_group_error& e) {
        auto j = error_json("infinite_group", e.what());
        j["equation"] = equation;
        return j.dump();
    } catch (const ill_conditioned_error& e) {
        auto j = error_json("ill_conditioned", e.what());
        j["equation"] = equation;
        return j.dump();
    } catch (const tolerance_error& e) {
        auto j = error_json("tolerance_breakdown", e.what());
        j["equation"] = equation;
        return j.dump();
    } catch (const std::exception& e) {
        auto j = error_json("error", e.what());
        j["equation"] = equation;
        return j.dump();
    }
}

// One JSON line per input line; # starts a comment. Lines are processed by
// up to `jobs` workers and printed in input order.
int run_batch(const std::string& path, const Tolerances& tol, int jobs) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read file: " << path << "\n";
        return kExitUsage;
    }
    std::vector<std::string> equations;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        equations.push_back(line);
    }

    std::vector<std::string> results(equations.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= equations.size()) return;
            results[i] = batch_line_result(equations[i], tol);
        }
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (const auto& r : results) std::cout << r << "\n";
    return kExitOk;
}

int run_survey(bool as_json) {
    SurveyReport report = two_factor_survey();
    if (as_json) {
        std::cout << to_json(report).dump() << "\n";
        return kExitOk;
    }
    std::cout << "enumerated " << report.enumerated << " monomial equations, "
              << report.valid << " valid\n";
    std::cout << "achievable orders:";
    for (auto o : report.orders) std::cout << " " << o;
    std::cout << "\nprime factors:";
    for (auto p : report.primes) std::cout << " " << p;
    std::cout << "\nmax pair determinant: " << report.max_pair_determinant << "\n";
    std::cout << "witnesses:\n";
    for (const auto& [p, eq] : report.witnesses)
        std::cout << "  " << p << ":  " << eq << "\n";
    return kExitOk;
}

int run_oracle_diagonal(const std::string& equation, std::int64_t modulus,
                        const Tolerances& tol) {
    SurfaceForm sf = complete_square(parse_polynomial(equation)).normalized();
    if (modulus <= 0) {
        LabeledConfig cfg = build_config(sf, tol.cluster);
        SolutionGroup sol = diagonal_solution_group(lattice_from_two_point_config(sf, cfg));
        if (!sol.finite) throw infinite_group_error("solution group is infinite");
        modulus = sol.order();
    }
    OracleReport report = brute_force_diagonal(sf, modulus);
    std::cout << json{{"method", report.method},
                      {"modulus", modulus},
                      {"count", report.count}}
                     .dump()
              << "\n";
    return kExitOk;
}

int run_oracle_config(const std::string& equation, const Tolerances& tol) {
    SurfaceForm sf = complete_square(parse_polynomial(equation)).normalized();
    LabeledConfig cfg = build_config(sf, tol.cluster);
    OracleReport report = brute_force_config_group(cfg, tol);
    std::cout << json{{"method", report.method}, {"count", report.count}}.dump() << "\n";
    return kExitOk;
}

int run_oracle_random(std::uint64_t seed, int count, bool dense, const Tolerances& tol) {
    std::mt19937_64 rng(seed);
    std::cout << "seed: " << seed << "\n";
    for (int i = 0; i < count; ++i) {
        SurfaceForm sf = random_valid_surface(rng, dense);
        AnalysisReport report = analyze_surface(sf, tol);
        std::cout << report.equation << "  ->  order " << report.order << " ("
                  << report.structure.human_name << ")\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"automorphism groups of canonical surfaces with K^2 = 1, p_g = 2"};
    app.require_subcommand(1);

    Tolerances tol;
    bool as_json = false;
    int jobs = 1;
    std::uint64_t seed = 20260808u;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--cluster-tol", tol.cluster, "root clustering tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--match-tol", tol.match, "group element matching tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "worker threads for batch mode")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized subcommands");

    std::string equation, path;
    auto* analyze = app.add_subcommand("analyze", "full analysis of one equation");
    analyze->add_option("equation", equation, "defining equation, e.g. \"w^2 - z^5 - x^10 - y^10\"")
        ->required();

    auto* validate_cmd = app.add_subcommand("validate", "validity check of one equation");
    validate_cmd->add_option("equation", equation)->required();

    auto* batch = app.add_subcommand("batch", "analyze a file of equations, one per line");
    batch->add_option("file", path, "input file; # starts a comment")->required();

    auto* survey = app.add_subcommand("survey", "exhaustive two-factor monomial survey");

    auto* oracle = app.add_subcommand("oracle", "brute-force debugging checks");
    oracle->group(""); // hidden
    std::int64_t modulus = 0;
    int random_count = 10;
    bool dense = false;
    auto* odiag = oracle->add_subcommand("diagonal", "residue-pair count for monomial slices");
    odiag->add_option("equation", equation)->required();
    odiag->add_option("--mod", modulus, "modulus (defaults to the computed group order)");
    auto* oconfig = oracle->add_subcommand("config", "all-anchor configuration group count");
    oconfig->add_option("equation", equation)->required();
    auto* orandom = oracle->add_subcommand("random", "analyze random valid equations");
    orandom->add_option("--count", random_count);
    orandom->add_flag("--dense", dense, "dense integer slices instead of monomials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(equation, tol, as_json);
        if (validate_cmd->parsed()) return run_validate(equation, tol, as_json);
        if (batch->parsed()) return run_batch(path, tol, jobs);
        if (survey->parsed()) return run_survey(as_json);
        if (oracle->parsed()) {
            if (odiag->parsed()) return run_oracle_diagonal(equation, modulus, tol);
            if (oconfig->parsed()) return run_oracle_config(equation, tol);
            if (orandom->parsed()) return run_oracle_random(seed, random_count, dense, tol);
            std::cerr << "oracle needs a subcommand\n";
            return kExitUsage;
        }
    } catch (const parse_error& e) {
        std::cerr << canonaut::error_json("parse_error", e.what()).dump() << "\n";
        return kExitInvalidSurface;
    } catch (const infinite_group_error& e) {
        std::cerr << canonaut::error_json("infinite_group", e.what()).dump() << "\n";
        return kExitInvalidSurface;
    } catch (const std::invalid_argument& e) {
        std::cerr << canonaut::error_json("invalid_input", e.what()).dump() << "\n";
        return kExitInvalidSurface;
    } catch (const ill_conditioned_error& e) {
        std::cerr << canonaut::error_json("ill_conditioned", e.what()).dump() << "\n";
        return kExitNumericalBreakdown;
    } catch (const tolerance_error& e) {
        std::cerr << canonaut::error_json("tolerance_breakdown", e.what()).dump() << "\n";
        return kExitNumericalBreakdown;
    } catch (const std::exception& e) {
        std::cerr << canonaut::error_json("error", e.what()).dump() << "\n";
        return kExitNumericalBreakdown;
    }
    return kExitUsage;
}
