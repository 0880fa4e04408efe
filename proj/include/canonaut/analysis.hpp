#pragma once

#include <string>
#include <vector>

#include "canonaut/autgroup.hpp"
#include "canonaut/charlattice.hpp"
#include "canonaut/parse.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/tolerances.hpp"
#include "canonaut/validity.hpp"

namespace canonaut {

struct AnalysisReport {
    std::string equation; // canonical normalized form
    bool valid = false;
    ValidityReport validity;
    int support_size = 0;
    int kernel_order = 0;
    std::string mobius_type = "none";
    int order = 0;
    StructureDescriptor structure;
    std::vector<Mat2> generators;
    std::vector<std::string> warnings;
    Tolerances tolerances;
};

// Small generating set read off the multiplication table greedily.
inline std::vector<Mat2> generating_set(const AutGroup& g,
                                        const std::vector<std::vector<int>>& table) {
    const int n = g.order;
    int identity = 0;
    for (int i = 0; i < n; ++i)
        if (matrix_distance_exact(g.matrices[i], Mat2::identity()) <= 1e-6) identity = i;

    std::vector<bool> reached(n, false);
    reached[identity] = true;
    int reached_count = 1;
    std::vector<int> members{identity};
    std::vector<Mat2> gens;

    auto close_over = [&](int seed) {
        if (!reached[seed]) {
            reached[seed] = true;
            ++reached_count;
            members.push_back(seed);
        }
        for (std::size_t qi = 0; qi < members.size(); ++qi)
            for (std::size_t qj = 0; qj < members.size(); ++qj) {
                int prod = table[members[qi]][members[qj]];
                if (!reached[prod]) {
                    reached[prod] = true;
                    ++reached_count;
                    members.push_back(prod);
                }
            }
    };

    for (int i = 0; i < n && reached_count < n; ++i) {
        if (reached[i]) continue;
        gens.push_back(g.matrices[i]);
        close_over(i);
    }
    return gens;
}

// Full pipeline on an already normalized surface form.
inline AnalysisReport analyze_surface(const SurfaceForm& sf, const Tolerances& tol = {}) {
    AnalysisReport report;
    report.tolerances = tol;
    report.equation = sf.equation_str();

    LabeledConfig cfg = build_config(sf, tol.cluster);
    report.validity = validate(sf, cfg);
    report.valid = report.validity.is_valid;
    report.support_size = report.validity.support_size;
    report.warnings = report.validity.warnings;
    if (!report.valid) return report;

    AutGroup group = assemble(sf, cfg, tol);
    auto table = multiplication_table(group, tol.match);

    report.kernel_order = group.kernel_order;
    report.mobius_type = group.mobius_type.str();
    report.order = group.order;
    report.structure = recognize_structure(group, table);
    report.generators = generating_set(group, table);
    if (!group.two_factor)
        report.warnings.push_back("configuration symmetries: order " +
                                  std::to_string(group.order / group.kernel_order) + " (" +
                                  group.mobius_type.str() + ") on " +
                                  std::to_string(report.support_size) + " distinct points");
    return report;
}

// parse -> complete_square -> normalize -> validate -> assemble -> recognize
inline AnalysisReport analyze_equation(const std::string& text, const Tolerances& tol = {}) {
    WPolynomial poly = parse_polynomial(text);
    SurfaceForm sf = complete_square(poly).normalized();
    return analyze_surface(sf, tol);
}

} // namespace canonaut
