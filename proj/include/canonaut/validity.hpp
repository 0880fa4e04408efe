#pragma once

#include <string>
#include <vector>

#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"

namespace canonaut {

struct Violation {
    std::string code;
    std::string message;
};

struct ValidityReport {
    bool is_valid = true;
    std::vector<Violation> violations;
    int support_size = 0; // |Y|: distinct linear factors across q0..q4
    std::vector<std::string> warnings;

    void flag(std::string code, std::string message) {
        is_valid = false;
        violations.push_back({std::move(code), std::move(message)});
    }
};

// Checks the conditions the surface family imposes on the equation.
// All findings are collected (diagnostic mode), not just the first:
//   V1  q5 != 0, i.e. the z^5 term is present
//   V2  q0 != 0 or q1 != 0
//   V3  at least two distinct linear factors across the nonconstant slices
//   V4  in the two-factor case: at least 3 nonzero slices (counting q5)
//       and not every slice balanced between the two factors
// The configuration is passed in so callers can reuse it afterwards.
inline ValidityReport validate(const SurfaceForm& sf, const LabeledConfig& cfg) {
    ValidityReport report;
    report.warnings = sf.trail;
    report.support_size = cfg.support_size();

    if (sf.q[5].is_zero())
        report.flag("V1", "the z^5 coefficient vanishes: the surface acquires a "
                          "singularity worse than canonical at (0:0:1:0)");

    if (sf.q[0].is_zero() && sf.q[1].is_zero())
        report.flag("V2", "q0 and q1 both vanish: the surface is not normal");

    if (report.support_size < 2)
        report.flag("V3", "fewer than two distinct linear factors (|Y| = " +
                              std::to_string(report.support_size) + ")");

    if (report.support_size == 2) {
        int nonzero_slices = 0;
        for (int i = 0; i < kSliceCount; ++i)
            if (!sf.q[i].is_zero()) ++nonzero_slices;
        if (nonzero_slices < 3)
            report.flag("V4", "two-factor equation with fewer than 3 nonzero slices: "
                              "one-parameter automorphism family");

        const Label& l1 = cfg.points[0].label;
        const Label& l2 = cfg.points[1].label;
        bool all_balanced = true;
        for (int i = 0; i + 1 < kSliceCount; ++i)
            if (l1[i] != l2[i]) all_balanced = false;
        if (all_balanced)
            report.flag("V4", "every slice is balanced between the two factors: "
                              "one-parameter automorphism family");
    }
    return report;
}

inline ValidityReport validate(const SurfaceForm& sf,
                               double cluster_tol = Tolerances{}.cluster) {
    return validate(sf, build_config(sf, cluster_tol));
}

} // namespace canonaut
