#pragma once

#include <json.hpp>

#include "canonaut/analysis.hpp"
#include "canonaut/charlattice.hpp"
#include "canonaut/mobius.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/validity.hpp"

// JSON views with stable field names; these are the CLI wire format.

namespace canonaut {

using json = nlohmann::json;

inline json to_json(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

inline json to_json(const Mat2& m) {
    return json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)});
}

inline json to_json(const ValidityReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"code", v.code}, {"message", v.message}});
    return {{"valid", r.is_valid},
            {"violations", violations},
            {"support_size", r.support_size},
            {"warnings", r.warnings}};
}

inline json to_json(const LabeledConfig& cfg) {
    json points = json::array();
    for (const auto& lp : cfg.points)
        points.push_back({{"u", to_json(lp.point.u)},
                          {"v", to_json(lp.point.v)},
                          {"label", lp.label}});
    return {{"points", points}, {"condition_margin", cfg.condition_margin}};
}

inline json to_json(const SymmetryGroup& g) {
    json elements = json::array();
    for (const auto& e : g.elements) elements.push_back(to_json(e.mat));
    return {{"order", g.order()}, {"type", g.type.str()}, {"elements", elements}};
}

inline json to_json(const SurveyReport& r) {
    json witnesses = json::object();
    for (const auto& [prime, equation] : r.witnesses)
        witnesses[std::to_string(prime)] = equation;
    return {{"orders", r.orders},
            {"primes", r.primes},
            {"max_det", r.max_pair_determinant},
            {"witnesses", witnesses},
            {"enumerated", r.enumerated},
            {"valid", r.valid}};
}

inline json to_json(const AnalysisReport& r) {
    json generators = json::array();
    for (const auto& g : r.generators) generators.push_back(to_json(g));
    json violations = json::array();
    for (const auto& v : r.validity.violations)
        violations.push_back({{"code", v.code}, {"message", v.message}});
    return {{"equation", r.equation},
            {"valid", r.valid},
            {"violations", violations},
            {"support_size", r.support_size},
            {"kernel_order", r.kernel_order},
            {"mobius_type", r.mobius_type},
            {"order", r.order},
            {"structure",
             {{"shape", r.structure.shape_str()},
              {"name", r.structure.human_name},
              {"split", r.structure.split}}},
            {"generators", generators},
            {"warnings", r.warnings},
            {"tolerances", {{"cluster", r.tolerances.cluster}, {"match", r.tolerances.match}}}};
}

inline json error_json(const std::string& type, const std::string& message) {
    return {{"error", {{"type", type}, {"message", message}}}};
}

} // namespace canonaut
