#pragma once

// Shared builders for the test suites: synthetic configurations, platonic
// point sets, and the fixture equations used across the binaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "canonaut/canonaut.hpp"

namespace testsup {

using namespace canonaut;
using cd = std::complex<double>;

inline Label label_q(int slice, int mult = 1) {
    Label l{};
    l[slice] = mult;
    return l;
}

inline LabeledConfig make_config(const std::vector<ProjectivePoint>& pts,
                                 const std::vector<Label>& labels) {
    LabeledConfig cfg;
    for (std::size_t i = 0; i < pts.size(); ++i) cfg.points.push_back({pts[i], labels[i]});
    std::sort(cfg.points.begin(), cfg.points.end(),
              [](const auto& l, const auto& r) { return lex_less(l.point, r.point); });
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
            cfg.condition_margin = std::min(
                cfg.condition_margin,
                chordal_distance(cfg.points[i].point, cfg.points[j].point));
    return cfg;
}

inline LabeledConfig uniform_config(const std::vector<ProjectivePoint>& pts, int slice = 0) {
    return make_config(pts, std::vector<Label>(pts.size(), label_q(slice)));
}

// Stereographic projection from the north pole onto the (1:t) chart;
// (0,0,1) itself goes to the point at infinity (0:1).
inline ProjectivePoint stereo(double x, double y, double z) {
    if (std::abs(1.0 - z) < 1e-14) return ProjectivePoint::unit_y();
    return ProjectivePoint::from_chart(cd(x, y) / (1.0 - z));
}

inline std::vector<ProjectivePoint> regular_polygon(int n, double radius = 1.0,
                                                    double phase = 0.0) {
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < n; ++k)
        pts.push_back(ProjectivePoint::from_chart(
            std::polar(radius, phase + 2.0 * std::numbers::pi * k / n)));
    return pts;
}

inline std::vector<ProjectivePoint> tetrahedron_points() {
    double s = 1.0 / std::sqrt(3.0);
    return {stereo(s, s, s), stereo(s, -s, -s), stereo(-s, s, -s), stereo(-s, -s, s)};
}

inline std::vector<ProjectivePoint> octahedron_points() {
    return {ProjectivePoint::from_chart(0.0),      ProjectivePoint::unit_y(),
            ProjectivePoint::from_chart(1.0),      ProjectivePoint::from_chart(-1.0),
            ProjectivePoint::from_chart(cd(0, 1)), ProjectivePoint::from_chart(cd(0, -1))};
}

inline std::vector<ProjectivePoint> icosahedron_points() {
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<ProjectivePoint> pts{ProjectivePoint::from_chart(0.0),
                                     ProjectivePoint::unit_y()};
    for (int k = 0; k < 5; ++k) {
        double ang = 2.0 * std::numbers::pi * k / 5.0;
        pts.push_back(ProjectivePoint::from_chart(std::polar(phi, ang)));
        pts.push_back(ProjectivePoint::from_chart(
            std::polar(1.0 / phi, ang + std::numbers::pi / 5.0)));
    }
    return pts;
}

// Conjugates every point by a fixed well-conditioned Mobius map, preserving
// the symmetry group order.
inline std::vector<ProjectivePoint> conjugate_points(const std::vector<ProjectivePoint>& pts,
                                                     const Mat2& m) {
    std::vector<ProjectivePoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(apply(m, p));
    return out;
}

inline Mat2 random_mobius(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        Mat2 m{cd(unit(rng), unit(rng)), cd(unit(rng), unit(rng)),
               cd(unit(rng), unit(rng)), cd(unit(rng), unit(rng))};
        if (std::abs(m.det()) > 0.3) return m;
    }
}

inline SurfaceForm surface_of(const std::string& equation) {
    return complete_square(parse_polynomial(equation)).normalized();
}

// The worked equations with known automorphism groups.
struct Fixture {
    const char* equation;
    int order;
    const char* name;
};

inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx{
        {"w^2 - z^5 - x*y^7*z - x^9*y", 62, "C_62"},
        {"w^2 - z^5 - x^2*y^6*z - x^8*y^2", 44, "C_2 × C_22"},
        {"w^2 - z^5 - x^2*y^6*z - x^9*y", 52, "C_52"},
        {"w^2 - z^5 - x*y^5*z^2 - x^7*y*z", 34, "C_34"},
        {"w^2 - z^5 - x*y^5*z^2 - x^8*y^2", 38, "C_38"},
        {"w^2 - z^5 - x*y^7*z - x^7*y^3", 46, "C_46"},
        {"w^2 - z^5 - x^10 - y^10", 200, "C_10 . D_10"},
        // octahedral symmetry: q1 the cube-vertex form, q2 the octahedron form
        {"w^2 - z^5 - x^8*z - 14*x^4*y^4*z - y^8*z - x^5*y*z^2 + x*y^5*z^2", 48, "C_2 . S_4"},
        // cube-vertex form alone: the largest platonic case, kernel C_8
        {"w^2 - z^5 - x^8*z - 14*x^4*y^4*z - y^8*z", 192, "C_8 . S_4"},
        // two pentagons: a split central extension
        {"w^2 - z^5 - x^10 - x^5*y^5 - y^10", 100, "C_10 × D_5"},
        // quarter turn preserves the configuration but does not lift
        {"w^2 - z^5 - x^10 - x^2*y^8 - x^7*y*z", 2, "C_2"},
    };
    return fx;
}

inline double max_rel_coeff_error(const std::vector<cd>& got, const std::vector<cd>& want) {
    double scale = 0.0;
    for (const auto& c : want) scale = std::max(scale, std::abs(c));
    double err = 0.0;
    for (std::size_t j = 0; j < want.size(); ++j)
        err = std::max(err, std::abs(got[j] - want[j]) / scale);
    return err;
}

} // namespace testsup
