#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "canonaut/errors.hpp"
#include "canonaut/exactpoly.hpp"
#include "canonaut/roots.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/tolerances.hpp"

namespace canonaut {

// Point of CP^1 written (u : v). The stored representative is canonical:
// max(|u|, |v|) = 1 with the larger-modulus coordinate real positive.
// Points that come from exact monomial factors carry an axis tag so the
// two-factor pipeline never touches floating point.
struct ProjectivePoint {
    enum class Axis { none, unit_x, unit_y };

    std::complex<double> u{1.0, 0.0};
    std::complex<double> v{0.0, 0.0};
    Axis axis = Axis::none;

    static ProjectivePoint unit_x() { return {{1.0, 0.0}, {0.0, 0.0}, Axis::unit_x}; }
    static ProjectivePoint unit_y() { return {{0.0, 0.0}, {1.0, 0.0}, Axis::unit_y}; }

    static ProjectivePoint from_chart(std::complex<double> t) {
        ProjectivePoint p{{1.0, 0.0}, t, Axis::none};
        p.canonicalize();
        return p;
    }

    static ProjectivePoint from_pair(std::complex<double> u, std::complex<double> v) {
        ProjectivePoint p{u, v, Axis::none};
        p.canonicalize();
        return p;
    }

    void canonicalize() {
        double au = std::abs(u), av = std::abs(v);
        if (au == 0.0 && av == 0.0)
            throw std::invalid_argument("(0,0) is not a projective point");
        std::complex<double> divisor = au >= av ? u : v;
        u /= divisor;
        v /= divisor;
    }

    friend bool lex_less(const ProjectivePoint& a, const ProjectivePoint& b) {
        auto key = [](const ProjectivePoint& p) {
            return std::array<double, 4>{p.u.real(), p.u.imag(), p.v.real(), p.v.imag()};
        };
        return key(a) < key(b);
    }
};

inline double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
    double na = std::hypot(std::abs(a.u), std::abs(a.v));
    double nb = std::hypot(std::abs(b.u), std::abs(b.v));
    return std::abs(a.u * b.v - a.v * b.u) / (na * nb);
}

// Per-slice multiplicities; index 5 stays 0 because q5 is a constant.
using Label = std::array<int, kSliceCount>;

struct LabeledPoint {
    ProjectivePoint point;
    Label label{};

    int multiplicity_in(int slice) const { return label[slice]; }
};

struct LabeledConfig {
    std::vector<LabeledPoint> points;
    double condition_margin = std::numeric_limits<double>::infinity();

    int support_size() const { return static_cast<int>(points.size()); }
};

struct RootEntry {
    ProjectivePoint point;
    int multiplicity = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Averages nearby projective points after aligning representative phases.
inline ProjectivePoint cluster_center(const std::vector<ProjectivePoint>& members) {
    const ProjectivePoint& ref = members.front();
    std::complex<double> su = 0.0, sv = 0.0;
    for (const auto& p : members) {
        std::complex<double> inner = p.u * std::conj(ref.u) + p.v * std::conj(ref.v);
        std::complex<double> phase = std::abs(inner) > 0 ? std::conj(inner) / std::abs(inner)
                                                         : std::complex<double>(1.0);
        su += p.u * phase;
        sv += p.v * phase;
    }
    return ProjectivePoint::from_pair(su, sv);
}

// Single-linkage clustering at distance `tol` with an ambiguity band:
// distinct clusters closer than band*tol are rejected as ill-conditioned.
// Entries with an axis tag are exact and merge only with the same tag.
// Entries sharing a cohort are known-distinct (exact factorization within
// one slice) and are never merged with each other.
struct ClusterInput {
    ProjectivePoint point;
    int slice = 0;
    int multiplicity = 0;
    int cohort = -1; // -1: may merge with anything nearby
};

struct Cluster {
    ProjectivePoint center;
    Label label{};
    int total = 0;
};

inline std::vector<Cluster> cluster_entries(const std::vector<ClusterInput>& entries,
                                            double tol) {
    const int n = static_cast<int>(entries.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = entries[i];
            const auto& b = entries[j];
            bool exact_a = a.point.axis != ProjectivePoint::Axis::none;
            bool exact_b = b.point.axis != ProjectivePoint::Axis::none;
            if (exact_a && exact_b) {
                if (a.point.axis == b.point.axis) uf.unite(i, j);
                continue;
            }
            double d = chordal_distance(a.point, b.point);
            if (exact_a || exact_b) {
                if (d <= Tolerances::ambiguity_band * tol)
                    throw ill_conditioned_error(
                        "numeric root indistinguishable from an exact coordinate point");
                continue;
            }
            bool known_distinct = a.cohort >= 0 && a.cohort == b.cohort;
            if (known_distinct) {
                if (d <= Tolerances::ambiguity_band * tol)
                    throw ill_conditioned_error(
                        "two distinct roots too close to separate: ill-conditioned "
                        "configuration");
                continue;
            }
            if (d <= tol) uf.unite(i, j);
        }
    }

    // Any pair left in distinct clusters must clear the ambiguity band.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uf.find(i) == uf.find(j)) continue;
            if (entries[i].point.axis != ProjectivePoint::Axis::none &&
                entries[j].point.axis != ProjectivePoint::Axis::none)
                continue;
            double d = chordal_distance(entries[i].point, entries[j].point);
            if (d <= Tolerances::ambiguity_band * tol)
                throw ill_conditioned_error(
                    "two root clusters too close to separate: ill-conditioned configuration");
        }
    }

    std::vector<Cluster> clusters;
    std::vector<std::vector<ProjectivePoint>> members;
    std::vector<int> root_to_cluster(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_to_cluster[r] < 0) {
            root_to_cluster[r] = static_cast<int>(clusters.size());
            clusters.emplace_back();
            members.emplace_back();
        }
        Cluster& c = clusters[root_to_cluster[r]];
        c.label[entries[i].slice] += entries[i].multiplicity;
        c.total += entries[i].multiplicity;
        members[root_to_cluster[r]].push_back(entries[i].point);
    }

    // Centers from members; exact tags win over numerics.
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        auto exact = std::find_if(members[c].begin(), members[c].end(), [](const auto& p) {
            return p.axis != ProjectivePoint::Axis::none;
        });
        clusters[c].center = exact != members[c].end() ? *exact : cluster_center(members[c]);
    }
    return clusters;
}

// Groups companion-matrix roots according to a known multiplicity pattern
// (pairs of distinct-root count and multiplicity), polishes each center as a
// simple root of the matching derivative, and verifies the result by
// reconstructing the polynomial. Returns nullopt when the grouping cannot be
// made or the reconstruction misses.
inline std::optional<std::vector<std::pair<std::complex<double>, int>>> roots_with_structure(
    const std::vector<std::complex<double>>& coeffs,
    const std::vector<std::pair<int, int>>& structure) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    auto raw = polynomial_roots(coeffs);

    int clusters_wanted = 0;
    for (const auto& [count, mult] : structure) clusters_wanted += count;
    int merges = n - clusters_wanted;
    if (merges < 0) return std::nullopt;

    // Kruskal-style single linkage: perform exactly the cheapest merges.
    std::vector<ProjectivePoint> pts;
    pts.reserve(n);
    for (const auto& t : raw) pts.push_back(ProjectivePoint::from_chart(t));
    std::vector<std::tuple<double, int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(chordal_distance(pts[i], pts[j]), i, j);
    std::sort(edges.begin(), edges.end());

    UnionFind uf(n);
    int done = 0;
    for (const auto& [d, i, j] : edges) {
        if (done == merges) break;
        if (uf.find(i) == uf.find(j)) continue;
        uf.unite(i, j);
        ++done;
    }
    if (done != merges) return std::nullopt;

    std::vector<std::vector<int>> members;
    {
        std::vector<int> root_to_cluster(n, -1);
        for (int i = 0; i < n; ++i) {
            int r = uf.find(i);
            if (root_to_cluster[r] < 0) {
                root_to_cluster[r] = static_cast<int>(members.size());
                members.emplace_back();
            }
            members[root_to_cluster[r]].push_back(i);
        }
    }

    // The size multiset must match the announced structure.
    std::vector<int> want, have;
    for (const auto& [count, mult] : structure)
        for (int c = 0; c < count; ++c) want.push_back(mult);
    for (const auto& m : members) have.push_back(static_cast<int>(m.size()));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) return std::nullopt;

    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& group : members) {
        std::complex<double> center = 0.0;
        double radius = 0.0;
        for (int i : group) center += raw[i];
        center /= double(group.size());
        for (int i : group) radius = std::max(radius, std::abs(raw[i] - center));

        const int mult = static_cast<int>(group.size());
        if (mult > 1) {
            // An m-fold root of p is a simple root of p^(m-1).
            std::vector<std::complex<double>> deriv = coeffs;
            for (int k = 0; k < mult - 1; ++k) {
                std::vector<std::complex<double>> next(deriv.size() - 1);
                for (std::size_t j = 1; j < deriv.size(); ++j)
                    next[j - 1] = deriv[j] * double(j);
                deriv = std::move(next);
            }
            std::vector<std::complex<double>> dderiv(deriv.size() - 1);
            for (std::size_t j = 1; j < deriv.size(); ++j)
                dderiv[j - 1] = deriv[j] * double(j);
            std::complex<double> t = center;
            for (int iter = 0; iter < 24; ++iter) {
                std::complex<double> f = detail::horner(deriv, t);
                std::complex<double> df = detail::horner(dderiv, t);
                if (std::abs(df) < 1e-30) break;
                std::complex<double> next = t - f / df;
                if (std::abs(next - t) < 1e-15 * std::max(1.0, std::abs(t))) {
                    t = next;
                    break;
                }
                t = next;
            }
            if (std::abs(t - center) <= 10.0 * radius + 1e-9) center = t;
        }
        out.emplace_back(center, mult);
    }

    // Verify: the monic product of the grouped roots must reproduce the input.
    std::vector<std::complex<double>> product{1.0};
    for (const auto& [center, mult] : out)
        for (int k = 0; k < mult; ++k) {
            std::vector<std::complex<double>> next(product.size() + 1, 0.0);
            for (std::size_t j = 0; j < product.size(); ++j) {
                next[j] -= product[j] * center;
                next[j + 1] += product[j];
            }
            product = std::move(next);
        }
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (std::abs(product[j] * coeffs.back() - coeffs[j]) > 1e-6 * scale)
            return std::nullopt;
    return out;
}

} // namespace detail

// Zero locus of one slice as points of CP^1 with multiplicities.
// The monomial part x^a y^b is split off exactly: x^a vanishes at (0:1) to
// order a and y^b at (1:0) to order b. The remainder is decomposed into
// square-free factors over Q(i), so multiplicities are exact and the
// numerical companion-matrix solve only ever sees simple roots. If the
// exact decomposition overflows 64-bit arithmetic the roots are clustered
// at the given tolerance instead, with multiplicity = cluster size.
inline std::vector<RootEntry> binary_form_roots(const BinaryForm& q, int slice,
                                                double cluster_tol = Tolerances{}.cluster) {
    if (q.is_zero()) throw std::invalid_argument("cannot factor the zero form");
    if (q.degree() != slice_degree(slice))
        throw std::invalid_argument("slice degree mismatch");

    const int a = q.x_multiplicity();
    const int b = q.y_multiplicity();
    const int k = q.degree() - a - b;

    std::vector<detail::ClusterInput> entries;
    if (a > 0) entries.push_back({ProjectivePoint::unit_y(), slice, a});
    if (b > 0) entries.push_back({ProjectivePoint::unit_x(), slice, b});

    if (k > 0) {
        exactpoly::Poly chart(k + 1);
        for (int j = 0; j <= k; ++j) chart[j] = q.coeff(b + j);
        bool solved = false;
        try {
            for (const auto& [factor, mult] : exactpoly::squarefree_decomposition(chart)) {
                std::vector<std::complex<double>> coeffs(factor.size());
                for (std::size_t j = 0; j < factor.size(); ++j)
                    coeffs[j] = factor[j].to_complex();
                for (const auto& t : polynomial_roots(coeffs))
                    entries.push_back({ProjectivePoint::from_chart(t), slice, mult, slice});
            }
            solved = true;
        } catch (const overflow_error&) {
            while (entries.size() > std::size_t(a > 0) + std::size_t(b > 0))
                entries.pop_back();
        }

        std::vector<std::complex<double>> coeffs(k + 1);
        for (int j = 0; j <= k; ++j) coeffs[j] = q.coeff(b + j).to_complex();

        if (!solved) {
            // Rational arithmetic overflowed: take the multiplicity pattern
            // modulo a large prime and group the numeric roots to match it.
            auto structure = exactpoly::modular_multiplicity_structure(chart);
            if (structure) {
                auto grouped = detail::roots_with_structure(coeffs, *structure);
                if (grouped) {
                    for (const auto& [t, mult] : *grouped)
                        entries.push_back(
                            {ProjectivePoint::from_chart(t), slice, mult, slice});
                    solved = true;
                } else {
                    bool repeated = false;
                    for (const auto& [count, mult] : *structure)
                        if (mult > 1) repeated = true;
                    if (repeated)
                        throw ill_conditioned_error(
                            "repeated roots could not be grouped reliably");
                }
            }
        }
        if (!solved) {
            for (const auto& t : polynomial_roots(coeffs))
                entries.push_back({ProjectivePoint::from_chart(t), slice, 1});
        }
    }

    auto clusters = detail::cluster_entries(entries, cluster_tol);
    std::vector<RootEntry> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back({c.center, c.total});
    std::sort(out.begin(), out.end(),
              [](const RootEntry& l, const RootEntry& r) { return lex_less(l.point, r.point); });

    int total = 0;
    for (const auto& e : out) total += e.multiplicity;
    if (total != q.degree())
        throw tolerance_error("root multiplicities do not add up to the slice degree");
    return out;
}

// Merges the root sets of all nonconstant slices into one labeled
// configuration. Points are sorted by canonical representative so the
// result is deterministic.
inline LabeledConfig build_config(const SurfaceForm& sf,
                                  double cluster_tol = Tolerances{}.cluster) {
    std::vector<detail::ClusterInput> entries;
    for (int i = 0; i + 1 < kSliceCount; ++i) {
        if (sf.q[i].is_zero()) continue;
        for (const auto& e : binary_form_roots(sf.q[i], i, cluster_tol))
            entries.push_back({e.point, i, e.multiplicity, i});
    }

    LabeledConfig cfg;
    if (entries.empty()) return cfg;

    auto clusters = detail::cluster_entries(entries, cluster_tol);
    for (const auto& c : clusters) cfg.points.push_back({c.center, c.label});
    std::sort(cfg.points.begin(), cfg.points.end(), [](const auto& l, const auto& r) {
        return lex_less(l.point, r.point);
    });

    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
            cfg.condition_margin = std::min(
                cfg.condition_margin,
                chordal_distance(cfg.points[i].point, cfg.points[j].point));

    if (cfg.points.size() > 1 && cfg.condition_margin <= 2.0 * cluster_tol)
        throw ill_conditioned_error("configuration points closer than twice the cluster tolerance");
    return cfg;
}

} // namespace canonaut
