#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "canonaut/charlattice.hpp"
#include "canonaut/mobius.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/validity.hpp"

// Brute-force verifiers. Deliberately independent of the main search paths:
// the diagonal count enumerates residue pairs instead of solving the
// lattice, and the configuration count constructs maps by singular-value
// decomposition over every anchor triple instead of one cross-ratio basis.

namespace canonaut {

struct OracleReport {
    std::string method;
    std::int64_t count = 0;
};

// Counts pairs (a, b) in (Z/M)^2 with n*a + m*b = 0 (mod M) for every
// constraint row. When M is a multiple of the solution-group order this
// equals that order exactly.
inline OracleReport brute_force_diagonal_rows(
    const std::vector<std::array<std::int64_t, 2>>& rows, std::int64_t modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    OracleReport report{"diagonal residue enumeration", 0};
    for (std::int64_t a = 0; a < modulus; ++a)
        for (std::int64_t b = 0; b < modulus; ++b) {
            bool ok = true;
            for (const auto& r : rows)
                if ((r[0] * a + r[1] * b) % modulus != 0) {
                    ok = false;
                    break;
                }
            if (ok) ++report.count;
        }
    return report;
}

// Same count driven from an equation whose nonconstant slices are single
// monomials x^n y^m (the two-factor working basis).
inline OracleReport brute_force_diagonal(const SurfaceForm& sf, std::int64_t modulus) {
    std::vector<std::array<std::int64_t, 2>> rows;
    for (int i = 0; i + 1 < kSliceCount; ++i) {
        if (sf.q[i].is_zero()) continue;
        if (!sf.q[i].is_monomial())
            throw std::invalid_argument("diagonal oracle requires monomial slices");
        int b = sf.q[i].y_multiplicity();
        rows.push_back({slice_degree(i) - b, b});
    }
    return brute_force_diagonal_rows(rows, modulus);
}

namespace oracle_detail {

// Nullspace construction of the map sending src_j -> dst_j: each pair gives
// one linear condition (M src) x dst = 0 on the four entries of M.
inline Mat2 map_by_svd(const std::array<ProjectivePoint, 3>& src,
                       const std::array<ProjectivePoint, 3>& dst) {
    Eigen::MatrixXcd sys(3, 4);
    for (int i = 0; i < 3; ++i) {
        const auto& p = src[i];
        const auto& r = dst[i];
        sys(i, 0) = p.u * r.v;
        sys(i, 1) = p.v * r.v;
        sys(i, 2) = -p.u * r.u;
        sys(i, 3) = -p.v * r.u;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    Eigen::Vector4cd m = svd.matrixV().col(3);
    return Mat2{m(0), m(1), m(2), m(3)};
}

inline bool maps_config_to_itself(const Mat2& m, const LabeledConfig& cfg, double tol) {
    const int n = cfg.support_size();
    std::vector<int> matched(n, 0);
    for (int i = 0; i < n; ++i) {
        ProjectivePoint image = apply(m, cfg.points[i].point);
        int hits = 0, where = -1;
        for (int j = 0; j < n; ++j) {
            if (chordal_distance(image, cfg.points[j].point) <= tol) {
                ++hits;
                where = j;
            }
        }
        if (hits != 1 || cfg.points[where].label != cfg.points[i].label) return false;
        ++matched[where];
    }
    for (int j = 0; j < n; ++j)
        if (matched[j] != 1) return false;
    return true;
}

} // namespace oracle_detail

// Independent count of the configuration symmetry group: candidate sets are
// built for every anchor triple and intersected, then closure is verified by
// exhaustive pairwise products.
inline OracleReport brute_force_config_group(const LabeledConfig& cfg,
                                             const Tolerances& tol = {}) {
    const int n = cfg.support_size();
    if (n < 3) throw std::invalid_argument("configuration oracle needs >= 3 points");

    std::vector<Mat2> survivors;
    bool first_anchor = true;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const std::array<ProjectivePoint, 3> src{
                    cfg.points[i].point, cfg.points[j].point, cfg.points[k].point};
                const std::array<Label, 3> src_labels{
                    cfg.points[i].label, cfg.points[j].label, cfg.points[k].label};

                std::vector<Mat2> candidates;
                for (int t0 = 0; t0 < n; ++t0) {
                    if (cfg.points[t0].label != src_labels[0]) continue;
                    for (int t1 = 0; t1 < n; ++t1) {
                        if (t1 == t0 || cfg.points[t1].label != src_labels[1]) continue;
                        for (int t2 = 0; t2 < n; ++t2) {
                            if (t2 == t0 || t2 == t1 ||
                                cfg.points[t2].label != src_labels[2])
                                continue;
                            Mat2 cand = oracle_detail::map_by_svd(
                                src, {cfg.points[t0].point, cfg.points[t1].point,
                                      cfg.points[t2].point});
                            if (!oracle_detail::maps_config_to_itself(cand, cfg, tol.cluster))
                                continue;
                            Mat2 unit = MobiusElement::from_matrix(cand).mat;
                            bool seen = false;
                            for (const auto& s : candidates)
                                if (matrix_distance(s, unit) <= tol.match) {
                                    seen = true;
                                    break;
                                }
                            if (!seen) candidates.push_back(unit);
                        }
                    }
                }

                if (first_anchor) {
                    survivors = std::move(candidates);
                    first_anchor = false;
                } else {
                    std::vector<Mat2> kept;
                    for (const auto& s : survivors)
                        for (const auto& c : candidates)
                            if (matrix_distance(s, c) <= tol.match) {
                                kept.push_back(s);
                                break;
                            }
                    survivors = std::move(kept);
                }
            }
        }
    }

    for (const auto& x : survivors) {
        for (const auto& y : survivors) {
            Mat2 prod = MobiusElement::from_matrix(x * y).mat;
            bool found = false;
            for (const auto& s : survivors)
                if (matrix_distance(s, prod) <= tol.match) {
                    found = true;
                    break;
                }
            if (!found) throw tolerance_error("oracle closure check failed");
        }
    }

    return {"all-anchor intersection", static_cast<std::int64_t>(survivors.size())};
}

// Reproducible generator of valid equations for property tests and fuzzing.
// `dense` draws small integer coefficients for whole slices; otherwise each
// slice is a single monomial with a uniformly drawn exponent.
inline SurfaceForm random_valid_surface(std::mt19937_64& rng, bool dense) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> small(-3, 3);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        SurfaceForm sf;
        sf.q[5].set_coeff(0, GaussianRational(1));
        std::uniform_int_distribution<int> first(0, 1);
        int forced = first(rng); // V2 needs q0 or q1
        for (int i = 0; i < 5; ++i) {
            if (i != forced && coin(rng) == 0) continue;
            int deg = slice_degree(i);
            if (dense) {
                for (int j = 0; j <= deg; ++j)
                    sf.q[i].set_coeff(j, GaussianRational(small(rng)));
                if (sf.q[i].is_zero()) sf.q[i].set_coeff(0, GaussianRational(1));
            } else {
                std::uniform_int_distribution<int> expo(0, deg);
                int n = expo(rng);
                int c = small(rng);
                sf.q[i].set_coeff(deg - n, GaussianRational(c == 0 ? 1 : c));
            }
        }

        try {
            LabeledConfig cfg = build_config(sf);
            if (!validate(sf, cfg).is_valid) continue;
            if (cfg.support_size() == 2) {
                SolutionGroup sol =
                    diagonal_solution_group(lattice_from_two_point_config(sf, cfg));
                if (!sol.finite) continue;
            }
            return sf;
        } catch (const ill_conditioned_error&) {
            continue;
        }
    }
    throw std::runtime_error("random surface generation failed to converge");
}

} // namespace canonaut
