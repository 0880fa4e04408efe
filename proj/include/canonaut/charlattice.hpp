#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "canonaut/errors.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/validity.hpp"

namespace canonaut {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

struct SmithDecomposition {
    IntMatrix u; // unimodular, rows acted on the left
    IntMatrix d; // diagonal with d(0,0) | d(1,1) | ...
    IntMatrix v; // unimodular, columns acted on the right

    std::int64_t diag(std::size_t i) const {
        return i < d.size() && i < d[i].size() ? d[i][i] : 0;
    }
};

// Diagonalizes an integer matrix as U * M * V = D by elementary row and
// column operations, with the divisibility chain enforced on the diagonal.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    SmithDecomposition s;
    s.u = identity_matrix(rows);
    s.v = identity_matrix(cols);
    s.d = m;

    auto add_row = [&](IntMatrix& t, int dst, int src, std::int64_t f) {
        for (auto j = 0u; j < t[dst].size(); ++j) t[dst][j] += f * t[src][j];
    };
    auto add_col = [&](IntMatrix& t, int dst, int src, std::int64_t f) {
        for (auto i = 0u; i < t.size(); ++i) t[i][dst] += f * t[i][src];
    };
    auto swap_rows = [&](IntMatrix& t, int a, int b) { std::swap(t[a], t[b]); };
    auto swap_cols = [&](IntMatrix& t, int a, int b) {
        for (auto i = 0u; i < t.size(); ++i) std::swap(t[i][a], t[i][b]);
    };

    const int steps = std::min(rows, cols);
    for (int s0 = 0; s0 < steps; ++s0) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing submatrix becomes the pivot.
            int pi = -1, pj = -1;
            std::int64_t best = 0;
            for (int i = s0; i < rows; ++i)
                for (int j = s0; j < cols; ++j) {
                    std::int64_t a = std::abs(s.d[i][j]);
                    if (a != 0 && (pi < 0 || a < best)) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // submatrix is zero

            if (pi != s0) {
                swap_rows(s.d, s0, pi);
                swap_rows(s.u, s0, pi);
            }
            if (pj != s0) {
                swap_cols(s.d, s0, pj);
                swap_cols(s.v, s0, pj);
            }

            bool reduced = true;
            for (int i = s0 + 1; i < rows; ++i) {
                if (s.d[i][s0] == 0) continue;
                std::int64_t f = s.d[i][s0] / s.d[s0][s0];
                add_row(s.d, i, s0, -f);
                add_row(s.u, i, s0, -f);
                if (s.d[i][s0] != 0) reduced = false;
            }
            for (int j = s0 + 1; j < cols; ++j) {
                if (s.d[s0][j] == 0) continue;
                std::int64_t f = s.d[s0][j] / s.d[s0][s0];
                add_col(s.d, j, s0, -f);
                add_col(s.v, j, s0, -f);
                if (s.d[s0][j] != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot must divide every remaining entry for the chain to hold.
            int bad_row = -1;
            for (int i = s0 + 1; i < rows && bad_row < 0; ++i)
                for (int j = s0 + 1; j < cols; ++j)
                    if (s.d[i][j] % s.d[s0][s0] != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0) break;
            add_row(s.d, s0, bad_row, 1);
            add_row(s.u, s0, bad_row, 1);
        }
        if (s.d[s0][s0] < 0) {
            for (int j = 0; j < cols; ++j) s.d[s0][j] = -s.d[s0][j];
            for (int j = 0; j < rows; ++j) s.u[s0][j] = -s.u[s0][j];
        }
    }
    return s;
}

// One multiplicative constraint alpha^n * beta^m = 1 per row.
struct ExponentLattice {
    std::vector<std::array<std::int64_t, 2>> rows;

    void add_row(std::int64_t n, std::int64_t m) { rows.push_back({n, m}); }
};

// A pair (alpha, beta) of roots of unity: alpha = zeta_order^ea,
// beta = zeta_order^eb.
struct UnitRootPair {
    std::int64_t order = 1;
    std::int64_t ea = 0;
    std::int64_t eb = 0;

    bool satisfies(std::int64_t n, std::int64_t m) const {
        return ((n * ea + m * eb) % order + order) % order == 0;
    }
};

// Group of diagonal solutions, as invariant factors d1 | d2 with explicit
// generators, or Infinite when the constraint lattice has rank < 2.
struct SolutionGroup {
    bool finite = false;
    std::int64_t d1 = 1;
    std::int64_t d2 = 1;
    UnitRootPair gen1;
    UnitRootPair gen2;

    std::int64_t order() const { return d1 * d2; }
};

inline SolutionGroup diagonal_solution_group(const ExponentLattice& lattice) {
    SolutionGroup g;
    if (lattice.rows.size() < 2) return g; // rank < 2: infinite

    IntMatrix m;
    for (const auto& r : lattice.rows) m.push_back({r[0], r[1]});
    SmithDecomposition snf = smith_normal_form(m);
    std::int64_t d1 = snf.diag(0);
    std::int64_t d2 = snf.diag(1);
    if (d1 == 0 || d2 == 0) return g; // rank deficient: infinite

    g.finite = true;
    g.d1 = d1;
    g.d2 = d2;
    // Solutions are chi(x) = exp(2*pi*i * <s, x>) with V^-1 s in (1/d1, 1/d2)Z,
    // so the columns of V give the generator exponents.
    g.gen1 = {d1, ((snf.v[0][0] % d1) + d1) % d1, ((snf.v[1][0] % d1) + d1) % d1};
    g.gen2 = {d2, ((snf.v[0][1] % d2) + d2) % d2, ((snf.v[1][1] % d2) + d2) % d2};

    for (const auto& r : lattice.rows)
        if (!g.gen1.satisfies(r[0], r[1]) || !g.gen2.satisfies(r[0], r[1]))
            throw std::logic_error("solution group generator fails a row constraint");
    return g;
}

// Order of the subgroup of scalings lambda*Id: the gcd of the degrees of the
// nonzero nonconstant slices. Always in {2, 4, 6, 8, 10}; the validity
// condition V2 pins it to {2, 4, 8, 10}.
inline int scalar_kernel_order(const SurfaceForm& sf) {
    int g = 0;
    for (int i = 0; i + 1 < kSliceCount; ++i)
        if (!sf.q[i].is_zero()) g = std::gcd(g, slice_degree(i));
    if (g == 0)
        throw std::invalid_argument("no nonconstant slice present");
    return g;
}

// Exponent rows for a two-point configuration: for each nonzero slice the
// pair (multiplicity at the second point, multiplicity at the first point),
// matching a change of basis that sends the points to (1:0) and (0:1).
inline ExponentLattice lattice_from_two_point_config(const SurfaceForm& sf,
                                                     const LabeledConfig& cfg) {
    if (cfg.support_size() != 2)
        throw std::invalid_argument("exponent lattice requires exactly two factors");
    ExponentLattice lattice;
    for (int i = 0; i + 1 < kSliceCount; ++i) {
        if (sf.q[i].is_zero()) continue;
        lattice.add_row(cfg.points[1].label[i], cfg.points[0].label[i]);
    }
    return lattice;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

struct SurveyReport {
    std::set<std::int64_t> orders;
    std::set<std::int64_t> primes;
    std::int64_t max_pair_determinant = 0;
    std::map<std::int64_t, std::string> witnesses; // prime -> first equation realizing it
    std::int64_t enumerated = 0;
    std::int64_t valid = 0;
};

// Exhaustive enumeration of all equations whose nonconstant slices are
// single monomials: slice i is absent or x^n y^(10-2i-n). Each candidate is
// run through the real validity checks; valid ones contribute their group
// order, prime factors and row-pair determinants.
inline SurveyReport two_factor_survey(
    const std::function<void(const ExponentLattice&, const SolutionGroup&,
                             const SurfaceForm&)>& on_valid = {}) {
    SurveyReport report;

    // choice[i] = -1 for an absent slice, otherwise the x-exponent.
    std::array<int, 5> choice{};
    auto build = [&]() {
        SurfaceForm sf;
        sf.q[5].set_coeff(0, GaussianRational(1));
        for (int i = 0; i < 5; ++i) {
            if (choice[i] < 0) continue;
            sf.q[i].set_coeff(slice_degree(i) - choice[i], GaussianRational(1));
        }
        return sf;
    };

    std::function<void(int)> recurse = [&](int slice) {
        if (slice == 5) {
            ++report.enumerated;
            SurfaceForm sf = build();
            LabeledConfig cfg = build_config(sf);
            if (!validate(sf, cfg).is_valid) return;

            ExponentLattice lattice;
            for (int i = 0; i < 5; ++i)
                if (choice[i] >= 0)
                    lattice.add_row(choice[i], slice_degree(i) - choice[i]);
            SolutionGroup group = diagonal_solution_group(lattice);
            if (!group.finite) return; // outside the family; skipped silently

            ++report.valid;
            report.orders.insert(group.order());
            for (std::size_t a = 0; a < lattice.rows.size(); ++a)
                for (std::size_t b = a + 1; b < lattice.rows.size(); ++b) {
                    std::int64_t det = lattice.rows[a][0] * lattice.rows[b][1] -
                                       lattice.rows[a][1] * lattice.rows[b][0];
                    report.max_pair_determinant =
                        std::max(report.max_pair_determinant, std::abs(det));
                }
            for (std::int64_t p : prime_factors(group.order())) {
                report.primes.insert(p);
                report.witnesses.try_emplace(p, sf.equation_str());
            }
            if (on_valid) on_valid(lattice, group, sf);
            return;
        }
        for (int n = -1; n <= slice_degree(slice); ++n) {
            choice[slice] = n;
            recurse(slice + 1);
        }
    };
    recurse(0);
    return report;
}

} // namespace canonaut
