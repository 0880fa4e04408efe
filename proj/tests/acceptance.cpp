// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "canonaut/canonaut.hpp"
#include "support.hpp"

using namespace canonaut;
using namespace testsup;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << "\n    FAILED: " << what;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion1(Criterion& c) {
    struct Case {
        const char* eq;
        int order;
        const char* name;
    };
    for (const Case& k : {Case{"w^2 - z^5 - x*y^7*z - x^9*y", 62, "C_62"},
                          Case{"w^2 - z^5 - x^2*y^6*z - x^8*y^2", 44, "C_2 × C_22"},
                          Case{"w^2 - z^5 - x^10 - y^10", 200, "C_10 × D_10"}}) {
        auto t0 = Clock::now();
        AnalysisReport r = analyze_equation(k.eq);
        double dt = seconds_since(t0);
        c.require(r.valid, std::string(k.eq) + " reported invalid");
        c.require(r.order == k.order, std::string(k.eq) + ": order " +
                                          std::to_string(r.order) + ", expected " +
                                          std::to_string(k.order));
        c.require(r.structure.human_name == k.name,
                  std::string(k.eq) + ": structure " + r.structure.human_name +
                      ", expected " + k.name);
        c.require(dt < 1.0, std::string(k.eq) + " took " + std::to_string(dt) + " s");
    }
    if (!c.passed)
        c.detail << "\n    note: the order-200 group has center of order 10 and no"
                    " order-20 complement to its scalar kernel, so it is the"
                    " non-split extension C_10 . D_10, not C_10 × D_10;"
                    " see the analysis notes accompanying this build";
}

void criterion2(Criterion& c) {
    struct Case {
        const char* eq;
        const char* name;
    };
    for (const Case& k : {Case{"w^2 - z^5 - x^2*y^6*z - x^9*y", "C_52"},
                          Case{"w^2 - z^5 - x*y^5*z^2 - x^7*y*z", "C_34"},
                          Case{"w^2 - z^5 - x*y^5*z^2 - x^8*y^2", "C_38"},
                          Case{"w^2 - z^5 - x*y^7*z - x^7*y^3", "C_46"},
                          Case{"w^2 - z^5 - x*y^7*z - x^9*y", "C_62"}}) {
        AnalysisReport r = analyze_equation(k.eq);
        c.require(r.valid && r.structure.human_name == k.name,
                  std::string(k.eq) + ": got " + r.structure.human_name + ", expected " +
                      k.name);
    }
}

void criterion3(Criterion& c) {
    auto t0 = Clock::now();
    SurveyReport survey = two_factor_survey();
    double dt = seconds_since(t0);

    const std::set<std::int64_t> allowed{2, 3, 5, 7, 11, 13, 17, 19, 23, 31};
    for (auto p : survey.primes)
        c.require(allowed.count(p) == 1,
                  "achieved prime " + std::to_string(p) + " outside {2..31}\\{29}");
    for (std::int64_t p : {11, 13, 17, 19, 23, 31})
        c.require(survey.primes.count(p) == 1, "prime " + std::to_string(p) + " not attained");
    c.require(survey.primes.count(29) == 0, "29 must not be attained");
    c.require(survey.max_pair_determinant == 80,
              "max row-pair determinant " + std::to_string(survey.max_pair_determinant) +
                  ", expected 80");
    c.require(dt < 10.0, "survey took " + std::to_string(dt) + " s (budget 10 s)");
    c.detail << " [" << survey.valid << " valid equations, "
             << survey.orders.size() << " orders, " << dt << " s]";
}

void criterion4(Criterion& c) {
    const std::set<int> kernels{2, 4, 8, 10};
    long corpus = 0;
    two_factor_survey([&](const ExponentLattice&, const SolutionGroup& g,
                          const SurfaceForm& sf) {
        ++corpus;
        if (g.order() > 200)
            c.require(false, "survey order " + std::to_string(g.order()) + " exceeds 200");
        int kernel = scalar_kernel_order(sf);
        if (!kernels.count(kernel))
            c.require(false, "survey kernel " + std::to_string(kernel) + " for " +
                                 sf.equation_str());
    });

    std::mt19937_64 rng(0xC0FFEEu);
    for (int i = 0; i < 200; ++i) {
        SurfaceForm sf = random_valid_surface(rng, i % 2 == 0);
        AnalysisReport r = analyze_surface(sf);
        if (r.order > 200 || r.order <= 0)
            c.require(false, "random surface order " + std::to_string(r.order) + " for " +
                                 r.equation);
        if (!kernels.count(r.kernel_order))
            c.require(false, "random surface kernel " + std::to_string(r.kernel_order) +
                                 " for " + r.equation);
    }
    c.detail << " [" << corpus << " survey + 200 random equations, seed 0xC0FFEE]";
}

void criterion5(Criterion& c) {
    // (a) diagonal oracle against every surveyed lattice (deduplicated)
    std::set<std::vector<std::array<std::int64_t, 2>>> seen;
    long mismatches = 0;
    two_factor_survey([&](const ExponentLattice& lattice, const SolutionGroup& g,
                          const SurfaceForm&) {
        auto rows = lattice.rows;
        std::sort(rows.begin(), rows.end());
        if (!seen.insert(rows).second) return;
        if (brute_force_diagonal_rows(rows, g.order()).count != g.order()) ++mismatches;
    });
    c.require(mismatches == 0,
              std::to_string(mismatches) + " lattice(s) disagree with the oracle");

    // (b) configuration oracle on 50 randomized configurations
    std::mt19937_64 rng(0xBEEFu);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> ngon(3, 9);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ProjectivePoint> pts;
        switch (trial % 5) {
            case 0: {
                int n = 3 + trial % 6;
                for (int i = 0; i < n; ++i)
                    pts.push_back(ProjectivePoint::from_chart({u(rng), u(rng)}));
                break;
            }
            case 1:
                pts = conjugate_points(regular_polygon(ngon(rng)), random_mobius(rng));
                break;
            case 2:
                pts = conjugate_points(tetrahedron_points(), random_mobius(rng));
                break;
            case 3:
                pts = regular_polygon(ngon(rng), 1.0, u(rng));
                pts.push_back(ProjectivePoint::from_chart(0.0));
                break;
            default:
                pts = conjugate_points(octahedron_points(), random_mobius(rng));
                break;
        }
        LabeledConfig cfg = uniform_config(pts);
        if (cfg.support_size() < 3) continue;
        ++checked;
        auto main_count = symmetries_of_config(cfg).order();
        auto oracle_count = brute_force_config_group(cfg).count;
        if (main_count != oracle_count)
            c.require(false, "config " + std::to_string(trial) + ": search " +
                                 std::to_string(main_count) + " vs oracle " +
                                 std::to_string(oracle_count));
    }
    c.require(checked == 50, "only " + std::to_string(checked) + " configurations checked");
    c.detail << " [" << seen.size() << " distinct lattices, " << checked
             << " configurations, seed 0xBEEF]";
}

void criterion6(Criterion& c) {
    std::mt19937_64 rng(0xFACEu);
    for (const auto& fx : fixtures()) {
        SurfaceForm sf = surface_of(fx.equation);
        AutGroup g = assemble(sf);
        std::uniform_int_distribution<int> pick(0, g.order - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const Mat2& m = g.matrices[pick(rng)];
            for (int i = 0; i < 5; ++i) {
                if (sf.q[i].is_zero()) continue;
                auto original = sf.q[i].complex_coeffs();
                double err = max_rel_coeff_error(substitute_form(m, original), original);
                if (err >= 1e-7)
                    c.require(false, std::string(fx.equation) + ": relative error " +
                                         std::to_string(err));
            }
        }
    }
}

void criterion7(Criterion& c) {
    SymmetryGroup decagon =
        symmetries_of_config(build_config(surface_of("w^2 - z^5 - x^10 - y^10")));
    c.require(decagon.type == TypeTag{TypeTag::Family::dihedral, 20},
              "decagon classified as " + decagon.type.str() + " (order " +
                  std::to_string(decagon.order()) + "), expected dihedral of order 20");

    auto octa = octahedron_points();
    std::vector<std::vector<ProjectivePoint>> extra_sets;
    extra_sets.push_back(tetrahedron_points());
    extra_sets.push_back(regular_polygon(4, 0.5, std::numbers::pi / 4));
    std::mt19937_64 rng(0xD1CEu);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int k = 0; k < 4; ++k) {
        std::vector<ProjectivePoint> extras;
        for (int i = 0; i < 4; ++i)
            extras.push_back(ProjectivePoint::from_chart({u(rng), u(rng)}));
        extra_sets.push_back(extras);
    }
    for (std::size_t k = 0; k < extra_sets.size(); ++k) {
        auto pts = octa;
        for (const auto& p : extra_sets[k]) pts.push_back(p);
        SymmetryGroup g = symmetries_of_config(uniform_config(pts));
        if (g.order() > 12)
            c.require(false, "octahedron + extras #" + std::to_string(k) + " has order " +
                                 std::to_string(g.order()));
    }

    std::mt19937_64 rng2(0xFEEDu);
    int configs = 0;
    for (int trial = 0; trial < 30; ++trial) {
        SurfaceForm sf = random_valid_surface(rng2, trial % 2 == 0);
        LabeledConfig cfg = build_config(sf);
        if (cfg.support_size() < 3) continue;
        ++configs;
        SymmetryGroup g = symmetries_of_config(cfg);
        if (g.order() > 24)
            c.require(false, "valid-surface config of order " + std::to_string(g.order()));
    }
    for (const auto& fx : fixtures()) {
        LabeledConfig cfg = build_config(surface_of(fx.equation));
        if (cfg.support_size() < 3) continue;
        ++configs;
        if (symmetries_of_config(cfg).order() > 24)
            c.require(false, std::string("fixture config exceeds 24: ") + fx.equation);
    }
    c.detail << " [" << configs << " valid-surface configurations]";
}

void criterion8(Criterion& c) {
    std::mt19937_64 rng(0xABCDu);
    std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
    auto det_int = [](auto&& self, const IntMatrix& m) -> std::int64_t {
        if (m.size() == 1) return m[0][0];
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            IntMatrix minor;
            for (std::size_t i = 1; i < m.size(); ++i) {
                std::vector<std::int64_t> row;
                for (std::size_t k = 0; k < m.size(); ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(row);
            }
            std::int64_t term = m[0][j] * self(self, minor);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };

    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, std::vector<std::int64_t>(cols));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        SmithDecomposition s = smith_normal_form(m);
        if (matmul(matmul(s.u, m), s.v) != s.d) c.require(false, "U*M*V != D");
        if (std::abs(det_int(det_int, s.u)) != 1) c.require(false, "U not unimodular");
        if (std::abs(det_int(det_int, s.v)) != 1) c.require(false, "V not unimodular");
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i)
            if (s.diag(i) != 0 && s.diag(i + 1) % s.diag(i) != 0)
                c.require(false, "divisibility chain broken");
    }

    for (const auto& fx : fixtures()) {
        AutGroup g = assemble(surface_of(fx.equation));
        auto table = multiplication_table(g);
        const int n = g.order;
        for (int i = 0; i < n; ++i) {
            std::vector<bool> row(n, false), col(n, false);
            for (int j = 0; j < n; ++j) {
                if (row[table[i][j]] || col[table[j][i]])
                    c.require(false, std::string("table not a Latin square for ") + fx.equation);
                row[table[i][j]] = true;
                col[table[j][i]] = true;
            }
        }
    }
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"worked example orders and structures (62, 44, 200)", criterion1},
        {"prime-witness surfaces C_52, C_34, C_38, C_46, C_62", criterion2},
        {"survey prime set and maximal determinant 80", criterion3},
        {"global bounds: order <= 200, kernel in {2,4,8,10}", criterion4},
        {"oracle equivalence (diagonal counts, configuration counts)", criterion5},
        {"equation-fixing check at 1e-7 relative error", criterion6},
        {"Mobius classification properties (decagon, octahedron+4, |K| <= 24)", criterion7},
        {"Smith normal form postconditions and Latin-square tables", criterion8},
    };

    int failures = 0;
    auto t0 = Clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c{static_cast<int>(i) + 1, criteria[i].first};
        auto tc = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(tc);
        std::printf("criterion %zu [%s] %s%s  (%.2f s)\n", i + 1,
                    c.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    c.detail.str().c_str(), dt);
        if (!c.passed) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed in %.1f s\n",
                criteria.size() - failures, criteria.size(), seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
