#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "canonaut/charlattice.hpp"
#include "canonaut/errors.hpp"
#include "canonaut/mobius.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/validity.hpp"

namespace canonaut {

// The full automorphism group as explicit matrices acting on (x, y) with z
// and w fixed. Every matrix fixes the defining equation exactly.
struct AutGroup {
    std::vector<Mat2> matrices;
    int order = 0;
    int kernel_order = 0; // scalar matrices lambda * Id in the group
    TypeTag mobius_type;  // image in the Mobius group
    bool two_factor = false;
};

// table[i][j] = index k with matrices[i] * matrices[j] = matrices[k].
inline std::vector<std::vector<int>> multiplication_table(const AutGroup& g,
                                                          double match_tol = 1e-7) {
    const int n = g.order;
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat2 prod = g.matrices[i] * g.matrices[j];
            int hit = -1;
            for (int k = 0; k < n; ++k) {
                if (matrix_distance_exact(prod, g.matrices[k]) <= match_tol) {
                    if (hit >= 0)
                        throw tolerance_error("ambiguous product match in multiplication table");
                    hit = k;
                }
            }
            if (hit < 0)
                throw tolerance_error("product of group elements matches no element");
            table[i][j] = hit;
        }
    }
    return table;
}

namespace detail {

inline UnitRoot combine_roots(const UnitRoot& a, const UnitRoot& b) {
    std::int64_t den = std::lcm(a.den, b.den);
    return UnitRoot{a.num * (den / a.den) + b.num * (den / b.den), den}.reduced();
}

inline AutGroup assemble_two_factor(const SurfaceForm& sf, const LabeledConfig& cfg) {
    ExponentLattice lattice = lattice_from_two_point_config(sf, cfg);
    SolutionGroup sol = diagonal_solution_group(lattice);
    if (!sol.finite)
        throw infinite_group_error(
            "infinite automorphism group: input violates validity assumptions");

    // Basis whose columns are the two configuration points; the solution
    // group is diagonal there. For monomial slices the points are exact
    // coordinate points, so no numerics enter.
    const ProjectivePoint& p1 = cfg.points[0].point;
    const ProjectivePoint& p2 = cfg.points[1].point;
    Mat2 basis{p1.u, p2.u, p1.v, p2.v};
    Mat2 basis_inv = basis.inverse();

    AutGroup g;
    g.two_factor = true;
    for (std::int64_t j = 0; j < sol.d1; ++j) {
        for (std::int64_t k = 0; k < sol.d2; ++k) {
            UnitRoot alpha = combine_roots(UnitRoot{j * sol.gen1.ea, sol.d1},
                                           UnitRoot{k * sol.gen2.ea, sol.d2});
            UnitRoot beta = combine_roots(UnitRoot{j * sol.gen1.eb, sol.d1},
                                          UnitRoot{k * sol.gen2.eb, sol.d2});
            g.matrices.push_back(basis * Mat2::diagonal(alpha.value(), beta.value()) *
                                 basis_inv);
        }
    }
    g.order = static_cast<int>(g.matrices.size());
    g.kernel_order = scalar_kernel_order(sf);
    int image = g.order / g.kernel_order;
    g.mobius_type = image == 1 ? TypeTag{TypeTag::Family::trivial, 1}
                               : TypeTag{TypeTag::Family::cyclic, image};
    return g;
}

inline AutGroup assemble_mobius(const SurfaceForm& sf, const LabeledConfig& cfg,
                                const Tolerances& tol) {
    SymmetryGroup symmetries = symmetries_of_config(cfg, tol);

    AutGroup g;
    SymmetryGroup lifted;
    for (const auto& elem : symmetries.elements) {
        auto lift = lift_element(elem, sf, symmetries.order());
        if (!lift) continue;
        lifted.elements.push_back(elem);
        for (const auto& lambda : lift->scalars)
            g.matrices.push_back(lift->base.scaled(lambda.value()));
    }

    g.order = static_cast<int>(g.matrices.size());
    g.kernel_order = scalar_kernel_order(sf);
    if (g.order != g.kernel_order * lifted.order())
        throw tolerance_error("lift count inconsistent with the scalar kernel order");
    lifted.type = classify_mobius_group(lifted);
    g.mobius_type = lifted.type;
    return g;
}

} // namespace detail

// Builds the automorphism group. Two distinct factors: diagonal solutions of
// the exponent lattice in the factor basis. Three or more: configuration
// symmetries lifted slice by slice. Closure is verified on the result.
inline AutGroup assemble(const SurfaceForm& sf, const LabeledConfig& cfg,
                         const Tolerances& tol = {}) {
    if (cfg.support_size() < 2)
        throw std::invalid_argument("assemble requires a valid surface (|Y| >= 2)");
    AutGroup g = cfg.support_size() == 2 ? detail::assemble_two_factor(sf, cfg)
                                         : detail::assemble_mobius(sf, cfg, tol);
    multiplication_table(g, tol.match); // throws on any closure defect
    return g;
}

inline AutGroup assemble(const SurfaceForm& sf, const Tolerances& tol = {}) {
    return assemble(sf, build_config(sf, tol.cluster), tol);
}

struct StructureDescriptor {
    enum class Shape { cyclic, abelian_product, central_extension, unknown };

    Shape shape = Shape::unknown;
    std::int64_t d1 = 1;      // abelian invariant factors, d1 | d2
    std::int64_t d2 = 1;
    int kernel = 0;           // central extension: scalar kernel order
    TypeTag quotient;         // central extension: Mobius image type
    bool split = false;
    std::string human_name;
    std::string diagnostic;   // set when shape == unknown

    std::string shape_str() const {
        switch (shape) {
            case Shape::cyclic: return "cyclic";
            case Shape::abelian_product: return "abelian_product";
            case Shape::central_extension: return "central_extension";
            case Shape::unknown: return "unknown";
        }
        return "?";
    }
};

namespace detail {

inline int element_order(const std::vector<std::vector<int>>& table, int identity, int i) {
    int acc = i, k = 1;
    while (acc != identity) {
        acc = table[acc][i];
        ++k;
        if (k > static_cast<int>(table.size()))
            throw std::logic_error("element order exceeds group order");
    }
    return k;
}

// Exhaustive search for a subgroup of order `target` meeting `kernel`
// only in the identity. Complements of Mobius-type quotients are at most
// 2-generated, so generator pairs suffice.
inline bool complement_exists(const std::vector<std::vector<int>>& table, int identity,
                              const std::vector<bool>& in_kernel, int target) {
    const int n = static_cast<int>(table.size());

    // Elements whose cyclic closure avoids the kernel (minus identity).
    std::vector<int> eligible;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        int acc = i;
        while (acc != identity) {
            if (in_kernel[acc]) {
                ok = false;
                break;
            }
            acc = table[acc][i];
        }
        if (ok) eligible.push_back(i);
    }

    auto closure_is_complement = [&](int a, int b) {
        std::vector<bool> in_set(n, false);
        std::vector<int> members;
        auto push = [&](int x) {
            if (!in_set[x]) {
                in_set[x] = true;
                members.push_back(x);
            }
        };
        push(identity);
        push(a);
        push(b);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                push(table[members[i]][members[j]]);
                push(table[members[j]][members[i]]);
                if (static_cast<int>(members.size()) > target) return false;
            }
        }
        if (static_cast<int>(members.size()) != target) return false;
        for (int x : members)
            if (x != identity && in_kernel[x]) return false;
        return true;
    };

    for (int a : eligible)
        for (int b : eligible)
            if (closure_is_complement(a, b)) return true;
    return false;
}

} // namespace detail

// Names the group in the classification vocabulary. Abelian groups are put
// in invariant-factor form. Nonabelian groups are reported as an extension
// of the Mobius image by the central scalar kernel, with the split question
// settled by exhaustive complement search ("." marks a non-split extension).
inline StructureDescriptor recognize_structure(const AutGroup& g,
                                               const std::vector<std::vector<int>>& table) {
    StructureDescriptor sd;
    const int n = g.order;

    int identity = -1;
    for (int i = 0; i < n; ++i)
        if (matrix_distance_exact(g.matrices[i], Mat2::identity()) <= 1e-6) identity = i;
    if (identity < 0) {
        sd.diagnostic = "identity element not found";
        sd.human_name = "unknown";
        return sd;
    }

    bool abelian = true;
    for (int i = 0; i < n && abelian; ++i)
        for (int j = i + 1; j < n; ++j)
            if (table[i][j] != table[j][i]) {
                abelian = false;
                break;
            }

    if (abelian) {
        int exponent = 1;
        for (int i = 0; i < n; ++i)
            exponent = std::max(exponent, detail::element_order(table, identity, i));
        if (n % exponent != 0) {
            sd.diagnostic = "abelian group exponent does not divide the order";
            sd.human_name = "unknown";
            return sd;
        }
        std::int64_t d2 = exponent;
        std::int64_t d1 = n / exponent;
        if (d1 == 1) {
            sd.shape = StructureDescriptor::Shape::cyclic;
            sd.d2 = d2;
            sd.human_name = "C_" + std::to_string(d2);
            sd.split = true;
            return sd;
        }
        if (d2 % d1 != 0) {
            sd.diagnostic = "abelian invariant factors fail the divisibility chain "
                            "(rank above 2?)";
            sd.human_name = "unknown";
            return sd;
        }
        sd.shape = StructureDescriptor::Shape::abelian_product;
        sd.d1 = d1;
        sd.d2 = d2;
        sd.split = true;
        sd.human_name = "C_" + std::to_string(d1) + " × C_" + std::to_string(d2);
        return sd;
    }

    // Nonabelian: central extension of the Mobius image by the scalars.
    std::vector<bool> in_kernel(n, false);
    int kernel_count = 0;
    for (int i = 0; i < n; ++i) {
        const Mat2& m = g.matrices[i];
        bool scalar = std::abs(m.b) <= 1e-7 && std::abs(m.c) <= 1e-7 &&
                      std::abs(m.a - m.d) <= 1e-7;
        if (scalar) {
            in_kernel[i] = true;
            ++kernel_count;
        }
    }
    if (kernel_count != g.kernel_order || n % kernel_count != 0) {
        sd.diagnostic = "scalar subgroup size " + std::to_string(kernel_count) +
                        " does not match the expected kernel order " +
                        std::to_string(g.kernel_order);
        sd.human_name = "unknown";
        return sd;
    }

    sd.shape = StructureDescriptor::Shape::central_extension;
    sd.kernel = g.kernel_order;
    sd.quotient = g.mobius_type;
    sd.split = detail::complement_exists(table, identity, in_kernel, n / kernel_count);
    sd.human_name = "C_" + std::to_string(sd.kernel) + (sd.split ? " × " : " . ") +
                    sd.quotient.str();
    return sd;
}

inline StructureDescriptor recognize_structure(const AutGroup& g, double match_tol = 1e-7) {
    return recognize_structure(g, multiplication_table(g, match_tol));
}

} // namespace canonaut
