#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "canonaut/errors.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/tolerances.hpp"

namespace canonaut {

// Row-major 2x2 complex matrix. Acts on points by p -> M p and on binary
// forms by the substitution x -> a x + b y, y -> c x + d y.
struct Mat2 {
    std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }
    static Mat2 diagonal(std::complex<double> p, std::complex<double> q) {
        return {p, 0.0, 0.0, q};
    }

    std::complex<double> det() const { return a * d - b * c; }

    Mat2 inverse() const {
        std::complex<double> dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    Mat2 scaled(std::complex<double> s) const { return {a * s, b * s, c * s, d * s}; }
};

inline ProjectivePoint apply(const Mat2& m, const ProjectivePoint& p) {
    return ProjectivePoint::from_pair(m.a * p.u + m.b * p.v, m.c * p.u + m.d * p.v);
}

// Coefficients of q(ax+by, cx+dy) for q given by coefficients indexed by
// the y-power.
inline std::vector<std::complex<double>> substitute_form(
    const Mat2& m, const std::vector<std::complex<double>>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> out(coeffs.size(), 0.0);

    for (int j = 0; j <= deg; ++j) {
        if (coeffs[j] == std::complex<double>(0.0)) continue;
        // Expand (a x + b y)^(deg-j) * (c x + d y)^j.
        std::vector<std::complex<double>> factor{1.0};
        auto mul_linear = [&](std::complex<double> px, std::complex<double> py, int times) {
            for (int t = 0; t < times; ++t) {
                std::vector<std::complex<double>> next(factor.size() + 1, 0.0);
                for (std::size_t k = 0; k < factor.size(); ++k) {
                    next[k] += factor[k] * px;
                    next[k + 1] += factor[k] * py;
                }
                factor = std::move(next);
            }
        };
        mul_linear(m.a, m.b, deg - j);
        mul_linear(m.c, m.d, j);
        for (std::size_t k = 0; k < factor.size(); ++k) out[k] += coeffs[j] * factor[k];
    }
    return out;
}

// Plain Frobenius distance: M and -M are different GL2 elements.
inline double matrix_distance_exact(const Mat2& x, const Mat2& y) {
    Mat2 diff{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    return std::sqrt(std::norm(diff.a) + std::norm(diff.b) + std::norm(diff.c) +
                     std::norm(diff.d));
}

// Distance up to global sign, for Mobius (PSL2) representatives.
inline double matrix_distance(const Mat2& x, const Mat2& y) {
    Mat2 sum{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    double plus = std::sqrt(std::norm(sum.a) + std::norm(sum.b) + std::norm(sum.c) +
                            std::norm(sum.d));
    return std::min(matrix_distance_exact(x, y), plus);
}

// Determinant-1 representative stored up to a canonical global sign: the
// first entry of nonnegligible modulus gets positive real part, ties broken
// toward positive imaginary part.
struct MobiusElement {
    Mat2 mat;

    static MobiusElement from_matrix(const Mat2& m) {
        std::complex<double> dt = m.det();
        if (std::abs(dt) < 1e-12)
            throw std::invalid_argument("singular matrix is not a Mobius transformation");
        MobiusElement e{m.scaled(1.0 / std::sqrt(dt))};
        e.fix_sign();
        return e;
    }

    void fix_sign() {
        for (std::complex<double> entry : {mat.a, mat.b, mat.c, mat.d}) {
            if (std::abs(entry) <= 1e-9) continue;
            bool flip = std::abs(entry.real()) > 1e-9 ? entry.real() < 0 : entry.imag() < 0;
            if (flip) mat = mat.scaled(-1.0);
            break;
        }
    }
};

struct TypeTag {
    enum class Family { trivial, cyclic, dihedral, tetrahedral, octahedral, icosahedral };

    Family family = Family::trivial;
    int order = 1;

    // Dihedral names follow the convention D_k = dihedral group of order 2k.
    std::string str() const {
        switch (family) {
            case Family::trivial: return "trivial";
            case Family::cyclic: return "C_" + std::to_string(order);
            case Family::dihedral: return "D_" + std::to_string(order / 2);
            case Family::tetrahedral: return "A_4";
            case Family::octahedral: return "S_4";
            case Family::icosahedral: return "A_5";
        }
        return "?";
    }

    friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

struct SymmetryGroup {
    std::vector<MobiusElement> elements; // includes the identity
    TypeTag type;

    int order() const { return static_cast<int>(elements.size()); }
};

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// Inverse of a modulo m, for gcd(a, m) = 1, m >= 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t t0 = 0, t1 = 1, r0 = m, r1 = ((a % m) + m) % m;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    return ((t0 % m) + m) % m;
}

// Arithmetic progression u = r (mod s), refined congruence by congruence.
struct Progression {
    std::int64_t r = 0;
    std::int64_t s = 1;

    // Intersect with u = b (mod m). Returns false when empty.
    bool intersect(std::int64_t b, std::int64_t m) {
        std::int64_t g = std::gcd(s, m);
        std::int64_t diff = b - r;
        if (((diff % g) + g) % g != 0) return false;
        std::int64_t m2 = m / g;
        std::int64_t t = 0;
        if (m2 > 1) {
            std::int64_t lhs = ((s / g) % m2 + m2) % m2;
            std::int64_t rhs = (((diff / g) % m2) + m2) % m2;
            t = mulmod(mod_inverse(lhs, m2), rhs, m2);
        }
        std::int64_t lcm = s / g * m;
        r = (r + s % lcm * t) % lcm;
        s = lcm;
        return true;
    }
};

// Matrix sending (1:0) -> p1, (0:1) -> p2, (1:1) -> p3.
inline Mat2 basis_through(const ProjectivePoint& p1, const ProjectivePoint& p2,
                          const ProjectivePoint& p3) {
    // Solve c1 * p1 + c2 * p2 = p3.
    std::complex<double> det = p1.u * p2.v - p1.v * p2.u;
    std::complex<double> c1 = (p3.u * p2.v - p3.v * p2.u) / det;
    std::complex<double> c2 = (p1.u * p3.v - p1.v * p3.u) / det;
    return {c1 * p1.u, c2 * p2.u, c1 * p1.v, c2 * p2.v};
}

// The unique Mobius map with src_j -> dst_j for three distinct points.
inline Mat2 three_point_map(const std::array<ProjectivePoint, 3>& src,
                            const std::array<ProjectivePoint, 3>& dst) {
    return basis_through(dst[0], dst[1], dst[2]) *
           basis_through(src[0], src[1], src[2]).inverse();
}

inline int find_matching_point(const LabeledConfig& cfg, const ProjectivePoint& image,
                               double tol) {
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (chordal_distance(cfg.points[i].point, image) <= tol)
            return static_cast<int>(i);
    return -1;
}

// True if M maps the labeled configuration bijectively onto itself.
inline bool preserves_config(const Mat2& m, const LabeledConfig& cfg, double tol) {
    std::vector<bool> hit(cfg.points.size(), false);
    for (const auto& lp : cfg.points) {
        int j = find_matching_point(cfg, apply(m, lp.point), tol);
        if (j < 0 || hit[j] || cfg.points[j].label != lp.label) return false;
        hit[j] = true;
    }
    return true;
}

inline int find_element(const std::vector<MobiusElement>& elems, const Mat2& m, double tol) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (matrix_distance(elems[i].mat, m) <= tol) return static_cast<int>(i);
    return -1;
}

// Smallest k >= 1 with M^k = +-Id, or 0 if the cap is exceeded.
inline int projective_order(const Mat2& m, double tol, int cap = 128) {
    Mat2 acc = m;
    for (int k = 1; k <= cap; ++k) {
        if (matrix_distance(acc, Mat2::identity()) <= tol) return k;
        acc = acc * m;
    }
    return 0;
}

} // namespace detail

// Recognition by order and element-order statistics: an order-|g| element
// means cyclic; order 2k with an inverted cyclic subgroup of order k means
// dihedral; 12/24/60 with the right maximal element order are the
// polyhedral rotation groups.
inline TypeTag classify_mobius_group(const SymmetryGroup& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("empty symmetry group");
    if (n == 1) return {TypeTag::Family::trivial, 1};

    const double tol = 1e-6;
    std::vector<int> orders;
    orders.reserve(n);
    for (const auto& e : g.elements) {
        int k = detail::projective_order(e.mat, tol);
        if (k == 0) throw tolerance_error("element order exceeded cap: unrecognized profile");
        orders.push_back(k);
    }
    const int max_order = *std::max_element(orders.begin(), orders.end());

    if (max_order == n) return {TypeTag::Family::cyclic, n};

    if (n % 2 == 0 && max_order == n / 2) {
        const int k = n / 2;
        auto it = std::find(orders.begin(), orders.end(), k);
        const Mat2& rot = g.elements[it - orders.begin()].mat;
        std::vector<int> powers;
        Mat2 acc = Mat2::identity();
        for (int t = 0; t < k; ++t) {
            int idx = detail::find_element(g.elements, acc, tol);
            if (idx < 0) throw tolerance_error("cyclic subgroup scan failed");
            powers.push_back(idx);
            acc = acc * rot;
        }
        for (int i = 0; i < n; ++i) {
            if (std::find(powers.begin(), powers.end(), i) != powers.end()) continue;
            const Mat2& h = g.elements[i].mat;
            if (detail::projective_order(h, tol) != 2) continue;
            if (matrix_distance(h * rot * h.inverse(), rot.inverse()) <= tol)
                return {TypeTag::Family::dihedral, n};
        }
    }

    if (n == 12 && max_order == 3) return {TypeTag::Family::tetrahedral, 12};
    if (n == 24 && max_order == 4) return {TypeTag::Family::octahedral, 24};
    if (n == 60 && max_order == 5) return {TypeTag::Family::icosahedral, 60};

    throw tolerance_error("unrecognized symmetry group profile (order " + std::to_string(n) +
                          ", max element order " + std::to_string(max_order) + ")");
}

// All Mobius transformations mapping the labeled configuration onto itself.
// One well-spread anchor triple is fixed; every label-compatible ordered
// triple of targets yields a candidate via the three-point construction, and
// a candidate is kept iff it maps the whole labeled multiset to itself.
inline SymmetryGroup symmetries_of_config(const LabeledConfig& cfg,
                                          const Tolerances& tol = {}) {
    const int n = cfg.support_size();
    if (n < 3)
        throw std::invalid_argument("symmetry search needs at least 3 distinct points");

    // Spread the anchors out for conditioning: farthest-point heuristic.
    int a0 = 0, a1 = -1, a2 = -1;
    double best = -1.0;
    for (int i = 1; i < n; ++i) {
        double d = chordal_distance(cfg.points[a0].point, cfg.points[i].point);
        if (d > best) {
            best = d;
            a1 = i;
        }
    }
    best = -1.0;
    for (int i = 0; i < n; ++i) {
        if (i == a0 || i == a1) continue;
        double d = std::min(chordal_distance(cfg.points[a0].point, cfg.points[i].point),
                            chordal_distance(cfg.points[a1].point, cfg.points[i].point));
        if (d > best) {
            best = d;
            a2 = i;
        }
    }
    const std::array<ProjectivePoint, 3> anchors{cfg.points[a0].point, cfg.points[a1].point,
                                                 cfg.points[a2].point};
    const std::array<Label, 3> anchor_labels{cfg.points[a0].label, cfg.points[a1].label,
                                             cfg.points[a2].label};

    SymmetryGroup group;
    for (int r0 = 0; r0 < n; ++r0) {
        if (cfg.points[r0].label != anchor_labels[0]) continue;
        for (int r1 = 0; r1 < n; ++r1) {
            if (r1 == r0 || cfg.points[r1].label != anchor_labels[1]) continue;
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == r0 || r2 == r1 || cfg.points[r2].label != anchor_labels[2])
                    continue;
                Mat2 cand = detail::three_point_map(
                    anchors,
                    {cfg.points[r0].point, cfg.points[r1].point, cfg.points[r2].point});
                if (!detail::preserves_config(cand, cfg, tol.cluster)) continue;
                MobiusElement elem = MobiusElement::from_matrix(cand);
                if (detail::find_element(group.elements, elem.mat, tol.match) < 0)
                    group.elements.push_back(elem);
            }
        }
    }

    if (group.elements.size() > 200)
        throw tolerance_error("symmetry candidate set implausibly large: tolerance breakdown");

    for (const auto& x : group.elements)
        for (const auto& y : group.elements)
            if (detail::find_element(group.elements, x.mat * y.mat, tol.match) < 0)
                throw tolerance_error("group closure failed within matching tolerance");

    std::sort(group.elements.begin(), group.elements.end(), [](const auto& l, const auto& r) {
        auto key = [](const MobiusElement& e) {
            return std::array<double, 8>{e.mat.a.real(), e.mat.a.imag(), e.mat.b.real(),
                                         e.mat.b.imag(), e.mat.c.real(), e.mat.c.imag(),
                                         e.mat.d.real(), e.mat.d.imag()};
        };
        return key(l) < key(r);
    });
    group.type = classify_mobius_group(group);
    return group;
}

// Exact root of unity exp(2 pi i num / den).
struct UnitRoot {
    std::int64_t num = 0;
    std::int64_t den = 1;

    UnitRoot reduced() const {
        UnitRoot u{((num % den) + den) % den, den};
        std::int64_t g = std::gcd(u.num == 0 ? u.den : u.num, u.den);
        u.num /= g;
        u.den /= g;
        if (u.num == 0) u.den = 1;
        return u;
    }

    std::complex<double> value() const {
        return std::polar(1.0, 2.0 * std::numbers::pi * double(num) / double(den));
    }
};

// A Mobius element realized as an honest automorphism: the matrices
// lambda * base fix every slice exactly, one lambda per scalar-kernel
// element.
struct Lift {
    Mat2 base;
    std::vector<UnitRoot> scalars;
    std::array<std::complex<double>, kSliceCount> slice_factors{}; // c_i; 1 on zero slices
};

// Computes the per-slice semi-invariance factors c_i of the substitution by
// m and solves lambda^(10-2i) * c_i = 1 over roots of unity. Factors are
// snapped to exact roots of unity of order dividing 240 * |K| (every true
// factor has finite order bounded that way) before solving. An inconsistent
// system means the point-level symmetry is not an automorphism: NoLift.
inline std::optional<Lift> lift_element(const MobiusElement& m, const SurfaceForm& sf,
                                        int config_group_order = 24) {
    Lift lift;
    lift.base = m.mat;
    lift.slice_factors.fill(std::complex<double>(1.0));
    const std::int64_t big_n = 240 * std::max(1, config_group_order);

    detail::Progression solutions; // admissible exponents u, lambda = zeta_N^u

    for (int i = 0; i + 1 < kSliceCount; ++i) {
        if (sf.q[i].is_zero()) continue;

        auto original = sf.q[i].complex_coeffs();
        auto image = substitute_form(m.mat, original);

        double max_abs = 0.0;
        int jmax = 0;
        for (std::size_t j = 0; j < original.size(); ++j)
            if (std::abs(original[j]) > max_abs) {
                max_abs = std::abs(original[j]);
                jmax = static_cast<int>(j);
            }
        std::complex<double> ci = image[jmax] / original[jmax];
        for (std::size_t j = 0; j < original.size(); ++j)
            if (std::abs(image[j] - ci * original[j]) > 1e-8 * max_abs)
                throw tolerance_error(
                    "slice not proportional under a configuration-preserving map");
        lift.slice_factors[i] = ci;

        double turns = std::arg(ci) / (2.0 * std::numbers::pi);
        std::int64_t k = ((std::llround(turns * double(big_n)) % big_n) + big_n) % big_n;
        if (std::abs(ci - UnitRoot{k, big_n}.value()) > 1e-6)
            throw tolerance_error("semi-invariance factor is not near a root of unity");

        // lambda^(10-2i) = c_i^(-1):  (10-2i) u = -k (mod N).
        std::int64_t a = slice_degree(i);
        std::int64_t b = ((-k) % big_n + big_n) % big_n;
        std::int64_t g = std::gcd(a, big_n);
        if (b % g != 0) return std::nullopt; // NoLift
        std::int64_t mod = big_n / g;
        std::int64_t u0 = detail::mulmod(detail::mod_inverse(a / g, mod), b / g, mod);
        if (!solutions.intersect(u0, mod)) return std::nullopt; // NoLift
    }

    for (std::int64_t t = 0; t < big_n / solutions.s; ++t)
        lift.scalars.push_back(UnitRoot{solutions.r + t * solutions.s, big_n}.reduced());
    return lift;
}

} // namespace canonaut
