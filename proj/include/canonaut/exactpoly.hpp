#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "canonaut/rational.hpp"

// Exact univariate polynomial arithmetic over Q(i), used to split binary
// forms into square-free factors with exact multiplicities before any
// numerical root finding. Coefficient growth in the Euclidean remainder
// sequence can overflow 64-bit rationals; callers catch overflow_error and
// fall back to purely numerical clustering.

namespace canonaut::exactpoly {

using Poly = std::vector<GaussianRational>; // coeff[j] multiplies t^j

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t j = 1; j < p.size(); ++j)
        d.push_back(p[j] * GaussianRational(static_cast<std::int64_t>(j)));
    trim(d);
    return d;
}

inline Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    GaussianRational inv = GaussianRational(1) / p.back();
    for (auto& c : p) c = c * inv;
    return p;
}

// Euclidean remainder of a by monic-normalized b.
inline Poly remainder(Poly a, Poly b) {
    b = monic(std::move(b));
    trim(a);
    while (degree(a) >= degree(b)) {
        GaussianRational lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] -= lead * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Exact quotient; requires that b divides a.
inline Poly quotient(const Poly& a, const Poly& b) {
    Poly num = a;
    trim(num);
    Poly den = b;
    trim(den);
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    GaussianRational lead_inv = GaussianRational(1) / den.back();
    while (degree(num) >= degree(den)) {
        GaussianRational c = num.back() * lead_inv;
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[j + shift] -= c * den[j];
        num.pop_back();
        trim(num);
    }
    if (!num.empty())
        throw std::logic_error("inexact polynomial division");
    trim(q);
    return q;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Yun's algorithm: p = prod_i f_i^i with the f_i square-free and pairwise
// coprime. Returns the nonconstant (factor, multiplicity) pairs.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& input) {
    std::vector<std::pair<Poly, int>> out;
    Poly p = monic(input);
    if (degree(p) < 1) return out;

    Poly g = gcd(p, derivative(p));
    if (degree(g) < 1) {
        out.emplace_back(p, 1);
        return out;
    }

    Poly w = quotient(p, g);
    Poly y = quotient(derivative(p), g);
    int i = 1;
    while (degree(w) > 0) {
        Poly dw = derivative(w);
        Poly z(std::max(y.size(), dw.size()));
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j < y.size()) z[j] += y[j];
            if (j < dw.size()) z[j] -= dw[j];
        }
        trim(z);
        Poly f = gcd(w, z);
        if (degree(f) > 0) out.emplace_back(f, i);
        w = quotient(w, f);
        y = quotient(z, f);
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Squarefree structure modulo a large prime. When the rational Euclidean
// sequence overflows, the multiplicity pattern (factor degree, multiplicity)
// is still computable with no coefficient growth by running Yun over GF(p)
// with p = 1 (mod 4), mapping i to a square root of -1. The caller verifies
// the resulting pattern numerically, so a bad prime can only cause a
// retried or rejected computation, never a wrong one.

namespace modular {

struct Prime {
    std::int64_t p;
    std::int64_t imag_unit; // square root of -1 mod p
};

inline constexpr Prime kPrimes[] = {
    {1073741789, 140687844},
    {1073741741, 289525921},
    {1073741717, 33787048},
};

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

using FpPoly = std::vector<std::int64_t>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int fp_degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

// Reduction of a Q(i) polynomial; fails (nullopt) when p divides a
// denominator or the leading coefficient.
inline std::optional<FpPoly> reduce(const Poly& q, const Prime& pr) {
    FpPoly f(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
        const Rational &re = q[j].real(), &im = q[j].imag();
        if (re.den() % pr.p == 0 || im.den() % pr.p == 0) return std::nullopt;
        std::int64_t a = mulmod(((re.num() % pr.p) + pr.p) % pr.p,
                                invmod(re.den() % pr.p, pr.p), pr.p);
        std::int64_t b = mulmod(((im.num() % pr.p) + pr.p) % pr.p,
                                invmod(im.den() % pr.p, pr.p), pr.p);
        f[j] = (a + mulmod(b, pr.imag_unit, pr.p)) % pr.p;
    }
    if (!q.empty() && !q.back().is_zero() && f.back() == 0) return std::nullopt;
    fp_trim(f);
    return f;
}

inline FpPoly fp_derivative(const FpPoly& f, std::int64_t p) {
    FpPoly d;
    for (std::size_t j = 1; j < f.size(); ++j)
        d.push_back(mulmod(f[j], static_cast<std::int64_t>(j), p));
    fp_trim(d);
    return d;
}

inline FpPoly fp_monic(FpPoly f, std::int64_t p) {
    fp_trim(f);
    if (f.empty()) return f;
    std::int64_t inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

inline FpPoly fp_remainder(FpPoly a, FpPoly b, std::int64_t p) {
    b = fp_monic(std::move(b), p);
    fp_trim(a);
    while (fp_degree(a) >= fp_degree(b)) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] = ((a[j + shift] - mulmod(lead, b[j], p)) % p + p) % p;
        a.pop_back();
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_quotient(FpPoly a, const FpPoly& b, std::int64_t p) {
    fp_trim(a);
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    std::int64_t lead_inv = invmod(b.back(), p);
    while (fp_degree(a) >= fp_degree(b)) {
        std::int64_t c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] = ((a[j + shift] - mulmod(c, b[j], p)) % p + p) % p;
        a.pop_back();
        fp_trim(a);
    }
    fp_trim(q);
    return q;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_remainder(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

} // namespace modular

// (number of distinct roots, multiplicity) pairs of the input mod one of the
// built-in primes; nullopt if every prime is degenerate for this input.
inline std::optional<std::vector<std::pair<int, int>>> modular_multiplicity_structure(
    const Poly& input) {
    using namespace modular;
    for (const Prime& pr : kPrimes) {
        auto reduced = reduce(input, pr);
        if (!reduced || fp_degree(*reduced) != degree(input)) continue;
        const std::int64_t p = pr.p;

        std::vector<std::pair<int, int>> out;
        FpPoly f = fp_monic(*reduced, p);
        FpPoly g = fp_gcd(f, fp_derivative(f, p), p);
        if (fp_degree(g) < 1) {
            out.emplace_back(fp_degree(f), 1);
            return out;
        }
        FpPoly w = fp_quotient(f, g, p);
        FpPoly y = fp_quotient(fp_derivative(f, p), g, p);
        int i = 1;
        while (fp_degree(w) > 0) {
            FpPoly dw = fp_derivative(w, p);
            FpPoly z(std::max(y.size(), dw.size()), 0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                std::int64_t a = j < y.size() ? y[j] : 0;
                std::int64_t b = j < dw.size() ? dw[j] : 0;
                z[j] = ((a - b) % p + p) % p;
            }
            fp_trim(z);
            FpPoly a = fp_gcd(w, z, p);
            if (fp_degree(a) > 0) out.emplace_back(fp_degree(a), i);
            w = fp_quotient(w, a, p);
            y = fp_quotient(z, a, p);
            ++i;
        }
        int total = 0;
        for (const auto& [d, m] : out) total += d * m;
        if (total == degree(input)) return out;
    }
    return std::nullopt;
}

} // namespace canonaut::exactpoly
