#pragma once

#include <map>
#include <string>
#include <tuple>

#include "canonaut/rational.hpp"

namespace canonaut {

// Weights of (x, y, z, w) in the graded ring.
inline constexpr int kWeightX = 1;
inline constexpr int kWeightY = 1;
inline constexpr int kWeightZ = 2;
inline constexpr int kWeightW = 5;

struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;
    int ew = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Print order: w-part first, then z, x, y, descending powers.
    // Gives "w^2 - z^5 - x^10 - y^10" for the flagship equation.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tuple(b.ew, b.ez, b.ex, b.ey) < std::tuple(a.ew, a.ez, a.ex, a.ey);
    }
};

inline int weighted_degree(const Monomial& m) {
    return m.ex * kWeightX + m.ey * kWeightY + m.ez * kWeightZ + m.ew * kWeightW;
}

// Polynomial in C[x,y,z,w] with exact Q(i) coefficients.
// Invariant: no stored coefficient is zero.
class WPolynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    WPolynomial() = default;

    static WPolynomial term(const Monomial& m, const GaussianRational& c) {
        WPolynomial p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    // -1 for the zero polynomial; otherwise all terms share this degree
    // only if the polynomial is weighted homogeneous (see is_homogeneous).
    int max_weighted_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m));
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_)
            if (weighted_degree(m) != degree) return false;
        return true;
    }

    friend WPolynomial operator+(const WPolynomial& a, const WPolynomial& b) {
        WPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend WPolynomial operator-(const WPolynomial& a, const WPolynomial& b) {
        WPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
        WPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez, ma.ew + mb.ew},
                           ca * cb);
        return r;
    }

    WPolynomial scaled(const GaussianRational& c) const {
        WPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    friend bool operator==(const WPolynomial& a, const WPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coef = c.str();
            bool negated = false;
            if (coef.size() && coef[0] == '-' && c.is_real()) {
                coef.erase(0, 1);
                negated = true;
            }
            if (first) {
                if (negated) out += "-";
            } else {
                out += negated ? " - " : " + ";
            }
            first = false;

            std::string vars = monomial_str(m);
            if (vars.empty()) {
                out += coef;
            } else if (coef == "1") {
                out += vars;
            } else {
                out += coef + "*" + vars;
            }
        }
        return out;
    }

private:
    static std::string monomial_str(const Monomial& m) {
        std::string s;
        auto app = [&s](char v, int e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += v;
            if (e != 1) s += "^" + std::to_string(e);
        };
        app('x', m.ex);
        app('y', m.ey);
        app('z', m.ez);
        app('w', m.ew);
        return s;
    }

    TermMap terms_;
};

} // namespace canonaut
