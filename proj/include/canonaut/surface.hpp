#pragma once

#include <array>
#include <complex>
#include <vector>

#include "canonaut/wpoly.hpp"

namespace canonaut {

inline constexpr int kSurfaceDegree = 10;
inline constexpr int kSliceCount = 6;

inline int slice_degree(int i) { return kSurfaceDegree - 2 * i; }

// Homogeneous binary form in x, y of a fixed degree, or identically zero.
// coeff(j) multiplies x^(deg-j) * y^j.
class BinaryForm {
public:
    BinaryForm() : degree_(0), coeffs_(1) {}
    explicit BinaryForm(int degree) : degree_(degree), coeffs_(degree + 1) {}

    int degree() const { return degree_; }

    const GaussianRational& coeff(int j) const { return coeffs_[j]; }
    void set_coeff(int j, const GaussianRational& c) { coeffs_[j] = c; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    // Largest power of x dividing the form (degree+1 when zero).
    int x_multiplicity() const {
        for (int j = degree_; j >= 0; --j)
            if (!coeffs_[j].is_zero()) return degree_ - j;
        return degree_ + 1;
    }

    // Largest power of y dividing the form.
    int y_multiplicity() const {
        for (int j = 0; j <= degree_; ++j)
            if (!coeffs_[j].is_zero()) return j;
        return degree_ + 1;
    }

    bool is_monomial() const {
        int nonzero = 0;
        for (const auto& c : coeffs_)
            if (!c.is_zero()) ++nonzero;
        return nonzero == 1;
    }

    BinaryForm scaled(const GaussianRational& c) const {
        BinaryForm r(degree_);
        for (int j = 0; j <= degree_; ++j) r.coeffs_[j] = coeffs_[j] * c;
        return r;
    }

    std::vector<std::complex<double>> complex_coeffs() const {
        std::vector<std::complex<double>> v(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j] = coeffs_[j].to_complex();
        return v;
    }

    WPolynomial to_wpoly(int z_power) const {
        WPolynomial p;
        for (int j = 0; j <= degree_; ++j)
            p.add_term({degree_ - j, j, z_power, 0}, coeffs_[j]);
        return p;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    int degree_;
    std::vector<GaussianRational> coeffs_;
};

// The equation in normal form: w2_coeff * w^2 - sum_i q[i](x,y) * z^i,
// with deg q[i] = 10 - 2i (q[5] a constant).
struct SurfaceForm {
    std::array<BinaryForm, kSliceCount> q;
    GaussianRational w2_coeff{1};
    std::vector<std::string> trail; // normalization notes, surfaced as warnings

    SurfaceForm() {
        for (int i = 0; i < kSliceCount; ++i) q[i] = BinaryForm(slice_degree(i));
    }

    bool slice_nonzero(int i) const { return !q[i].is_zero(); }

    std::vector<int> nonzero_slices() const {
        std::vector<int> v;
        for (int i = 0; i < kSliceCount; ++i)
            if (!q[i].is_zero()) v.push_back(i);
        return v;
    }

    WPolynomial reassemble() const {
        WPolynomial p = WPolynomial::term({0, 0, 0, 2}, w2_coeff);
        for (int i = 0; i < kSliceCount; ++i)
            p = p - q[i].to_wpoly(i);
        return p;
    }

    // Scales the equation so the w^2 coefficient becomes 1. The q5 constant
    // is deliberately left as-is; only its nonvanishing matters downstream.
    SurfaceForm normalized() const {
        SurfaceForm out = *this;
        if (w2_coeff == GaussianRational(1)) return out;
        GaussianRational inv = GaussianRational(1) / w2_coeff;
        for (auto& slice : out.q) slice = slice.scaled(inv);
        out.w2_coeff = GaussianRational(1);
        out.trail.push_back("scaled equation by " + inv.str() + " to make the w^2 coefficient 1");
        return out;
    }

    std::string equation_str() const { return reassemble().str(); }
};

// Splits a degree-10 form c*w^2 - F10 into the six z-graded slices.
// Requires: homogeneous of weighted degree 10, w^2 present, no other
// w-divisible terms (run complete_square first for those).
inline SurfaceForm slice_decompose(const WPolynomial& p) {
    if (p.is_zero() || !p.is_homogeneous(kSurfaceDegree) ||
        p.max_weighted_degree() != kSurfaceDegree)
        throw std::invalid_argument("polynomial is not weighted homogeneous of degree 10");

    SurfaceForm sf;
    sf.w2_coeff = p.coefficient({0, 0, 0, 2});
    if (sf.w2_coeff.is_zero())
        throw std::invalid_argument("equation has no w^2 term");

    for (const auto& [m, c] : p.terms()) {
        if (m.ew == 2) continue; // the w^2 term itself
        if (m.ew != 0)
            throw std::invalid_argument("residual w-terms; complete the square first");
        // p = c*w^2 - sum q_i z^i, so slice coefficients flip sign.
        sf.q[m.ez].set_coeff(m.ey, -c);
    }
    return sf;
}

// Removes the linear-in-w part via w -> w - g/(2c), where p = c*w^2 + w*g + h.
inline SurfaceForm complete_square(const WPolynomial& p) {
    if (p.is_zero() || !p.is_homogeneous(kSurfaceDegree))
        throw std::invalid_argument("polynomial is not weighted homogeneous of degree 10");

    GaussianRational c2 = p.coefficient({0, 0, 0, 2});
    if (c2.is_zero())
        throw std::invalid_argument("equation has no w^2 term");

    WPolynomial g; // coefficient of w, a degree-5 form in x, y, z
    WPolynomial rest;
    for (const auto& [m, c] : p.terms()) {
        if (m.ew == 1)
            g.add_term({m.ex, m.ey, m.ez, 0}, c);
        else if (m.ew == 0)
            rest.add_term(m, c);
    }

    if (g.is_zero()) return slice_decompose(p);

    WPolynomial w2 = WPolynomial::term({0, 0, 0, 2}, c2);
    GaussianRational quarter_inv = GaussianRational(Rational(1, 4)) / c2;
    WPolynomial reduced = w2 + rest - (g * g).scaled(quarter_inv);
    SurfaceForm sf = slice_decompose(reduced);
    sf.trail.push_back("completed the square: substituted w -> w - (" +
                       g.scaled(GaussianRational(Rational(1, 2)) / c2).str() + ")");
    return sf;
}

} // namespace canonaut
