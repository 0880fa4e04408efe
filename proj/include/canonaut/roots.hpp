#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace canonaut {

namespace detail {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> t) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * t + c[j];
    return acc;
}

} // namespace detail

// All complex roots of sum_j coeffs[j] * t^j, found as eigenvalues of the
// companion matrix, then polished with a few Newton steps.
// Requires coeffs.back() != 0; degree >= 1.
inline std::vector<std::complex<double>> polynomial_roots(
    std::vector<std::complex<double>> coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> roots;
    if (n < 1) return roots;

    for (int j = 0; j < n; ++j) coeffs[j] /= coeffs[n];
    coeffs[n] = 1.0;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 1; j < n; ++j) companion(j, j - 1) = 1.0;
    for (int j = 0; j < n; ++j) companion(j, n - 1) = -coeffs[j];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    roots.reserve(n);
    for (int j = 0; j < n; ++j) roots.push_back(solver.eigenvalues()(j));

    // Derivative coefficients for Newton polish.
    std::vector<std::complex<double>> deriv(n);
    for (int j = 1; j <= n; ++j) deriv[j - 1] = coeffs[j] * double(j);

    for (auto& r : roots) {
        for (int iter = 0; iter < 3; ++iter) {
            std::complex<double> p = detail::horner(coeffs, r);
            std::complex<double> dp = detail::horner(deriv, r);
            if (std::abs(dp) < 1e-30) break;
            std::complex<double> next = r - p / dp;
            if (std::abs(detail::horner(coeffs, next)) < std::abs(p))
                r = next;
            else
                break;
        }
    }
    return roots;
}

} // namespace canonaut
