#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gfl/bspline.hpp"
#include "gfl/rational.hpp"
#include "gfl/rational_matrix.hpp"

namespace gfl {

/// Lattice pair (a, b) with the reduced density ab = p/q, gcd(p,q) = 1.
/// The density condition ab <= 1 is recorded as p <= q but not enforced.
struct LatticeParams {
    Rational a;
    Rational b;
    long p = 0;
    long q = 0;
};

struct EvaluationPoint {
    double x = 0.0;
    double t = 0.0;
};

struct ComplexMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::complex<double>> entries;  // row-major

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    std::complex<double>& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
};

/// Validates positivity and reduces ab to p/q.
LatticeParams lattice_params(const Rational& a, const Rational& b);

/// Zak transform sum_n g(x - alpha n) e^{2 pi i alpha n t}; the sum is
/// finite because g is compactly supported.
std::complex<double> zak(const PiecewisePolynomial& g, const Rational& alpha, double x, double t);

/// p x q Zibulski-Zeevi matrix: entry (k,l) = Z_a g(x + a k/p, t - b l) e^{2 pi i k l / q}.
ComplexMatrix zz_matrix(const PiecewisePolynomial& g, const LatticeParams& params,
                        const EvaluationPoint& pt);

/// p x q variant: entry (k,l) = sum_n g(x + a q n + a l - k/b) e^{-2 pi i a q n t}.
/// At (0,0) this is exactly the transpose of the rational symbol matrix.
ComplexMatrix theta_matrix(const PiecewisePolynomial& g, const LatticeParams& params,
                           const EvaluationPoint& pt);

/// q x p symbol matrix at (x,t) = (0,0), exact: entry (s,n) = sum_k g(aqk + as - n/b).
/// Summation bounds are computed in exact arithmetic from the support of g.
RationalMatrix phi_matrix_exact(const PiecewisePolynomial& g, const LatticeParams& params);

/// q x p symbol matrix, floating: entry (s,n) = sum_k g(x + aqk + as - n/b) e^{2 pi i k t}.
ComplexMatrix phi_matrix_float(const PiecewisePolynomial& g, const LatticeParams& params,
                               const EvaluationPoint& pt);

/// Full singular spectrum, descending (matrices here are at most ~50x50).
std::vector<double> singular_values(const ComplexMatrix& m);

/// Smallest of the min(rows, cols) singular values.
double min_singular_value(const ComplexMatrix& m);

/// Number of singular values above rel_tol * sigma_max.
std::size_t rank_numeric(const ComplexMatrix& m, double rel_tol = 1e-9);

}  // namespace gfl
