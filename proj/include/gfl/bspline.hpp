#pragma once

#include <vector>

#include "gfl/rational.hpp"

namespace gfl {

/*
 * Compactly supported piecewise polynomial with rational breakpoints and
 * coefficients.  Evaluates to 0 outside [breakpoints.front(),
 * breakpoints.back()].  Coefficients are stored per interval in ascending
 * degree.  Values are immutable after construction; a double-precision
 * mirror is built once so the float evaluation path never touches GMP.
 */
class PiecewisePolynomial {
public:
    PiecewisePolynomial(std::vector<Rational> breakpoints,
                        std::vector<std::vector<Rational>> pieces);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<std::vector<Rational>>& pieces() const { return pieces_; }

    const Rational& support_lo() const { return breakpoints_.front(); }
    const Rational& support_hi() const { return breakpoints_.back(); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<std::vector<Rational>> pieces_;
    // float mirror
    std::vector<double> breaks_f_;
    std::vector<std::vector<double>> pieces_f_;
};

/// Exact representation of the order-n B-spline: the n-fold convolution
/// power of the centered unit box, supported on [-n/2, n/2].
PiecewisePolynomial bspline(long n);

/// Exact convolution (f*g)(x) = integral f(t) g(x-t) dt of two compactly
/// supported piecewise polynomials; the support is the Minkowski sum.
PiecewisePolynomial convolve(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

/// Exact value; 0 outside the support.  At an interior breakpoint the
/// right-hand piece is used (adjacent pieces of any continuous spline agree
/// there); the last breakpoint takes the final piece, so the discontinuous
/// order-1 box is 1 on the closed interval [-1/2, 1/2].
Rational eval_exact(const PiecewisePolynomial& f, const Rational& x);

/// Double-precision evaluation, consistent with eval_exact at rational
/// points to ~1e-14 relative error.
double eval_float(const PiecewisePolynomial& f, double x);

}  // namespace gfl
