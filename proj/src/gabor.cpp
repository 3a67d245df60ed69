#include "gfl/gabor.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gfl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long to_long(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::invalid_argument(std::string("overflow in ") + what);
    return z.get_si();
}

}  // namespace

LatticeParams lattice_params(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::invalid_argument("lattice parameters must be positive");
    const Rational ab = a * b;
    LatticeParams params;
    params.a = a;
    params.b = b;
    params.p = to_long(ab.num(), "lattice numerator p");
    params.q = to_long(ab.den(), "lattice denominator q");
    return params;
}

std::complex<double> zak(const PiecewisePolynomial& g, const Rational& alpha, double x, double t) {
    if (alpha.sign() <= 0) throw std::invalid_argument("zak step must be positive");
    const double al = alpha.to_double();
    const double lo = g.support_lo().to_double();
    const double hi = g.support_hi().to_double();
    // x - alpha n in [lo, hi]  =>  n in [(x-hi)/alpha, (x-lo)/alpha]
    const long n0 = static_cast<long>(std::floor((x - hi) / al)) - 1;
    const long n1 = static_cast<long>(std::ceil((x - lo) / al)) + 1;
    std::complex<double> acc = 0.0;
    for (long n = n0; n <= n1; ++n) {
        const double v = g(x - al * n);
        if (v != 0.0) acc += v * std::polar(1.0, kTwoPi * al * n * t);
    }
    return acc;
}

ComplexMatrix zz_matrix(const PiecewisePolynomial& g, const LatticeParams& params,
                        const EvaluationPoint& pt) {
    const double a = params.a.to_double();
    const double b = params.b.to_double();
    ComplexMatrix m(params.p, params.q);
    for (long k = 0; k < params.p; ++k) {
        for (long l = 0; l < params.q; ++l) {
            const std::complex<double> phase =
                std::polar(1.0, kTwoPi * static_cast<double>(k * l) / params.q);
            m(k, l) = zak(g, params.a, pt.x + a * k / params.p, pt.t - b * l) * phase;
        }
    }
    return m;
}

ComplexMatrix theta_matrix(const PiecewisePolynomial& g, const LatticeParams& params,
                           const EvaluationPoint& pt) {
    const double a = params.a.to_double();
    const double aq = (params.a * Rational(params.q)).to_double();
    const double inv_b = (Rational(1) / params.b).to_double();
    const double lo = g.support_lo().to_double();
    const double hi = g.support_hi().to_double();
    ComplexMatrix m(params.p, params.q);
    for (long k = 0; k < params.p; ++k) {
        for (long l = 0; l < params.q; ++l) {
            const double off = pt.x + a * l - k * inv_b;
            const long n0 = static_cast<long>(std::floor((lo - off) / aq)) - 1;
            const long n1 = static_cast<long>(std::ceil((hi - off) / aq)) + 1;
            std::complex<double> acc = 0.0;
            for (long n = n0; n <= n1; ++n) {
                const double v = g(off + aq * n);
                if (v != 0.0) acc += v * std::polar(1.0, -kTwoPi * aq * n * pt.t);
            }
            m(k, l) = acc;
        }
    }
    return m;
}

RationalMatrix phi_matrix_exact(const PiecewisePolynomial& g, const LatticeParams& params) {
    const Rational aq = params.a * Rational(params.q);
    const Rational inv_b = Rational(1) / params.b;
    RationalMatrix m(params.q, params.p);
    for (long s = 0; s < params.q; ++s) {
        for (long n = 0; n < params.p; ++n) {
            const Rational off = params.a * Rational(s) - Rational(n) * inv_b;
            // k from ceil((lo - off)/aq) to floor((hi - off)/aq), exactly.
            const mpz_class klo = ((g.support_lo() - off) / aq).ceil();
            const mpz_class khi = ((g.support_hi() - off) / aq).floor();
            Rational acc;
            for (mpz_class k = klo; k <= khi; ++k)
                acc += g(aq * Rational(k, mpz_class(1)) + off);
            m(s, n) = acc;
        }
    }
    return m;
}

ComplexMatrix phi_matrix_float(const PiecewisePolynomial& g, const LatticeParams& params,
                               const EvaluationPoint& pt) {
    const double a = params.a.to_double();
    const double aq = (params.a * Rational(params.q)).to_double();
    const double inv_b = (Rational(1) / params.b).to_double();
    const double lo = g.support_lo().to_double();
    const double hi = g.support_hi().to_double();
    ComplexMatrix m(params.q, params.p);
    for (long s = 0; s < params.q; ++s) {
        for (long n = 0; n < params.p; ++n) {
            const double off = pt.x + a * s - n * inv_b;
            const long k0 = static_cast<long>(std::floor((lo - off) / aq)) - 1;
            const long k1 = static_cast<long>(std::ceil((hi - off) / aq)) + 1;
            std::complex<double> acc = 0.0;
            for (long k = k0; k <= k1; ++k) {
                const double v = g(off + aq * k);
                if (v != 0.0) acc += v * std::polar(1.0, kTwoPi * k * pt.t);
            }
            m(s, n) = acc;
        }
    }
    return m;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("singular values of empty matrix");
    Eigen::MatrixXcd em(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) em(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double min_singular_value(const ComplexMatrix& m) {
    const auto sv = singular_values(m);
    return sv.back();
}

std::size_t rank_numeric(const ComplexMatrix& m, double rel_tol) {
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cut = rel_tol * sv.front();
    std::size_t r = 0;
    for (double s : sv)
        if (s > cut) ++r;
    return r;
}

}  // namespace gfl
