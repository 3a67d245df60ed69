#include "gfl/bspline.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfl {
namespace {

using Poly = std::vector<Rational>;  // ascending degree, may be empty (= 0)

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

// (x + c)^e expanded in x.
Poly binomial_power(const Rational& c, std::size_t e) {
    Poly r{Rational(1)};
    const Poly base{c, Rational(1)};
    for (std::size_t i = 0; i < e; ++i) r = poly_mul(r, base);
    return r;
}

// Polynomial in t whose coefficients are polynomials in x.
using Poly2 = std::vector<Poly>;

Poly2 poly2_integrate_t(const Poly2& p) {
    Poly2 r(p.size() + 1);
    for (std::size_t e = 0; e < p.size(); ++e)
        r[e + 1] = poly_scale(p[e], Rational(1, static_cast<long>(e) + 1));
    return r;
}

// Substitute t = x - c (affine in x) or t = c (constant), producing a Poly in x.
Poly poly2_subst_shift(const Poly2& p, const Rational& c) {
    Poly r;
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (p[e].empty()) continue;
        r = poly_add(r, poly_mul(p[e], binomial_power(-c, e)));
    }
    return r;
}

Poly poly2_subst_const(const Poly2& p, const Rational& c) {
    Poly r;
    Rational pw(1);
    for (std::size_t e = 0; e < p.size(); ++e) {
        r = poly_add(r, poly_scale(p[e], pw));
        pw *= c;
    }
    return r;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<std::vector<Rational>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("piecewise polynomial needs |pieces| = |breakpoints| - 1 >= 1");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");

    breaks_f_.reserve(breakpoints_.size());
    for (const auto& b : breakpoints_) breaks_f_.push_back(b.to_double());
    pieces_f_.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        std::vector<double> pf;
        pf.reserve(p.size());
        for (const auto& c : p) pf.push_back(c.to_double());
        pieces_f_.push_back(std::move(pf));
    }
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) return Rational(0);
    std::size_t idx =
        std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin();
    // x == last breakpoint falls past the end; x in [b_i, b_{i+1}) gives i+1.
    std::size_t piece = (idx == 0) ? 0 : idx - 1;
    if (piece >= pieces_.size()) piece = pieces_.size() - 1;
    return poly_eval(pieces_[piece], x);
}

double PiecewisePolynomial::operator()(double x) const {
    if (x < breaks_f_.front() || x > breaks_f_.back()) return 0.0;
    std::size_t idx = std::upper_bound(breaks_f_.begin(), breaks_f_.end(), x) - breaks_f_.begin();
    std::size_t piece = (idx == 0) ? 0 : idx - 1;
    if (piece >= pieces_f_.size()) piece = pieces_f_.size() - 1;
    const auto& p = pieces_f_[piece];
    double r = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

Rational eval_exact(const PiecewisePolynomial& f, const Rational& x) { return f(x); }

double eval_float(const PiecewisePolynomial& f, double x) { return f(x); }

PiecewisePolynomial convolve(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    const auto& fb = f.breakpoints();
    const auto& gb = g.breakpoints();

    std::vector<Rational> knots;
    knots.reserve(fb.size() * gb.size());
    for (const auto& u : fb)
        for (const auto& v : gb) knots.push_back(u + v);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::vector<std::vector<Rational>> pieces;
    pieces.reserve(knots.size() - 1);

    for (std::size_t seg = 0; seg + 1 < knots.size(); ++seg) {
        // Between consecutive knots the active integration limits never
        // reorder, so the midpoint decides them for the whole segment.
        const Rational mid = (knots[seg] + knots[seg + 1]) / Rational(2);
        Poly total;

        for (std::size_t i = 0; i + 1 < fb.size(); ++i) {
            for (std::size_t j = 0; j + 1 < gb.size(); ++j) {
                // t ranges over [fb_i, fb_{i+1}] intersect [x - gb_{j+1}, x - gb_j].
                const bool lo_is_const = fb[i] >= mid - gb[j + 1];
                const bool hi_is_const = fb[i + 1] <= mid - gb[j];
                const Rational lo_at_mid = lo_is_const ? fb[i] : mid - gb[j + 1];
                const Rational hi_at_mid = hi_is_const ? fb[i + 1] : mid - gb[j];
                if (!(lo_at_mid < hi_at_mid)) continue;

                // Integrand f_i(t) g_j(x - t) as a Poly2 in t over x, using
                // (x - t)^d = sum_e C(d,e) (-1)^e x^(d-e) t^e.
                Poly2 integrand;
                const auto& gp = g.pieces()[j];
                for (std::size_t d = 0; d < gp.size(); ++d) {
                    if (gp[d].is_zero()) continue;
                    if (integrand.size() < d + 1) integrand.resize(d + 1);
                    Rational binom(1);
                    for (std::size_t e = 0; e <= d; ++e) {
                        Poly xp(d - e + 1);
                        xp[d - e] = gp[d] * binom * Rational((e % 2) ? -1 : 1);
                        integrand[e] = poly_add(integrand[e], xp);
                        if (e < d)
                            binom *= Rational(static_cast<long>(d - e), static_cast<long>(e) + 1);
                    }
                }
                // multiply by f_i(t)
                const auto& fp = f.pieces()[i];
                Poly2 prod(integrand.size() + fp.size());
                for (std::size_t e = 0; e < integrand.size(); ++e) {
                    if (integrand[e].empty()) continue;
                    for (std::size_t d = 0; d < fp.size(); ++d) {
                        if (fp[d].is_zero()) continue;
                        prod[e + d] = poly_add(prod[e + d], poly_scale(integrand[e], fp[d]));
                    }
                }

                const Poly2 anti = poly2_integrate_t(prod);
                const Poly upper = hi_is_const ? poly2_subst_const(anti, fb[i + 1])
                                               : poly2_subst_shift(anti, gb[j]);
                const Poly lower = lo_is_const ? poly2_subst_const(anti, fb[i])
                                               : poly2_subst_shift(anti, gb[j + 1]);
                total = poly_add(total, poly_add(upper, poly_scale(lower, Rational(-1))));
            }
        }
        if (total.empty()) total.push_back(Rational(0));
        pieces.push_back(std::move(total));
    }

    return PiecewisePolynomial(std::move(knots), std::move(pieces));
}

PiecewisePolynomial bspline(long n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    PiecewisePolynomial box({Rational(-1, 2), Rational(1, 2)}, {{Rational(1)}});
    PiecewisePolynomial q = box;
    for (long i = 1; i < n; ++i) q = convolve(q, box);
    return q;
}

}  // namespace gfl
