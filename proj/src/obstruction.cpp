#include "gfl/obstruction.hpp"

#include <numeric>

namespace gfl {
namespace {

// Hat value (1 - |x|)+ without going through the spline machinery, so the
// closed-form route stays independent of the generic evaluation path.
Rational hat(const Rational& x) {
    const Rational ax = x.abs();
    if (ax >= Rational(1)) return Rational(0);
    return Rational(1) - ax;
}

void check_conj1_shape(long m, long k) {
    if (m < 1 || k < m + 1 || k > 2 * m)
        throw std::invalid_argument("family requires m >= 1 and m+1 <= k <= 2m");
}

void check_in_a_range(long m, long k, const Rational& a) {
    const auto [lo, hi] = a_range(m, k);
    if (a < lo || a > hi)
        throw std::invalid_argument("a outside the admissible interval [" + lo.str() + ", " +
                                    hi.str() + "]");
}

Rational b_of(long m, long k, const Rational& a) {
    return Rational(2 * k + 1) / (Rational(2) * a * Rational(2 * m + 1));
}

ObstructionCertificate certify(int conjecture, long m, long k, const Rational& a,
                               const Rational& b) {
    ObstructionCertificate cert;
    cert.conjecture = conjecture;
    cert.m = m;
    cert.k = k;
    cert.a = a;
    cert.b = b;
    const LatticeParams params = lattice_params(a, b);
    cert.p = params.p;
    cert.q = params.q;
    cert.phi = phi_matrix_exact(hat_window(), params);
    NullspaceResult ns = nullspace_exact(cert.phi);
    if (ns.basis.empty())
        throw CertificationError("certificate failed: symbol matrix has full column rank",
                                 cert.phi);
    cert.rank = ns.rank;
    cert.gamma = std::move(ns.basis.front());
    cert.verified = verify_certificate(cert);
    if (!cert.verified)
        throw CertificationError("certificate failed verification", cert.phi);
    return cert;
}

}  // namespace

const PiecewisePolynomial& hat_window() {
    static const PiecewisePolynomial q2 = bspline(2);
    return q2;
}

Rational x_sn(long m, long k, long s, long n) {
    if (s < 0 || s > 4 * m + 1 || n < 0 || n > 2 * k)
        throw std::out_of_range("x_sn index out of range");
    return Rational(s, 2 * (2 * m + 1)) - Rational(n, 2 * k + 1);
}

Rational x_sn_tilde(long m, long k, long s, long n) {
    if (s < 0 || s > 4 * m - 1 || n < 1 || n > 2 * k)
        throw std::out_of_range("x_sn_tilde index out of range");
    return Rational(s, 4 * m) - Rational(n, 2 * k + 1);
}

Rational y_of(const Rational& a, long m) {
    if (a.sign() <= 0) throw std::invalid_argument("a must be positive");
    return Rational(1) / (Rational(2) * a * Rational(2 * m + 1));
}

std::pair<Rational, Rational> a_range(long m, long k) {
    check_conj1_shape(m, k);
    const long p = 2 * k + 1;
    return {Rational(p, 4 * k * m + 3 * k + m + 1), Rational(p, 4 * k * m + k + 3 * m + 1)};
}

Rational phi_entry_closed(long m, long k, const Rational& a, long s, long n) {
    if (s < 1 || s > 4 * m + 1 || n < 1 || n > 2 * k)
        throw std::out_of_range("closed-form entry index out of range");
    // X_sn can vanish in-range when 2k+1 and 2(2m+1) share a factor, which
    // breaks the two-term form; the direct route has no such restriction.
    if (std::gcd(2 * m + 1, 2 * k + 1) != 1)
        throw std::domain_error("closed form requires gcd(2k+1, 2(2m+1)) = 1");
    check_in_a_range(m, k, a);
    const Rational x = x_sn(m, k, s, n);
    const Rational scale = Rational(2) * a * Rational(2 * m + 1);
    if (x.is_zero())
        throw std::logic_error("X_sn = 0 is unreachable for in-range (s, n)");
    const long l0 = x.sign() > 0 ? -1 : 0;
    return hat(scale * (Rational(l0) + x)) + hat(scale * (Rational(l0 + 1) + x));
}

Rational phi_entry_direct(long m, long k, const Rational& a, long s, long n) {
    if (s < 0 || s > 4 * m + 1 || n < 0 || n > 2 * k)
        throw std::out_of_range("entry index out of range");
    const Rational x = x_sn(m, k, s, n);
    const Rational scale = Rational(2) * a * Rational(2 * m + 1);
    // All l with |scale (l + x)| <= 1.
    const mpz_class llo = ((Rational(-1) / scale) - x).ceil() - 1;
    const mpz_class lhi = ((Rational(1) / scale) - x).floor() + 1;
    Rational acc;
    for (mpz_class l = llo; l <= lhi; ++l)
        acc += hat(scale * (Rational(l, mpz_class(1)) + x));
    return acc;
}

Rational a_sn_direct(long m, long k, const Rational& a, long s, long n) {
    if (n < 1 || n > k) throw std::out_of_range("a_sn column out of range");
    return phi_entry_direct(m, k, a, s, n) - phi_entry_direct(m, k, a, s, 2 * k + 1 - n);
}

Rational a_sn_closed(long m, long k, const Rational& a, long s, long n) {
    if (k % 2 != 0) throw std::domain_error("no closed form for odd k; use a_sn_direct");
    if (m < 2) throw std::domain_error("no closed form for m = 1; use a_sn_direct");
    if (s < 1 || s > 2 * m || n < 1 || n > k)
        throw std::out_of_range("a_sn_closed index out of range");
    if (std::gcd(2 * m + 1, 2 * k + 1) != 1)
        throw std::domain_error("closed form requires gcd(2k+1, 2(2m+1)) = 1");
    check_in_a_range(m, k, a);

    const Rational y = y_of(a, m);
    const Rational b = b_of(m, k, a);
    const Rational as = a * Rational(s);
    const long half = k / 2;

    if (s <= m && n <= half) {
        // two branches split by the sign of X_sn
        return x_sn(m, k, s, n).sign() > 0 ? Rational(2 * n) / b : Rational(2) * as;
    }
    if (s > m && n > half) {
        return x_sn(m, k, s, n).sign() > 0 ? Rational(2) * a * Rational(2 * m + 1 - s)
                                           : Rational(2 * k + 1 - 2 * n) / b;
    }

    // Four-case blocks: conditions on X' = X_{s,2k+1-n} against -Y and Y-1,
    // with the non-strict sides exactly where the family's closed interval
    // can attain them.
    const Rational xp = x_sn(m, k, s, 2 * k + 1 - n);
    const bool below = xp <= -y;      // scale * X' <= -1
    const bool above = xp >= y - Rational(1);  // scale * (1 + X') >= 1

    if (s <= m) {  // n in k/2+1..k
        if (!below && above) return Rational(2 * k + 1 - 2 * n) / b;
        if (below && !above) return Rational(2) * as;
        if (!below && !above) return Rational(-1) + as + Rational(2 * k + 1 - n) / b;
        return Rational(1) + as - Rational(n) / b;
    }
    // s in m+1..2m, n in 1..k/2
    if (!below && above) return Rational(2) * a * Rational(2 * m + 1 - s);
    if (below && !above) return Rational(2 * n) / b;
    if (!below && !above) return Rational(-1) - as + Rational(2 * k + 1 + n) / b;
    return Rational(1) - as + Rational(n) / b;
}

Rational phi_tilde_entry_direct(long m, long k, long s, long n) {
    if (s < 0 || s > 4 * m - 1 || n < 0 || n > 2 * k)
        throw std::out_of_range("tilde entry index out of range");
    const Rational x = Rational(s, 4 * m) - Rational(n, 2 * k + 1);
    Rational acc;
    for (long l = -2; l <= 2; ++l) acc += hat(Rational(2) * (Rational(l) + x));
    return acc;
}

Rational a_sn_tilde_direct(long m, long k, long s, long n) {
    if (n < 1 || n > k) throw std::out_of_range("tilde column out of range");
    return phi_tilde_entry_direct(m, k, s, n) - phi_tilde_entry_direct(m, k, s, 2 * k + 1 - n);
}

IndexSets i_sets(long m, long k) {
    check_conj1_shape(m, k);
    if (k % 2 != 0) throw std::domain_error("index sets are defined for even k");
    IndexSets sets;
    const Rational den(2 * k + 1);
    for (long s = 1; s <= m; ++s) {
        for (long n = 1; n <= k / 2; ++n) {
            if (Rational(2 * n * (2 * m + 1) + (k - m)) / den == Rational(s)) sets.i11.insert(s);
            if (Rational(2 * n * (2 * m + 1) - (k - m)) / den == Rational(s)) sets.i21.insert(s);
        }
        for (long n = k / 2 + 1; n <= k; ++n) {
            if (Rational(2 * n * (2 * m + 1) + (k - m)) / den == Rational(2 * m + 1 - s))
                sets.i12.insert(s);
            if (Rational(2 * n * (2 * m + 1) - (k - m)) / den == Rational(2 * m + 1 - s))
                sets.i22.insert(s);
        }
    }
    return sets;
}

IndexSetReport s_sets(long m, long k, const Rational& a) {
    check_conj1_shape(m, k);
    if (k % 2 != 0) throw std::domain_error("branch sets are defined for even k");
    check_in_a_range(m, k, a);

    IndexSetReport rep;
    const Rational b = b_of(m, k, a);
    rep.v = Rational(2 * m + 1) - Rational(1) / a;
    for (long n = 1; n <= k; ++n)
        rep.w.push_back(Rational(2 * (2 * m + 1) * n, 2 * k + 1));

    for (long s = 1; s <= m; ++s) {
        const Rational a_refl = a * Rational(2 * m + 1 - s);
        for (long n = 1; n <= k / 2; ++n) {
            const Rational value = a_sn_direct(m, k, a, 2 * m + 1 - s, n);
            if (value == Rational(1) - a_refl + Rational(n) / b) rep.s1a.insert(s);
            if (value == Rational(-1) - a_refl + Rational(2 * k + 1 + n) / b) rep.s3a.insert(s);
        }
        for (long n = k / 2 + 1; n <= k; ++n) {
            const Rational value = a_sn_direct(m, k, a, s, n);
            if (value == Rational(1) + a * Rational(s) - Rational(n) / b) rep.s2a.insert(s);
            if (value == Rational(-1) + a * Rational(s) + Rational(2 * k + 1 - n) / b)
                rep.s4a.insert(s);
        }
    }

    const IndexSets is = i_sets(m, k);
    rep.i11 = is.i11;
    rep.i12 = is.i12;
    rep.i21 = is.i21;
    rep.i22 = is.i22;
    return rep;
}

long cardinality_floor_sum(long m, long k) {
    check_conj1_shape(m, k);
    if (k % 2 != 0) throw std::domain_error("cardinality identity is stated for even k");
    long total = 0;
    for (long n = 1; n <= 2 * k; ++n) {
        const long sign = (n % 4 == 0 || n % 4 == 1) ? 1 : -1;
        total += sign * ((n * (k - m)) / (2 * k + 1));
    }
    return total + (k - m);
}

RationalMatrix build_A(long m, long k, const Rational& a) {
    check_conj1_shape(m, k);
    check_in_a_range(m, k, a);
    RationalMatrix A(2 * m, k);
    for (long s = 1; s <= 2 * m; ++s)
        for (long n = 1; n <= k; ++n) A(s - 1, n - 1) = a_sn_direct(m, k, a, s, n);
    return A;
}

RationalMatrix build_A_tilde(long m, long k) {
    if (m < 1 || k <= m || 2 * k + 1 >= 4 * m)
        throw std::invalid_argument("tilde family requires m < k and 2k+1 < 4m");
    if (std::gcd(4 * m, 2 * k + 1) != 1)
        throw std::invalid_argument("tilde family requires gcd(4m, 2k+1) = 1");
    RationalMatrix A(2 * m - 1, k);
    for (long s = 1; s <= 2 * m - 1; ++s) {
        for (long n = 1; n <= k; ++n) {
            // two-term closed form, branch by the sign of X~
            auto closed = [&](long col) {
                const Rational x = x_sn_tilde(m, k, s, col);
                const long l0 = x.sign() > 0 ? -1 : 0;
                return hat(Rational(2) * (Rational(l0) + x)) +
                       hat(Rational(2) * (Rational(l0 + 1) + x));
            };
            A(s - 1, n - 1) = closed(n) - closed(2 * k + 1 - n);
        }
    }
    return A;
}

ConjectureOneParams conjecture_one_params(long m, long k, const Rational& a) {
    check_conj1_shape(m, k);
    check_in_a_range(m, k, a);
    return {m, k, a};
}

ConjectureTwoParams conjecture_two_params(long m, long k) {
    if (m < 1 || k <= m) throw std::invalid_argument("family requires k > m >= 1");
    if (2 * k + 1 >= 4 * m) throw std::invalid_argument("family requires density (2k+1)/(4m) < 1");
    if (std::gcd(4 * m, 2 * k + 1) != 1)
        throw std::invalid_argument("family requires gcd(4m, 2k+1) = 1");
    return {m, k};
}

ObstructionCertificate certify_conj1(long m, long k, const Rational& a) {
    const ConjectureOneParams params = conjecture_one_params(m, k, a);
    return certify(1, params.m, params.k, params.a, b_of(params.m, params.k, params.a));
}

ObstructionCertificate certify_conj2(long m, long k) {
    const ConjectureTwoParams params = conjecture_two_params(m, k);
    return certify(2, params.m, params.k, Rational(1, 2 * params.m),
                   Rational(2 * params.k + 1, 2));
}

bool verify_certificate(const ObstructionCertificate& cert) {
    if (cert.gamma.size() != static_cast<std::size_t>(cert.p)) return false;
    if (cert.phi.rows() != static_cast<std::size_t>(cert.q) ||
        cert.phi.cols() != static_cast<std::size_t>(cert.p))
        return false;
    bool nonzero = false;
    for (const auto& g : cert.gamma)
        if (!g.is_zero()) nonzero = true;
    if (!nonzero) return false;

    const LatticeParams params = lattice_params(cert.a, cert.b);
    if (params.p != cert.p || params.q != cert.q) return false;
    if (!(phi_matrix_exact(hat_window(), params) == cert.phi)) return false;

    for (const auto& r : multiply(cert.phi, cert.gamma))
        if (!r.is_zero()) return false;
    return true;
}

}  // namespace gfl
