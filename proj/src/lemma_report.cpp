#include "gfl/lemma_report.hpp"

#include <numeric>
#include <sstream>

namespace gfl {
namespace {

std::string idx(long m, long k, long s, long n) {
    std::ostringstream os;
    os << "(m,k,s,n)=(" << m << "," << k << "," << s << "," << n << ")";
    return os.str();
}

LemmaCheck pass(std::string name, std::string detail = "") {
    return {std::move(name), CheckStatus::Pass, std::move(detail)};
}
LemmaCheck fail(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Fail, std::move(detail)};
}
LemmaCheck skip(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Skip, std::move(detail)};
}

}  // namespace

LemmaReport lemma_report(long m, long k, const std::optional<Rational>& a_opt) {
    LemmaReport rep;
    rep.m = m;
    rep.k = k;
    rep.a = a_opt.value_or(Rational(1, 2 * m + 1));
    const Rational& a = rep.a;
    const auto [a_lo, a_hi] = a_range(m, k);  // validates the (m,k) shape
    if (a < a_lo || a > a_hi)
        throw std::invalid_argument("a outside the admissible interval [" + a_lo.str() + ", " +
                                    a_hi.str() + "]");
    const bool even_k = k % 2 == 0;
    const bool coprime = std::gcd(2 * m + 1, 2 * k + 1) == 1;

    // X and Y stay inside the open unit interval, and X never vanishes when
    // 2k+1 and 2(2m+1) are coprime.
    {
        LemmaCheck c = pass("x-y-ranges");
        const Rational y = y_of(a, m);
        if (!(Rational(0) < y && y < Rational(1)))
            c = fail("x-y-ranges", "Y = " + y.str() + " outside (0,1)");
        for (long s = 1; s <= 4 * m + 1 && c.status == CheckStatus::Pass; ++s)
            for (long n = 1; n <= 2 * k; ++n) {
                const Rational x = x_sn(m, k, s, n);
                if (!(Rational(-1) < x && x < Rational(1)) || (coprime && x.is_zero())) {
                    c = fail("x-y-ranges", "X out of range at " + idx(m, k, s, n));
                    break;
                }
            }
        rep.checks.push_back(c);
    }

    // Rows 0 and 2m+1 of the column-difference array vanish.
    {
        LemmaCheck c = pass("boundary-rows-zero");
        for (long n = 1; n <= k; ++n) {
            if (!a_sn_direct(m, k, a, 0, n).is_zero() ||
                !a_sn_direct(m, k, a, 2 * m + 1, n).is_zero()) {
                c = fail("boundary-rows-zero", "nonzero at n=" + std::to_string(n));
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // A_{s,n} = -A_{4m+2-s,n}.
    {
        LemmaCheck c = pass("reflection-antisymmetry");
        for (long s = 1; s <= 2 * m && c.status == CheckStatus::Pass; ++s)
            for (long n = 1; n <= k; ++n)
                if (a_sn_direct(m, k, a, s, n) != -a_sn_direct(m, k, a, 4 * m + 2 - s, n)) {
                    c = fail("reflection-antisymmetry", idx(m, k, s, n));
                    break;
                }
        rep.checks.push_back(c);
    }

    // Rows m and m+1 agree.
    {
        LemmaCheck c = pass("middle-rows-equal");
        for (long n = 1; n <= k; ++n)
            if (a_sn_direct(m, k, a, m, n) != a_sn_direct(m, k, a, m + 1, n)) {
                c = fail("middle-rows-equal", "n=" + std::to_string(n));
                break;
            }
        rep.checks.push_back(c);
    }

    // Two-term closed form of each symbol entry equals the direct sum.
    if (!coprime) {
        rep.checks.push_back(skip("entry-closed-vs-direct", "gcd(2(2m+1), 2k+1) != 1"));
    } else {
        LemmaCheck c = pass("entry-closed-vs-direct");
        for (long s = 1; s <= 4 * m + 1 && c.status == CheckStatus::Pass; ++s)
            for (long n = 1; n <= 2 * k; ++n)
                if (phi_entry_closed(m, k, a, s, n) != phi_entry_direct(m, k, a, s, n)) {
                    c = fail("entry-closed-vs-direct", idx(m, k, s, n));
                    break;
                }
        rep.checks.push_back(c);
    }

    // Piecewise closed form of A_sn equals the direct difference.
    if (!even_k) {
        rep.checks.push_back(skip("difference-closed-vs-direct", "odd k has no closed form"));
    } else if (m < 2) {
        rep.checks.push_back(skip("difference-closed-vs-direct", "m = 1 guard"));
    } else if (!coprime) {
        rep.checks.push_back(skip("difference-closed-vs-direct", "gcd(2(2m+1), 2k+1) != 1"));
    } else {
        LemmaCheck c = pass("difference-closed-vs-direct");
        for (long s = 1; s <= 2 * m && c.status == CheckStatus::Pass; ++s)
            for (long n = 1; n <= k; ++n)
                if (a_sn_closed(m, k, a, s, n) != a_sn_direct(m, k, a, s, n)) {
                    c = fail("difference-closed-vs-direct", idx(m, k, s, n));
                    break;
                }
        rep.checks.push_back(c);
    }

    // rank(A) <= k-1.
    {
        const std::size_t r = rank_exact(build_A(m, k, a));
        rep.checks.push_back(r <= static_cast<std::size_t>(k - 1)
                                 ? pass("difference-matrix-rank",
                                        "rank " + std::to_string(r) + " <= " + std::to_string(k - 1))
                                 : fail("difference-matrix-rank", "rank " + std::to_string(r)));
    }

    // Divisibility index sets and the branch-set cardinality identity need
    // even k and coprimality.
    if (!even_k || !coprime) {
        const std::string why = !even_k ? "odd k" : "gcd(2(2m+1), 2k+1) != 1";
        rep.checks.push_back(skip("divisibility-index-sets", why));
        rep.checks.push_back(skip("branch-set-cardinality", why));
    } else {
        const IndexSets is = i_sets(m, k);
        const bool ok = is.i21 == std::set<long>{m} && is.i11.empty() && is.i12.empty() &&
                        is.i22.empty();
        rep.checks.push_back(ok ? pass("divisibility-index-sets", "I21 = {m}, others empty")
                                : fail("divisibility-index-sets", "unexpected membership"));

        const IndexSetReport sr = s_sets(m, k, a_hi);  // right endpoint: equality point
        std::set<long> s_union = sr.s1a;
        s_union.insert(sr.s2a.begin(), sr.s2a.end());
        const long enumerated = static_cast<long>(s_union.size());
        const long by_formula = cardinality_floor_sum(m, k);
        rep.s_cardinality = enumerated;
        const bool card_ok = enumerated == k - m && by_formula == k - m;
        rep.checks.push_back(card_ok ? pass("branch-set-cardinality",
                                            "#S = " + std::to_string(enumerated) + " = k-m")
                                     : fail("branch-set-cardinality",
                                            "enumerated " + std::to_string(enumerated) +
                                                ", formula " + std::to_string(by_formula) +
                                                ", k-m " + std::to_string(k - m)));
    }

    // Branch sets at the report's a: disjointness and the sign-of-V split.
    if (!even_k) {
        rep.checks.push_back(skip("branch-set-signs", "odd k"));
    } else {
        const IndexSetReport sr = s_sets(m, k, a);
        bool ok = true;
        std::string why;
        for (long s : sr.s1a)
            if (sr.s2a.count(s)) { ok = false; why = "S1 and S2 intersect"; }
        for (long s : sr.s3a)
            if (sr.s4a.count(s)) { ok = false; why = "S3 and S4 intersect"; }
        for (long s : sr.s1a)
            if (sr.s3a.count(s) || sr.s4a.count(s)) { ok = false; why = "S meets T"; }
        for (long s : sr.s2a)
            if (sr.s3a.count(s) || sr.s4a.count(s)) { ok = false; why = "S meets T"; }
        if (Rational(0) <= sr.v && sr.v < Rational(1) && !(sr.s3a.empty() && sr.s4a.empty())) {
            ok = false;
            why = "V >= 0 but S3/S4 nonempty";
        }
        if (Rational(-1) < sr.v && sr.v < Rational(0) && !(sr.s1a.empty() && sr.s2a.empty())) {
            ok = false;
            why = "V < 0 but S1/S2 nonempty";
        }
        rep.checks.push_back(ok ? pass("branch-set-signs", "V = " + sr.v.str())
                                : fail("branch-set-signs", why));
    }

    // Exact certificate at this a.
    try {
        const ObstructionCertificate cert = certify_conj1(m, k, a);
        rep.checks.push_back(
            cert.verified && cert.rank < static_cast<std::size_t>(cert.p)
                ? pass("certificate", "rank " + std::to_string(cert.rank) + " < p = " +
                                          std::to_string(cert.p))
                : fail("certificate", "not verified"));
    } catch (const CertificationError& e) {
        rep.checks.push_back(fail("certificate", e.what()));
    }

    // Tilde family at the same (m,k), when it applies.
    if (k > m && 2 * k + 1 < 4 * m) {
        const long g = std::gcd(4 * m, 2 * k + 1);
        if (g != 1) {
            rep.checks.push_back(skip("tilde-family",
                                      "rejected: gcd(4m, 2k+1) = " + std::to_string(g) +
                                          " != 1"));
        } else {
            LemmaCheck c = pass("tilde-identities");
            for (long n = 1; n <= k && c.status == CheckStatus::Pass; ++n)
                if (!a_sn_tilde_direct(m, k, 0, n).is_zero() ||
                    !a_sn_tilde_direct(m, k, 2 * m, n).is_zero())
                    c = fail("tilde-identities", "boundary row nonzero at n=" + std::to_string(n));
            for (long s = 1; s <= 2 * m - 1 && c.status == CheckStatus::Pass; ++s)
                for (long n = 1; n <= k; ++n)
                    if (a_sn_tilde_direct(m, k, s, n) != -a_sn_tilde_direct(m, k, 4 * m - s, n)) {
                        c = fail("tilde-identities", "reflection fails at " + idx(m, k, s, n));
                        break;
                    }
            rep.checks.push_back(c);

            const std::size_t r = rank_exact(build_A_tilde(m, k));
            rep.checks.push_back(
                r <= static_cast<std::size_t>(k - 1)
                    ? pass("tilde-matrix-rank", "rank " + std::to_string(r) + " <= " +
                                                    std::to_string(k - 1))
                    : fail("tilde-matrix-rank", "rank " + std::to_string(r)));

            try {
                const ObstructionCertificate cert = certify_conj2(m, k);
                rep.checks.push_back(cert.verified ? pass("tilde-certificate")
                                                   : fail("tilde-certificate", "not verified"));
            } catch (const CertificationError& e) {
                rep.checks.push_back(fail("tilde-certificate", e.what()));
            }
        }
    }

    return rep;
}

std::string render_text(const LemmaReport& report) {
    std::ostringstream os;
    os << "identity report for m=" << report.m << " k=" << report.k << " a=" << report.a.str()
       << "\n";
    for (const auto& c : report.checks) {
        const char* tag = c.status == CheckStatus::Pass   ? "PASS"
                          : c.status == CheckStatus::Fail ? "FAIL"
                                                          : "SKIP";
        os << tag << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    if (report.s_cardinality) os << "#S = " << *report.s_cardinality << "\n";
    os << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace gfl
