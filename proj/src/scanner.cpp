#include "gfl/scanner.hpp"

#include <cstdio>
#include <exception>
#include <numeric>
#include <stdexcept>

namespace gfl {
namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<Rational> linspace(const Rational& lo, const Rational& hi, long steps) {
    if (steps < 1) throw std::invalid_argument("linspace needs at least one step");
    std::vector<Rational> pts;
    pts.reserve(steps);
    if (steps == 1) {
        pts.push_back(lo);
        return pts;
    }
    const Rational span = hi - lo;
    for (long i = 0; i < steps; ++i) pts.push_back(lo + span * Rational(i, steps - 1));
    return pts;
}

GridMin grid_min_impl(const PiecewisePolynomial& g, const LatticeParams& params, long grid_n,
                      bool parallel) {
    if (grid_n < 1) throw std::invalid_argument("grid must have at least one point per axis");
    const double a = params.a.to_double();
    const double inv_a = 1.0 / a;
    const long total = grid_n * grid_n;
    std::vector<double> sigma(total);

    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < total; ++idx) {
        try {
            const long i = idx / grid_n;
            const long j = idx % grid_n;
            const EvaluationPoint pt{a * i / grid_n, inv_a * j / grid_n};
            sigma[idx] = min_singular_value(zz_matrix(g, params, pt));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    long best = 0;
    for (long idx = 1; idx < total; ++idx)
        if (sigma[idx] < sigma[best]) best = idx;

    GridMin result;
    result.sigma = sigma[best];
    result.x = a * (best / grid_n) / grid_n;
    result.t = inv_a * (best % grid_n) / grid_n;
    return result;
}

std::optional<ObstructionCertificate> try_certify_point(const Rational& a, long p, long q) {
    if (q % 4 == 2 && p % 2 == 1) {
        const long m = (q - 2) / 4;
        const long k = (p - 1) / 2;
        if (m >= 1 && k >= m + 1 && k <= 2 * m) {
            const auto [lo, hi] = a_range(m, k);
            if (lo <= a && a <= hi) return certify_conj1(m, k, a);
        }
    }
    if (q % 4 == 0 && p % 2 == 1) {
        const long m = q / 4;
        const long k = (p - 1) / 2;
        if (m >= 1 && k > m && 2 * k + 1 < 4 * m && a == Rational(1, 2 * m))
            return certify_conj2(m, k);
    }
    return std::nullopt;
}

ScanRecord classify_point(const PiecewisePolynomial& g, const Rational& a, const Rational& b,
                          long grid_n, double degenerate_threshold, double clear_threshold,
                          bool parallel) {
    const LatticeParams params = lattice_params(a, b);
    ScanRecord rec;
    rec.a = a;
    rec.b = b;
    rec.p = params.p;
    rec.q = params.q;

    if (params.p > params.q) {
        // density > 1: the rank-p condition is unsatisfiable outright
        rec.min_sigma = 0.0;
        rec.verdict = Verdict::NumericallyDegenerate;
        return rec;
    }

    const GridMin gm = grid_min_impl(g, params, grid_n, parallel);
    rec.min_sigma = gm.sigma;
    rec.argmin_x = gm.x;
    rec.argmin_t = gm.t;

    rec.certificate = try_certify_point(a, params.p, params.q);
    if (rec.certificate) {
        rec.verdict = Verdict::CertifiedNonframe;
    } else if (known_obstruction_filter(a, b, 2)) {
        rec.verdict = Verdict::KnownObstruction;
    } else if (gm.sigma < degenerate_threshold) {
        rec.verdict = Verdict::NumericallyDegenerate;
    } else {
        rec.verdict = Verdict::NoObstructionFound;
        rec.borderline = gm.sigma < clear_threshold;
    }
    return rec;
}

std::vector<ScanRecord> scan_impl(const PiecewisePolynomial& g, const ScanRegion& region,
                                  bool parallel) {
    if (!(region.a_min < region.a_max) || !(region.b_min < region.b_max))
        throw std::invalid_argument("scan region must have a_min < a_max and b_min < b_max");
    if (region.rational_denominator_cap < 1)
        throw std::invalid_argument("denominator cap must be positive");

    std::vector<ScanRecord> records;
    for (const Rational& a : linspace(region.a_min, region.a_max, region.a_steps)) {
        for (const Rational& b : linspace(region.b_min, region.b_max, region.b_steps)) {
            const Rational ab = a * b;
            if (ab.den() > region.rational_denominator_cap) continue;
            records.push_back(classify_point(g, a, b, region.grid_n, region.degenerate_threshold,
                                             region.clear_threshold, parallel));
        }
    }
    return records;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedNonframe: return "certified-nonframe";
        case Verdict::NumericallyDegenerate: return "numerically-degenerate";
        case Verdict::NoObstructionFound: return "no-obstruction-found";
        case Verdict::KnownObstruction: return "known-obstruction";
    }
    return "unknown";
}

GridMin grid_min_sigma(const PiecewisePolynomial& g, const LatticeParams& params, long grid_n) {
    return grid_min_impl(g, params, grid_n, true);
}

GridMin grid_min_sigma_serial(const PiecewisePolynomial& g, const LatticeParams& params,
                              long grid_n) {
    return grid_min_impl(g, params, grid_n, false);
}

bool known_obstruction_filter(const Rational& a, const Rational& b, long n) {
    if (n < 1) throw std::invalid_argument("window order must be positive");
    if (!(b > Rational(3, 2))) return false;
    const LatticeParams params = lattice_params(a, b);
    const Rational nearest((b + Rational(1, 2)).floor(), mpz_class(1));
    return (b - nearest).abs() <= Rational(1, n * params.q);
}

std::vector<ScanRecord> scan_region(const PiecewisePolynomial& g, const ScanRegion& region) {
    return scan_impl(g, region, true);
}

std::vector<ScanRecord> scan_region_serial(const PiecewisePolynomial& g,
                                           const ScanRegion& region) {
    return scan_impl(g, region, false);
}

std::vector<ObstructionCertificate> sweep_hyperbola_conj1(long m, long k, long samples) {
    if (samples < 2) throw std::invalid_argument("sweep needs at least two samples");
    const auto [lo, hi] = a_range(m, k);
    const std::vector<Rational> points = linspace(lo, hi, samples);

    std::vector<ObstructionCertificate> certs(points.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
        try {
            certs[i] = certify_conj1(m, k, points[i]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return certs;
}

std::vector<ScanRecord> sweep_hyperbola_conj2(long m, long k, long samples, long grid_n) {
    if (samples < 1) throw std::invalid_argument("sweep needs at least one sample");
    const Rational beta0(2 * k + 1, 2);
    const Rational alpha0(1, 2 * m);
    const Rational half_width = alpha0 * Rational(k - m, 2);
    const Rational ab = Rational(2 * k + 1, 4 * m);
    if (std::gcd(4 * m, 2 * k + 1) != 1)
        throw std::invalid_argument("family requires gcd(4m, 2k+1) = 1");

    std::vector<ScanRecord> records;
    for (const Rational& b : linspace(beta0 - half_width, beta0 + half_width, samples)) {
        const Rational a = ab / b;
        const LatticeParams params = lattice_params(a, b);
        ScanRecord rec;
        rec.a = a;
        rec.b = b;
        rec.p = params.p;
        rec.q = params.q;
        const GridMin gm = grid_min_sigma(hat_window(), params, grid_n);
        rec.min_sigma = gm.sigma;
        rec.argmin_x = gm.x;
        rec.argmin_t = gm.t;
        if (b == beta0) {
            rec.certificate = certify_conj2(m, k);
            rec.verdict = Verdict::CertifiedNonframe;
        } else {
            rec.verdict = gm.sigma < 1e-8 ? Verdict::NumericallyDegenerate
                                          : Verdict::NoObstructionFound;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string records_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = "a,b,p,q,min_sigma,argmin_x,argmin_t,verdict\n";
    for (const auto& r : records) {
        out += r.a.str() + "," + r.b.str() + "," + std::to_string(r.p) + "," +
               std::to_string(r.q) + "," + format_double(r.min_sigma) + "," +
               format_double(r.argmin_x) + "," + format_double(r.argmin_t) + "," +
               to_string(r.verdict) + "\n";
    }
    return out;
}

}  // namespace gfl
