#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfl/gabor.hpp"
#include "gfl/obstruction.hpp"

namespace gfl {

enum class Verdict { CertifiedNonframe, NumericallyDegenerate, NoObstructionFound, KnownObstruction };

std::string to_string(Verdict v);

/// Rectangular sweep request.  Lattice points are exact rationals from an
/// inclusive linspace; points whose reduced density denominator exceeds
/// rational_denominator_cap are skipped.
struct ScanRegion {
    Rational a_min, a_max, b_min, b_max;
    long a_steps = 1, b_steps = 1;
    long grid_n = 64;                       // points per axis in (x, t)
    long rational_denominator_cap = 64;
    double degenerate_threshold = 1e-8;
    double clear_threshold = 1e-6;
};

struct ScanRecord {
    Rational a, b;
    long p = 0, q = 0;
    double min_sigma = 0.0;
    double argmin_x = 0.0, argmin_t = 0.0;
    Verdict verdict = Verdict::NoObstructionFound;
    bool borderline = false;
    std::optional<ObstructionCertificate> certificate;
};

struct GridMin {
    double sigma = 0.0;
    double x = 0.0, t = 0.0;
};

/// Minimum singular value of the Zibulski-Zeevi matrix over the uniform
/// grid x in [0,a), t in [0,1/a), grid_n points per axis including 0.
/// The OpenMP kernel fills the grid in parallel and reduces in index
/// order, so its records match the serial reference bit for bit.
GridMin grid_min_sigma(const PiecewisePolynomial& g, const LatticeParams& params, long grid_n);
GridMin grid_min_sigma_serial(const PiecewisePolynomial& g, const LatticeParams& params,
                              long grid_n);

/// true iff b > 3/2 and |b - floor(b + 1/2)| <= 1/(n q), evaluated exactly;
/// q is the reduced denominator of ab and n the B-spline order.
bool known_obstruction_filter(const Rational& a, const Rational& b, long n);

/// Sweeps the region; one record per lattice point with q <= cap, ordered
/// by (a, b).  Points on a certified family delegate to the exact
/// certifiers and carry the certificate; the scanner itself never upgrades
/// a numerical zero to a certificate.
std::vector<ScanRecord> scan_region(const PiecewisePolynomial& g, const ScanRegion& region);
std::vector<ScanRecord> scan_region_serial(const PiecewisePolynomial& g, const ScanRegion& region);

/// Certifies `samples` a-values spanning the closed admissible interval,
/// endpoints included; throws CertificationError if any instance fails.
std::vector<ObstructionCertificate> sweep_hyperbola_conj1(long m, long k, long samples);

/// Numerical min-sigma sweep along ab = (2k+1)/(4m) for b in the mirrored
/// interval around (2k+1)/2; the center point is additionally certified
/// exactly.  Off-center points are only ever recorded, never certified.
std::vector<ScanRecord> sweep_hyperbola_conj2(long m, long k, long samples, long grid_n = 64);

/// CSV with the mandatory header a,b,p,q,min_sigma,argmin_x,argmin_t,verdict.
std::string records_to_csv(const std::vector<ScanRecord>& records);

}  // namespace gfl
