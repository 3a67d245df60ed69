#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfl/gabor.hpp"
#include "gfl/rational.hpp"
#include "gfl/rational_matrix.hpp"

namespace gfl {

/// Hyperbola family ab = (2k+1)/(2(2m+1)): time shift a inside the closed
/// admissible interval, derived b = (2k+1)/(2a(2m+1)).
struct ConjectureOneParams {
    long m = 0;
    long k = 0;
    Rational a;
};

/// Isolated family a = 1/(2m), b = (2k+1)/2 with gcd(4m, 2k+1) = 1.
struct ConjectureTwoParams {
    long m = 0;
    long k = 0;
};

/// Validating constructors: the family shape (m+1 <= k <= 2m, a inside the
/// closed admissible interval; respectively k > m, (2k+1)/(4m) < 1,
/// gcd(4m, 2k+1) = 1) is checked up front.
ConjectureOneParams conjecture_one_params(long m, long k, const Rational& a);
ConjectureTwoParams conjecture_two_params(long m, long k);

/// Machine-checkable witness that the Gabor system of the hat window at
/// (a, b) is not a frame: a nonzero integer vector gamma with
/// Phi(0,0) gamma = 0 exactly.  m, k are the family parameters as given;
/// p, q describe the (reduced) symbol matrix.
struct ObstructionCertificate {
    int conjecture = 0;  // 1 or 2
    long m = 0, k = 0;
    Rational a, b;
    long p = 0, q = 0;
    RationalMatrix phi;             // q x p, exact, at (x,t) = (0,0)
    std::vector<Rational> gamma;    // primitive integer null vector, length p
    std::size_t rank = 0;
    bool verified = false;
};

/// Thrown when an exact nullspace comes back empty where the certified
/// families guarantee a dependency; carries the matrix for inspection.
class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, RationalMatrix matrix)
        : std::runtime_error(what), matrix_(std::move(matrix)) {}
    const RationalMatrix& matrix() const { return matrix_; }

private:
    RationalMatrix matrix_;
};

struct IndexSetReport {
    std::set<long> s1a, s2a, s3a, s4a;
    std::set<long> i11, i12, i21, i22;
    std::vector<Rational> w;  // W_n for n = 1..k
    Rational v;
};

struct IndexSets {
    std::set<long> i11, i12, i21, i22;
};

/// s/(2(2m+1)) - n/(2k+1), 0 <= s <= 4m+1, 0 <= n <= 2k.
Rational x_sn(long m, long k, long s, long n);

/// s/(4m) - n/(2k+1), 0 <= s <= 4m-1, 1 <= n <= 2k.
Rational x_sn_tilde(long m, long k, long s, long n);

/// 1/(2a(2m+1)).
Rational y_of(const Rational& a, long m);

/// Closed admissible interval for a on the family ab = (2k+1)/(2(2m+1)):
/// [(2k+1)/(4km+3k+m+1), (2k+1)/(4km+k+3m+1)].  Requires m+1 <= k <= 2m.
std::pair<Rational, Rational> a_range(long m, long k);

/// Two-term closed form for the (s,n) symbol entry at (0,0), branch chosen
/// by the sign of X_sn; 1 <= s <= 4m+1, 1 <= n <= 2k, a in a_range, and
/// gcd(2k+1, 2(2m+1)) = 1 (otherwise X_sn can vanish in-range).
Rational phi_entry_closed(long m, long k, const Rational& a, long s, long n);

/// Symbol entry at (0,0) by direct summation over the support (the oracle
/// route for every closed form); 0 <= s <= 4m+1, 0 <= n <= 2k.
Rational phi_entry_direct(long m, long k, const Rational& a, long s, long n);

/// Column-difference entry A_sn = Phi_sn(0,0) - Phi_{s,2k+1-n}(0,0),
/// 0 <= s <= 4m+1, 1 <= n <= k, computed through the direct route.
Rational a_sn_direct(long m, long k, const Rational& a, long s, long n);

/// Piecewise closed form for A_sn (k even, m >= 2, 1 <= s <= 2m,
/// 1 <= n <= k); branch conditions are tested exactly on X values against
/// {0, -Y, Y-1}.  Throws when no closed form is stated for the parameters.
Rational a_sn_closed(long m, long k, const Rational& a, long s, long n);

/// Tilde-family symbol entry at (0,0), direct summation; 0 <= s <= 4m-1.
Rational phi_tilde_entry_direct(long m, long k, long s, long n);

/// Tilde column-difference entry, 0 <= s <= 4m-1, 1 <= n <= k.
Rational a_sn_tilde_direct(long m, long k, long s, long n);

/// Enumerates the four boundary-branch index sets by scanning every (s,n)
/// against the defining A-value identities, plus W_n and V = 2m+1 - 1/a.
/// Requires k even and a in a_range.
IndexSetReport s_sets(long m, long k, const Rational& a);

/// The four divisibility index sets; k even, m+1 <= k <= 2m.
IndexSets i_sets(long m, long k);

/// The signed floor sum sum_{n=1..2k} phi(n) floor(n(k-m)/(2k+1)) + (k-m)
/// with phi(n) = +1 for n = 0,1 (mod 4) and -1 otherwise; equals the
/// enumerated branch-set cardinality at a = 1/alpha.  k even.
long cardinality_floor_sum(long m, long k);

/// 2m x k matrix of A_sn, s = 1..2m, n = 1..k; a in a_range.
RationalMatrix build_A(long m, long k, const Rational& a);

/// (2m-1) x k matrix of tilde A_sn, s = 1..2m-1, n = 1..k.
/// Requires gcd(4m, 2k+1) = 1, k > m, 2k+1 < 4m.
RationalMatrix build_A_tilde(long m, long k);

/// Exact non-frame certificate on the hyperbola ab = (2k+1)/(2(2m+1)).
/// When gcd(2k+1, 2(2m+1)) != 1 the symbol matrix is built for the reduced
/// coprime shape (at the same lattice (a, b)).
ObstructionCertificate certify_conj1(long m, long k, const Rational& a);

/// Exact non-frame certificate at a = 1/(2m), b = (2k+1)/2.
ObstructionCertificate certify_conj2(long m, long k);

/// Rebuilds the symbol matrix from the certified lattice, compares it with
/// the stored one, and re-multiplies Phi gamma in exact arithmetic; true
/// iff the product is identically zero and gamma != 0.
bool verify_certificate(const ObstructionCertificate& cert);

/// The hat window (order-2 B-spline) every certificate is issued for.
const PiecewisePolynomial& hat_window();

}  // namespace gfl
