#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gfl/bspline.hpp"
#include "gfl/gabor.hpp"
#include "gfl/obstruction.hpp"

using gfl::ComplexMatrix;
using gfl::EvaluationPoint;
using gfl::LatticeParams;
using gfl::Rational;
using gfl::RationalMatrix;

namespace {

// Exact theta at (0,0), built independently of the library's summation
// bound logic: entry (k,l) = sum_n hat(aq n + a l - k/b) over a wide window.
RationalMatrix theta00_exact(const LatticeParams& params) {
    const auto& g = gfl::hat_window();
    const Rational aq = params.a * Rational(params.q);
    const Rational inv_b = Rational(1) / params.b;
    RationalMatrix m(params.p, params.q);
    for (long k = 0; k < params.p; ++k) {
        for (long l = 0; l < params.q; ++l) {
            const Rational off = params.a * Rational(l) - Rational(k) * inv_b;
            const long n_lo =
                static_cast<long>(((g.support_lo() - off) / aq).floor().get_si()) - 3;
            const long n_hi =
                static_cast<long>(((g.support_hi() - off) / aq).ceil().get_si()) + 3;
            Rational acc;
            for (long n = n_lo; n <= n_hi; ++n)
                acc += gfl::eval_exact(g, aq * Rational(n) + off);
            m(k, l) = acc;
        }
    }
    return m;
}

std::vector<std::pair<Rational, Rational>> random_lattices(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(1, 12);
    std::vector<std::pair<Rational, Rational>> out;
    while (static_cast<int>(out.size()) < count) {
        const Rational a(d(rng), d(rng));
        const Rational b(d(rng), d(rng));
        const Rational ab = a * b;
        if (ab > Rational(1) || ab.den() > 24) continue;
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace

TEST_CASE("lattice_params reduces the density") {
    auto p = gfl::lattice_params(Rational(1, 3), Rational(5, 2));
    CHECK(p.p == 5);
    CHECK(p.q == 6);
    p = gfl::lattice_params(Rational(1, 2), Rational(3, 2));
    CHECK(p.p == 3);
    CHECK(p.q == 4);
    p = gfl::lattice_params(Rational(1, 4), Rational(7, 2));
    CHECK(p.p == 7);
    CHECK(p.q == 8);
    CHECK_THROWS_AS(gfl::lattice_params(Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(gfl::lattice_params(Rational(1), Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("zak values at pinned points") {
    const auto& q2 = gfl::hat_window();
    CHECK(gfl::zak(q2, Rational(1), 0.0, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gfl::zak(q2, Rational(1), 0.5, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gfl::zak(q2, Rational(1), 0.0, 0.0).imag() == doctest::Approx(0.0));
}

TEST_CASE("zak quasi-periodicity") {
    const auto& q2 = gfl::hat_window();
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> xd(-2.0, 2.0), td(-3.0, 3.0);
    const Rational alpha(2, 3);
    const double al = alpha.to_double();
    for (int i = 0; i < 50; ++i) {
        const double x = xd(rng), t = td(rng);
        const auto z = gfl::zak(q2, alpha, x, t);
        // shifting x by alpha multiplies by the phase e^{2 pi i alpha t}
        const auto phase = std::polar(1.0, 2.0 * std::numbers::pi * al * t);
        CHECK(std::abs(gfl::zak(q2, alpha, x + al, t) - phase * z) < 1e-12);
        CHECK(std::abs(gfl::zak(q2, alpha, x, t + 1.0 / al) - z) < 1e-12);
    }
}

TEST_CASE("zz_matrix pinned cases") {
    const auto& q2 = gfl::hat_window();

    const auto unit = gfl::lattice_params(Rational(1), Rational(1));
    const auto m1 = gfl::zz_matrix(q2, unit, {0.0, 0.0});
    CHECK(m1.rows == 1);
    CHECK(m1.cols == 1);
    CHECK(m1(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));

    const auto obstructed = gfl::lattice_params(Rational(1, 3), Rational(5, 2));
    const auto mz = gfl::zz_matrix(q2, obstructed, {0.0, 0.0});
    CHECK(mz.rows == 5);
    CHECK(mz.cols == 6);
    CHECK(gfl::min_singular_value(mz) < 1e-10);

    const auto frame = gfl::lattice_params(Rational(1, 2), Rational(3, 2));
    const auto mf = gfl::zz_matrix(q2, frame, {0.0, 0.0});
    CHECK(mf.rows == 3);
    CHECK(mf.cols == 4);
    CHECK(gfl::min_singular_value(mf) > 1e-6);
}

TEST_CASE("theta at the origin is the exact symbol transpose") {
    const auto& q2 = gfl::hat_window();
    for (const auto& [a, b] : random_lattices(1234, 12)) {
        const auto params = gfl::lattice_params(a, b);
        const RationalMatrix phi = gfl::phi_matrix_exact(q2, params);
        const RationalMatrix theta = theta00_exact(params);
        REQUIRE(theta.transposed().rows() == phi.rows());
        CHECK(theta.transposed() == phi);

        const ComplexMatrix theta_f = gfl::theta_matrix(q2, params, {0.0, 0.0});
        for (std::size_t i = 0; i < theta_f.rows; ++i)
            for (std::size_t j = 0; j < theta_f.cols; ++j) {
                CHECK(theta_f(i, j).real() ==
                      doctest::Approx(theta(i, j).to_double()).epsilon(1e-13));
                CHECK(theta_f(i, j).imag() == doctest::Approx(0.0));
            }
    }
}

TEST_CASE("theta pinned cases") {
    const auto& q2 = gfl::hat_window();
    const auto unit = gfl::lattice_params(Rational(1), Rational(1));
    const auto m1 = gfl::theta_matrix(q2, unit, {0.0, 0.0});
    CHECK(m1(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));

    const auto obstructed = gfl::lattice_params(Rational(1, 3), Rational(5, 2));
    CHECK(gfl::rank_numeric(gfl::theta_matrix(q2, obstructed, {0.0, 0.0})) == 4);
}

TEST_CASE("exact symbol matrix pinned entries") {
    const auto& q2 = gfl::hat_window();
    const auto params = gfl::lattice_params(Rational(1, 3), Rational(5, 2));
    const RationalMatrix phi = gfl::phi_matrix_exact(q2, params);
    REQUIRE(phi.rows() == 6);
    REQUIRE(phi.cols() == 5);
    CHECK(phi(0, 0) == Rational(1));
    CHECK(phi(0, 1) == Rational(3, 5));
    CHECK(phi(0, 2) == Rational(1, 5));
    CHECK(phi(0, 3) == Rational(1, 5));
    CHECK(phi(0, 4) == Rational(3, 5));
    CHECK(phi(3, 0) == Rational(0));
}

TEST_CASE("symbol rows reflect against reflected columns") {
    const auto& q2 = gfl::hat_window();
    for (const auto& [m, k, a] : {std::tuple<long, long, Rational>{1, 2, Rational(1, 3)},
                                  {2, 4, Rational(1, 5)},
                                  {3, 5, Rational(11, 78)}}) {
        const Rational b = Rational(2 * k + 1) / (Rational(2) * a * Rational(2 * m + 1));
        const auto params = gfl::lattice_params(a, b);
        const RationalMatrix phi = gfl::phi_matrix_exact(q2, params);
        for (long s = 1; s < params.q; ++s)
            for (long n = 1; n < params.p; ++n)
                CHECK(phi(params.q - s, n) == phi(s, params.p - n));
    }
}

TEST_CASE("floating symbol matrix is consistent with the exact one") {
    const auto& q2 = gfl::hat_window();
    for (const auto& [a, b] : random_lattices(777, 8)) {
        const auto params = gfl::lattice_params(a, b);
        const auto exact = gfl::phi_matrix_exact(q2, params);
        const auto approx = gfl::phi_matrix_float(q2, params, {0.0, 0.0});
        for (std::size_t i = 0; i < approx.rows; ++i)
            for (std::size_t j = 0; j < approx.cols; ++j) {
                CHECK(approx(i, j).real() ==
                      doctest::Approx(exact(i, j).to_double()).epsilon(1e-14));
                CHECK(std::abs(approx(i, j).imag()) < 1e-14);
            }
    }
}

TEST_CASE("floating symbol matrix is 1-periodic in t") {
    const auto& q2 = gfl::hat_window();
    const auto params = gfl::lattice_params(Rational(1, 2), Rational(3, 2));
    const auto m0 = gfl::phi_matrix_float(q2, params, {0.3, 0.4});
    const auto m1 = gfl::phi_matrix_float(q2, params, {0.3, 1.4});
    for (std::size_t i = 0; i < m0.entries.size(); ++i)
        CHECK(std::abs(m0.entries[i] - m1.entries[i]) < 1e-12);

    const auto away = gfl::phi_matrix_float(q2, params, {0.1, 0.3});
    CHECK(gfl::min_singular_value(away) > 0.0);
}

TEST_CASE("min_singular_value pinned cases") {
    ComplexMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3(i, i) = 1.0;
    CHECK(gfl::min_singular_value(id3) == doctest::Approx(1.0).epsilon(1e-15));

    ComplexMatrix ones(2, 2);
    for (auto& z : ones.entries) z = 1.0;
    CHECK(gfl::min_singular_value(ones) <= 1e-15);
}

TEST_CASE("numeric rank of the time-frequency matrix matches the exact symbol rank") {
    const auto& q2 = gfl::hat_window();
    for (const auto& [a, b] : random_lattices(31415, 10)) {
        const auto params = gfl::lattice_params(a, b);
        const auto exact_rank = gfl::rank_exact(gfl::phi_matrix_exact(q2, params));
        const auto zz = gfl::zz_matrix(q2, params, {0.0, 0.0});
        CHECK(gfl::rank_numeric(zz, 1e-9) == exact_rank);
    }
}
