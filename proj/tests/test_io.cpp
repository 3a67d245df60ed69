#include <doctest.h>

#include "gfl/certificate_io.hpp"

using gfl::ComplexMatrix;
using gfl::Rational;
using gfl::RationalMatrix;

TEST_CASE("rational matrix json round-trip") {
    RationalMatrix m(2, 3);
    m(0, 0) = Rational(-3, 2);
    m(1, 2) = Rational(7, 5);
    const auto j = gfl::rational_matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"][0] == "-3/2");
    CHECK(j["entries"][1] == "0/1");
    CHECK(gfl::rational_matrix_from_json(j) == m);
}

TEST_CASE("complex matrix json layout") {
    ComplexMatrix m(1, 2);
    m(0, 0) = {1.5, -2.0};
    m(0, 1) = {0.0, 3.25};
    const auto j = gfl::complex_matrix_to_json(m);
    CHECK(j["re"] == nlohmann::json({1.5, 0.0}));
    CHECK(j["im"] == nlohmann::json({-2.0, 3.25}));
    const auto back = gfl::complex_matrix_from_json(j);
    CHECK(back.rows == 1);
    CHECK(back.entries == m.entries);
}

TEST_CASE("certificate json round-trip preserves verifiability") {
    const auto cert = gfl::certify_conj2(2, 3);
    const auto j = gfl::certificate_to_json(cert);
    CHECK(j["conjecture"] == 2);
    CHECK(j["a"] == "1/4");
    CHECK(j["b"] == "7/2");
    const auto back = gfl::certificate_from_json(j);
    CHECK(back.gamma == cert.gamma);
    CHECK(back.phi == cert.phi);
    CHECK(gfl::verify_certificate(back));

    auto tampered = j;
    tampered["gamma"][0] = tampered["gamma"][0].get<std::int64_t>() + 1;
    CHECK_FALSE(gfl::verify_certificate(gfl::certificate_from_json(tampered)));
}
