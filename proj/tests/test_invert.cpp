#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "schlicht/families.hpp"
#include "schlicht/invert.hpp"

using namespace schlicht;
using testutil::random_normalized;

TEST_SUITE("invert") {

TEST_CASE("revert of z/(1-z) is z/(1+z)") {
    Series<RationalComplex> f = half_plane<RationalComplex>(8);
    Series<RationalComplex> g = revert(f);
    for (int n = 1; n <= 8; ++n)
        CHECK(g.at(n) == RationalComplex((n % 2 == 1) ? 1 : -1));
}

TEST_CASE("inverse of the koebe function has signed Catalan coefficients") {
    Series<RationalComplex> g = revert(koebe_series<RationalComplex>(6));
    CHECK(g.at(2) == RationalComplex(-2));
    CHECK(g.at(3) == RationalComplex(5));
    CHECK(g.at(4) == RationalComplex(-14));
    CHECK(g.at(5) == RationalComplex(42));
    CHECK(g.at(6) == RationalComplex(-132));
}

TEST_CASE("reversion round-trips exactly") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Series<RationalComplex> f = random_normalized(rng, 6);
        Series<RationalComplex> g = revert(f);
        CHECK(compose(f, g) == Series<RationalComplex>::identity(6));
        CHECK(compose(g, f) == Series<RationalComplex>::identity(6));
        CHECK(revert(g) == f);
    }
    CHECK_THROWS_AS(revert(Series<RationalComplex>::constant(RationalComplex(1), 4)),
                    std::invalid_argument);
}

TEST_CASE("log coefficients of the koebe function are 1/n") {
    LogCoeffVector<RationalComplex> g = log_coefficients(koebe_series<RationalComplex>(8));
    CHECK(g.source == LogCoeffSource::direct);
    CHECK(g.count() == 7);
    for (int n = 1; n <= 7; ++n) CHECK(g.at(n) == RationalComplex::ratio(1, n));
    CHECK_THROWS_AS(g.at(0), std::out_of_range);
    CHECK_THROWS_AS(g.at(8), std::out_of_range);
}

TEST_CASE("inverse log coefficients of the koebe function") {
    LogCoeffVector<RationalComplex> G =
        inverse_log_coefficients(koebe_series<RationalComplex>(8));
    CHECK(G.source == LogCoeffSource::inverse);
    CHECK(G.at(1) == RationalComplex(-1));
    CHECK(G.at(2) == RationalComplex::ratio(3, 2));
    CHECK(G.at(3) == RationalComplex::ratio(-10, 3));
}

TEST_CASE("half-plane map: direct and inverse log coefficients") {
    Series<RationalComplex> h = half_plane<RationalComplex>(6);
    LogCoeffVector<RationalComplex> g = log_coefficients(h);
    for (int n = 1; n <= 5; ++n) CHECK(g.at(n) == RationalComplex::ratio(1, 2 * n));
    LogCoeffVector<RationalComplex> G = inverse_log_coefficients(h);
    CHECK(G.at(1) == RationalComplex::ratio(-1, 2));
    CHECK(G.at(2) == RationalComplex::ratio(1, 4));
    CHECK(G.at(3) == RationalComplex::ratio(-1, 6));
}

TEST_CASE("closed forms agree with the series pipeline (exact)") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        Series<RationalComplex> f = random_normalized(rng, 4);
        CoeffTriple<RationalComplex> t = initial_coeffs(f);

        auto gamma_closed = log_coeffs_closed_form(t);
        LogCoeffVector<RationalComplex> gamma = log_coefficients(f);
        for (int n = 1; n <= 3; ++n) CHECK(gamma.at(n) == gamma_closed[size_t(n - 1)]);

        auto inv_closed = inverse_coeffs_closed_form(t);
        Series<RationalComplex> g = revert(f);
        for (int n = 2; n <= 4; ++n) CHECK(g.at(n) == inv_closed[size_t(n - 2)]);

        auto big_closed = inverse_log_coeffs_closed_form(t);
        LogCoeffVector<RationalComplex> G = inverse_log_coefficients(f);
        for (int n = 1; n <= 3; ++n) CHECK(G.at(n) == big_closed[size_t(n - 1)]);
    }
}

TEST_CASE("closed forms agree in floating mode") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        Series<Complex> f = testutil::random_complex_normalized(rng, 12, 2.0);
        auto closed = inverse_log_coeffs_closed_form(initial_coeffs(f));
        LogCoeffVector<Complex> G = inverse_log_coefficients(f);
        for (int n = 1; n <= 3; ++n)
            CHECK(std::abs(G.at(n) - closed[size_t(n - 1)]) <= 1e-10);
    }
}

TEST_CASE("initial_coeffs preconditions") {
    CHECK_THROWS_AS(initial_coeffs(Series<RationalComplex>::identity(3)),
                    std::invalid_argument);
    Series<RationalComplex> shifted = Series<RationalComplex>::constant(RationalComplex(1), 5);
    CHECK_THROWS_AS(initial_coeffs(shifted), std::invalid_argument);
}

}  // TEST_SUITE
