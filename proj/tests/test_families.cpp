#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "helpers.hpp"
#include "schlicht/bounds.hpp"
#include "schlicht/families.hpp"

using namespace schlicht;

namespace {

RationalComplex rc(long num, long den) { return RationalComplex::ratio(num, den); }

}  // namespace

TEST_SUITE("families") {

TEST_CASE("koebe coefficients") {
    Series<RationalComplex> k = koebe_series<RationalComplex>(8);
    for (int n = 1; n <= 8; ++n) CHECK(k.at(n) == RationalComplex(n));
    CHECK(k.normalized());

    Series<Complex> kf = koebe(0.0, 8);
    for (int n = 1; n <= 8; ++n) CHECK(std::abs(kf.at(n) - Complex(double(n), 0.0)) == 0.0);

    double theta = 1.25;
    Series<Complex> kr = koebe(theta, 8);
    for (int n = 1; n <= 8; ++n) {
        Complex want = double(n) * std::polar(1.0, theta * (n - 1));
        CHECK(std::abs(kr.at(n) - want) <= 1e-14);
    }
    CHECK_THROWS_AS(koebe(0.0, 0), std::invalid_argument);
}

TEST_CASE("half-plane map has unit coefficients") {
    Series<RationalComplex> h = half_plane<RationalComplex>(9);
    for (int n = 1; n <= 9; ++n) CHECK(h.at(n) == RationalComplex(1));
    CHECK(scalar_traits<RationalComplex>::is_zero(h.at(0)));
}

TEST_CASE("convex family: exact coefficients at rational parameters") {
    // a2 = lambda, a3 = (2 lambda^2 + 1)/3, a4 = (lambda^3 + 2 lambda)/3.
    Series<RationalComplex> f = convex_lambda<RationalComplex>(Rational(1, 2), 6);
    CHECK(f.at(1) == RationalComplex(1));
    CHECK(f.at(2) == rc(1, 2));
    CHECK(f.at(3) == rc(1, 2));
    CHECK(f.at(4) == rc(3, 8));

    // lambda = 0 integrates 1/(1-t^2): odd coefficients 1/(2k+1), evens zero.
    Series<RationalComplex> f0 = convex_lambda<RationalComplex>(Rational(0), 9);
    for (int n = 1; n <= 9; ++n)
        CHECK(f0.at(n) == (n % 2 == 1 ? rc(1, n) : RationalComplex(0)));

    // lambda = 1 gives z/(1-z).
    Series<RationalComplex> f1 = convex_lambda<RationalComplex>(Rational(1), 9);
    CHECK(f1 == half_plane<RationalComplex>(9));
}

TEST_CASE("convex family: floating mode tracks the exact values") {
    Series<Complex> f = convex_lambda<Complex>(0.5, 6);
    CHECK(std::abs(f.at(2) - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(f.at(3) - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(f.at(4) - Complex(0.375, 0.0)) <= 1e-14);
}

TEST_CASE("convex family rejects parameters outside [0, 1]") {
    CHECK_THROWS_AS(convex_lambda<Complex>(-0.01, 6), std::invalid_argument);
    CHECK_THROWS_AS(convex_lambda<Complex>(1.01, 6), std::invalid_argument);
    CHECK_THROWS_AS(convex_lambda<RationalComplex>(Rational(3, 2), 6), std::invalid_argument);
}

TEST_CASE("admissibility certificate") {
    SchwarzPoly<Complex> id{{Complex(1.0, 0.0)}};
    AdmissibilityResult r = schwarz_admissible(id);
    CHECK(r.admissible);
    CHECK(r.max_modulus == doctest::Approx(1.0).epsilon(1e-12));

    SchwarzPoly<Complex> big{{Complex(2.0, 0.0)}};
    CHECK_FALSE(schwarz_admissible(big).admissible);
    CHECK(schwarz_admissible(big).max_modulus == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(schwarz_admissible(id, 100), std::invalid_argument);
}

TEST_CASE("schwarz polynomial accessor") {
    SchwarzPoly<RationalComplex> w{{rc(1, 3), rc(1, 5)}};
    CHECK(w.degree() == 2);
    CHECK(w.coeff(1) == rc(1, 3));
    CHECK(w.coeff(2) == rc(1, 5));
    CHECK(w.coeff(3) == RationalComplex(0));
    CHECK_THROWS_AS(w.coeff(0), std::out_of_range);
}

TEST_CASE("random schwarz polynomials are deterministic and admissible") {
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
        SchwarzPoly<Complex> a = random_schwarz(4, seed);
        SchwarzPoly<Complex> b = random_schwarz(4, seed);
        REQUIRE(a.degree() == 4);
        for (int j = 1; j <= 4; ++j) CHECK(a.coeff(j) == b.coeff(j));
        CHECK(schwarz_admissible(a).admissible);
    }
    CHECK(random_schwarz(1, 5).degree() == 1);
    CHECK_THROWS_AS(random_schwarz(0, 5), std::invalid_argument);
}

TEST_CASE("schwarz generators reproduce the classical maps") {
    SchwarzPoly<RationalComplex> id{{RationalComplex(1)}};
    CHECK(convex_from_schwarz(id, 9) == half_plane<RationalComplex>(9));
    CHECK(starlike_from_schwarz(id, 9) == koebe_series<RationalComplex>(9));

    SchwarzPoly<RationalComplex> sq{{RationalComplex(0), RationalComplex(1)}};
    Series<RationalComplex> two_slit = starlike_from_schwarz(sq, 9);  // z/(1-z^2)
    for (int n = 1; n <= 9; ++n)
        CHECK(two_slit.at(n) == RationalComplex(n % 2 == 1 ? 1 : 0));
}

TEST_CASE("generator coefficients in terms of the schwarz coefficients") {
    SchwarzPoly<RationalComplex> w{{rc(1, 3), rc(1, 5), rc(1, 7)}};
    RationalComplex c1 = w.coeff(1), c2 = w.coeff(2), c3 = w.coeff(3);

    Series<RationalComplex> fc = convex_from_schwarz(w, 6);
    CHECK(fc.at(2) == c1);
    CHECK(fc.at(3) == (c2 + RationalComplex(3) * c1 * c1) / RationalComplex(3));
    CHECK(fc.at(4) == (c3 + RationalComplex(5) * c1 * c2 + RationalComplex(6) * c1 * c1 * c1) /
                          RationalComplex(6));

    Series<RationalComplex> fs = starlike_from_schwarz(w, 6);
    CHECK(fs.at(2) == RationalComplex(2) * c1);
    CHECK(fs.at(3) == c2 + RationalComplex(3) * c1 * c1);
    CHECK(fs.at(4) == rc(2, 3) * c3 + rc(10, 3) * c1 * c2 + RationalComplex(4) * c1 * c1 * c1);
}

TEST_CASE("generators refuse an inadmissible polynomial") {
    SchwarzPoly<Complex> big{{Complex(2.0, 0.0)}};
    CHECK_THROWS_AS(convex_from_schwarz(big, 8), std::invalid_argument);
    CHECK_THROWS_AS(starlike_from_schwarz(big, 8), std::invalid_argument);
}

TEST_CASE("generated convex samples satisfy the classical coefficient bound") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Series<Complex> f = convex_from_schwarz(random_schwarz(3, seed), 10);
        for (int n = 2; n <= 10; ++n) CHECK(std::abs(f.at(n)) <= 1.0 + 1e-9);
        GapCheck gap = convex_gap_check(f);
        CHECK(gap.pass);
    }
}

TEST_CASE("generated starlike samples satisfy the basic inequality") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        Series<Complex> f = starlike_from_schwarz(random_schwarz(3, seed), 10);
        Complex a2 = f.at(2), a3 = f.at(3);
        CHECK(std::abs(a3 - a2 * a2) <= 1.0 + 1e-9);
        for (int n = 2; n <= 10; ++n) CHECK(std::abs(f.at(n)) <= double(n) + 1e-9);
    }
}

TEST_CASE("family descriptor dispatch") {
    CHECK(family_is_convex(Family::halfplane));
    CHECK(family_is_convex(Family::convex_lambda));
    CHECK(family_is_convex(Family::convex_schwarz));
    CHECK_FALSE(family_is_convex(Family::koebe));
    CHECK_FALSE(family_is_convex(Family::starlike_schwarz));

    FamilyParam p;
    p.family = Family::koebe;
    p.theta = 0.5;
    Series<Complex> k = build_family(p, 8);
    CHECK(std::abs(k.at(2) - 2.0 * std::polar(1.0, 0.5)) <= 1e-14);
    CHECK(family_id(p).rfind("koebe(theta=", 0) == 0);

    p.theta = 7.0;  // >= 2 pi
    CHECK_THROWS_AS(build_family(p, 8), std::invalid_argument);

    FamilyParam h;
    h.family = Family::halfplane;
    CHECK(build_family(h, 6).at(5) == Complex(1.0, 0.0));
    CHECK(family_id(h) == "halfplane");

    FamilyParam cs;
    cs.family = Family::convex_schwarz;
    CHECK_THROWS_AS(build_family(cs, 6), std::invalid_argument);
    cs.schwarz = random_schwarz(2, 11);
    CHECK(build_family(cs, 6).order() == 6);
    CHECK(family_name(Family::starlike_schwarz) == std::string("starlike_schwarz"));
}

}  // TEST_SUITE
