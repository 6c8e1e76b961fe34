#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/invert.hpp"

using namespace schlicht;
using testutil::random_normalized;

TEST_SUITE("grunsky") {

TEST_CASE("koebe full table in closed form") {
    // log((k(t)-k(z))/(t-z)) = log(1-tz) - 2 log(1-t) - 2 log(1-z):
    // diagonal -1/p, edges 2/p, zero elsewhere.
    GrunskyTable<RationalComplex> t = grunsky_table(koebe_series<RationalComplex>(12), 5);
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q) {
            RationalComplex want(0);
            if (p == q && p >= 1) want = RationalComplex::ratio(-1, p);
            if (q == 0 && p >= 1) want = RationalComplex::ratio(2, p);
            if (p == 0 && q >= 1) want = RationalComplex::ratio(2, q);
            CHECK(t.at(p, q) == want);
        }
    CHECK(t.symmetry_defect() == 0.0);
    CHECK(t.parity() == TableParity::full);
}

TEST_CASE("table row zero carries twice the log coefficients") {
    std::mt19937_64 rng(41);
    Series<RationalComplex> f = random_normalized(rng, 8);
    GrunskyTable<RationalComplex> t = grunsky_table(f, 5);
    LogCoeffVector<RationalComplex> g = log_coefficients(f);
    for (int p = 1; p <= 5; ++p) CHECK(t.at(p, 0) == RationalComplex(2) * g.at(p));
}

TEST_CASE("table bounds and guards") {
    Series<RationalComplex> k = koebe_series<RationalComplex>(6);
    CHECK_THROWS_AS(grunsky_table(k, 6), std::invalid_argument);
    GrunskyTable<RationalComplex> t = grunsky_table(k, 3);
    CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(grunsky_table(Series<RationalComplex>::constant(RationalComplex(1), 6), 3),
                    std::invalid_argument);
}

TEST_CASE("odd transform of the koebe function is z/(1-z^2)") {
    Series<RationalComplex> f2 = odd_transform(koebe_series<RationalComplex>(6));
    CHECK(f2.order() == 11);
    for (int n = 1; n <= 11; ++n)
        CHECK(f2.at(n) == RationalComplex(n % 2 == 1 ? 1 : 0));
}

TEST_CASE("odd transform squares back to f(z^2)") {
    std::mt19937_64 rng(42);
    Series<RationalComplex> f = random_normalized(rng, 6);
    Series<RationalComplex> f2 = odd_transform(f);
    CHECK(f2 * f2 == substitute_z_squared(f).truncated(11));
}

TEST_CASE("koebe odd table values") {
    GrunskyTable<RationalComplex> t = grunsky_odd_table(koebe_series<RationalComplex>(6), 5);
    CHECK(t.parity() == TableParity::odd);
    CHECK(t.at(1, 1) == RationalComplex(1));
    CHECK(t.at(1, 3) == RationalComplex(0));
    CHECK(t.at(3, 3) == RationalComplex::ratio(1, 3));
    CHECK(t.at(1, 5) == RationalComplex(0));
    CHECK(t.at(3, 5) == RationalComplex(0));
    CHECK(t.at(5, 5) == RationalComplex::ratio(1, 5));
    CHECK(t.at(2, 2) == RationalComplex(0));  // even slots are identically zero
    CHECK(t.at(2, 4) == RationalComplex(0));
    CHECK_THROWS_AS(grunsky_odd_table(koebe_series<RationalComplex>(6), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(grunsky_odd_table(koebe_series<RationalComplex>(6), 3),
                    std::invalid_argument);
}

TEST_CASE("quadratic form: koebe attains equality with the first unit weight") {
    Series<RationalComplex> k = koebe_series<RationalComplex>(12);
    WeightVector<RationalComplex> e1;
    e1.entries[1] = RationalComplex(1);

    auto [lf, rf] = grunsky_form(grunsky_table(k, 5), e1, 5);
    CHECK(lf == Rational(1));
    CHECK(rf == Rational(1));

    auto [lo, ro] = grunsky_form(grunsky_odd_table(k, 5), e1, 3);
    CHECK(lo == Rational(1));
    CHECK(ro == Rational(1));
}

TEST_CASE("quadratic form guards") {
    Series<RationalComplex> k = koebe_series<RationalComplex>(12);
    GrunskyTable<RationalComplex> odd = grunsky_odd_table(k, 5);
    WeightVector<RationalComplex> empty;
    CHECK_THROWS_AS(grunsky_form(odd, empty, 3), std::invalid_argument);
    WeightVector<RationalComplex> zero;
    zero.entries[1] = RationalComplex(0);
    CHECK_THROWS_AS(grunsky_form(odd, zero, 3), std::invalid_argument);
    WeightVector<RationalComplex> even;
    even.entries[2] = RationalComplex(1);
    CHECK_THROWS_AS(grunsky_form(odd, even, 3), std::invalid_argument);
    WeightVector<RationalComplex> far;
    far.entries[7] = RationalComplex(1);
    CHECK_THROWS_AS(grunsky_form(odd, far, 3), std::out_of_range);
    WeightVector<RationalComplex> e1;
    e1.entries[1] = RationalComplex(1);
    CHECK_THROWS_AS(grunsky_form(odd, e1, 4), std::out_of_range);  // row 7 > max index 5
}

TEST_CASE("structural identities hold exactly for arbitrary exact series") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Series<RationalComplex> f = random_normalized(rng, 6);
        StructuralReport<RationalComplex> r = verify_structural(f);
        for (const RationalComplex& res : r.residuals) CHECK(res == RationalComplex(0));
    }
    CHECK_THROWS_AS(verify_structural(random_normalized(rng, 5)), std::invalid_argument);
}

TEST_CASE("structural residuals stay tiny in floating mode") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        Series<Complex> f = testutil::random_complex_normalized(rng, 8, 1.5);
        StructuralReport<Complex> r = verify_structural(f);
        CHECK(r.max_residual() <= 1e-12);
    }
}

TEST_CASE("odd form inequality on generated starlike samples") {
    // x = e1 specializes the form to |w11|^2 + 3 |w13|^2 + 5 |w15|^2 <= 1,
    // and weights on {3} give |w13|^2 + 3 |w33|^2 <= 1/3.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SchwarzPoly<Complex> w = random_schwarz(4, seed);
        Series<Complex> f = starlike_from_schwarz(w, 12);
        GrunskyTable<Complex> odd = grunsky_odd_table(f, 5);

        WeightVector<Complex> e1;
        e1.entries[1] = Complex(1.0, 0.0);
        auto [l1, r1] = grunsky_form(odd, e1, 3);
        CHECK(l1 <= r1 + 1e-9);

        WeightVector<Complex> e3;
        e3.entries[3] = Complex(1.0, 0.0);
        auto [l3, r3] = grunsky_form(odd, e3, 3);
        CHECK(l3 <= r3 + 1e-9);
        // rows 1 and 3 of that form: |w13|^2 + 3 |w33|^2, bounded by 1/3.
        double partial = std::norm(odd.at(1, 3)) + 3.0 * std::norm(odd.at(3, 3));
        CHECK(partial <= 1.0 / 3.0 + 1e-9);
    }
}

TEST_CASE("full form inequality on generated samples with random weights") {
    std::mt19937_64 rng(45);
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        SchwarzPoly<Complex> w = random_schwarz(5, seed);
        Series<Complex> f = starlike_from_schwarz(w, 12);
        GrunskyTable<Complex> full = grunsky_table(f, 5);
        for (int trial = 0; trial < 20; ++trial) {
            WeightVector<Complex> x;
            for (int p = 1; p <= 5; ++p) x.entries[p] = testutil::random_c(rng);
            auto [lhs, rhs] = grunsky_form(full, x, 5);
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}

}  // TEST_SUITE
