// Shared helpers for the unit tests: deterministic random series in both
// scalar modes.

#pragma once

#include <cstdint>
#include <random>

#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace testutil {

using namespace schlicht;

inline Rational rational_in(std::mt19937_64& rng, long span, long den) {
    long num = long(rng() % std::uint64_t(2 * span + 1)) - span;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline RationalComplex random_rc(std::mt19937_64& rng, long span = 6, long den = 7) {
    return {rational_in(rng, span, den), rational_in(rng, span, den)};
}

// z + c2 z^2 + ... + cN z^N with small rational coefficients.
inline Series<RationalComplex> random_normalized(std::mt19937_64& rng, int order) {
    Series<RationalComplex> f = Series<RationalComplex>::identity(order);
    for (int n = 2; n <= order; ++n) f.set(n, random_rc(rng));
    return f;
}

// 1 + c1 z + ... + cN z^N, the domain of log/sqrt/pow.
inline Series<RationalComplex> random_unit_constant(std::mt19937_64& rng, int order) {
    Series<RationalComplex> f = Series<RationalComplex>::constant(RationalComplex(1), order);
    for (int n = 1; n <= order; ++n) f.set(n, random_rc(rng));
    return f;
}

inline double unit_double(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline Complex random_c(std::mt19937_64& rng, double radius = 1.0) {
    return {radius * (2.0 * unit_double(rng) - 1.0), radius * (2.0 * unit_double(rng) - 1.0)};
}

inline Series<Complex> random_complex_normalized(std::mt19937_64& rng, int order,
                                                 double radius = 1.0) {
    Series<Complex> f = Series<Complex>::identity(order);
    for (int n = 2; n <= order; ++n) f.set(n, random_c(rng, radius));
    return f;
}

}  // namespace testutil
