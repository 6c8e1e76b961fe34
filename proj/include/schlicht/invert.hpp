// Series reversion and logarithmic coefficients.
//
// gamma_n are the coefficients in log(f(z)/z) = 2 * sum gamma_n z^n for a
// normalized univalent candidate f; applying the same extraction to the
// compositional inverse of f gives the inverse logarithmic coefficients
// Gamma_n. Closed forms in the first three initial coefficients a2, a3, a4
// are provided as an independent algebraic route for cross-checking.

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

enum class LogCoeffSource { direct, inverse };

// Logarithmic coefficients indexed from 1; entries past the truncation are
// refused rather than zero-filled.
template <SeriesScalar K>
struct LogCoeffVector {
    LogCoeffSource source = LogCoeffSource::direct;
    std::vector<K> values;  // values[0] holds gamma_1

    int count() const { return int(values.size()); }
    const K& at(int n) const {
        if (n < 1 || n > count())
            throw std::out_of_range("logarithmic coefficient index out of range");
        return values[size_t(n - 1)];
    }
};

template <SeriesScalar K>
struct CoeffTriple {
    K a2{};
    K a3{};
    K a4{};
};

// First nontrivial coefficients of a normalized series of order >= 4.
template <SeriesScalar K>
CoeffTriple<K> initial_coeffs(const Series<K>& f) {
    if (!f.normalized() || f.order() < 4)
        throw std::invalid_argument("initial_coeffs requires normalized series of order >= 4");
    return {f.at(2), f.at(3), f.at(4)};
}

// Compositional inverse of a normalized series, to the same order, by a
// triangular solve against compose: coefficient n of f(g) is b_n plus terms
// in b_2..b_{n-1} only.
template <SeriesScalar K>
Series<K> revert(const Series<K>& f) {
    if (!f.normalized()) throw std::invalid_argument("revert requires normalized series");
    int n = f.order();
    Series<K> g = Series<K>::identity(n);
    for (int m = 2; m <= n; ++m) {
        Series<K> fm = f.truncated(m);
        Series<K> gm = g.truncated(m);
        K residue = compose(fm, gm).at(m);
        g.set(m, -residue);
    }
    return g;
}

// gamma_1..gamma_{N-1}: half the coefficients of log(f(z)/z).
template <SeriesScalar K>
LogCoeffVector<K> log_coefficients(const Series<K>& f) {
    if (!f.normalized()) throw std::invalid_argument("log_coefficients requires normalized series");
    Series<K> lg = log1(divided_by_z(f));
    LogCoeffVector<K> out;
    out.source = LogCoeffSource::direct;
    K half = scalar_traits<K>::from_ratio(1, 2);
    out.values.reserve(size_t(lg.order()));
    for (int m = 1; m <= lg.order(); ++m) out.values.push_back(half * lg.at(m));
    return out;
}

// Gamma_1..Gamma_{N-1}: logarithmic coefficients of the inverse function.
template <SeriesScalar K>
LogCoeffVector<K> inverse_log_coefficients(const Series<K>& f) {
    LogCoeffVector<K> out = log_coefficients(revert(f));
    out.source = LogCoeffSource::inverse;
    return out;
}

// gamma_1 = a2/2, gamma_2 = (a3 - a2^2/2)/2, gamma_3 = (a4 - a2 a3 + a2^3/3)/2.
template <SeriesScalar K>
std::array<K, 3> log_coeffs_closed_form(const CoeffTriple<K>& t) {
    using tr = scalar_traits<K>;
    K half = tr::from_ratio(1, 2);
    K g1 = half * t.a2;
    K g2 = half * (t.a3 - half * t.a2 * t.a2);
    K g3 = half * (t.a4 - t.a2 * t.a3 + tr::from_ratio(1, 3) * t.a2 * t.a2 * t.a2);
    return {g1, g2, g3};
}

// Inverse-function coefficients: A2 = -a2, A3 = -a3 + 2 a2^2,
// A4 = -a4 + 5 a2 a3 - 5 a2^3.
template <SeriesScalar K>
std::array<K, 3> inverse_coeffs_closed_form(const CoeffTriple<K>& t) {
    using tr = scalar_traits<K>;
    K A2 = -t.a2;
    K A3 = -t.a3 + tr::from_int(2) * t.a2 * t.a2;
    K A4 = -t.a4 + tr::from_int(5) * t.a2 * t.a3 - tr::from_int(5) * t.a2 * t.a2 * t.a2;
    return {A2, A3, A4};
}

// Gamma_1 = -a2/2, Gamma_2 = (-a3 + 3/2 a2^2)/2,
// Gamma_3 = (-a4 + 4 a2 a3 - 10/3 a2^3)/2.
template <SeriesScalar K>
std::array<K, 3> inverse_log_coeffs_closed_form(const CoeffTriple<K>& t) {
    using tr = scalar_traits<K>;
    K half = tr::from_ratio(1, 2);
    K G1 = -half * t.a2;
    K G2 = half * (-t.a3 + tr::from_ratio(3, 2) * t.a2 * t.a2);
    K G3 = half * (-t.a4 + tr::from_int(4) * t.a2 * t.a3 -
                   tr::from_ratio(10, 3) * t.a2 * t.a2 * t.a2);
    return {G1, G2, G3};
}

}  // namespace schlicht
