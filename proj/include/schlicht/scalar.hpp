// Scalar kernel: the two coefficient fields the series engine runs on.
//
// Floating mode uses std::complex<double>. Exact mode uses RationalComplex,
// a Gaussian rational built on GMP's mpq_class, so identities that hold in
// the algebra hold bit-exactly in the computed tables.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace schlicht {

using Complex = std::complex<double>;
using Rational = mpq_class;

enum class ScalarMode { exact_rational, floating_point };

inline constexpr double kDefaultTolerance = 1e-9;

// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() : re(0), im(0) {}
    RationalComplex(Rational r) : re(std::move(r)), im(0) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(r), im(0) {}

    static RationalComplex ratio(long num, long den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return RationalComplex(q);
    }

    RationalComplex operator-() const { return {Rational(-re), Rational(-im)}; }

    RationalComplex& operator+=(const RationalComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    RationalComplex& operator/=(const RationalComplex& o) {
        Rational d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("division by zero");
        Rational r = (re * o.re + im * o.im) / d;
        Rational i = (im * o.re - re * o.im) / d;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
    friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const RationalComplex& v) {
        os << v.re.get_str();
        if (v.im != 0) os << (v.im < 0 ? " - " : " + ") << Rational(abs(v.im)).get_str() << "i";
        return os;
    }
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static constexpr ScalarMode mode = ScalarMode::floating_point;
    static const char* mode_name() { return "floating"; }

    static Complex from_int(long n) { return Complex(double(n), 0.0); }
    static Complex from_ratio(long num, long den) { return Complex(double(num) / double(den), 0.0); }
    static Complex from_real(real_type r) { return Complex(r, 0.0); }
    static bool finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
    static bool is_zero(const Complex& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static Complex conj(const Complex& v) { return std::conj(v); }
    static real_type norm_sq(const Complex& v) { return std::norm(v); }
    static real_type real_part(const Complex& v) { return v.real(); }
    static Complex to_complex(const Complex& v) { return v; }
    static double to_double(const real_type& r) { return r; }
};

template <>
struct scalar_traits<RationalComplex> {
    using real_type = Rational;
    static constexpr ScalarMode mode = ScalarMode::exact_rational;
    static const char* mode_name() { return "rational"; }

    static RationalComplex from_int(long n) { return RationalComplex(n); }
    static RationalComplex from_ratio(long num, long den) { return RationalComplex::ratio(num, den); }
    static RationalComplex from_real(real_type r) { return RationalComplex(std::move(r)); }
    static bool finite(const RationalComplex&) { return true; }
    static bool is_zero(const RationalComplex& v) { return v.re == 0 && v.im == 0; }
    static RationalComplex conj(const RationalComplex& v) { return {v.re, Rational(-v.im)}; }
    static real_type norm_sq(const RationalComplex& v) { return v.re * v.re + v.im * v.im; }
    static real_type real_part(const RationalComplex& v) { return v.re; }
    static Complex to_complex(const RationalComplex& v) { return {v.re.get_d(), v.im.get_d()}; }
    static double to_double(const real_type& r) { return r.get_d(); }
};

template <class K>
concept SeriesScalar = requires(const K& v) {
    { scalar_traits<K>::finite(v) } -> std::convertible_to<bool>;
    { scalar_traits<K>::from_int(1L) } -> std::convertible_to<K>;
};

template <SeriesScalar K>
using RealOf = typename scalar_traits<K>::real_type;

// |v| as a double; exact scalars are converted, so use norm_sq for exact work.
template <SeriesScalar K>
double abs_approx(const K& v) {
    return std::abs(scalar_traits<K>::to_complex(v));
}

}  // namespace schlicht
