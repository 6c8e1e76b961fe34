// Truncated univariate power series over a scalar field K.
//
// A Series holds coefficients c0..cN for a fixed truncation order N.
// Binary operations truncate to the minimum order of their inputs; the few
// operations that change the order (times_z, antiderivative, ...) say so.
// Nothing is ever zero-padded implicitly.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schlicht/scalar.hpp"

namespace schlicht {

template <SeriesScalar K>
class Series {
  public:
    explicit Series(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("empty coefficient sequence");
        for (const K& v : c_)
            if (!scalar_traits<K>::finite(v)) throw std::invalid_argument("non-finite scalar");
    }

    static Series zero(int order) { return Series(std::vector<K>(order + 1, K{})); }
    static Series constant(const K& v, int order) {
        auto s = zero(order);
        s.c_[0] = v;
        return s;
    }
    // The identity function z (requires order >= 1).
    static Series identity(int order) {
        if (order < 1) throw std::invalid_argument("identity needs order >= 1");
        auto s = zero(order);
        s.c_[1] = scalar_traits<K>::from_int(1);
        return s;
    }

    int order() const { return int(c_.size()) - 1; }

    const K& at(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("coefficient index out of range");
        return c_[size_t(k)];
    }
    void set(int k, K v) {
        if (k < 0 || k > order()) throw std::out_of_range("coefficient index out of range");
        if (!scalar_traits<K>::finite(v)) throw std::invalid_argument("non-finite scalar");
        c_[size_t(k)] = std::move(v);
    }

    const std::vector<K>& coeffs() const { return c_; }
    static constexpr ScalarMode mode() { return scalar_traits<K>::mode; }

    // f(0) == 0 and f'(0) == 1, the normalization the function classes assume.
    bool normalized() const {
        return order() >= 1 && scalar_traits<K>::is_zero(c_[0]) &&
               c_[1] == scalar_traits<K>::from_int(1);
    }

    // Explicit order changes; callers opt in, operations never do this.
    Series truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::invalid_argument("truncation order out of range");
        return Series(std::vector<K>(c_.begin(), c_.begin() + new_order + 1));
    }
    Series padded(int new_order) const {
        if (new_order < order()) throw std::invalid_argument("padding cannot shrink a series");
        std::vector<K> out = c_;
        out.resize(size_t(new_order) + 1, K{});
        return Series(std::move(out));
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<K> out(size_t(n) + 1);
        for (int k = 0; k <= n; ++k) out[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
        return Series(std::move(out));
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<K> out(size_t(n) + 1);
        for (int k = 0; k <= n; ++k) out[size_t(k)] = a.c_[size_t(k)] - b.c_[size_t(k)];
        return Series(std::move(out));
    }
    friend Series operator-(const Series& a) {
        std::vector<K> out(a.c_.size());
        for (size_t k = 0; k < a.c_.size(); ++k) out[k] = -a.c_[k];
        return Series(std::move(out));
    }

    // Cauchy product truncated to min order.
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<K> out(size_t(n) + 1, K{});
        for (int i = 0; i <= n; ++i) {
            if (scalar_traits<K>::is_zero(a.c_[size_t(i)])) continue;
            for (int j = 0; i + j <= n; ++j)
                out[size_t(i + j)] += a.c_[size_t(i)] * b.c_[size_t(j)];
        }
        return Series(std::move(out));
    }

    friend Series operator*(const K& k, const Series& a) {
        std::vector<K> out(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = k * a.c_[i];
        return Series(std::move(out));
    }
    friend Series operator*(const Series& a, const K& k) { return k * a; }

    // Formal quotient; b must be invertible, i.e. b(0) != 0.
    friend Series operator/(const Series& a, const Series& b) {
        if (scalar_traits<K>::is_zero(b.c_[0]))
            throw std::domain_error("division by series with zero constant term");
        int n = std::min(a.order(), b.order());
        std::vector<K> out(size_t(n) + 1, K{});
        for (int k = 0; k <= n; ++k) {
            K acc = a.c_[size_t(k)];
            for (int j = 1; j <= k; ++j)
                if (j <= b.order()) acc -= b.c_[size_t(j)] * out[size_t(k - j)];
            out[size_t(k)] = acc / b.c_[0];
        }
        return Series(std::move(out));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  private:
    std::vector<K> c_;
};

template <SeriesScalar K>
Series<K> make_series(std::vector<K> coeffs) {
    return Series<K>(std::move(coeffs));
}

template <SeriesScalar K>
Series<K> make_series(std::vector<K> coeffs, int order) {
    if (int(coeffs.size()) != order + 1)
        throw std::invalid_argument("order must equal coefficient count minus one");
    return Series<K>(std::move(coeffs));
}

// f(g(z)) truncated to min order. Requires g(0) == 0, so the truncation of
// the result is determined by the truncations of the inputs.
template <SeriesScalar K>
Series<K> compose(const Series<K>& f, const Series<K>& g) {
    if (!scalar_traits<K>::is_zero(g.at(0)))
        throw std::invalid_argument("composition requires zero constant term");
    int n = std::min(f.order(), g.order());
    Series<K> gt = g.truncated(n);
    Series<K> acc = Series<K>::constant(f.at(n), n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * gt;
        acc.set(0, acc.at(0) + f.at(k));
    }
    return acc;
}

// log f for f(0) == 1, from f * (log f)' = f'.
template <SeriesScalar K>
Series<K> log1(const Series<K>& f) {
    if (!(f.at(0) == scalar_traits<K>::from_int(1)))
        throw std::invalid_argument("constant term must be 1");
    int n = f.order();
    std::vector<K> out(size_t(n) + 1, K{});
    for (int m = 1; m <= n; ++m) {
        K acc = scalar_traits<K>::from_int(m) * f.at(m);
        for (int k = 1; k < m; ++k)
            acc -= scalar_traits<K>::from_int(k) * out[size_t(k)] * f.at(m - k);
        out[size_t(m)] = acc / scalar_traits<K>::from_int(m);
    }
    return Series<K>(std::move(out));
}

// exp f for f(0) == 0, from (exp f)' = f' * exp f.
template <SeriesScalar K>
Series<K> exp0(const Series<K>& f) {
    if (!scalar_traits<K>::is_zero(f.at(0)))
        throw std::invalid_argument("constant term must be 0");
    int n = f.order();
    std::vector<K> out(size_t(n) + 1, K{});
    out[0] = scalar_traits<K>::from_int(1);
    for (int m = 1; m <= n; ++m) {
        K acc{};
        for (int k = 1; k <= m; ++k)
            acc += scalar_traits<K>::from_int(k) * f.at(k) * out[size_t(m - k)];
        out[size_t(m)] = acc / scalar_traits<K>::from_int(m);
    }
    return Series<K>(std::move(out));
}

// Principal square root for f(0) == 1.
template <SeriesScalar K>
Series<K> sqrt1(const Series<K>& f) {
    if (!(f.at(0) == scalar_traits<K>::from_int(1)))
        throw std::invalid_argument("constant term must be 1");
    int n = f.order();
    std::vector<K> out(size_t(n) + 1, K{});
    out[0] = scalar_traits<K>::from_int(1);
    for (int m = 1; m <= n; ++m) {
        K acc = f.at(m);
        for (int k = 1; k < m; ++k) acc -= out[size_t(k)] * out[size_t(m - k)];
        out[size_t(m)] = acc / scalar_traits<K>::from_int(2);
    }
    return Series<K>(std::move(out));
}

// f^alpha for f(0) == 1, from f * (f^a)' = a * f' * f^a.
template <SeriesScalar K>
Series<K> pow1(const Series<K>& f, const K& alpha) {
    if (!(f.at(0) == scalar_traits<K>::from_int(1)))
        throw std::invalid_argument("constant term must be 1");
    int n = f.order();
    std::vector<K> out(size_t(n) + 1, K{});
    out[0] = scalar_traits<K>::from_int(1);
    for (int m = 1; m <= n; ++m) {
        K acc{};
        for (int k = 1; k <= m; ++k) {
            K weight = alpha * scalar_traits<K>::from_int(k) - scalar_traits<K>::from_int(m - k);
            acc += weight * f.at(k) * out[size_t(m - k)];
        }
        out[size_t(m)] = acc / scalar_traits<K>::from_int(m);
    }
    return Series<K>(std::move(out));
}

// z * f; output order is one higher than the input.
template <SeriesScalar K>
Series<K> times_z(const Series<K>& f) {
    std::vector<K> out(f.coeffs().size() + 1, K{});
    for (size_t k = 0; k < f.coeffs().size(); ++k) out[k + 1] = f.coeffs()[k];
    return Series<K>(std::move(out));
}

// f / z for f(0) == 0; output order is one lower.
template <SeriesScalar K>
Series<K> divided_by_z(const Series<K>& f) {
    if (f.order() < 1 || !scalar_traits<K>::is_zero(f.at(0)))
        throw std::invalid_argument("divided_by_z requires zero constant term");
    return Series<K>(std::vector<K>(f.coeffs().begin() + 1, f.coeffs().end()));
}

// Antiderivative with zero constant term; output order is one higher.
template <SeriesScalar K>
Series<K> antiderivative(const Series<K>& f) {
    std::vector<K> out(f.coeffs().size() + 1, K{});
    for (int k = 0; k <= f.order(); ++k)
        out[size_t(k) + 1] = f.at(k) / scalar_traits<K>::from_int(k + 1);
    return Series<K>(std::move(out));
}

// Termwise integral of f/z for f(0) == 0: sum f_m / m * z^m. Same order.
template <SeriesScalar K>
Series<K> antiderivative_over_z(const Series<K>& f) {
    if (!scalar_traits<K>::is_zero(f.at(0)))
        throw std::invalid_argument("antiderivative_over_z requires zero constant term");
    std::vector<K> out(f.coeffs().size(), K{});
    for (int m = 1; m <= f.order(); ++m) out[size_t(m)] = f.at(m) / scalar_traits<K>::from_int(m);
    return Series<K>(std::move(out));
}

// f(z^2); output order doubles.
template <SeriesScalar K>
Series<K> substitute_z_squared(const Series<K>& f) {
    std::vector<K> out(size_t(2 * f.order()) + 1, K{});
    for (int k = 0; k <= f.order(); ++k) out[size_t(2 * k)] = f.at(k);
    return Series<K>(std::move(out));
}

}  // namespace schlicht
