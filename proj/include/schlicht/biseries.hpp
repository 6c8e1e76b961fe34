// Bivariate truncated power series on the square grid 0 <= p,q <= order.
//
// The grid is dense: every entry exists, and indexing outside it throws.
// Truncation to a square grid is stable under multiplication, which is what
// the bivariate logarithm below relies on.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

template <SeriesScalar K>
class BiSeries {
  public:
    explicit BiSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("negative grid order");
        c_.assign(size_t(order + 1) * size_t(order + 1), K{});
    }

    int order() const { return order_; }

    const K& at(int p, int q) const {
        check(p, q);
        return c_[idx(p, q)];
    }
    void set(int p, int q, K v) {
        check(p, q);
        c_[idx(p, q)] = std::move(v);
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        int n = std::min(a.order_, b.order_);
        BiSeries out(n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) out.c_[out.idx(p, q)] = a.at(p, q) + b.at(p, q);
        return out;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        int n = std::min(a.order_, b.order_);
        BiSeries out(n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) out.c_[out.idx(p, q)] = a.at(p, q) - b.at(p, q);
        return out;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        int n = std::min(a.order_, b.order_);
        BiSeries out(n);
        for (int p1 = 0; p1 <= n; ++p1)
            for (int q1 = 0; q1 <= n; ++q1) {
                const K& av = a.at(p1, q1);
                if (scalar_traits<K>::is_zero(av)) continue;
                for (int p2 = 0; p1 + p2 <= n; ++p2)
                    for (int q2 = 0; q1 + q2 <= n; ++q2)
                        out.c_[out.idx(p1 + p2, q1 + q2)] += av * b.at(p2, q2);
            }
        return out;
    }
    friend BiSeries operator*(const K& k, const BiSeries& a) {
        BiSeries out(a.order_);
        for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = k * a.c_[i];
        return out;
    }

    bool is_zero() const {
        for (const K& v : c_)
            if (!scalar_traits<K>::is_zero(v)) return false;
        return true;
    }

    // Largest |c(p,q) - c(q,p)|, as a double.
    double symmetry_defect() const {
        double worst = 0.0;
        for (int p = 0; p <= order_; ++p)
            for (int q = p + 1; q <= order_; ++q)
                worst = std::max(worst, abs_approx<K>(at(p, q) - at(q, p)));
        return worst;
    }

    // Row q = 0 as a univariate series (used to cross-check against f(t)/t).
    Series<K> row0() const {
        std::vector<K> out(size_t(order_) + 1);
        for (int p = 0; p <= order_; ++p) out[size_t(p)] = at(p, 0);
        return Series<K>(std::move(out));
    }

  private:
    size_t idx(int p, int q) const { return size_t(p) * size_t(order_ + 1) + size_t(q); }
    void check(int p, int q) const {
        if (p < 0 || q < 0 || p > order_ || q > order_)
            throw std::out_of_range("bivariate index outside grid");
    }

    int order_;
    std::vector<K> c_;
};

// (f(t) - f(z)) / (t - z) for normalized f, on the grid 0..P: the entry at
// (p, q) is the coefficient a_{p+q+1} of f, taken as zero past f's order
// (i.e. the quotient of the truncating polynomial). Constant term is 1.
template <SeriesScalar K>
BiSeries<K> difference_quotient(const Series<K>& f, int grid_order) {
    if (!f.normalized()) throw std::invalid_argument("difference_quotient requires normalized series");
    if (grid_order < 0 || grid_order > f.order() - 1)
        throw std::invalid_argument("grid order out of range");
    BiSeries<K> out(grid_order);
    for (int p = 0; p <= grid_order; ++p)
        for (int q = 0; q <= grid_order; ++q) {
            int n = p + q + 1;
            if (n <= f.order()) out.set(p, q, f.at(n));
        }
    return out;
}

template <SeriesScalar K>
BiSeries<K> difference_quotient(const Series<K>& f) {
    return difference_quotient(f, f.order() - 1);
}

// log B for B(0,0) == 1, via log(1+H) = sum (-1)^{k+1} H^k / k. H has no
// constant term, so powers past 2*order vanish on the grid.
template <SeriesScalar K>
BiSeries<K> bi_log(const BiSeries<K>& b) {
    if (!(b.at(0, 0) == scalar_traits<K>::from_int(1)))
        throw std::invalid_argument("constant term must be 1");
    int n = b.order();
    BiSeries<K> h = b;
    h.set(0, 0, K{});
    BiSeries<K> out(n);
    BiSeries<K> power = h;
    for (int k = 1; k <= 2 * n; ++k) {
        if (power.is_zero()) break;
        K factor = scalar_traits<K>::from_ratio(k % 2 == 1 ? 1 : -1, k);
        out = out + factor * power;
        if (k < 2 * n) power = power * h;
    }
    return out;
}

// exp B for B(0,0) == 0; inverse of bi_log on its domain.
template <SeriesScalar K>
BiSeries<K> bi_exp(const BiSeries<K>& b) {
    if (!scalar_traits<K>::is_zero(b.at(0, 0)))
        throw std::invalid_argument("constant term must be 0");
    int n = b.order();
    BiSeries<K> out(n);
    out.set(0, 0, scalar_traits<K>::from_int(1));
    BiSeries<K> term = b;  // b^k / k!
    for (int k = 1; k <= 2 * n; ++k) {
        if (term.is_zero()) break;
        out = out + term;
        if (k < 2 * n) {
            term = term * b;
            term = scalar_traits<K>::from_ratio(1, k + 1) * term;
        }
    }
    return out;
}

}  // namespace schlicht
