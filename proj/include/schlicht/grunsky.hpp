// Grunsky coefficient tables and the quadratic-form inequality.
//
// The table of a normalized f collects the coefficients omega_{p,q} of the
// bivariate logarithm of (f(t)-f(z))/(t-z). For the odd square-root
// transform of f the relevant entries sit at odd index pairs; those tables
// carry the `odd` parity tag and keep every even-indexed slot at exact zero.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schlicht/biseries.hpp"
#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

enum class TableParity { full, odd };

template <SeriesScalar K>
class GrunskyTable {
  public:
    GrunskyTable(int max_index, TableParity parity)
        : max_index_(max_index), parity_(parity) {
        if (max_index < 0) throw std::invalid_argument("negative table index bound");
        c_.assign(size_t(max_index + 1) * size_t(max_index + 1), K{});
    }

    int max_index() const { return max_index_; }
    TableParity parity() const { return parity_; }

    const K& at(int p, int q) const {
        check(p, q);
        return c_[idx(p, q)];
    }
    void set(int p, int q, K v) {
        check(p, q);
        c_[idx(p, q)] = std::move(v);
    }

    double symmetry_defect() const {
        double worst = 0.0;
        for (int p = 0; p <= max_index_; ++p)
            for (int q = p + 1; q <= max_index_; ++q)
                worst = std::max(worst, abs_approx<K>(at(p, q) - at(q, p)));
        return worst;
    }

  private:
    size_t idx(int p, int q) const { return size_t(p) * size_t(max_index_ + 1) + size_t(q); }
    void check(int p, int q) const {
        if (p < 0 || q < 0 || p > max_index_ || q > max_index_)
            throw std::out_of_range("table index out of range");
    }

    int max_index_;
    TableParity parity_;
    std::vector<K> c_;
};

// Square-root transform z * sqrt(f(z^2)/z^2): odd, normalized, order 2N-1.
template <SeriesScalar K>
Series<K> odd_transform(const Series<K>& f) {
    if (!f.normalized()) throw std::invalid_argument("odd_transform requires normalized series");
    Series<K> inner = divided_by_z(divided_by_z(substitute_z_squared(f)));  // order 2N-2
    return times_z(sqrt1(inner));
}

// Full-parity table up to max index P (requires P <= order-1). Entries with
// p+q+1 beyond f's order are those of the truncating polynomial.
template <SeriesScalar K>
GrunskyTable<K> grunsky_table(const Series<K>& f, int max_index) {
    if (!f.normalized()) throw std::invalid_argument("grunsky_table requires normalized series");
    if (max_index > f.order() - 1)
        throw std::invalid_argument("table index bound too large for truncation order");
    BiSeries<K> lg = bi_log(difference_quotient(f, max_index));
    GrunskyTable<K> out(max_index, TableParity::full);
    for (int p = 0; p <= max_index; ++p)
        for (int q = 0; q <= max_index; ++q) out.set(p, q, lg.at(p, q));
    return out;
}

// Odd-parity table of f's square-root transform: entries at odd (p, q) up to
// P, all even-indexed slots exactly zero. P must be odd and at least 5.
template <SeriesScalar K>
GrunskyTable<K> grunsky_odd_table(const Series<K>& f, int max_index) {
    if (max_index < 5 || max_index % 2 == 0)
        throw std::invalid_argument("odd table needs an odd index bound >= 5");
    GrunskyTable<K> full = grunsky_table(odd_transform(f), max_index);
    GrunskyTable<K> out(max_index, TableParity::odd);
    for (int p = 1; p <= max_index; p += 2)
        for (int q = 1; q <= max_index; q += 2) out.set(p, q, full.at(p, q));
    return out;
}

// Sparse complex weights x_p, p >= 1.
template <SeriesScalar K>
struct WeightVector {
    std::map<int, K> entries;
};

// Quadratic form of the Grunsky inequality. For a full table the first
// `rows` rows enter with weight q and the right side is sum |x_p|^2 / p;
// for an odd table row r = 2q-1 enters with weight 2q-1 and the right side
// runs over the odd support. Returns (lhs, rhs) in the scalar's real type.
template <SeriesScalar K>
std::pair<RealOf<K>, RealOf<K>> grunsky_form(const GrunskyTable<K>& table,
                                             const WeightVector<K>& x, int rows) {
    using tr = scalar_traits<K>;
    bool any_nonzero = false;
    for (const auto& [p, v] : x.entries) {
        if (p < 1 || p > table.max_index())
            throw std::out_of_range("weight support outside table range");
        if (table.parity() == TableParity::odd && p % 2 == 0)
            throw std::invalid_argument("odd-parity form requires odd weight support");
        if (!tr::is_zero(v)) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("weight vector has no nonzero entry");

    bool odd = table.parity() == TableParity::odd;
    int last_row = odd ? 2 * rows - 1 : rows;
    if (rows < 1 || last_row > table.max_index())
        throw std::out_of_range("row count outside table range");

    RealOf<K> lhs{};
    for (int q = 1; q <= rows; ++q) {
        int row = odd ? 2 * q - 1 : q;
        K inner{};
        for (const auto& [p, v] : x.entries) inner += table.at(p, row) * v;
        lhs += RealOf<K>(row) * tr::norm_sq(inner);
    }
    RealOf<K> rhs{};
    for (const auto& [p, v] : x.entries) rhs += tr::norm_sq(v) / RealOf<K>(p);
    return {lhs, rhs};
}

// Residuals of the four identities tying a2, a3, a4 to the odd-table
// entries, plus the value |2*omega13 - omega11^2| (equal to |a3 - a2^2|,
// which is at most 1 for univalent f). Exact scalars give exact residuals.
template <SeriesScalar K>
struct StructuralReport {
    std::array<K, 4> residuals{};   // a2, a3, a4 relations and the consistency relation
    RealOf<K> basic_value_sq{};     // |2*omega13 - omega11^2|^2
    bool basic_bound_ok = false;    // value <= 1 (within tolerance for floating)

    double max_residual() const {
        double worst = 0.0;
        for (const K& r : residuals) worst = std::max(worst, abs_approx<K>(r));
        return worst;
    }
};

template <SeriesScalar K>
StructuralReport<K> verify_structural(const Series<K>& f, double tolerance = kDefaultTolerance) {
    using tr = scalar_traits<K>;
    if (f.order() < 6)
        throw std::invalid_argument("structural check requires order >= 6");
    GrunskyTable<K> t = grunsky_odd_table(f, 5);
    const K& w11 = t.at(1, 1);
    const K& w13 = t.at(1, 3);
    const K& w33 = t.at(3, 3);
    const K& w15 = t.at(1, 5);
    K w11sq = w11 * w11;
    K w11cu = w11sq * w11;

    StructuralReport<K> out;
    out.residuals[0] = f.at(2) - tr::from_int(2) * w11;
    out.residuals[1] = f.at(3) - (tr::from_int(2) * w13 + tr::from_int(3) * w11sq);
    out.residuals[2] = f.at(4) - (tr::from_int(2) * w33 + tr::from_int(8) * w11 * w13 +
                                  tr::from_ratio(10, 3) * w11cu);
    out.residuals[3] =
        tr::from_int(3) * w15 - tr::from_int(3) * w11 * w13 + w11cu - tr::from_int(3) * w33;

    K basic = tr::from_int(2) * w13 - w11sq;
    out.basic_value_sq = tr::norm_sq(basic);
    out.basic_bound_ok =
        tr::to_double(out.basic_value_sq) <= (1.0 + tolerance) * (1.0 + tolerance);
    return out;
}

}  // namespace schlicht
