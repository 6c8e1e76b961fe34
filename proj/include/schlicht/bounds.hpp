// Inequality checkers: evaluate the coefficient functionals of a normalized
// function and compare them against the known bounds for its class, with an
// explicit margin per check. Class membership is taken on trust from the
// generator that built the function; it is never inferred from coefficients.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/invert.hpp"
#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// One inequality: value vs bound. For upper bounds margin = bound - value,
// for lower bounds margin = value - bound, so nonnegative margin means pass
// either way and the most negative margin is the worst violation.
struct BoundCheck {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool lower = false;
    bool pass = false;
};

struct BoundReport {
    std::string function_id;
    // Insertion-ordered (key, value) pairs; keys are the functional names
    // accepted by the search command (G1, G2, G3, G2minusG1, G3minusG2,
    // a3minusa2sq).
    std::vector<std::pair<std::string, double>> quantities;
    std::vector<BoundCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double quantity(const std::string& key) const {
        for (const auto& [k, v] : quantities)
            if (k == key) return v;
        throw std::invalid_argument("unknown quantity: " + key);
    }
    double worst_margin() const {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& c : checks) worst = std::min(worst, c.margin);
        return worst;
    }
};

namespace detail {

inline BoundCheck upper_check(std::string name, double value, double bound, double tol) {
    double margin = bound - value;
    return {std::move(name), value, bound, margin, false, margin >= -tol};
}

inline BoundCheck lower_check(std::string name, double value, double bound, double tol) {
    double margin = value - bound;
    return {std::move(name), value, bound, margin, true, margin >= -tol};
}

// The six report quantities from the series pipeline.
template <SeriesScalar K>
std::vector<std::pair<std::string, double>> functional_values(const Series<K>& f) {
    if (f.order() < 4) throw std::invalid_argument("bound report needs order >= 4");
    LogCoeffVector<K> big_gamma = inverse_log_coefficients(f);
    CoeffTriple<K> a = initial_coeffs(f);
    double g1 = abs_approx(big_gamma.at(1));
    double g2 = abs_approx(big_gamma.at(2));
    double g3 = abs_approx(big_gamma.at(3));
    double gap = abs_approx(K(a.a3 - a.a2 * a.a2));
    return {{"G1", g1},           {"G2", g2},
            {"G3", g3},           {"G2minusG1", g2 - g1},
            {"G3minusG2", g3 - g2}, {"a3minusa2sq", gap}};
}

}  // namespace detail

// Bounds valid across the whole normalized univalent class.
template <SeriesScalar K>
BoundReport report_S(const Series<K>& f, std::string function_id,
                     double tol = kDefaultTolerance) {
    BoundReport r;
    r.function_id = std::move(function_id);
    r.quantities = detail::functional_values(f);
    double g1 = r.quantity("G1"), g2 = r.quantity("G2"), g3 = r.quantity("G3");
    double gap = r.quantity("a3minusa2sq");
    r.checks.push_back(detail::upper_check("|G1| <= 1", g1, 1.0, tol));
    r.checks.push_back(detail::upper_check("|G2| <= 3/2", g2, 1.5, tol));
    r.checks.push_back(detail::upper_check("|G3| <= 10/3", g3, 10.0 / 3.0, tol));
    r.checks.push_back(
        detail::lower_check("|G2|-|G1| >= -sqrt(2)/2", g2 - g1, -std::sqrt(2.0) / 2.0, tol));
    r.checks.push_back(detail::upper_check("|G2|-|G1| <= 1/2", g2 - g1, 0.5, tol));
    r.checks.push_back(detail::upper_check("|G3|-|G2| <= 11/6", g3 - g2, 11.0 / 6.0, tol));
    r.checks.push_back(detail::upper_check("|a3-a2^2| <= 1", gap, 1.0, tol));
    return r;
}

// Sharper bounds valid on the convex subclass.
template <SeriesScalar K>
BoundReport report_convex(const Series<K>& f, std::string function_id,
                          double tol = kDefaultTolerance) {
    BoundReport r;
    r.function_id = std::move(function_id);
    r.quantities = detail::functional_values(f);
    double g1 = r.quantity("G1"), g2 = r.quantity("G2"), g3 = r.quantity("G3");
    double gap = r.quantity("a3minusa2sq");
    CoeffTriple<K> a = initial_coeffs(f);
    double a2_abs = abs_approx(a.a2);
    r.checks.push_back(detail::upper_check("|G1| <= 1/2", g1, 0.5, tol));
    r.checks.push_back(detail::upper_check("|G2| <= 1/4", g2, 0.25, tol));
    r.checks.push_back(detail::upper_check("|G3| <= 1/6", g3, 1.0 / 6.0, tol));
    r.checks.push_back(
        detail::lower_check("|G2|-|G1| >= -sqrt(10)/10", g2 - g1, -std::sqrt(10.0) / 10.0, tol));
    r.checks.push_back(detail::upper_check("|G2|-|G1| <= 1/6", g2 - g1, 1.0 / 6.0, tol));
    r.checks.push_back(
        detail::upper_check("|G3|-|G2| <= 2*sqrt(10)/75", g3 - g2, 2.0 * std::sqrt(10.0) / 75.0, tol));
    r.checks.push_back(detail::upper_check("|a3-a2^2| <= (1-|a2|^2)/3", gap,
                                           (1.0 - a2_abs * a2_abs) / 3.0, tol));
    return r;
}

struct GapCheck {
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

// Refined second-coefficient gap bound |a3 - a2^2| <= (1 - |a2|^2)/3,
// valid for convex functions; equality on the whole extremal family.
template <SeriesScalar K>
GapCheck convex_gap_check(const Series<K>& f, double tol = kDefaultTolerance) {
    CoeffTriple<K> a = initial_coeffs(f);
    double value = abs_approx(K(a.a3 - a.a2 * a.a2));
    double a2_abs = abs_approx(a.a2);
    double bound = (1.0 - a2_abs * a2_abs) / 3.0;
    return {value, bound, value <= bound + tol};
}

// ---------------------------------------------------------------------------
// Sharp bound Phi(mu, nu) for the Schwarz-coefficient functional
// Psi(w) = |c3 + mu c1 c2 + nu c1^3| on the two parameter regions where a
// closed form is available. Points outside both regions are reported as
// such rather than guessed.

struct PhiArgs {
    double mu = 0.0;
    double nu = 0.0;
};

enum class PhiRegion { d6, d8, outside };

inline const char* phi_region_name(PhiRegion r) {
    switch (r) {
        case PhiRegion::d6: return "D6";
        case PhiRegion::d8: return "D8";
        case PhiRegion::outside: return "outside";
    }
    return "?";
}

struct PhiEvaluation {
    PhiRegion region = PhiRegion::outside;
    std::optional<double> value;
};

// Region boundaries are closed with a 1e-12 slack. The regions overlap on a
// boundary arc where both formulas agree, so the D6-first order is safe.
inline PhiEvaluation phi_bound(const PhiArgs& args) {
    if (!std::isfinite(args.mu) || !std::isfinite(args.nu))
        throw std::invalid_argument("phi arguments must be finite");
    constexpr double tol = 1e-12;
    double am = std::abs(args.mu);
    double nu = args.nu;
    if (am >= 2.0 - tol && am <= 4.0 + tol && nu >= (args.mu * args.mu + 8.0) / 12.0 - tol)
        return {PhiRegion::d6, std::abs(nu)};
    double m1 = am + 1.0;
    double lo = -(2.0 / 3.0) * m1;
    double hi = (4.0 / 27.0) * m1 * m1 * m1 - m1;
    if (am >= 0.5 - tol && am <= 2.0 + tol && nu >= lo - tol && nu <= hi + tol) {
        double value = (2.0 / 3.0) * m1 * std::sqrt(m1 / (3.0 * (m1 + nu)));
        return {PhiRegion::d8, value};
    }
    return {PhiRegion::outside, std::nullopt};
}

// Psi(w) = |c3 + mu c1 c2 + nu c1^3| for a Schwarz polynomial; missing
// coefficients count as zero.
template <SeriesScalar K>
double psi_schwarz(const SchwarzPoly<K>& w, const PhiArgs& args) {
    using tr = scalar_traits<K>;
    Complex c1 = tr::to_complex(w.coeff(1));
    Complex c2 = tr::to_complex(w.coeff(2));
    Complex c3 = tr::to_complex(w.coeff(3));
    return std::abs(c3 + args.mu * c1 * c2 + args.nu * c1 * c1 * c1);
}

}  // namespace schlicht
