// One-dimensional extremal search over parametric families. Derivative-free
// grid scan with interval refinement: the functionals carry absolute values,
// so kinks rule out smooth local methods at this scale.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schlicht/bounds.hpp"
#include "schlicht/families.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// Named real functional of a normalized function (same keys as the report
// quantities).
template <SeriesScalar K>
double evaluate_functional(const Series<K>& f, const std::string& name) {
    if (f.order() < 4) throw std::invalid_argument("functional needs order >= 4");
    auto values = detail::functional_values(f);
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw std::invalid_argument("unknown functional: " + name);
}

// The two one-parameter families the search runs over.
enum class SearchFamily { convex_lambda, koebe_theta };

inline const char* search_family_name(SearchFamily f) {
    return f == SearchFamily::convex_lambda ? "convex_lambda" : "koebe_theta";
}

struct SearchSpec {
    SearchFamily family = SearchFamily::convex_lambda;
    double lo = 0.0;
    double hi = 1.0;
    std::string functional = "G3minusG2";
    bool maximize = true;
    int grid_points = 64;
    int refine_iterations = 6;
    int order = 12;
};

struct SearchRound {
    double lo = 0.0;
    double hi = 0.0;
    double best_param = 0.0;
    double best_value = 0.0;
};

struct SearchResult {
    double argbest = 0.0;
    double value = 0.0;
    std::vector<SearchRound> trace;
};

namespace detail {

inline double search_sample(const SearchSpec& spec, double x) {
    Series<Complex> f = spec.family == SearchFamily::convex_lambda
                            ? convex_lambda<Complex>(x, spec.order)
                            : koebe(x, spec.order);
    return evaluate_functional(f, spec.functional);
}

}  // namespace detail

// Uniform grid scan, then refine_iterations rounds re-gridding the
// one-grid-step bracket around the incumbent. Deterministic; ties break
// toward the smaller parameter (the scan only replaces on strict
// improvement and runs left to right); the incumbent is carried across
// rounds, so the best value is monotone over the trace.
inline SearchResult grid_refine_search(const SearchSpec& spec) {
    if (!(spec.lo < spec.hi)) throw std::invalid_argument("search interval is empty");
    if (spec.grid_points < 8) throw std::invalid_argument("search needs at least 8 grid points");
    if (spec.refine_iterations < 0) throw std::invalid_argument("negative refinement count");
    if (spec.order < 4) throw std::invalid_argument("search needs order >= 4");

    double sign = spec.maximize ? 1.0 : -1.0;
    double lo = spec.lo, hi = spec.hi;
    bool have_best = false;
    double best_x = lo, best_v = 0.0;
    SearchResult result;

    for (int round = 0; round <= spec.refine_iterations; ++round) {
        double h = (hi - lo) / double(spec.grid_points - 1);
        for (int i = 0; i < spec.grid_points; ++i) {
            double x = (i == spec.grid_points - 1) ? hi : lo + h * double(i);
            double v;
            try {
                v = detail::search_sample(spec, x);
            } catch (const std::exception& e) {
                throw std::runtime_error("functional evaluation failed at parameter " +
                                         std::to_string(x) + ": " + e.what());
            }
            if (!have_best || sign * v > sign * best_v) {
                have_best = true;
                best_x = x;
                best_v = v;
            }
        }
        result.trace.push_back({lo, hi, best_x, best_v});
        lo = std::max(lo, best_x - h);
        hi = std::min(hi, best_x + h);
        if (!(lo < hi)) break;  // interval collapsed to a point
    }

    result.argbest = best_x;
    result.value = best_v;
    return result;
}

}  // namespace schlicht
