// JSON shapes for every artifact the CLI emits. Key order is fixed
// (ordered_json) so byte-identical reruns are possible.

#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "schlicht/biseries.hpp"
#include "schlicht/bounds.hpp"
#include "schlicht/extremal.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/invert.hpp"
#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

using Json = nlohmann::ordered_json;

// Scalars as [re, im]; rationals render as strings to stay exact.
inline Json to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }
inline Json to_json(const RationalComplex& v) {
    return Json::array({v.re.get_str(), v.im.get_str()});
}

template <SeriesScalar K>
Json to_json(const Series<K>& f) {
    Json coeffs = Json::array();
    for (int k = 0; k <= f.order(); ++k) coeffs.push_back(to_json(f.at(k)));
    return Json{{"order", f.order()},
                {"mode", scalar_traits<K>::mode_name()},
                {"coefficients", coeffs}};
}

template <SeriesScalar K>
Json to_json(const BiSeries<K>& b) {
    Json rows = Json::array();
    for (int p = 0; p <= b.order(); ++p) {
        Json row = Json::array();
        for (int q = 0; q <= b.order(); ++q) row.push_back(to_json(b.at(p, q)));
        rows.push_back(std::move(row));
    }
    return Json{{"order", b.order()}, {"mode", scalar_traits<K>::mode_name()}, {"rows", rows}};
}

template <SeriesScalar K>
Json to_json(const GrunskyTable<K>& t) {
    bool odd = t.parity() == TableParity::odd;
    int first = odd ? 1 : 0;
    int step = odd ? 2 : 1;
    Json entries = Json::array();
    for (int p = first; p <= t.max_index(); p += step)
        for (int q = p; q <= t.max_index(); q += step)
            entries.push_back(Json::array({p, q, to_json(t.at(p, q))}));
    return Json{{"parity", t.parity() == TableParity::odd ? "odd" : "full"},
                {"max_index", t.max_index()},
                {"mode", scalar_traits<K>::mode_name()},
                {"entries", entries}};
}

template <SeriesScalar K>
Json to_json(const LogCoeffVector<K>& v) {
    Json values = Json::array();
    for (int n = 1; n <= v.count(); ++n) values.push_back(to_json(v.at(n)));
    return Json{{"source", v.source == LogCoeffSource::direct ? "direct" : "inverse"},
                {"values", values}};
}

inline Json to_json(const BoundCheck& c) {
    return Json{{"name", c.name},     {"value", c.value}, {"bound", c.bound},
                {"margin", c.margin}, {"kind", c.lower ? "lower" : "upper"},
                {"pass", c.pass}};
}

inline Json to_json(const BoundReport& r) {
    Json quantities = Json::object();
    for (const auto& [k, v] : r.quantities) quantities[k] = v;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"functionId", r.function_id},
                {"quantities", quantities},
                {"checks", checks},
                {"allPass", r.all_pass()}};
}

template <SeriesScalar K>
Json to_json(const StructuralReport<K>& r) {
    Json residuals = Json::array();
    for (const auto& v : r.residuals) residuals.push_back(abs_approx(v));
    return Json{{"residuals", residuals},
                {"basicValue", scalar_traits<K>::to_double(r.basic_value_sq)},
                {"basicBoundOk", r.basic_bound_ok},
                {"maxResidual", r.max_residual()}};
}

inline Json to_json(const SearchRound& r) {
    return Json{{"lo", r.lo}, {"hi", r.hi}, {"bestParam", r.best_param}, {"bestValue", r.best_value}};
}

inline Json to_json(const SearchResult& r) {
    Json trace = Json::array();
    for (const auto& round : r.trace) trace.push_back(to_json(round));
    return Json{{"argbest", r.argbest}, {"value", r.value}, {"trace", trace}};
}

inline Json to_json(const SearchSpec& s) {
    return Json{{"family", search_family_name(s.family)},
                {"lo", s.lo},
                {"hi", s.hi},
                {"functional", s.functional},
                {"direction", s.maximize ? "maximize" : "minimize"},
                {"gridPoints", s.grid_points},
                {"refineIterations", s.refine_iterations},
                {"order", s.order}};
}

// CSV rows for a bound report: functionId, checkName, value, bound, margin, pass.
inline std::string to_csv(const BoundReport& r) {
    std::string out = "functionId,checkName,value,bound,margin,pass\n";
    for (const auto& c : r.checks) {
        out += '"' + r.function_id + "\",\"" + c.name + "\"," + std::to_string(c.value) + ',' +
               std::to_string(c.bound) + ',' + std::to_string(c.margin) + ',' +
               (c.pass ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace schlicht
