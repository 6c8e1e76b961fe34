// Command-line front end: compute coefficient data, Grunsky tables, bound
// reports, extremal searches, and the full deterministic suite.
//
// Exit codes: 0 success, 1 failed checks, 2 usage or input errors.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schlicht/bounds.hpp"
#include "schlicht/extremal.hpp"
#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/invert.hpp"
#include "schlicht/json_io.hpp"
#include "schlicht/suite.hpp"

namespace {

using namespace schlicht;

// Thrown for malformed input that CLI11 itself cannot catch; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ parsing

double parse_real_double(const std::string& s) {
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        double den = parse_real_double(s.substr(slash + 1));
        if (den == 0.0) throw UsageError("zero denominator in: " + s);
        return parse_real_double(s.substr(0, slash)) / den;
    }
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("cannot parse number: " + s);
    }
    if (pos != s.size()) throw UsageError("cannot parse number: " + s);
    return v;
}

Rational parse_rational(std::string s) {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw UsageError("rational mode needs integer or p/q values, got: " + s);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw UsageError("cannot parse rational: " + s);
    if (q.get_den() == 0) throw UsageError("zero denominator in: " + s);
    q.canonicalize();
    return q;
}

// "1.5", "-2/3", "1+2i", "1/2-1/3i", "2i", "-i" -> (real part, imag part).
std::pair<std::string, std::string> split_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw UsageError("empty value in list");
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        auto unit = [](std::string v) {
            if (v.empty() || v == "+") return std::string("1");
            if (v == "-") return std::string("-1");
            return v;
        };
        if (split == std::string::npos) return {"0", unit(body)};
        return {s.substr(0, split), unit(body.substr(split))};
    }
    if (split != std::string::npos)
        throw UsageError("imaginary part must end with i in: " + s);
    return {s, "0"};
}

template <SeriesScalar K>
K parse_scalar(const std::string& item);

template <>
Complex parse_scalar<Complex>(const std::string& item) {
    auto [re, im] = split_complex(item);
    return {parse_real_double(re), parse_real_double(im)};
}

template <>
RationalComplex parse_scalar<RationalComplex>(const std::string& item) {
    auto [re, im] = split_complex(item);
    return {parse_rational(re), parse_rational(im)};
}

template <SeriesScalar K>
std::vector<K> parse_scalar_list(const std::string& csv) {
    std::vector<K> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar<K>(item));
    if (out.empty()) throw UsageError("empty value list");
    return out;
}

// ------------------------------------------------------------------ options

struct Opts {
    std::string family;         // empty when --inline is used
    double theta = 0.0;
    std::string lambda = "0";
    std::string schwarz;        // comma-separated c1,c2,...
    std::string inline_coeffs;  // comma-separated a2,a3,...
    int order = 0;              // 0 = default (12 for families, list length + 1 inline)
    std::string mode = "floating";
    double tolerance = kDefaultTolerance;
    std::string output = "text";
    std::string out_path;
    std::string klass = "auto";  // check: S | convex | auto
    // grunsky
    int max_index = 0;  // 0 = min(5, order - 1)
    std::string parity = "full";
    // search
    std::string search_family = "convex_lambda";
    std::string functional = "G3minusG2";
    bool maximize = false;
    bool minimize = false;
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    int grid_points = 64;
    int refine = 6;
    // suite
    SuiteConfig suite;
};

double default_tolerance() {
    const char* env = std::getenv("SCHLICHT_TOLERANCE");
    if (!env) return kDefaultTolerance;
    std::string s(env);
    double v = 0.0;
    try {
        v = parse_real_double(s);
    } catch (const std::exception&) {
        throw UsageError("SCHLICHT_TOLERANCE is not a number: " + s);
    }
    if (!(v > 0.0)) throw UsageError("SCHLICHT_TOLERANCE must be positive");
    return v;
}

int effective_order(const Opts& o) {
    if (o.order > 0) return o.order;
    if (!o.inline_coeffs.empty()) {
        int n = 1;
        for (char c : o.inline_coeffs)
            if (c == ',') ++n;
        return n + 1;
    }
    return 12;
}

template <SeriesScalar K>
Series<K> build_input(const Opts& o) {
    int order = effective_order(o);
    if (order < 1) throw UsageError("order must be at least 1");
    if (!o.inline_coeffs.empty()) {
        std::vector<K> tail = parse_scalar_list<K>(o.inline_coeffs);
        std::vector<K> c(size_t(order) + 1, K{});
        c[1] = scalar_traits<K>::from_int(1);
        for (size_t j = 0; j < tail.size() && j + 2 <= size_t(order); ++j) c[j + 2] = tail[j];
        return Series<K>(std::move(c));
    }
    if (o.family == "koebe") {
        if constexpr (scalar_traits<K>::mode == ScalarMode::floating_point) {
            if (o.theta < 0.0 || o.theta >= 2.0 * M_PI)
                throw UsageError("--theta must lie in [0, 2pi)");
            return koebe(o.theta, order);
        } else {
            if (o.theta != 0.0)
                throw UsageError("rational mode supports koebe only with theta = 0");
            return koebe_series<K>(order);
        }
    }
    if (o.family == "halfplane") return half_plane<K>(order);
    if (o.family == "convex_lambda") {
        if constexpr (scalar_traits<K>::mode == ScalarMode::floating_point)
            return convex_lambda<Complex>(parse_real_double(o.lambda), order);
        else
            return convex_lambda<K>(parse_rational(o.lambda), order);
    }
    if (o.family == "convex_schwarz" || o.family == "starlike_schwarz") {
        if (o.schwarz.empty()) throw UsageError("--schwarz is required for this family");
        SchwarzPoly<K> w{parse_scalar_list<K>(o.schwarz)};
        return o.family == "convex_schwarz" ? convex_from_schwarz(w, order)
                                            : starlike_from_schwarz(w, order);
    }
    throw UsageError("no input function: pass --family or --inline");
}

std::string input_id(const Opts& o) {
    if (!o.inline_coeffs.empty()) return "inline";
    if (o.family == "koebe") return "koebe(theta=" + std::to_string(o.theta) + ")";
    if (o.family == "convex_lambda") return "convex_lambda(" + o.lambda + ")";
    return o.family;
}

bool wants_convex_report(const Opts& o) {
    if (o.klass == "convex") return true;
    if (o.klass == "S") return false;
    if (!o.inline_coeffs.empty())
        throw UsageError("inline input needs an explicit --class S or --class convex");
    return o.family == "halfplane" || o.family == "convex_lambda" ||
           o.family == "convex_schwarz";
}

// ------------------------------------------------------------------- output

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

std::string show(const Complex& v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

std::string show(const RationalComplex& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json envelope(const Opts& o, const char* command, const char* mode_name) {
    return Json{{"schema", "schlicht-kit/1"},
                {"command", command},
                {"mode", mode_name},
                {"tolerance", o.tolerance}};
}

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// ----------------------------------------------------------------- commands

template <SeriesScalar K>
int run_coeffs(const Opts& o) {
    Series<K> f = build_input<K>(o);
    Series<K> g = revert(f);
    LogCoeffVector<K> gamma = log_coefficients(f);
    LogCoeffVector<K> big_gamma = log_coefficients(g);
    big_gamma.source = LogCoeffSource::inverse;

    if (o.output == "json") {
        Json j = envelope(o, "coeffs", scalar_traits<K>::mode_name());
        j["functionId"] = input_id(o);
        j["order"] = f.order();
        Json a = Json::array(), inv = Json::array();
        for (int n = 1; n <= f.order(); ++n) {
            a.push_back(to_json(f.at(n)));
            inv.push_back(to_json(g.at(n)));
        }
        j["a"] = a;
        j["A"] = inv;
        j["gamma"] = to_json(gamma);
        j["Gamma"] = to_json(big_gamma);
        emit(j.dump(2) + "\n", o.out_path);
        return 0;
    }
    std::ostringstream os;
    if (o.output == "csv") {
        os << "n,a,A,gamma,Gamma\n";
        for (int n = 1; n <= f.order(); ++n) {
            os << n << ",\"" << show(f.at(n)) << "\",\"" << show(g.at(n)) << "\",\""
               << (n < f.order() ? show(gamma.at(n)) : "") << "\",\""
               << (n < f.order() ? show(big_gamma.at(n)) : "") << "\"\n";
        }
    } else {
        os << "# " << input_id(o) << ", order " << f.order() << ", "
           << scalar_traits<K>::mode_name() << " mode\n";
        for (int n = 1; n <= f.order(); ++n)
            os << "a_" << n << " = " << show(f.at(n)) << "\n";
        for (int n = 1; n <= f.order(); ++n)
            os << "A_" << n << " = " << show(g.at(n)) << "\n";
        for (int n = 1; n <= gamma.count(); ++n)
            os << "gamma_" << n << " = " << show(gamma.at(n)) << "\n";
        for (int n = 1; n <= big_gamma.count(); ++n)
            os << "Gamma_" << n << " = " << show(big_gamma.at(n)) << "\n";
    }
    emit(os.str(), o.out_path);
    return 0;
}

template <SeriesScalar K>
int run_grunsky(const Opts& o) {
    Series<K> f = build_input<K>(o);
    int max_index = o.max_index > 0 ? o.max_index : std::min(5, f.order() - 1);
    GrunskyTable<K> table = o.parity == "odd" ? grunsky_odd_table(f, max_index)
                                              : grunsky_table(f, max_index);
    bool has_structural = f.order() >= 6;

    if (o.output == "json") {
        Json j = envelope(o, "grunsky", scalar_traits<K>::mode_name());
        j["functionId"] = input_id(o);
        j["table"] = to_json(table);
        if (has_structural) j["structural"] = to_json(verify_structural(f, o.tolerance));
        emit(j.dump(2) + "\n", o.out_path);
        return 0;
    }
    std::ostringstream os;
    bool odd = table.parity() == TableParity::odd;
    int first = odd ? 1 : 0, step = odd ? 2 : 1;
    if (o.output == "csv") {
        os << "p,q,omega\n";
        for (int p = first; p <= table.max_index(); p += step)
            for (int q = p; q <= table.max_index(); q += step)
                os << p << ',' << q << ",\"" << show(table.at(p, q)) << "\"\n";
    } else {
        os << "# " << input_id(o) << ", " << (odd ? "odd" : "full") << " table to index "
           << table.max_index() << "\n";
        for (int p = first; p <= table.max_index(); p += step)
            for (int q = p; q <= table.max_index(); q += step)
                os << "omega[" << p << "][" << q << "] = " << show(table.at(p, q)) << "\n";
        if (has_structural) {
            auto sr = verify_structural(f, o.tolerance);
            os << "max structural residual = " << fmt(sr.max_residual()) << "\n";
            os << "symmetry defect = " << fmt(table.symmetry_defect()) << "\n";
        }
    }
    emit(os.str(), o.out_path);
    return 0;
}

template <SeriesScalar K>
int run_check(const Opts& o) {
    Series<K> f = build_input<K>(o);
    if (f.order() < 4) throw UsageError("check needs order >= 4");
    bool convex = wants_convex_report(o);
    BoundReport report = convex ? report_convex(f, input_id(o), o.tolerance)
                                : report_S(f, input_id(o), o.tolerance);

    if (o.output == "json") {
        Json j = envelope(o, "check", scalar_traits<K>::mode_name());
        j["class"] = convex ? "convex" : "S";
        j["report"] = to_json(report);
        emit(j.dump(2) + "\n", o.out_path);
    } else if (o.output == "csv") {
        emit(to_csv(report), o.out_path);
    } else {
        std::ostringstream os;
        os << "# " << report.function_id << ", class " << (convex ? "convex" : "S")
           << ", tolerance " << fmt(o.tolerance) << "\n";
        for (const auto& [k, v] : report.quantities) os << k << " = " << fmt(v) << "\n";
        for (const auto& c : report.checks)
            os << (c.pass ? "PASS " : "FAIL ") << c.name << "  value=" << fmt(c.value)
               << " bound=" << fmt(c.bound) << " margin=" << fmt(c.margin) << "\n";
        os << (report.all_pass() ? "all checks pass\n" : "CHECKS FAILED\n");
        emit(os.str(), o.out_path);
    }
    return report.all_pass() ? 0 : 1;
}

int run_search(const Opts& o) {
    if (o.mode == "rational") throw UsageError("search runs in floating mode only");
    SearchSpec spec;
    spec.family = o.search_family == "koebe" ? SearchFamily::koebe_theta
                                             : SearchFamily::convex_lambda;
    bool koebe_family = spec.family == SearchFamily::koebe_theta;
    spec.lo = std::isnan(o.lo) ? 0.0 : o.lo;
    spec.hi = std::isnan(o.hi) ? (koebe_family ? 2.0 * M_PI : 1.0) : o.hi;
    spec.functional = o.functional;
    if (o.maximize && o.minimize) throw UsageError("--maximize and --minimize conflict");
    spec.maximize = !o.minimize;
    spec.grid_points = o.grid_points;
    spec.refine_iterations = o.refine;
    spec.order = effective_order(o);
    SearchResult result = grid_refine_search(spec);

    if (o.output == "json") {
        Json j = envelope(o, "search", "floating");
        j["spec"] = to_json(spec);
        j["result"] = to_json(result);
        emit(j.dump(2) + "\n", o.out_path);
    } else if (o.output == "csv") {
        std::ostringstream os;
        os << "round,lo,hi,bestParam,bestValue\n";
        for (size_t r = 0; r < result.trace.size(); ++r)
            os << r << ',' << fmt(result.trace[r].lo) << ',' << fmt(result.trace[r].hi) << ','
               << fmt(result.trace[r].best_param) << ',' << fmt(result.trace[r].best_value)
               << "\n";
        emit(os.str(), o.out_path);
    } else {
        std::ostringstream os;
        os << "# " << (spec.maximize ? "maximize " : "minimize ") << spec.functional << " over "
           << search_family_name(spec.family) << " on [" << fmt(spec.lo) << ", " << fmt(spec.hi)
           << "]\n";
        for (const auto& r : result.trace)
            os << "[" << fmt(r.lo) << ", " << fmt(r.hi) << "] best " << fmt(r.best_param)
               << " -> " << fmt(r.best_value) << "\n";
        os << "argbest = " << fmt(result.argbest) << "\nvalue = " << fmt(result.value) << "\n";
        emit(os.str(), o.out_path);
    }
    return 0;
}

int run_suite_cmd(Opts& o) {
    o.suite.tolerance = o.tolerance;
    if (o.order > 0) o.suite.order = o.order;
    SuiteResult result = run_suite(o.suite);

    if (o.output == "json") {
        Json j = envelope(o, "suite", "both");
        j["seed"] = o.suite.seed;
        j["order"] = o.suite.order;
        j["timestamp"] = timestamp_utc();
        j["suite"] = to_json(result);
        emit(j.dump(2) + "\n", o.out_path);
    } else if (o.output == "csv") {
        std::ostringstream os;
        os << "id,name,pass,detail\n";
        for (const auto& c : result.criteria)
            os << c.id << ",\"" << c.name << "\"," << (c.pass ? "true" : "false") << ",\""
               << c.detail << "\"\n";
        emit(os.str(), o.out_path);
    } else {
        std::ostringstream os;
        for (const auto& c : result.criteria)
            os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " — "
               << c.detail << "\n";
        for (const auto& [k, v] : result.observations)
            os << "note: " << k << " = " << fmt(v) << "\n";
        os << (result.all_pass() ? "suite passed\n" : "SUITE FAILED\n");
        emit(os.str(), o.out_path);
    }
    return result.all_pass() ? 0 : 1;
}

// -------------------------------------------------------------------- wiring

void add_output_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out_path, "Write the report to a file instead of stdout");
    cmd->add_option("--tolerance", o.tolerance, "Pass/fail tolerance for checks");
}

void add_function_opts(CLI::App* cmd, Opts& o, bool with_mode = true) {
    cmd->add_option("--family", o.family, "Generator family")
        ->check(CLI::IsMember(
            {"koebe", "halfplane", "convex_lambda", "convex_schwarz", "starlike_schwarz"}));
    cmd->add_option("--theta", o.theta, "Koebe rotation angle in [0, 2pi)");
    cmd->add_option("--lambda", o.lambda,
                    "convex_lambda parameter in [0, 1] (p/q accepted in rational mode)");
    cmd->add_option("--schwarz", o.schwarz,
                    "Comma-separated Schwarz coefficients c1,c2,... (a+bi entries)");
    cmd->add_option("--inline", o.inline_coeffs,
                    "Comma-separated coefficients a2,a3,... with a1 = 1 implied");
    cmd->add_option("--order", o.order, "Truncation order (default 12, or inline length + 1)");
    if (with_mode)
        cmd->add_option("--mode", o.mode, "Scalar mode")
            ->check(CLI::IsMember({"rational", "floating"}));
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    try {
        o.tolerance = default_tolerance();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    o.suite.tolerance = o.tolerance;

    CLI::App app{"schlicht-kit: coefficient functionals, Grunsky tables, and bound checks\n"
                 "for normalized analytic maps on the unit disk"};
    app.require_subcommand(1);

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "Print a_n, inverse A_n, and both logarithmic coefficient vectors");
    add_function_opts(coeffs, o);
    add_output_opts(coeffs, o);

    CLI::App* grunsky = app.add_subcommand("grunsky", "Print a Grunsky table and residuals");
    add_function_opts(grunsky, o);
    add_output_opts(grunsky, o);
    grunsky->add_option("--max-index", o.max_index, "Largest table index (default min(5, order-1))");
    grunsky->add_option("--parity", o.parity, "Table parity")
        ->check(CLI::IsMember({"full", "odd"}));

    CLI::App* check = app.add_subcommand("check", "Evaluate the bound report for one function");
    add_function_opts(check, o);
    add_output_opts(check, o);
    check->add_option("--class", o.klass, "Function class the input is asserted to be in")
        ->check(CLI::IsMember({"auto", "S", "convex"}));

    CLI::App* search = app.add_subcommand("search", "One-parameter extremal search");
    search->add_option("--family", o.search_family, "Search family")
        ->check(CLI::IsMember({"convex_lambda", "koebe"}));
    search->add_option("--functional", o.functional,
                       "Functional name (G1, G2, G3, G2minusG1, G3minusG2, a3minusa2sq)");
    search->add_flag("--maximize", o.maximize, "Maximize the functional (default)");
    search->add_flag("--minimize", o.minimize, "Minimize the functional");
    search->add_option("--lo", o.lo, "Interval lower end (default 0)");
    search->add_option("--hi", o.hi, "Interval upper end (default 1, or 2pi for koebe)");
    search->add_option("--grid-points", o.grid_points, "Grid points per round (>= 8)");
    search->add_option("--refine", o.refine, "Refinement rounds");
    search->add_option("--order", o.order, "Truncation order (default 12)");
    add_output_opts(search, o);

    CLI::App* suite = app.add_subcommand("suite", "Run the full deterministic check battery");
    suite->add_option("--seed", o.suite.seed, "Master seed");
    suite->add_option("--order", o.order, "Truncation order (default 12)");
    suite->add_option("--starlike-samples", o.suite.starlike_samples, "");
    suite->add_option("--rotations", o.suite.koebe_rotations, "");
    suite->add_option("--convex-samples", o.suite.convex_samples, "");
    suite->add_option("--lambda-grid", o.suite.lambda_grid, "");
    suite->add_option("--inequality-samples", o.suite.inequality_samples, "");
    suite->add_option("--weights", o.suite.weights_per_sample, "");
    suite->add_option("--psi-samples", o.suite.psi_samples, "");
    suite->add_option("--reversion-samples", o.suite.reversion_samples, "");
    add_output_opts(suite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!(o.tolerance > 0.0)) throw UsageError("tolerance must be positive");
        bool rational = o.mode == "rational";
        if (coeffs->parsed())
            return rational ? run_coeffs<RationalComplex>(o) : run_coeffs<Complex>(o);
        if (grunsky->parsed())
            return rational ? run_grunsky<RationalComplex>(o) : run_grunsky<Complex>(o);
        if (check->parsed())
            return rational ? run_check<RationalComplex>(o) : run_check<Complex>(o);
        if (search->parsed()) return run_search(o);
        if (suite->parsed()) return run_suite_cmd(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}
