#include "schlicht/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "schlicht/bounds.hpp"
#include "schlicht/extremal.hpp"
#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/invert.hpp"

namespace schlicht {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent deterministic seed per (stream, index) pair.
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t i) {
    return splitmix64(master ^ splitmix64(stream * 0x9E3779B97F4A7C15ULL + i));
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const double kSqrt10 = std::sqrt(10.0);
const double kLambdaStar = std::sqrt(0.4);  // sqrt(2/5), the sharp convex-gap parameter

bool near(double v, double target, double tol) { return std::abs(v - target) <= tol; }

// ---------------------------------------------------------------------- //
// Criteria 3, 4, 7 share one pass over the sample batteries.

struct BatteryStats {
    int samples = 0;
    int report_failures = 0;
    int gap_failures = 0;
    int structural_failures = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_residual = 0.0;
    double worst_gamma_defect = 0.0;
    double worst_symmetry = 0.0;
    double min_g2_minus_g1 = std::numeric_limits<double>::infinity();
};

void battery_sample(const Series<Complex>& f, const std::string& id, bool convex, double tol,
                    BatteryStats& st) {
    BoundReport rep = convex ? report_convex(f, id, tol) : report_S(f, id, tol);
    ++st.samples;
    if (!rep.all_pass()) ++st.report_failures;
    st.worst_margin = std::min(st.worst_margin, rep.worst_margin());
    st.min_g2_minus_g1 = std::min(st.min_g2_minus_g1, rep.quantity("G2minusG1"));
    if (convex && !convex_gap_check(f, tol).pass) ++st.gap_failures;

    StructuralReport<Complex> sr = verify_structural(f, tol);
    GrunskyTable<Complex> full = grunsky_table(f, 5);
    LogCoeffVector<Complex> g = log_coefficients(f);
    double defect = 0.0;
    for (int p = 1; p <= 5; ++p)
        defect = std::max(defect, std::abs(full.at(p, 0) - 2.0 * g.at(p)));
    double sym = full.symmetry_defect();
    st.worst_residual = std::max(st.worst_residual, sr.max_residual());
    st.worst_gamma_defect = std::max(st.worst_gamma_defect, defect);
    st.worst_symmetry = std::max(st.worst_symmetry, sym);
    if (sr.max_residual() > tol || !sr.basic_bound_ok || defect > tol || sym > tol)
        ++st.structural_failures;
}

SchwarzPoly<Complex> draw_schwarz(std::uint64_t seed, int max_degree) {
    std::mt19937_64 r(seed);
    int degree = 1 + int(r() % std::uint64_t(max_degree));
    return random_schwarz(degree, r());
}

// ---------------------------------------------------------------------- //

CriterionResult criterion_koebe_values(const SuiteConfig& cfg) {
    Series<RationalComplex> fq = koebe_series<RationalComplex>(cfg.order);
    LogCoeffVector<RationalComplex> gq = inverse_log_coefficients(fq);
    auto cq = inverse_log_coeffs_closed_form(initial_coeffs(fq));
    const RationalComplex t1 = RationalComplex(-1);
    const RationalComplex t2 = RationalComplex::ratio(3, 2);
    const RationalComplex t3 = RationalComplex::ratio(-10, 3);
    bool exact = gq.at(1) == t1 && gq.at(2) == t2 && gq.at(3) == t3 && cq[0] == t1 &&
                 cq[1] == t2 && cq[2] == t3;

    Series<Complex> fd = koebe(0.0, cfg.order);
    LogCoeffVector<Complex> gd = inverse_log_coefficients(fd);
    auto cd = inverse_log_coeffs_closed_form(initial_coeffs(fd));
    double dev = 0.0;
    const double targets[3] = {1.0, 1.5, 10.0 / 3.0};
    for (int n = 1; n <= 3; ++n) {
        dev = std::max(dev, std::abs(std::abs(gd.at(n)) - targets[n - 1]));
        dev = std::max(dev, std::abs(std::abs(cd[size_t(n - 1)]) - targets[n - 1]));
    }
    bool pass = exact && dev <= 1e-10;
    return {1, "koebe |Gamma| values (1, 3/2, 10/3), series and closed form", pass,
            std::string(exact ? "rational exact" : "rational MISMATCH") +
                "; floating max deviation " + fmt(dev)};
}

CriterionResult criterion_koebe_gaps(const SuiteConfig& cfg) {
    Series<Complex> f = koebe(0.0, cfg.order);
    LogCoeffVector<Complex> g = inverse_log_coefficients(f);
    double d21 = std::abs(g.at(2)) - std::abs(g.at(1));
    double d32 = std::abs(g.at(3)) - std::abs(g.at(2));
    bool pass = near(d21, 0.5, 1e-10) && near(d32, 11.0 / 6.0, 1e-10);
    return {2, "koebe gaps |G2|-|G1| = 1/2 and |G3|-|G2| = 11/6", pass,
            "gaps " + fmt(d21) + ", " + fmt(d32)};
}

CriterionResult criterion_lambda_sharpness(const SuiteConfig& cfg) {
    Series<Complex> f = convex_lambda<Complex>(kLambdaStar, cfg.order);
    LogCoeffVector<Complex> g = inverse_log_coefficients(f);
    double d1 = std::abs(g.at(1) - Complex(-kSqrt10 / 10.0, 0.0));
    double d2 = std::abs(g.at(2));
    double d3 = std::abs(g.at(3) - Complex(2.0 * kSqrt10 / 75.0, 0.0));
    bool float_ok = d1 <= 1e-10 && d2 <= 1e-10 && d3 <= 1e-10;

    Series<RationalComplex> f0 = convex_lambda<RationalComplex>(Rational(0), cfg.order);
    LogCoeffVector<RationalComplex> g0 = inverse_log_coefficients(f0);
    // Gamma1 = 0 and Gamma2 = -1/6 give |G2| - |G1| = 1/6 exactly.
    bool exact_ok = g0.at(1) == RationalComplex(0) && g0.at(2) == RationalComplex::ratio(-1, 6);

    return {5, "convex family sharpness at lambda = sqrt(2/5) and lambda = 0",
            float_ok && exact_ok,
            "deviations " + fmt(d1) + ", " + fmt(d2) + ", " + fmt(d3) +
                (exact_ok ? "; lambda=0 gap 1/6 exact" : "; lambda=0 MISMATCH")};
}

CriterionResult criterion_halfplane(const SuiteConfig& cfg) {
    Series<RationalComplex> h = half_plane<RationalComplex>(cfg.order);
    LogCoeffVector<RationalComplex> g = inverse_log_coefficients(h);
    bool pass = g.at(1) == RationalComplex::ratio(-1, 2) &&
                g.at(2) == RationalComplex::ratio(1, 4) &&
                g.at(3) == RationalComplex::ratio(-1, 6);
    return {6, "half-plane |Gamma| values (1/2, 1/4, 1/6) exact", pass,
            pass ? "exact" : "MISMATCH"};
}

CriterionResult criterion_grunsky_inequality(const SuiteConfig& cfg) {
    int violations = 0;
    int checked = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.inequality_samples; ++i) {
        SchwarzPoly<Complex> w = draw_schwarz(sample_seed(cfg.seed, 3, std::uint64_t(i)), 6);
        Series<Complex> f = (i % 2 == 0) ? starlike_from_schwarz(w, cfg.order)
                                         : convex_from_schwarz(w, cfg.order);
        GrunskyTable<Complex> odd = grunsky_odd_table(f, 5);
        for (int j = 0; j < cfg.weights_per_sample; ++j) {
            std::mt19937_64 rw(
                sample_seed(cfg.seed, 4, std::uint64_t(i) * 1000003ULL + std::uint64_t(j)));
            WeightVector<Complex> x;
            for (int p : {1, 3, 5})
                if (rw() & 1)
                    x.entries[p] =
                        Complex(detail::symmetric_double(rw), detail::symmetric_double(rw));
            if (x.entries.empty()) x.entries[1] = Complex(1.0, 0.0);
            auto [lhs, rhs] = grunsky_form(odd, x, 3);
            ++checked;
            worst_slack = std::min(worst_slack, rhs - lhs);
            if (lhs > rhs + cfg.tolerance) ++violations;
        }
    }

    Series<Complex> fk = koebe(0.0, cfg.order);
    WeightVector<Complex> e1;
    e1.entries[1] = Complex(1.0, 0.0);
    auto [lf, rf] = grunsky_form(grunsky_table(fk, 5), e1, 5);
    auto [lo, ro] = grunsky_form(grunsky_odd_table(fk, 5), e1, 3);
    bool koebe_ok = near(lf, 1.0, 1e-10) && near(rf, 1.0, 1e-10) && near(lo, 1.0, 1e-10) &&
                    near(ro, 1.0, 1e-10);

    bool pass = violations == 0 && koebe_ok;
    return {8, "grunsky quadratic form lhs <= rhs; koebe equality cases", pass,
            std::to_string(checked) + " weight checks, " + std::to_string(violations) +
                " violations, min slack " + fmt(worst_slack) + "; koebe lhs/rhs " + fmt(lf) +
                "/" + fmt(rf) + " (full), " + fmt(lo) + "/" + fmt(ro) + " (odd)"};
}

CriterionResult criterion_psi_phi(const SuiteConfig& cfg) {
    PhiArgs inner{3.0, 2.0};
    PhiArgs edge{-1.4, -0.4};
    PhiEvaluation p6 = phi_bound(inner);
    PhiEvaluation p8 = phi_bound(edge);
    bool regions_ok = p6.region == PhiRegion::d6 && p8.region == PhiRegion::d8 &&
                      p6.value.has_value() && p8.value.has_value();
    double phi_ref = 1.6 * std::sqrt(0.4);
    bool ref_ok = regions_ok && std::abs(*p8.value - phi_ref) <= 1e-12;

    int violations = 0;
    double worst6 = std::numeric_limits<double>::infinity();
    double worst8 = worst6;
    if (regions_ok) {
        for (int i = 0; i < cfg.psi_samples; ++i) {
            SchwarzPoly<Complex> w = random_schwarz(3, sample_seed(cfg.seed, 5, std::uint64_t(i)));
            double psi6 = psi_schwarz(w, inner);
            double psi8 = psi_schwarz(w, edge);
            worst6 = std::min(worst6, *p6.value - psi6);
            worst8 = std::min(worst8, *p8.value - psi8);
            if (psi6 > *p6.value + cfg.tolerance || psi8 > *p8.value + cfg.tolerance)
                ++violations;
        }
    }
    bool pass = regions_ok && ref_ok && violations == 0;
    return {9, "schwarz functional psi <= phi on both closed-form regions", pass,
            std::to_string(cfg.psi_samples) + " samples/region, " + std::to_string(violations) +
                " violations, min slack " + fmt(worst6) + " (D6), " + fmt(worst8) +
                " (D8); phi(-7/5,-2/5) dev " +
                fmt(regions_ok ? std::abs(*p8.value - phi_ref) : -1.0)};
}

CriterionResult criterion_search(const SuiteConfig& cfg) {
    SearchSpec s1{SearchFamily::convex_lambda, 0.0, 1.0, "G3minusG2", true, 64, 6, cfg.order};
    SearchResult r1 = grid_refine_search(s1);
    bool ok1 = near(r1.argbest, kLambdaStar, 1e-3) && near(r1.value, 2.0 * kSqrt10 / 75.0, 1e-5);

    SearchSpec s2{SearchFamily::convex_lambda, 0.0, 1.0, "G2minusG1", false, 64, 6, cfg.order};
    SearchResult r2 = grid_refine_search(s2);
    bool ok2 = near(r2.argbest, kLambdaStar, 1e-3) && near(r2.value, -kSqrt10 / 10.0, 1e-5);

    SearchSpec s3{SearchFamily::convex_lambda, 0.0, 1.0, "G2minusG1", true, 64, 6, cfg.order};
    SearchResult r3 = grid_refine_search(s3);
    bool ok3 = std::abs(r3.argbest) <= 1e-12 && near(r3.value, 1.0 / 6.0, 1e-10);

    return {10, "extremal searches recover sqrt(2/5), sqrt(2/5), 0", ok1 && ok2 && ok3,
            "argbest " + fmt(r1.argbest) + ", " + fmt(r2.argbest) + ", " + fmt(r3.argbest) +
                "; values " + fmt(r1.value) + ", " + fmt(r2.value) + ", " + fmt(r3.value)};
}

CriterionResult criterion_reversion(const SuiteConfig& cfg) {
    int roundtrip_failures = 0;
    int closed_form_failures = 0;
    for (int i = 0; i < cfg.reversion_samples; ++i) {
        std::mt19937_64 r(sample_seed(cfg.seed, 6, std::uint64_t(i)));
        Series<RationalComplex> f = Series<RationalComplex>::identity(cfg.order);
        for (int n = 2; n <= cfg.order; ++n) {
            // |c_n| <= n: numerators bounded by 11n over denominator 16.
            long span = 22L * n + 1L;
            long pre = long(r() % std::uint64_t(span)) - 11L * n;
            long pim = long(r() % std::uint64_t(span)) - 11L * n;
            Rational re(pre, 16);
            re.canonicalize();
            Rational im(pim, 16);
            im.canonicalize();
            f.set(n, RationalComplex(std::move(re), std::move(im)));
        }
        Series<RationalComplex> g = revert(f);
        if (!(compose(f, g) == Series<RationalComplex>::identity(cfg.order)))
            ++roundtrip_failures;
        LogCoeffVector<RationalComplex> gamma = log_coefficients(g);
        auto closed = inverse_log_coeffs_closed_form(initial_coeffs(f));
        if (!(gamma.at(1) == closed[0] && gamma.at(2) == closed[1] && gamma.at(3) == closed[2]))
            ++closed_form_failures;
    }
    bool pass = roundtrip_failures == 0 && closed_form_failures == 0;
    return {11, "exact reversion round-trip and closed-form agreement", pass,
            std::to_string(cfg.reversion_samples) + " samples, " +
                std::to_string(roundtrip_failures) + " round-trip failures, " +
                std::to_string(closed_form_failures) + " closed-form mismatches"};
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
    if (cfg.order < 6) throw std::invalid_argument("suite needs order >= 6");
    if (cfg.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (cfg.starlike_samples < 1 || cfg.koebe_rotations < 1 || cfg.convex_samples < 1 ||
        cfg.lambda_grid < 2 || cfg.inequality_samples < 1 || cfg.weights_per_sample < 1 ||
        cfg.psi_samples < 1 || cfg.reversion_samples < 1)
        throw std::invalid_argument("suite sample counts must be positive");

    SuiteResult out;
    out.criteria.push_back(criterion_koebe_values(cfg));
    out.criteria.push_back(criterion_koebe_gaps(cfg));

    BatteryStats s_stats;
    for (int i = 0; i < cfg.starlike_samples; ++i) {
        SchwarzPoly<Complex> w = draw_schwarz(sample_seed(cfg.seed, 1, std::uint64_t(i)), 6);
        battery_sample(starlike_from_schwarz(w, cfg.order),
                       "starlike[" + std::to_string(i) + "]", false, cfg.tolerance, s_stats);
    }
    for (int k = 0; k < cfg.koebe_rotations; ++k) {
        double theta = 2.0 * M_PI * double(k) / double(cfg.koebe_rotations);
        battery_sample(koebe(theta, cfg.order), "koebe[" + std::to_string(k) + "]", false,
                       cfg.tolerance, s_stats);
    }
    out.criteria.push_back(
        {3, "univalent battery: starlike samples + koebe rotations",
         s_stats.report_failures == 0,
         std::to_string(s_stats.samples) + " samples, " +
             std::to_string(s_stats.report_failures) + " failures, worst margin " +
             fmt(s_stats.worst_margin)});

    BatteryStats c_stats;
    for (int i = 0; i < cfg.convex_samples; ++i) {
        SchwarzPoly<Complex> w = draw_schwarz(sample_seed(cfg.seed, 2, std::uint64_t(i)), 6);
        battery_sample(convex_from_schwarz(w, cfg.order), "convex[" + std::to_string(i) + "]",
                       true, cfg.tolerance, c_stats);
    }
    for (int k = 0; k < cfg.lambda_grid; ++k) {
        double lambda = double(k) / double(cfg.lambda_grid - 1);
        battery_sample(convex_lambda<Complex>(lambda, cfg.order),
                       "convex_lambda[" + std::to_string(k) + "]", true, cfg.tolerance, c_stats);
    }
    out.criteria.push_back(
        {4, "convex battery: schwarz samples + lambda grid",
         c_stats.report_failures == 0 && c_stats.gap_failures == 0,
         std::to_string(c_stats.samples) + " samples, " +
             std::to_string(c_stats.report_failures + c_stats.gap_failures) +
             " failures, worst margin " + fmt(c_stats.worst_margin)});

    out.criteria.push_back(criterion_lambda_sharpness(cfg));
    out.criteria.push_back(criterion_halfplane(cfg));

    out.criteria.push_back(
        {7, "grunsky pipeline: structural residuals, row zero, symmetry",
         s_stats.structural_failures == 0 && c_stats.structural_failures == 0,
         "worst residual " + fmt(std::max(s_stats.worst_residual, c_stats.worst_residual)) +
             ", worst row-zero defect " +
             fmt(std::max(s_stats.worst_gamma_defect, c_stats.worst_gamma_defect)) +
             ", worst symmetry defect " +
             fmt(std::max(s_stats.worst_symmetry, c_stats.worst_symmetry))});

    out.criteria.push_back(criterion_grunsky_inequality(cfg));
    out.criteria.push_back(criterion_psi_phi(cfg));
    out.criteria.push_back(criterion_search(cfg));
    out.criteria.push_back(criterion_reversion(cfg));

    std::sort(out.criteria.begin(), out.criteria.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });

    // Best observed minima are reported as data; no sharpness is claimed for
    // the -sqrt(2)/2 side, which no known function attains.
    out.observations.push_back(
        {"min G2minusG1 over univalent battery", s_stats.min_g2_minus_g1});
    out.observations.push_back({"min G2minusG1 over convex battery", c_stats.min_g2_minus_g1});
    out.observations.push_back({"univalent lower reference -sqrt(2)/2", -std::sqrt(2.0) / 2.0});
    return out;
}

}  // namespace schlicht
