// Generators for the function families the checkers run on.
//
// Membership in a class (univalent, starlike, convex) is by construction:
// the Koebe rotations and the half-plane map are classical, and the Schwarz
// driven generators solve the defining subordination identity for a
// polynomial Schwarz function. Admissibility of a Schwarz polynomial is
// certified by dense boundary sampling; for user-supplied polynomials this
// is a necessary condition, for generated ones the rescaling makes it hold.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "schlicht/scalar.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

inline constexpr int kDefaultBoundaryGrid = 4096;

// Polynomial Schwarz function w(z) = c1 z + ... + cK z^K (w(0) = 0).
template <SeriesScalar K>
struct SchwarzPoly {
    std::vector<K> coeffs;  // coeffs[0] == c1

    int degree() const { return int(coeffs.size()); }
    // c_j, 1-based; zero past the stored degree.
    K coeff(int j) const {
        if (j < 1) throw std::out_of_range("Schwarz coefficient index starts at 1");
        return j <= degree() ? coeffs[size_t(j - 1)] : K{};
    }
};

struct AdmissibilityResult {
    bool admissible = false;
    double max_modulus = 0.0;
};

// Max modulus over a uniform boundary grid; admissible iff <= 1 + 1e-12.
template <SeriesScalar K>
AdmissibilityResult schwarz_admissible(const SchwarzPoly<K>& w,
                                       int grid_size = kDefaultBoundaryGrid) {
    if (grid_size < 256) throw std::invalid_argument("boundary grid too coarse");
    std::vector<Complex> c(w.coeffs.size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = scalar_traits<K>::to_complex(w.coeffs[j]);
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        double theta = 2.0 * M_PI * double(i) / double(grid_size);
        Complex z = std::polar(1.0, theta);
        Complex acc = 0.0;
        for (size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
        acc *= z;
        worst = std::max(worst, std::abs(acc));
    }
    return {worst <= 1.0 + 1e-12, worst};
}

// Rotated Koebe map: a_n = n * e^{i theta (n-1)}.
inline Series<Complex> koebe(double theta, int order) {
    if (order < 1) throw std::invalid_argument("koebe needs order >= 1");
    std::vector<Complex> c(size_t(order) + 1, Complex{});
    for (int n = 1; n <= order; ++n) c[size_t(n)] = double(n) * std::polar(1.0, theta * (n - 1));
    return Series<Complex>(std::move(c));
}

// Unrotated Koebe map in any scalar mode: a_n = n.
template <SeriesScalar K>
Series<K> koebe_series(int order) {
    if (order < 1) throw std::invalid_argument("koebe needs order >= 1");
    std::vector<K> c(size_t(order) + 1, K{});
    for (int n = 1; n <= order; ++n) c[size_t(n)] = scalar_traits<K>::from_int(n);
    return Series<K>(std::move(c));
}

// Half-plane map z/(1-z): all coefficients 1.
template <SeriesScalar K>
Series<K> half_plane(int order) {
    if (order < 1) throw std::invalid_argument("half_plane needs order >= 1");
    std::vector<K> c(size_t(order) + 1, scalar_traits<K>::from_int(1));
    c[0] = K{};
    return Series<K>(std::move(c));
}

// Convex extremal family f_lambda(z) = int_0^z ((1+t)/(1-t))^lambda / (1-t^2) dt,
// 0 <= lambda <= 1. Exact when lambda is rational and K is the exact scalar.
template <SeriesScalar K>
Series<K> convex_lambda(const RealOf<K>& lambda, int order) {
    using tr = scalar_traits<K>;
    if (lambda < RealOf<K>(0) || lambda > RealOf<K>(1))
        throw std::invalid_argument("lambda must lie in [0, 1]");
    if (order < 1) throw std::invalid_argument("convex_lambda needs order >= 1");
    int m = order - 1;
    K alpha = tr::from_real(lambda);
    Series<K> one_plus = Series<K>::identity(std::max(m, 1));
    one_plus.set(0, tr::from_int(1));
    Series<K> one_minus = -Series<K>::identity(std::max(m, 1));
    one_minus.set(0, tr::from_int(1));
    Series<K> ratio_pow = pow1(one_plus, alpha) * pow1(one_minus, -alpha);
    Series<K> integrand = ratio_pow / (one_minus * one_plus);  // (1-t^2) = (1-t)(1+t)
    return antiderivative(integrand.truncated(m));
}

namespace detail {

// u = 2 w / (1 - w) as a series of the given order (u(0) = 0).
template <SeriesScalar K>
Series<K> halfplane_transfer(const SchwarzPoly<K>& w, int order) {
    using tr = scalar_traits<K>;
    Series<K> ws = Series<K>::zero(order);
    for (int j = 1; j <= std::min(order, w.degree()); ++j) ws.set(j, w.coeff(j));
    Series<K> denom = Series<K>::constant(tr::from_int(1), order) - ws;
    return (tr::from_int(2) * ws) / denom;
}

template <SeriesScalar K>
void require_admissible(const SchwarzPoly<K>& w) {
    AdmissibilityResult r = schwarz_admissible(w);
    if (!r.admissible)
        throw std::invalid_argument("Schwarz polynomial exceeds unit modulus on the boundary");
}

}  // namespace detail

// Convex function with 1 + z f''/f' = (1+w)/(1-w): integrate the transfer
// term by term to get log f', exponentiate, integrate again.
template <SeriesScalar K>
Series<K> convex_from_schwarz(const SchwarzPoly<K>& w, int order) {
    if (order < 1) throw std::invalid_argument("convex_from_schwarz needs order >= 1");
    detail::require_admissible(w);
    Series<K> u = detail::halfplane_transfer(w, order - 1);
    Series<K> log_fprime = antiderivative_over_z(u);
    return antiderivative(exp0(log_fprime));
}

// Starlike function with z f'/f = (1+w)/(1-w): here the termwise integral
// of the transfer is log(f/z) itself.
template <SeriesScalar K>
Series<K> starlike_from_schwarz(const SchwarzPoly<K>& w, int order) {
    if (order < 1) throw std::invalid_argument("starlike_from_schwarz needs order >= 1");
    detail::require_admissible(w);
    Series<K> u = detail::halfplane_transfer(w, order - 1);
    Series<K> log_f_over_z = antiderivative_over_z(u);
    return times_z(exp0(log_f_over_z));
}

namespace detail {

inline double unit_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}
inline double symmetric_double(std::mt19937_64& rng) { return 2.0 * unit_double(rng) - 1.0; }

}  // namespace detail

// Deterministic random Schwarz polynomial of the given degree: draw
// coefficients in the unit square, then rescale by the boundary-grid
// maximum (times 1 + 1e-6) whenever that maximum exceeds 1, so the
// admissibility certificate holds by construction.
inline SchwarzPoly<Complex> random_schwarz(int degree, std::uint64_t seed,
                                           int grid_size = kDefaultBoundaryGrid) {
    if (degree < 1) throw std::invalid_argument("random_schwarz needs degree >= 1");
    std::mt19937_64 rng(seed);
    SchwarzPoly<Complex> w;
    w.coeffs.resize(size_t(degree));
    for (auto& c : w.coeffs)
        c = Complex(detail::symmetric_double(rng), detail::symmetric_double(rng));
    double m = schwarz_admissible(w, grid_size).max_modulus;
    if (m > 1.0) {
        double inv = 1.0 / (m * (1.0 + 1e-6));
        for (auto& c : w.coeffs) c *= inv;
    }
    return w;
}

// Runtime family descriptor used by the CLI and the extremal search.
enum class Family { koebe, halfplane, convex_lambda, convex_schwarz, starlike_schwarz };

struct FamilyParam {
    Family family = Family::koebe;
    double theta = 0.0;   // koebe rotation, in [0, 2pi)
    double lambda = 0.0;  // convex_lambda parameter, in [0, 1]
    std::optional<SchwarzPoly<Complex>> schwarz;
};

inline bool family_is_convex(Family f) {
    return f == Family::halfplane || f == Family::convex_lambda || f == Family::convex_schwarz;
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::koebe: return "koebe";
        case Family::halfplane: return "halfplane";
        case Family::convex_lambda: return "convex_lambda";
        case Family::convex_schwarz: return "convex_schwarz";
        case Family::starlike_schwarz: return "starlike_schwarz";
    }
    return "?";
}

inline Series<Complex> build_family(const FamilyParam& p, int order) {
    switch (p.family) {
        case Family::koebe:
            if (p.theta < 0.0 || p.theta >= 2.0 * M_PI)
                throw std::invalid_argument("theta must lie in [0, 2pi)");
            return koebe(p.theta, order);
        case Family::halfplane:
            return half_plane<Complex>(order);
        case Family::convex_lambda:
            return convex_lambda<Complex>(p.lambda, order);
        case Family::convex_schwarz:
            if (!p.schwarz) throw std::invalid_argument("missing Schwarz polynomial");
            return convex_from_schwarz(*p.schwarz, order);
        case Family::starlike_schwarz:
            if (!p.schwarz) throw std::invalid_argument("missing Schwarz polynomial");
            return starlike_from_schwarz(*p.schwarz, order);
    }
    throw std::invalid_argument("unknown family");
}

inline std::string family_id(const FamilyParam& p) {
    switch (p.family) {
        case Family::koebe: return "koebe(theta=" + std::to_string(p.theta) + ")";
        case Family::halfplane: return "halfplane";
        case Family::convex_lambda: return "convex_lambda(" + std::to_string(p.lambda) + ")";
        case Family::convex_schwarz: return "convex_schwarz";
        case Family::starlike_schwarz: return "starlike_schwarz";
    }
    return "?";
}

}  // namespace schlicht
