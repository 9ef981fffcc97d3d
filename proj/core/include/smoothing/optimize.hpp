#pragma once

#include <cmath>
#include <limits>
#include <optional>

// Deterministic scalar search helpers. Nothing stochastic is used anywhere:
// a coarse grid pass plus golden-section refinement is enough for every curve
// in this library and keeps all outputs bit-reproducible.

namespace smoothing::opt {

inline constexpr double golden = 0.6180339887498949;  // (sqrt(5)-1)/2

namespace detail {
inline double nan_to_inf(double y) {
    return std::isnan(y) ? std::numeric_limits<double>::infinity() : y;
}
}  // namespace detail

/// Golden-section minimizer on [lo, hi]; returns the midpoint of the final
/// bracket. NaN values of f count as +infinity.
template <typename F>
double golden_min_arg(F&& f, double lo, double hi, double xtol = 1e-10) {
    double a = lo, b = hi;
    double c = b - golden * (b - a);
    double d = a + golden * (b - a);
    double fc = detail::nan_to_inf(f(c));
    double fd = detail::nan_to_inf(f(d));
    while (b - a > xtol) {
        if (fc <= fd) {
            b = d; d = c; fd = fc;
            c = b - golden * (b - a);
            fc = detail::nan_to_inf(f(c));
        } else {
            a = c; c = d; fc = fd;
            d = a + golden * (b - a);
            fd = detail::nan_to_inf(f(d));
        }
    }
    return 0.5 * (a + b);
}

template <typename F>
double golden_max_arg(F&& f, double lo, double hi, double xtol = 1e-10) {
    return golden_min_arg([&](double x) { return -f(x); }, lo, hi, xtol);
}

struct Extremum {
    double arg = 0.0;
    double value = std::numeric_limits<double>::quiet_NaN();
};

/// Maximum of f on [lo, hi]: uniform scan at roughly the given step, then
/// golden-section refinement one cell on each side of the best sample.
/// NaN samples are skipped; the value stays NaN if the whole grid is NaN.
template <typename F>
Extremum grid_max(F&& f, double lo, double hi, double step = 1e-3, double xtol = 1e-8) {
    Extremum best{lo, std::numeric_limits<double>::quiet_NaN()};
    if (!(hi > lo)) {
        best.value = f(lo);
        return best;
    }
    int cells = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
    for (int i = 0; i <= cells; ++i) {
        double x = lo + (hi - lo) * i / cells;
        double y = f(x);
        if (!std::isnan(y) && (std::isnan(best.value) || y > best.value)) {
            best = {x, y};
        }
    }
    if (std::isnan(best.value)) return best;
    double cell = (hi - lo) / cells;
    double a = std::max(lo, best.arg - cell);
    double b = std::min(hi, best.arg + cell);
    double xr = golden_max_arg(f, a, b, xtol);
    double yr = f(xr);
    if (!std::isnan(yr) && yr > best.value) best = {xr, yr};
    return best;
}

/// Least magnitude past which f stays negative up to hi: the last downward
/// sign crossing on a 400-point scan, sharpened by bisection to xtol.
/// Returns nullopt when f(hi) >= 0 (no certified region in range) and lo when
/// f is negative on the whole scan. Non-monotone curves resolve to the
/// crossing nearest hi, the safe side for a threshold.
template <typename F>
std::optional<double> last_downward_crossing(F&& f, double lo, double hi, double xtol = 1e-5) {
    constexpr int scan = 400;
    if (!(f(hi) < 0.0)) return std::nullopt;
    int top = -1;
    for (int i = scan - 1; i >= 0; --i) {
        double x = lo + (hi - lo) * i / scan;
        if (f(x) >= 0.0) { top = i; break; }
    }
    if (top < 0) return lo;
    double a = lo + (hi - lo) * top / scan;
    double b = lo + (hi - lo) * (top + 1) / scan;
    while (b - a > xtol) {
        double mid = 0.5 * (a + b);
        if (f(mid) >= 0.0) a = mid; else b = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace smoothing::opt
