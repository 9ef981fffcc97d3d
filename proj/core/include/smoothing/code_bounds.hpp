#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Asymptotic smoothing exponents and thresholds for binary codes: random
// ensembles and worst-case codes, four noise models, and the two proof
// strategies (Parseval + Cauchy-Schwarz vs Poisson summation + triangle
// inequality). Exponents follow the library convention: per symbol, base 2;
// negative means the distance to uniform is certified exponentially small.
// NaN marks an exponent whose defining formula left its domain.

namespace smoothing::codes {

enum class NoiseKind { UniformSphere, Bernoulli, TruncatedBernoulli, RandomWalk };

/// Error model plus magnitude, in relative units: sphere radius and walk
/// step count are fractions of the block length.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::UniformSphere;
    double magnitude = 0.0;  // omega for sphere/walk, p for the Bernoulli kinds
    double eps = 0.0;        // relative truncation half-width

    static NoiseSpec uniform_sphere(double omega);
    static NoiseSpec bernoulli(double p);
    static NoiseSpec truncated_bernoulli(double p, double eps);
    static NoiseSpec random_walk(double omega);
};

enum class Strategy { PI_CS, PSF_TI };

struct RandomCodeParams {
    double rate = 0.5;  // in (0,1)
};

struct WorstCaseCodeParams {
    double delta_dual = 0.11;    // relative minimum distance of the dual
    std::optional<double> beta;  // largest relative dual weight, when known
};

// ----- weight-distribution exponent bounds --------------------------------

/// First bound c(delta, tau) on the dual weight exponent: h(tau) + h(perp(delta)) - 1
/// on the middle range tau in [delta, 1-delta], and
/// 2(h(perp(delta)) - a(tau, perp(delta))) past it. Requires tau in [delta, 1].
double lp_bound_c(double delta, double tau);

/// Radius (1 - sqrt(1-2 delta))/2 below which the second bound degenerates.
double jsb_radius(double delta);

/// Argmin over [jsb_radius(delta), 1/2] of 1 - h(alpha) + R1(alpha, delta),
/// golden section to 1e-10. Shared by every evaluation of lp_bound_d.
double second_lp_tau0(double delta);

/// Second bound d(delta, tau): 0 outside (jsb, 1-jsb); R1(tau, delta) when
/// tau sits below the argmin tau0; h(tau) - h(tau0) + R1(tau0, delta) past it.
/// NaN when the inner radical leaves its domain.
double lp_bound_d(double delta, double tau);

/// Pointwise min of the two bounds; NaN propagates.
double lp_bound_best(double delta, double tau);

// ----- exponent curves -----------------------------------------------------

/// Random-code smoothing exponent at the given rate, noise and strategy.
/// PSF_TI is provided for UniformSphere only (the remaining pairs have no
/// closed profile here); asking for them throws std::invalid_argument.
double random_code_exponent(const RandomCodeParams&, const NoiseSpec&, Strategy);

/// Worst-case smoothing exponent under the dual-distance hypothesis.
/// UniformSphere and RandomWalk need `beta` (codes with unbalanced duals
/// cannot be smoothed by those noises); missing beta throws
/// std::invalid_argument. Bernoulli kinds sweep tau over
/// [delta_dual, 1 - delta_dual/2] where at most one dual word exists per
/// weight. Inner maximizations: grid step 1e-3 + golden refinement to 1e-8.
double worst_case_exponent(const WorstCaseCodeParams&, const NoiseSpec&);

// ----- thresholds ----------------------------------------------------------

/// Least magnitude past which `curve` stays negative on (m, hi]; bisection on
/// the last downward sign crossing, absolute tolerance `tol`. nullopt when
/// curve(hi) >= 0; lo when the curve is negative everywhere in range.
std::optional<double> smoothing_threshold(const std::function<double(double)>& curve,
                                          double lo, double hi, double tol = 1e-5);

/// smoothing_threshold of random_code_exponent in the noise magnitude, over
/// the natural magnitude range of `kind` (eps feeds the truncated kind).
std::optional<double> random_code_threshold(const RandomCodeParams&, NoiseKind,
                                            Strategy, double eps = 1e-2);

/// Same for worst_case_exponent.
std::optional<double> worst_case_threshold(const WorstCaseCodeParams&, NoiseKind,
                                           double eps = 1e-2);

// ----- curve tabulation for the report tool --------------------------------

struct BoundReport {
    double exponent = 0.0;
    std::optional<double> threshold;
    Strategy strategy = Strategy::PI_CS;
    std::string label;
};

/// Rectangular table of sampled curves; NaN cells mean "undefined here" and
/// serialize to empty CSV fields.
struct CurveSet {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Known curve families:
///   strategy-compare  rate sweep of omega0 (direct strategy) and omega1
///                     (spectral-sum strategy, empty below rate 1/2)
///   random-code       rate sweep of all four random-code thresholds
///   lp-delta-0.1      both weight-exponent bounds over tau, delta = 0.1
///   lp-delta-0.35     same at delta = 0.35
///   trunc-vs-plain    worst-case Bernoulli exponent, plain vs truncated,
///                     over p at delta_dual = 0.11
CurveSet figure_curves(std::string_view name, int grid = 200, double eps = 1e-2);

const std::vector<std::string>& figure_names();

}  // namespace smoothing::codes
