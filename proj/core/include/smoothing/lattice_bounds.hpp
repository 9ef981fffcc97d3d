#pragma once

#include <optional>
#include <string>

// Lattice smoothing bounds: closed-form strategy constants, random-lattice
// (Minkowski-Hlawka-Siegel averaging) bounds, random q-ary Construction-A
// bounds, worst-case bounds through the Kabatiansky-Levenshtein point count,
// and the Gaussian-to-uniform-ball transfer. Everything is evaluated in log2
// space; no lattice is ever materialized.

namespace smoothing::lattices {

/// log2 of the Kabatiansky-Levenshtein sphere-packing constant.
inline constexpr double kl_log2 = 0.401;

/// C_KL = 2^0.401.
double kl_constant();

/// Smoothing constant of each proof strategy: the limiting ratio of average
/// noise magnitude to n that already certifies vanishing distance. Smaller is
/// stronger.
struct StrategyConstants {
    double psf_ti_tail;     // 1/(2 pi), triangle inequality + Gaussian tail split
    double psf_ti_lp;       // C_KL/(2 pi sqrt(e)), triangle inequality + point count
    double pi_cs_lp_gauss;  // C_KL/(2 pi sqrt(2 e)), direct Gaussian
    double pi_cs_lp_unif;   // C_KL/(2 pi e), uniform ball
    double gauss_via_unif;  // C_KL/(2 pi e), Gaussian routed through the ball bound
};
StrategyConstants strategy_constants();

// ----- ensembles and noises -------------------------------------------------

struct MhsEnsemble {
    int n = 0;
    double covolume = 1.0;
};

struct QaryEnsemble {
    int n = 0;
    int k = 0;          // 1 <= k < n
    double q = 0.0;     // prime modulus (primality is the caller's contract)
    double covolume = 1.0;
};

struct WorstCaseEnsemble {
    int n = 0;
    double lambda1_dual = 1.0;  // shortest dual vector length
};

enum class LatticeNoiseKind { UniformBall, Gaussian };

struct LatticeNoise {
    LatticeNoiseKind kind = LatticeNoiseKind::UniformBall;
    double magnitude = 0.0;  // ball radius w, or Gaussian parameter s
                             // (s*sqrt(n/2pi) is the per-coordinate scale times sqrt n)
    static LatticeNoise ball(double w);
    static LatticeNoise gaussian(double s);
};

enum class WorstCaseStrategy { Unif, GaussDirect, GaussViaUnif };

struct LatticeBound {
    double log2_value = 0.0;      // log2 of the distance bound; NaN = not applicable
    double threshold = 0.0;       // w0 or s0 past which the bound decays
    bool up_to_constant = false;  // an unpinned absolute constant was set to 1
    std::string label;
};

// ----- random lattices (averaging measure) ----------------------------------

/// Ball noise: (1/2) sqrt(M / V_n(w)). Gaussian noise: (1/2) sqrt(M / (s sqrt 2)^n).
LatticeBound mhs_bound(const MhsEnsemble&, const LatticeNoise&);

double mhs_w0(const MhsEnsemble&);         // sqrt(n/(2 pi e)) M^{1/n}
double mhs_s0_direct(const MhsEnsemble&);  // M^{1/n}/sqrt(2)
double mhs_s0_via_unif(const MhsEnsemble&);  // M^{1/n}/sqrt(e)

/// Ball-to-Gaussian transfer: if the ball bound decays as f(n) (w0/w)^{n/2}
/// past w0, the Gaussian with s > s0 = w0 sqrt(2 pi / n) satisfies
/// exp(-eta^2 n / 8) + f(n) (s0/s)^{n/4}, eta = 1 - s0/s.
/// nullopt when s <= s0 (transfer inapplicable).
std::optional<double> gauss_to_unif_transfer(double w0, double s, int n, double slack_factor);

/// G_n(x) = x^{n+1} V_n(1) 2 pi exp(-pi x^2): the radius weight writing an
/// n-dimensional Gaussian as a mixture of uniform balls; integrates to 1.
double gaussian_mixture_weight_log2(double x, int n);
double gaussian_mixture_weight(double x, int n);
double gaussian_mixture_argmax(int n);  // sqrt((n+1)/(2 pi))

// ----- random q-ary lattices -------------------------------------------------

/// gamma = n^{3/2} / q^{1-k/n}; the q-ary bound approaches the averaging
/// bound as gamma -> 0.
double qary_gamma(const QaryEnsemble&);

/// (n/w)^{1/3} e^{gamma/2} sqrt(M/V_n(w)), up to an absolute constant
/// (set to 1, flagged). Threshold w0 = sqrt(2 pi n / e) M^{1/n}.
LatticeBound qary_bound(const QaryEnsemble&, double w);

/// Expected dual point count in the ball of radius w = t sqrt(n):
/// (V_n(w)/M) (1 +- delta/t)^n with delta = 1/q^{1-k/n}, as a log2 range.
struct PointCountRange {
    double log2_low = 0.0;
    double log2_high = 0.0;
};
PointCountRange qary_point_count_log2(const QaryEnsemble&, double w);

// ----- worst-case lattices ----------------------------------------------------

/// Unif:        sqrt(C_KL^n / (V_n(lambda1*) V_n(w))), threshold
///              w0 = n C_KL / (2 pi e lambda1*).
/// GaussDirect: the same with an extra (e/2)^{n/2} factor at radius
///              s sqrt(n/2pi), threshold s0 = sqrt(n) C_KL / (2 sqrt(pi e) lambda1*).
/// GaussViaUnif: transfer of the Unif bound, threshold
///              s0 = sqrt(n) C_KL / (sqrt(2 pi) e lambda1*); log2_value is NaN
///              when s <= s0. The o(n) in the point-count exponent is dropped
///              and flagged.
LatticeBound worst_case_lattice_bound(const WorstCaseEnsemble&, const LatticeNoise&,
                                      WorstCaseStrategy);

double worst_case_w0(const WorstCaseEnsemble&);
double worst_case_s0(const WorstCaseEnsemble&, WorstCaseStrategy);

/// log2 of the lattice point count bound in the ball of radius t:
/// n log2(t/lambda1) + 0.401 n. Requires t >= lambda1.
double kl_point_count_log2(double lambda1, double t, int n);

}  // namespace smoothing::lattices
