#include "smoothing/lattice_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smoothing/asymptotics.hpp"

namespace smoothing::lattices {

namespace {

constexpr double not_applicable = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

void validate(const MhsEnsemble& e) {
    require(e.n >= 1, "lattice ensemble: n < 1");
    require(e.covolume > 0.0, "lattice ensemble: covolume <= 0");
}

void validate(const QaryEnsemble& e) {
    require(e.n >= 1, "q-ary ensemble: n < 1");
    require(e.k >= 1 && e.k < e.n, "q-ary ensemble: k outside [1,n)");
    require(e.q >= 2.0, "q-ary ensemble: q < 2");
    require(e.covolume > 0.0, "q-ary ensemble: covolume <= 0");
}

void validate(const WorstCaseEnsemble& e) {
    require(e.n >= 1, "worst-case ensemble: n < 1");
    require(e.lambda1_dual > 0.0, "worst-case ensemble: lambda1_dual <= 0");
}

// log2(2^a + 2^b), stable for far-apart exponents
double log2_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

const double log2e = std::log2(std::exp(1.0));

}  // namespace

double kl_constant() { return std::exp2(kl_log2); }

StrategyConstants strategy_constants() {
    double ckl = kl_constant();
    StrategyConstants sc;
    sc.psf_ti_tail = 1.0 / (2.0 * M_PI);
    sc.psf_ti_lp = ckl / (2.0 * M_PI * std::sqrt(std::exp(1.0)));
    sc.pi_cs_lp_gauss = ckl / (2.0 * M_PI * std::sqrt(2.0 * std::exp(1.0)));
    sc.pi_cs_lp_unif = ckl / (2.0 * M_PI * std::exp(1.0));
    sc.gauss_via_unif = sc.pi_cs_lp_unif;
    return sc;
}

LatticeNoise LatticeNoise::ball(double w) {
    require(w > 0.0, "ball noise: radius <= 0");
    return {LatticeNoiseKind::UniformBall, w};
}

LatticeNoise LatticeNoise::gaussian(double s) {
    require(s > 0.0, "Gaussian noise: parameter <= 0");
    return {LatticeNoiseKind::Gaussian, s};
}

// ----- random lattices ---------------------------------------------------------

double mhs_w0(const MhsEnsemble& e) {
    validate(e);
    return std::sqrt(e.n / (2.0 * M_PI * std::exp(1.0))) * std::pow(e.covolume, 1.0 / e.n);
}

double mhs_s0_direct(const MhsEnsemble& e) {
    validate(e);
    return std::pow(e.covolume, 1.0 / e.n) / std::sqrt(2.0);
}

double mhs_s0_via_unif(const MhsEnsemble& e) {
    validate(e);
    return std::pow(e.covolume, 1.0 / e.n) / std::sqrt(std::exp(1.0));
}

LatticeBound mhs_bound(const MhsEnsemble& e, const LatticeNoise& noise) {
    validate(e);
    require(noise.magnitude > 0.0, "mhs_bound: noise magnitude <= 0");
    double log2M = std::log2(e.covolume);
    LatticeBound b;
    b.up_to_constant = false;
    if (noise.kind == LatticeNoiseKind::UniformBall) {
        b.label = "avg-ball";
        b.log2_value = -1.0 + 0.5 * (log2M - ball_volume_log2(e.n, noise.magnitude));
        b.threshold = mhs_w0(e);
    } else {
        b.label = "avg-gauss";
        b.log2_value =
            -1.0 + 0.5 * (log2M - e.n * std::log2(noise.magnitude * std::sqrt(2.0)));
        b.threshold = mhs_s0_direct(e);
    }
    return b;
}

std::optional<double> gauss_to_unif_transfer(double w0, double s, int n, double slack_factor) {
    require(w0 > 0.0, "gauss_to_unif_transfer: w0 <= 0");
    require(n >= 1, "gauss_to_unif_transfer: n < 1");
    require(slack_factor > 0.0, "gauss_to_unif_transfer: slack factor <= 0");
    double s0 = w0 * std::sqrt(2.0 * M_PI / n);
    if (s <= s0) return std::nullopt;
    double eta = 1.0 - s0 / s;
    return std::exp(-eta * eta * n / 8.0)
         + slack_factor * std::pow(s0 / s, 0.25 * n);
}

double gaussian_mixture_weight_log2(double x, int n) {
    require(x > 0.0, "gaussian_mixture_weight: x <= 0");
    require(n >= 1, "gaussian_mixture_weight: n < 1");
    return (n + 1.0) * std::log2(x) + ball_volume_log2(n, 1.0) + std::log2(2.0 * M_PI)
         - M_PI * x * x * log2e;
}

double gaussian_mixture_weight(double x, int n) {
    return std::exp2(gaussian_mixture_weight_log2(x, n));
}

double gaussian_mixture_argmax(int n) {
    require(n >= 1, "gaussian_mixture_argmax: n < 1");
    return std::sqrt((n + 1.0) / (2.0 * M_PI));
}

// ----- random q-ary lattices ----------------------------------------------------

double qary_gamma(const QaryEnsemble& e) {
    validate(e);
    return std::pow(e.n, 1.5) / std::pow(e.q, 1.0 - static_cast<double>(e.k) / e.n);
}

LatticeBound qary_bound(const QaryEnsemble& e, double w) {
    validate(e);
    require(w > 0.0, "qary_bound: radius <= 0");
    double gamma = qary_gamma(e);
    LatticeBound b;
    b.label = "qary-ball";
    b.up_to_constant = true;  // the absolute constant C is not pinned down
    b.log2_value = std::log2(static_cast<double>(e.n) / w) / 3.0
                 + 0.5 * gamma * log2e
                 + 0.5 * (std::log2(e.covolume) - ball_volume_log2(e.n, w));
    b.threshold = std::sqrt(2.0 * M_PI * e.n / std::exp(1.0))
                * std::pow(e.covolume, 1.0 / e.n);
    return b;
}

PointCountRange qary_point_count_log2(const QaryEnsemble& e, double w) {
    validate(e);
    require(w > 0.0, "qary_point_count: radius <= 0");
    double t = w / std::sqrt(static_cast<double>(e.n));
    double delta = 1.0 / std::pow(e.q, 1.0 - static_cast<double>(e.k) / e.n);
    double base = ball_volume_log2(e.n, w) - std::log2(e.covolume);
    PointCountRange r;
    r.log2_low = base + e.n * std::log2(std::max(1.0 - delta / t, 0.0));
    r.log2_high = base + e.n * std::log2(1.0 + delta / t);
    return r;
}

// ----- worst-case lattices --------------------------------------------------------

double worst_case_w0(const WorstCaseEnsemble& e) {
    validate(e);
    return e.n * kl_constant() / (2.0 * M_PI * std::exp(1.0) * e.lambda1_dual);
}

double worst_case_s0(const WorstCaseEnsemble& e, WorstCaseStrategy strategy) {
    validate(e);
    double ckl = kl_constant();
    switch (strategy) {
        case WorstCaseStrategy::Unif:
            throw std::domain_error("worst_case_s0: the ball strategy has a radius w0, not s0");
        case WorstCaseStrategy::GaussDirect:
            return std::sqrt(static_cast<double>(e.n)) * ckl
                 / (2.0 * std::sqrt(M_PI * std::exp(1.0)) * e.lambda1_dual);
        case WorstCaseStrategy::GaussViaUnif:
            return std::sqrt(static_cast<double>(e.n)) * ckl
                 / (std::sqrt(2.0 * M_PI) * std::exp(1.0) * e.lambda1_dual);
    }
    throw std::domain_error("worst_case_s0: unknown strategy");
}

LatticeBound worst_case_lattice_bound(const WorstCaseEnsemble& e, const LatticeNoise& noise,
                                      WorstCaseStrategy strategy) {
    validate(e);
    require(noise.magnitude > 0.0, "worst_case_lattice_bound: noise magnitude <= 0");
    double n = e.n;
    double log2_vol_l1 = ball_volume_log2(e.n, e.lambda1_dual);
    LatticeBound b;
    b.up_to_constant = true;  // o(n) in the point-count exponent dropped

    switch (strategy) {
        case WorstCaseStrategy::Unif: {
            require(noise.kind == LatticeNoiseKind::UniformBall,
                    "worst-case Unif strategy expects ball noise");
            b.label = "worst-ball";
            b.log2_value = 0.5 * (kl_log2 * n - log2_vol_l1
                                  - ball_volume_log2(e.n, noise.magnitude));
            b.threshold = worst_case_w0(e);
            return b;
        }
        case WorstCaseStrategy::GaussDirect: {
            require(noise.kind == LatticeNoiseKind::Gaussian,
                    "worst-case GaussDirect strategy expects Gaussian noise");
            double radius = noise.magnitude * std::sqrt(n / (2.0 * M_PI));
            b.label = "worst-gauss-direct";
            b.log2_value = 0.5 * (kl_log2 * n - log2_vol_l1 - ball_volume_log2(e.n, radius)
                                  + 0.5 * n * std::log2(std::exp(1.0) / 2.0));
            b.threshold = worst_case_s0(e, strategy);
            return b;
        }
        case WorstCaseStrategy::GaussViaUnif: {
            require(noise.kind == LatticeNoiseKind::Gaussian,
                    "worst-case GaussViaUnif strategy expects Gaussian noise");
            b.label = "worst-gauss-via-unif";
            double s0 = worst_case_s0(e, strategy);
            b.threshold = s0;
            if (noise.magnitude <= s0) {
                b.log2_value = not_applicable;  // transfer needs s > s0
                return b;
            }
            double eta = 1.0 - s0 / noise.magnitude;
            double tail = -eta * eta * n / 8.0 * log2e;
            double decay = 0.25 * n * std::log2(s0 / noise.magnitude);
            b.log2_value = log2_add(tail, decay);
            return b;
        }
    }
    throw std::domain_error("worst_case_lattice_bound: unknown strategy");
}

double kl_point_count_log2(double lambda1, double t, int n) {
    require(lambda1 > 0.0, "kl_point_count: lambda1 <= 0");
    require(n >= 1, "kl_point_count: n < 1");
    require(t >= lambda1, "kl_point_count: the count is only bounded for t >= lambda1");
    return n * std::log2(t / lambda1) + kl_log2 * n;
}

}  // namespace smoothing::lattices
