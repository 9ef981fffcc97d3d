#include "smoothing/code_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smoothing/asymptotics.hpp"
#include "smoothing/optimize.hpp"

namespace smoothing::codes {

namespace {

constexpr double undefined = std::numeric_limits<double>::quiet_NaN();
constexpr double minus_inf = -std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

// Inner radical-entropy term of the second bound. NaN when a radicand turns
// negative (only possible outside the ranges the bound is quoted on).
double r1_term(double tau, double delta) {
    double inner = 4.0 * tau * (1.0 - tau) - delta * (2.0 - delta);
    if (inner < 0.0) return undefined;
    double root = std::sqrt(inner) - delta;
    double arg = 1.0 - root * root;
    if (arg < 0.0) return undefined;
    return binary_entropy(0.5 * (1.0 - std::sqrt(arg)));
}

double lp_d_at(double delta, double tau, double tau0) {
    double jsb = jsb_radius(delta);
    if (!(tau > jsb && tau < 1.0 - jsb)) return 0.0;
    if (tau0 > tau) return r1_term(tau, delta);
    double r = r1_term(tau0, delta);
    if (std::isnan(r)) return undefined;
    return binary_entropy(tau) - binary_entropy(tau0) + r;
}

double lp_best_at(double delta, double tau, double tau0) {
    double c = lp_bound_c(delta, tau);
    double d = lp_d_at(delta, tau, tau0);
    if (std::isnan(c) || std::isnan(d)) return undefined;
    return std::min(c, d);
}

void validate(const NoiseSpec& noise) {
    switch (noise.kind) {
        case NoiseKind::UniformSphere:
            require(noise.magnitude > 0.0 && noise.magnitude <= 0.5,
                    "sphere noise: relative radius outside (0,1/2]");
            break;
        case NoiseKind::Bernoulli:
            require(noise.magnitude >= 0.0 && noise.magnitude <= 0.5,
                    "Bernoulli noise: p outside [0,1/2]");
            break;
        case NoiseKind::TruncatedBernoulli:
            require(noise.magnitude > 0.0 && noise.magnitude <= 0.5,
                    "truncated Bernoulli noise: p outside (0,1/2]");
            require(noise.eps > 0.0, "truncated Bernoulli noise: eps <= 0");
            require((1.0 + noise.eps) * noise.magnitude <= 1.0,
                    "truncated Bernoulli noise: (1+eps)p > 1");
            break;
        case NoiseKind::RandomWalk:
            require(noise.magnitude >= 0.0, "random walk noise: negative step rate");
            break;
    }
}

// Signed-bias term of the walk profile. The spectral coefficient is the
// signed power (1-2tau)^{omega n}; only its magnitude survives the bound, and
// tau runs past 1/2 in the worst-case ranges, hence the fabs. omega = 0 keeps
// the term at 0 even where the log diverges.
double walk_bias(double omega, double tau) {
    if (omega == 0.0) return 0.0;
    return omega * std::log2(std::fabs(1.0 - 2.0 * tau));
}

}  // namespace

NoiseSpec NoiseSpec::uniform_sphere(double omega) {
    NoiseSpec s{NoiseKind::UniformSphere, omega, 0.0};
    validate(s);
    return s;
}

NoiseSpec NoiseSpec::bernoulli(double p) {
    NoiseSpec s{NoiseKind::Bernoulli, p, 0.0};
    validate(s);
    return s;
}

NoiseSpec NoiseSpec::truncated_bernoulli(double p, double eps) {
    NoiseSpec s{NoiseKind::TruncatedBernoulli, p, eps};
    validate(s);
    return s;
}

NoiseSpec NoiseSpec::random_walk(double omega) {
    NoiseSpec s{NoiseKind::RandomWalk, omega, 0.0};
    validate(s);
    return s;
}

double jsb_radius(double delta) {
    require(delta > 0.0 && delta < 0.5, "jsb_radius: delta outside (0,1/2)");
    return 0.5 * (1.0 - std::sqrt(1.0 - 2.0 * delta));
}

double second_lp_tau0(double delta) {
    double lo = jsb_radius(delta);
    return opt::golden_min_arg(
        [&](double a) {
            double r = r1_term(a, delta);
            return std::isnan(r) ? r : 1.0 - binary_entropy(a) + r;
        },
        lo, 0.5, 1e-10);
}

double lp_bound_c(double delta, double tau) {
    require(delta > 0.0 && delta < 0.5, "lp_bound_c: delta outside (0,1/2)");
    require(tau >= delta && tau <= 1.0, "lp_bound_c: tau outside [delta,1]");
    double dp = perp(delta);
    if (tau <= 1.0 - delta) return binary_entropy(tau) + binary_entropy(dp) - 1.0;
    return 2.0 * (binary_entropy(dp) - krawtchouk_exponent(tau, dp));
}

double lp_bound_d(double delta, double tau) {
    require(delta > 0.0 && delta < 0.5, "lp_bound_d: delta outside (0,1/2)");
    require(tau >= delta && tau <= 1.0, "lp_bound_d: tau outside [delta,1]");
    return lp_d_at(delta, tau, second_lp_tau0(delta));
}

double lp_bound_best(double delta, double tau) {
    return lp_best_at(delta, tau, second_lp_tau0(delta));
}

double random_code_exponent(const RandomCodeParams& params, const NoiseSpec& noise,
                            Strategy strategy) {
    require(params.rate > 0.0 && params.rate < 1.0, "random code: rate outside (0,1)");
    validate(noise);
    double rate = params.rate;

    if (strategy == Strategy::PSF_TI) {
        if (noise.kind != NoiseKind::UniformSphere)
            throw std::invalid_argument(
                "random_code_exponent: the spectral-sum strategy is provided for "
                "uniform sphere noise only");
        double om = noise.magnitude;
        double hw = binary_entropy(om);
        return opt::grid_max(
                   [&](double tau) {
                       return binary_entropy(tau) - rate + krawtchouk_exponent(tau, om) - hw;
                   },
                   0.0, 1.0)
            .value;
    }

    switch (noise.kind) {
        case NoiseKind::UniformSphere:
            return 0.5 * (1.0 - rate - binary_entropy(noise.magnitude));
        case NoiseKind::Bernoulli: {
            double b = 1.0 - 2.0 * noise.magnitude;
            return 0.5 * (std::log2(1.0 + b * b) - rate);
        }
        case NoiseKind::TruncatedBernoulli: {
            // mixture of spheres with radii in the truncation window; the
            // exponent is the worst radius in the window (clamped to 1/2,
            // past which a sphere only smooths better)
            double lo = std::max((1.0 - noise.eps) * noise.magnitude, 0.0);
            double hi = std::min((1.0 + noise.eps) * noise.magnitude, 0.5);
            return opt::grid_max(
                       [&](double r) { return 0.5 * (1.0 - rate - binary_entropy(r)); },
                       lo, hi)
                .value;
        }
        case NoiseKind::RandomWalk: {
            double om = noise.magnitude;
            return opt::grid_max(
                       [&](double tau) {
                           return 0.5 * (binary_entropy(tau) - rate) + walk_bias(om, tau);
                       },
                       0.0, 1.0)
                .value;
        }
    }
    return undefined;
}

double worst_case_exponent(const WorstCaseCodeParams& params, const NoiseSpec& noise) {
    double delta = params.delta_dual;
    require(delta > 0.0 && delta < 0.5, "worst case: delta_dual outside (0,1/2)");
    validate(noise);
    double tau0 = second_lp_tau0(delta);
    auto half_lp = [&](double tau) {
        double v = lp_best_at(delta, tau, tau0);
        return std::isnan(v) ? v : 0.5 * v;
    };

    bool needs_beta =
        noise.kind == NoiseKind::UniformSphere || noise.kind == NoiseKind::RandomWalk;
    double beta = 0.0;
    if (needs_beta) {
        if (!params.beta)
            throw std::invalid_argument(
                "worst_case_exponent: sphere and walk noise need the balanced-code "
                "weight bound beta (unbalanced duals cannot be smoothed by them)");
        beta = *params.beta;
        require(beta > delta && beta <= 1.0, "worst case: beta outside (delta_dual,1]");
    }

    switch (noise.kind) {
        case NoiseKind::UniformSphere: {
            double om = noise.magnitude;
            return opt::grid_max(
                       [&](double tau) {
                           double v = half_lp(tau);
                           return std::isnan(v) ? v : v + krawtchouk_exponent(tau, om);
                       },
                       delta, beta)
                       .value
                 - binary_entropy(om);
        }
        case NoiseKind::RandomWalk: {
            double om = noise.magnitude;
            return opt::grid_max(
                       [&](double tau) {
                           double v = half_lp(tau);
                           return std::isnan(v) ? v : v + walk_bias(om, tau);
                       },
                       delta, beta)
                .value;
        }
        case NoiseKind::Bernoulli: {
            double p = noise.magnitude;
            if (p >= 0.5) return minus_inf;  // bias term degenerates
            double bias = std::log2(1.0 - 2.0 * p);
            return opt::grid_max(
                       [&](double tau) {
                           double v = half_lp(tau);
                           return std::isnan(v) ? v : v + tau * bias;
                       },
                       delta, 1.0 - 0.5 * delta)
                .value;
        }
        case NoiseKind::TruncatedBernoulli: {
            double p = noise.magnitude;
            // the degree argument of the exponent lives in (0,1/2]; weights
            // past 1/2 reflect onto the window symmetrically
            double llo = std::max((1.0 - noise.eps) * p, 1e-6);
            double lhi = std::min((1.0 + noise.eps) * p, 0.5);
            if (lhi < llo) llo = lhi;
            double lstep = std::min(1e-3, (lhi - llo) / 8.0);
            double lp2 = std::log2(p);
            double l1p2 = std::log2(1.0 - p);
            auto inner = [&](double tau) {
                return opt::grid_max(
                           [&](double lam) {
                               return lam * lp2 + (1.0 - lam) * l1p2
                                    + krawtchouk_exponent(tau, lam);
                           },
                           llo, lhi, lstep)
                    .value;
            };
            return opt::grid_max(
                       [&](double tau) {
                           double v = half_lp(tau);
                           return std::isnan(v) ? v : v + inner(tau);
                       },
                       delta, 1.0 - 0.5 * delta)
                .value;
        }
    }
    return undefined;
}

std::optional<double> smoothing_threshold(const std::function<double(double)>& curve,
                                          double lo, double hi, double tol) {
    require(hi > lo, "smoothing_threshold: empty range");
    return opt::last_downward_crossing(curve, lo, hi, tol);
}

namespace {

struct MagnitudeRange {
    double lo;
    double hi;
};

MagnitudeRange threshold_range(NoiseKind kind, bool worst_case) {
    switch (kind) {
        case NoiseKind::UniformSphere: return {1e-4, 0.5};
        case NoiseKind::Bernoulli: return {1e-4, 0.4999};
        case NoiseKind::TruncatedBernoulli: return {1e-4, 0.499};
        case NoiseKind::RandomWalk: return {1e-4, worst_case ? 1.0 : 2.0};
    }
    return {1e-4, 0.5};
}

NoiseSpec spec_for(NoiseKind kind, double magnitude, double eps) {
    switch (kind) {
        case NoiseKind::UniformSphere: return NoiseSpec::uniform_sphere(magnitude);
        case NoiseKind::Bernoulli: return NoiseSpec::bernoulli(magnitude);
        case NoiseKind::TruncatedBernoulli:
            return NoiseSpec::truncated_bernoulli(magnitude, eps);
        case NoiseKind::RandomWalk: return NoiseSpec::random_walk(magnitude);
    }
    throw std::invalid_argument("unknown noise kind");
}

}  // namespace

std::optional<double> random_code_threshold(const RandomCodeParams& params, NoiseKind kind,
                                            Strategy strategy, double eps) {
    auto range = threshold_range(kind, false);
    return smoothing_threshold(
        [&](double m) { return random_code_exponent(params, spec_for(kind, m, eps), strategy); },
        range.lo, range.hi);
}

std::optional<double> worst_case_threshold(const WorstCaseCodeParams& params, NoiseKind kind,
                                           double eps) {
    auto range = threshold_range(kind, true);
    return smoothing_threshold(
        [&](double m) { return worst_case_exponent(params, spec_for(kind, m, eps)); },
        range.lo, range.hi);
}

// ----- figure tabulation ----------------------------------------------------

namespace {

const std::vector<std::string> known_figures = {
    "strategy-compare", "random-code", "lp-delta-0.1", "lp-delta-0.35", "trunc-vs-plain",
};

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = lo + (hi - lo) * i / (count - 1);
    return xs;
}

double or_nan(const std::optional<double>& v) {
    return v ? *v : undefined;
}

CurveSet lp_figure(double delta, int grid) {
    CurveSet cs;
    cs.columns = {"tau", "c", "d"};
    for (double tau : linspace(delta, 1.0, grid))
        cs.rows.push_back({tau, lp_bound_c(delta, tau), lp_bound_d(delta, tau)});
    return cs;
}

}  // namespace

const std::vector<std::string>& figure_names() { return known_figures; }

CurveSet figure_curves(std::string_view name, int grid, double eps) {
    if (grid < 2) throw std::invalid_argument("figure_curves: grid must be >= 2");
    if (name == "strategy-compare") {
        CurveSet cs;
        cs.columns = {"R", "omega0", "omega1"};
        for (double rate : linspace(0.01, 0.99, grid)) {
            RandomCodeParams params{rate};
            double omega0 = inv_binary_entropy(1.0 - rate);
            double omega1 = or_nan(random_code_threshold(params, NoiseKind::UniformSphere,
                                                         Strategy::PSF_TI));
            cs.rows.push_back({rate, omega0, omega1});
        }
        return cs;
    }
    if (name == "random-code") {
        CurveSet cs;
        cs.columns = {"R", "sphere_gv", "bernoulli_p0", "sphere_spectral", "rw_steps"};
        for (double rate : linspace(0.01, 0.99, grid)) {
            RandomCodeParams params{rate};
            double gv = inv_binary_entropy(1.0 - rate);
            double p0 = 0.5 * (1.0 - std::sqrt(std::exp2(rate) - 1.0));
            double spectral = or_nan(random_code_threshold(params, NoiseKind::UniformSphere,
                                                           Strategy::PSF_TI));
            double walk = or_nan(random_code_threshold(params, NoiseKind::RandomWalk,
                                                       Strategy::PI_CS));
            cs.rows.push_back({rate, gv, p0, spectral, walk});
        }
        return cs;
    }
    if (name == "lp-delta-0.1") return lp_figure(0.1, grid);
    if (name == "lp-delta-0.35") return lp_figure(0.35, grid);
    if (name == "trunc-vs-plain") {
        CurveSet cs;
        cs.columns = {"p", "plain_exponent", "trunc_exponent"};
        WorstCaseCodeParams params{0.11, std::nullopt};
        for (double p : linspace(0.01, 0.49, grid)) {
            double plain = worst_case_exponent(params, NoiseSpec::bernoulli(p));
            double trunc = worst_case_exponent(params, NoiseSpec::truncated_bernoulli(p, eps));
            cs.rows.push_back({p, plain, trunc});
        }
        return cs;
    }
    std::string msg = "figure_curves: unknown name, expected one of";
    for (const auto& n : known_figures) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace smoothing::codes
