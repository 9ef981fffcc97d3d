// smoothbound: compute smoothing-bound constants, thresholds, figure curves,
// lattice sweeps, and run the exact small-n verification suite.
//
// Exit status: 0 = all checks pass, 1 = a verified invariant failed,
// 2 = configuration error, 3 = resource guard tripped.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "smoothing/asymptotics.hpp"
#include "smoothing/code_bounds.hpp"
#include "smoothing/lattice_bounds.hpp"
#include "smoothing/oracle.hpp"
#include "smoothing/rng.hpp"

namespace {

using namespace smoothing;

constexpr int exit_pass = 0;
constexpr int exit_invariant = 1;
constexpr int exit_config = 2;
constexpr int exit_guard = 3;

std::string num(double v) {
    if (std::isnan(v)) return "";  // empty cell = undefined
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Sheet {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footer;  // emitted as '# ...' comment lines

    void emit(std::ostream& os) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "\n");
        for (const auto& line : footer) os << "# " << line << "\n";
    }
};

// Output selection: --out PATH or stdout.
class OutStream {
public:
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// ----- constants -----------------------------------------------------------------

int run_constants(const std::string& out_path) {
    auto sc = lattices::strategy_constants();
    Sheet sheet;
    sheet.columns = {"strategy", "constant", "formula"};
    auto row = [&](const char* name, double v, const char* formula) {
        sheet.rows.push_back({name, num(v), formula});
    };
    row("psf-ti-tail", sc.psf_ti_tail, "1/(2*pi)");
    row("psf-ti-lp", sc.psf_ti_lp, "2^0.401/(2*pi*sqrt(e))");
    row("pi-cs-lp-gauss", sc.pi_cs_lp_gauss, "2^0.401/(2*pi*sqrt(2*e))");
    row("pi-cs-lp-unif", sc.pi_cs_lp_unif, "2^0.401/(2*pi*e)");
    row("gauss-via-unif", sc.gauss_via_unif, "2^0.401/(2*pi*e)");
    sheet.footer = {
        "config: constants",
        "columns: strategy = proof route; constant = limiting value of s0/n (resp. w0/n)",
        "levels below which the route stops certifying smoothing; smaller is stronger",
    };
    OutStream out(out_path);
    sheet.emit(out.get());
    return exit_pass;
}

// ----- code thresholds -----------------------------------------------------------

int run_code_thresholds(const std::string& out_path, double delta_dual,
                        std::optional<double> beta, double eps) {
    codes::WorstCaseCodeParams params;
    params.delta_dual = delta_dual;
    params.beta = beta;

    Sheet sheet;
    sheet.columns = {"noise", "threshold", "balanced_hypothesis", "status"};
    auto row = [&](const char* name, codes::NoiseKind kind, bool needs_beta) {
        if (needs_beta && !beta) {
            sheet.rows.push_back({name, "", "Y", "needs-beta"});
            return;
        }
        auto thr = codes::worst_case_threshold(params, kind, eps);
        sheet.rows.push_back({name, thr ? num(*thr) : "", needs_beta ? "Y" : "N",
                              thr ? "ok" : "no-threshold"});
    };
    row("bernoulli", codes::NoiseKind::Bernoulli, false);
    row("random-walk", codes::NoiseKind::RandomWalk, true);
    row("uniform-sphere", codes::NoiseKind::UniformSphere, true);
    row("truncated-bernoulli", codes::NoiseKind::TruncatedBernoulli, false);

    std::ostringstream cfg;
    cfg << "config: code-thresholds --delta-dual " << num(delta_dual);
    if (beta) cfg << " --beta " << num(*beta);
    cfg << " --eps " << num(eps);
    sheet.footer = {
        cfg.str(),
        "columns: threshold = largest noise magnitude (weight or flip rate, per "
        "coordinate) with a certified vanishing-distance exponent",
        "balanced_hypothesis = Y when the noise needs the two-sided dual weight bound beta",
        "sphere/walk magnitudes are weight fractions w/n; walk counts steps, so its "
        "threshold may exceed 1/2",
    };
    OutStream out(out_path);
    sheet.emit(out.get());
    return exit_pass;
}

// ----- figures -------------------------------------------------------------------

int run_figure(const std::string& out_path, const std::string& name, int grid, double eps) {
    codes::CurveSet curves = codes::figure_curves(name, grid, eps);
    Sheet sheet;
    sheet.columns = curves.columns;
    for (const auto& r : curves.rows) {
        std::vector<std::string> cells;
        cells.reserve(r.size());
        for (double v : r) cells.push_back(num(v));
        sheet.rows.push_back(std::move(cells));
    }
    std::ostringstream cfg;
    cfg << "config: figure --name " << name << " --grid " << grid << " --eps " << num(eps);
    sheet.footer = {cfg.str(), "empty cells mark points where a curve is undefined"};
    OutStream out(out_path);
    sheet.emit(out.get());
    return exit_pass;
}

// ----- lattice sweeps ------------------------------------------------------------

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
};

SweepRange parse_sweep(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--sweep expects LO:HI");
    SweepRange r;
    try {
        r.lo = std::stod(text.substr(0, colon));
        r.hi = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--sweep expects numeric LO:HI");
    }
    if (!(r.lo > 0.0) || !(r.hi > r.lo))
        throw std::invalid_argument("--sweep needs 0 < LO < HI");
    return r;
}

int run_lattice(const std::string& out_path, const std::string& ensemble,
                const std::string& noise, int n, int k, double q, double covolume,
                double lambda1, const std::string& sweep_text, int grid) {
    if (grid < 2) throw std::invalid_argument("--grid must be at least 2");

    Sheet sheet;
    std::ostringstream cfg;
    cfg << "config: lattice --ensemble " << ensemble << " --noise " << noise << " --n " << n;

    double threshold = 0.0;
    std::function<lattices::LatticeBound(double)> eval;

    if (ensemble == "mhs") {
        lattices::MhsEnsemble e{n, covolume};
        cfg << " --covolume " << num(covolume);
        if (noise == "ball") {
            threshold = lattices::mhs_w0(e);
            eval = [e](double w) { return lattices::mhs_bound(e, lattices::LatticeNoise::ball(w)); };
        } else if (noise == "gauss") {
            threshold = lattices::mhs_s0_direct(e);
            eval = [e](double s) {
                return lattices::mhs_bound(e, lattices::LatticeNoise::gaussian(s));
            };
        } else {
            throw std::invalid_argument("--noise must be ball or gauss");
        }
        sheet.columns = {"magnitude", "log2_bound", "rate", "threshold", "up_to_constant"};
    } else if (ensemble == "qary") {
        lattices::QaryEnsemble e{n, k, q, covolume};
        cfg << " --k " << k << " --q " << num(q) << " --covolume " << num(covolume);
        if (noise != "ball")
            throw std::invalid_argument("the q-ary bound covers ball noise only");
        auto probe = lattices::qary_bound(e, 1.0);
        threshold = probe.threshold;
        eval = [e](double w) { return lattices::qary_bound(e, w); };
        sheet.columns = {"magnitude", "log2_bound", "rate", "threshold", "up_to_constant"};
        std::ostringstream g;
        g << "gamma = n^{3/2} q^{k/n-1} = " << num(lattices::qary_gamma(e));
        sheet.footer.push_back(g.str());
    } else if (ensemble == "worst") {
        lattices::WorstCaseEnsemble e{n, lambda1};
        cfg << " --lambda1-dual " << num(lambda1);
        lattices::WorstCaseStrategy strategy;
        if (noise == "ball") {
            strategy = lattices::WorstCaseStrategy::Unif;
            threshold = lattices::worst_case_w0(e);
        } else if (noise == "gauss") {
            strategy = lattices::WorstCaseStrategy::GaussDirect;
            threshold = lattices::worst_case_s0(e, strategy);
        } else if (noise == "gauss-via-unif") {
            strategy = lattices::WorstCaseStrategy::GaussViaUnif;
            threshold = lattices::worst_case_s0(e, strategy);
        } else {
            throw std::invalid_argument("--noise must be ball, gauss, or gauss-via-unif");
        }
        double ratio = lattices::worst_case_s0(e, lattices::WorstCaseStrategy::GaussDirect) /
                       lattices::worst_case_s0(e, lattices::WorstCaseStrategy::GaussViaUnif);
        eval = [e, strategy, noise](double m) {
            auto ln = noise == "ball" ? lattices::LatticeNoise::ball(m)
                                      : lattices::LatticeNoise::gaussian(m);
            return lattices::worst_case_lattice_bound(e, ln, strategy);
        };
        sheet.columns = {"magnitude",        "log2_bound",     "rate", "threshold",
                         "s0_direct_over_via", "up_to_constant"};
        std::ostringstream r;
        r << "s0_direct_over_via is the fixed sqrt(e/2) gap between the direct Gaussian "
             "radius and the one routed through the ball bound";
        sheet.footer.push_back(r.str());
        SweepRange range = sweep_text.empty()
                               ? SweepRange{0.5 * threshold, 3.0 * threshold}
                               : parse_sweep(sweep_text);
        for (int i = 0; i < grid; ++i) {
            double m = range.lo + (range.hi - range.lo) * i / (grid - 1);
            auto b = eval(m);
            sheet.rows.push_back({num(m), num(b.log2_value), num(b.log2_value / n),
                                  num(b.threshold), num(ratio),
                                  b.up_to_constant ? "1" : "0"});
        }
        cfg << " --sweep " << num(range.lo) << ":" << num(range.hi) << " --grid " << grid;
        sheet.footer.insert(sheet.footer.begin(), cfg.str());
        sheet.footer.push_back(
            "columns: rate = log2_bound/n; threshold = magnitude past which the bound "
            "decays; empty log2_bound = bound not applicable at that magnitude");
        OutStream out(out_path);
        sheet.emit(out.get());
        return exit_pass;
    } else {
        throw std::invalid_argument("--ensemble must be mhs, qary, or worst");
    }

    SweepRange range = sweep_text.empty() ? SweepRange{0.5 * threshold, 3.0 * threshold}
                                          : parse_sweep(sweep_text);
    for (int i = 0; i < grid; ++i) {
        double m = range.lo + (range.hi - range.lo) * i / (grid - 1);
        auto b = eval(m);
        sheet.rows.push_back({num(m), num(b.log2_value), num(b.log2_value / n),
                              num(b.threshold), b.up_to_constant ? "1" : "0"});
    }
    cfg << " --sweep " << num(range.lo) << ":" << num(range.hi) << " --grid " << grid;
    sheet.footer.insert(sheet.footer.begin(), cfg.str());
    sheet.footer.push_back(
        "columns: rate = log2_bound/n; threshold = magnitude past which the bound decays");
    OutStream out(out_path);
    sheet.emit(out.get());
    return exit_pass;
}

// ----- verify --------------------------------------------------------------------

struct TrialOutcome {
    double delta = 0.0;
    double cs = 0.0;
    double ti = 0.0;
    bool dominance = false;
    bool has_identities = false;
    oracle::IdentityReport identities;
    bool floor_applicable = false;
    bool floor_hit = false;
    int resamples = 0;
    bool pass = false;
};

int run_verify(const std::string& out_path, int n, int k, const std::string& noise_name,
               int w, double p, double eps, const std::string& family, std::uint64_t seed,
               int trials, int jobs) {
    if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
    if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    if (n < 1) throw std::invalid_argument("--n must be at least 1");

    codes::NoiseSpec spec;
    bool fixed_parity_noise = false;
    if (noise_name == "sphere") {
        spec = codes::NoiseSpec::uniform_sphere(static_cast<double>(w) / n);
        fixed_parity_noise = true;
    } else if (noise_name == "walk") {
        spec = codes::NoiseSpec::random_walk(static_cast<double>(w) / n);
        fixed_parity_noise = true;
    } else if (noise_name == "bernoulli") {
        spec = codes::NoiseSpec::bernoulli(p);
    } else if (noise_name == "truncated") {
        spec = codes::NoiseSpec::truncated_bernoulli(p, eps);
    } else {
        throw std::invalid_argument("--noise must be sphere, walk, bernoulli, or truncated");
    }

    bool even_dual = family == "even-dual";
    if (!even_dual && family != "random")
        throw std::invalid_argument("--code-family must be random or even-dual");

    oracle::BinaryCode fixed_code;
    if (even_dual) {
        // All even-weight words: the dual is {0, all-ones}, so fixed-parity
        // noise reaches half the cosets and the distance floors at 1/2 while
        // the spectral bounds stay valid.
        std::vector<std::uint32_t> rows;
        for (int i = 0; i + 1 < n; ++i) rows.push_back((1u << i) | (1u << (n - 1)));
        fixed_code = oracle::make_code(n, std::move(rows));
        k = fixed_code.k;
    }

    oracle::DensityTable density = oracle::density_for(spec, n);
    bool with_identities = n <= oracle::max_identity_n;

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    int workers = std::min(jobs, trials);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

    auto work = [&](int worker) {
        try {
            for (int t = worker; t < trials; t += workers) {
                TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
                std::uint64_t tseed = mix64(seed + static_cast<std::uint64_t>(t) * splitmix_gamma);
                oracle::BinaryCode code =
                    even_dual ? fixed_code : oracle::sample_code(n, k, tseed, &o.resamples);
                o.delta = oracle::exact_statistical_distance(code, density);
                o.cs = oracle::finite_cs_bound(code, density);
                o.ti = oracle::finite_ti_bound(code, density);
                o.dominance = o.delta <= o.cs + 1e-9 && o.cs <= o.ti + 1e-9;
                if (with_identities) {
                    o.identities = oracle::verify_identities(code, spec, tseed);
                    o.has_identities = true;
                }
                if (even_dual && fixed_parity_noise) {
                    o.floor_applicable = true;
                    o.floor_hit = o.delta >= 0.5 - 1e-12;
                }
                o.pass = o.dominance && (!o.has_identities || o.identities.pass) &&
                         (!o.floor_applicable || o.floor_hit);
            }
        } catch (...) {
            errors[static_cast<std::size_t>(worker)] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int j = 0; j < workers; ++j) pool.emplace_back(work, j);
        for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    Sheet sheet;
    sheet.columns = {"trial",
                     "delta",
                     "cs_bound",
                     "ti_bound",
                     "dominance_ok",
                     "parseval_residual",
                     "poisson_residual",
                     "krawtchouk_ok",
                     "single_shell_ok",
                     "trunc_residual",
                     "mixture_residual",
                     "convexity_margin",
                     "smoothing_floor",
                     "pass"};

    double sum_delta = 0.0, sum_cs = 0.0, sum_ti = 0.0;
    double max_parseval = 0.0, max_poisson = 0.0, max_trunc = 0.0, max_mixture = 0.0;
    double min_convexity = std::numeric_limits<double>::infinity();
    long total_resamples = 0;
    bool all_pass = true;

    for (int t = 0; t < trials; ++t) {
        const TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
        sum_delta += o.delta;
        sum_cs += o.cs;
        sum_ti += o.ti;
        total_resamples += o.resamples;
        all_pass = all_pass && o.pass;

        std::vector<std::string> row;
        row.push_back(std::to_string(t));
        row.push_back(num(o.delta));
        row.push_back(num(o.cs));
        row.push_back(num(o.ti));
        row.push_back(o.dominance ? "1" : "0");
        if (o.has_identities) {
            const auto& id = o.identities;
            double trunc_residual = std::fabs(id.trunc_distance - id.trunc_mass_outside);
            max_parseval = std::max(max_parseval, id.parseval_residual);
            max_poisson = std::max(max_poisson, id.poisson_residual);
            max_trunc = std::max(max_trunc, trunc_residual);
            max_mixture = std::max(max_mixture, id.mixture_residual);
            min_convexity = std::min(min_convexity, id.convexity_margin);
            row.push_back(num(id.parseval_residual));
            row.push_back(num(id.poisson_residual));
            row.push_back(id.krawtchouk_charsum_ok ? "1" : "0");
            row.push_back(id.large_weight_single_ok ? "1" : "0");
            row.push_back(num(trunc_residual));
            row.push_back(num(id.mixture_residual));
            row.push_back(num(id.convexity_margin));
        } else {
            for (int i = 0; i < 7; ++i) row.push_back("");
        }
        row.push_back(o.floor_applicable ? (o.floor_hit ? "1" : "0") : "");
        row.push_back(o.pass ? "1" : "0");
        sheet.rows.push_back(std::move(row));
    }

    std::ostringstream cfg;
    cfg << "config: verify --n " << n << " --k " << k << " --noise " << noise_name;
    if (noise_name == "sphere" || noise_name == "walk") cfg << " --w " << w;
    if (noise_name == "bernoulli" || noise_name == "truncated") cfg << " --p " << num(p);
    if (noise_name == "truncated") cfg << " --eps " << num(eps);
    cfg << " --code-family " << family << " --seed " << seed << " --trials " << trials;
    sheet.footer.push_back(cfg.str());

    auto stat = [&](const char* label, double v) {
        std::ostringstream s;
        s << label << " = " << num(v);
        sheet.footer.push_back(s.str());
    };
    stat("summary: mean_delta", sum_delta / trials);
    stat("summary: mean_cs", sum_cs / trials);
    stat("summary: mean_ti", sum_ti / trials);
    if (with_identities) {
        stat("summary: max_parseval_residual", max_parseval);
        stat("summary: max_poisson_residual", max_poisson);
        stat("summary: max_trunc_residual", max_trunc);
        stat("summary: max_mixture_residual", max_mixture);
        stat("summary: min_convexity_margin", min_convexity);
    } else {
        sheet.footer.push_back("summary: identity suite skipped (n past its cap)");
    }
    {
        std::ostringstream s;
        s << "summary: resamples = " << total_resamples;
        sheet.footer.push_back(s.str());
        sheet.footer.push_back(std::string("summary: verdict = ") +
                               (all_pass ? "PASS" : "FAIL"));
    }
    if (even_dual)
        sheet.footer.push_back(
            "note: dual contains the all-ones word, fixed-weight noise reaches half the "
            "cosets; the 1/2 distance floor is the expected outcome and is asserted");

    OutStream out(out_path);
    sheet.emit(out.get());
    return all_pass ? exit_pass : exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smoothing-bound toolkit: constants, thresholds, figure curves, lattice "
                 "sweeps, and the exact small-n verification suite"};
    app.require_subcommand(1);

    std::string out_path;
    int grid = 200;
    double eps = 1e-2;
    std::uint64_t seed = 0;
    int trials = 200;
    int jobs = 1;

    auto* c_constants = app.add_subcommand("constants", "limiting constants per proof strategy");
    c_constants->add_option("--out", out_path, "output path (default stdout)");

    auto* c_thresh =
        app.add_subcommand("code-thresholds", "worst-case smoothing thresholds per noise kind");
    double delta_dual = 0.11;
    double beta_value = 0.0;
    c_thresh->add_option("--out", out_path, "output path (default stdout)");
    c_thresh->add_option("--delta-dual", delta_dual, "relative dual distance, in (0,1/2)");
    auto* beta_opt =
        c_thresh->add_option("--beta", beta_value, "two-sided dual weight bound, in (delta,1]");
    c_thresh->add_option("--eps", eps, "truncation half-width for the truncated kind");

    auto* c_figure = app.add_subcommand("figure", "tabulate a named curve family");
    std::string figure_name;
    c_figure->add_option("--name", figure_name, "curve family name")->required();
    c_figure->add_option("--out", out_path, "output path (default stdout)");
    c_figure->add_option("--grid", grid, "points per curve");
    c_figure->add_option("--eps", eps, "truncation half-width where applicable");

    auto* c_verify = app.add_subcommand("verify", "exact oracle runs on random small codes");
    int vn = 14, vk = 7, vw = 7;
    double vp = 0.2;
    std::string noise_name = "sphere";
    std::string family = "random";
    c_verify->add_option("--out", out_path, "output path (default stdout)");
    c_verify->add_option("--n", vn, "block length, at most 24");
    c_verify->add_option("--k", vk, "dimension");
    c_verify->add_option("--noise", noise_name, "sphere | walk | bernoulli | truncated");
    c_verify->add_option("--w", vw, "weight (sphere) or step count (walk)");
    c_verify->add_option("--p", vp, "flip rate (bernoulli/truncated)");
    c_verify->add_option("--eps", eps, "truncation half-width");
    c_verify->add_option("--code-family", family, "random | even-dual");
    c_verify->add_option("--seed", seed, "base seed; trial i uses an independent stream");
    c_verify->add_option("--trials", trials, "number of sampled codes");
    c_verify->add_option("--jobs", jobs, "worker threads (output is identical for any value)");

    auto* c_lattice = app.add_subcommand("lattice", "bound sweeps for lattice ensembles");
    std::string ensemble = "mhs";
    std::string lattice_noise = "ball";
    std::string sweep_text;
    int ln = 128, lk = 64;
    double covolume = 1.0, lq = 3329.0, lambda1 = 1.0;
    c_lattice->add_option("--out", out_path, "output path (default stdout)");
    c_lattice->add_option("--ensemble", ensemble, "mhs | qary | worst");
    c_lattice->add_option("--noise", lattice_noise, "ball | gauss | gauss-via-unif");
    c_lattice->add_option("--n", ln, "dimension");
    c_lattice->add_option("--k", lk, "q-ary construction rank");
    c_lattice->add_option("--q", lq, "q-ary modulus");
    c_lattice->add_option("--covolume", covolume, "lattice covolume");
    c_lattice->add_option("--lambda1-dual", lambda1, "shortest dual vector length");
    c_lattice->add_option("--sweep", sweep_text, "magnitude range LO:HI (default around the threshold)");
    c_lattice->add_option("--grid", grid, "sweep points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (c_constants->parsed()) return run_constants(out_path);
        if (c_thresh->parsed()) {
            std::optional<double> beta;
            if (beta_opt->count() > 0) beta = beta_value;
            return run_code_thresholds(out_path, delta_dual, beta, eps);
        }
        if (c_figure->parsed()) return run_figure(out_path, figure_name, grid, eps);
        if (c_verify->parsed())
            return run_verify(out_path, vn, vk, noise_name, vw, vp, eps, family, seed, trials,
                              jobs);
        if (c_lattice->parsed())
            return run_lattice(out_path, ensemble, lattice_noise, ln, lk, lq, covolume, lambda1,
                               sweep_text, grid);
    } catch (const oracle::resource_guard_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_config;
}
