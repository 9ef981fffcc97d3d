#include "smoothing/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "smoothing/asymptotics.hpp"
#include "smoothing/rng.hpp"

namespace smoothing::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

void guard(bool ok, const char* what) {
    if (!ok) throw resource_guard_error(what);
}

std::uint32_t coord_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1u; }

int pivot_of(std::uint32_t row) { return std::countr_zero(row); }

// Compensated accumulator; the spectral sums mix magnitudes across ~15
// decades and the dominance checks are asserted to 1e-9.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// C(n,t) for t = 0..n as exact doubles (int64 Pascal row, exact to n = 64).
std::vector<double> binomial_row(int n) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int t = i; t >= 1; --t) row[t] += row[t - 1];
    return {row.begin(), row.end()};
}

void validate_density(const DensityTable& d) {
    require(d.n >= 1, "density: n < 1");
    require(static_cast<int>(d.radial.size()) == d.n + 1, "density: radial size != n+1");
}

// Truncation window [(1-eps)pn, (1+eps)pn] rounded outward and clamped.
std::pair<int, int> trunc_window(int n, double p, double eps) {
    int lo = std::max(0, static_cast<int>(std::floor((1.0 - eps) * p * n)));
    int hi = std::min(n, static_cast<int>(std::ceil((1.0 + eps) * p * n)));
    require(lo <= hi, "truncated density: empty weight window");
    return {lo, hi};
}

// Coset masses of the density under the syndrome map x -> (<x,d_j>)_j for the
// dual generators d_j. Gray-code walk: one XOR updates the point and one the
// syndrome. Bucket sums are compensated.
std::vector<double> coset_masses(const BinaryCode& code, const DensityTable& density,
                                 const BinaryCode& dual_code) {
    int n = code.n;
    int m = dual_code.k;
    std::vector<std::uint32_t> col(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < m; ++j)
        for (int b = 0; b < n; ++b)
            if ((dual_code.generators[j] >> b) & 1u) col[b] |= 1u << j;

    std::vector<double> sum(std::size_t{1} << m, 0.0);
    std::vector<double> comp(std::size_t{1} << m, 0.0);
    auto deposit = [&](std::uint32_t s, double v) {
        double y = v - comp[s];
        double t = sum[s] + y;
        comp[s] = (t - sum[s]) - y;
        sum[s] = t;
    };

    std::uint32_t x = 0, s = 0;
    deposit(0, density.radial[0]);
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int b = std::countr_zero(i);
        x ^= 1u << b;
        s ^= col[b];
        deposit(s, density.radial[std::popcount(x)]);
    }
    return sum;
}

// A density and the reference Bernoulli pair used by the truncation and
// mixture identities.
struct BernoulliRef {
    double p;
    double eps;
};

BernoulliRef bernoulli_ref(const codes::NoiseSpec& spec) {
    switch (spec.kind) {
        case codes::NoiseKind::Bernoulli:
            return {spec.magnitude, 0.5};
        case codes::NoiseKind::TruncatedBernoulli:
            return {spec.magnitude, spec.eps};
        default:
            return {0.1, 0.5};
    }
}

}  // namespace

// ----- codes ---------------------------------------------------------------------

BinaryCode make_code(int n, std::vector<std::uint32_t> rows) {
    require(n >= 1, "make_code: n < 1");
    guard(n <= max_n, "make_code: n exceeds the exact-oracle cap");
    std::uint32_t mask = coord_mask(n);
    std::vector<std::uint32_t> rref;
    for (std::uint32_t row : rows) {
        require((row & ~mask) == 0, "make_code: row has coordinates past n");
        for (std::uint32_t e : rref)
            if ((row >> pivot_of(e)) & 1u) row ^= e;
        if (row == 0) continue;
        for (std::uint32_t& e : rref)
            if ((e >> pivot_of(row)) & 1u) e ^= row;
        rref.push_back(row);
    }
    std::sort(rref.begin(), rref.end(),
              [](std::uint32_t a, std::uint32_t b) { return pivot_of(a) < pivot_of(b); });
    BinaryCode code;
    code.n = n;
    code.k = static_cast<int>(rref.size());
    code.generators = std::move(rref);
    return code;
}

BinaryCode full_space(int n) {
    std::vector<std::uint32_t> rows;
    for (int i = 0; i < n; ++i) rows.push_back(1u << i);
    return make_code(n, std::move(rows));
}

BinaryCode zero_code(int n) { return make_code(n, {}); }

BinaryCode sample_code(int n, int k, std::uint64_t seed, int* resamples) {
    require(n >= 1, "sample_code: n < 1");
    guard(n <= max_n, "sample_code: n exceeds the exact-oracle cap");
    require(k >= 0 && k <= n, "sample_code: k outside [0,n]");
    SplitMix64 gen(seed);
    std::uint32_t mask = coord_mask(n);
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
    int rejected = 0;
    for (;;) {
        for (auto& r : rows) r = static_cast<std::uint32_t>(gen.next()) & mask;
        std::uint32_t by_high[32] = {};
        int rank = 0;
        for (std::uint32_t r : rows) {
            while (r) {
                int h = std::bit_width(r) - 1;
                if (!by_high[h]) {
                    by_high[h] = r;
                    ++rank;
                    break;
                }
                r ^= by_high[h];
            }
        }
        if (rank == k) break;
        ++rejected;
    }
    if (resamples) *resamples = rejected;
    return make_code(n, std::move(rows));
}

BinaryCode dual(const BinaryCode& code) {
    std::vector<int> pivots(code.generators.size());
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        pivots[i] = pivot_of(code.generators[i]);
    std::vector<bool> is_pivot(static_cast<std::size_t>(code.n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::uint32_t> rows;
    for (int f = 0; f < code.n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::uint32_t v = 1u << f;
        for (std::size_t i = 0; i < code.generators.size(); ++i)
            if ((code.generators[i] >> f) & 1u) v |= 1u << pivots[i];
        rows.push_back(v);
    }
    return make_code(code.n, std::move(rows));
}

std::vector<std::int64_t> weight_enumerator(const BinaryCode& code) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(code.n) + 1, 0);
    std::uint32_t word = 0;
    counts[0] = 1;
    std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= code.generators[static_cast<std::size_t>(std::countr_zero(i))];
        ++counts[std::popcount(word)];
    }
    return counts;
}

int min_distance(const BinaryCode& code) {
    auto counts = weight_enumerator(code);
    for (int t = 1; t <= code.n; ++t)
        if (counts[t] > 0) return t;
    return code.n + 1;
}

// ----- noise densities -------------------------------------------------------

DensityTable sphere_density(int n, int w) {
    require(n >= 1, "sphere density: n < 1");
    require(w >= 0 && w <= n, "sphere density: weight outside [0,n]");
    auto binom = binomial_row(n);
    DensityTable d;
    d.n = n;
    d.radial.assign(static_cast<std::size_t>(n) + 1, 0.0);
    d.radial[w] = 1.0 / binom[w];
    return d;
}

DensityTable bernoulli_density(int n, double p) {
    require(n >= 1, "Bernoulli density: n < 1");
    require(p >= 0.0 && p <= 1.0, "Bernoulli density: p outside [0,1]");
    DensityTable d;
    d.n = n;
    d.radial.resize(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) d.radial[t] = std::pow(p, t) * std::pow(1.0 - p, n - t);
    return d;
}

double truncated_z(int n, double p, double eps) {
    require(n >= 1, "truncated density: n < 1");
    require(p > 0.0 && p < 1.0, "truncated density: p outside (0,1)");
    require(eps > 0.0, "truncated density: eps <= 0");
    auto [lo, hi] = trunc_window(n, p, eps);
    auto binom = binomial_row(n);
    Kahan z;
    for (int t = lo; t <= hi; ++t) z.add(binom[t] * std::pow(p, t) * std::pow(1.0 - p, n - t));
    return z.sum;
}

DensityTable truncated_density(int n, double p, double eps) {
    double z = truncated_z(n, p, eps);
    require(z > 0.0, "truncated density: window carries no mass");
    auto [lo, hi] = trunc_window(n, p, eps);
    DensityTable d;
    d.n = n;
    d.radial.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int t = lo; t <= hi; ++t) d.radial[t] = std::pow(p, t) * std::pow(1.0 - p, n - t) / z;
    return d;
}

DensityTable random_walk_density(int n, int steps) {
    require(n >= 1, "walk density: n < 1");
    require(steps >= 0, "walk density: negative step count");
    std::vector<double> mass(static_cast<std::size_t>(n) + 1, 0.0);
    mass[0] = 1.0;
    std::vector<double> next(mass.size());
    for (int s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int i = 0; i <= n; ++i) {
            if (mass[i] == 0.0) continue;
            if (i > 0) next[i - 1] += mass[i] * i / n;
            if (i < n) next[i + 1] += mass[i] * (n - i) / n;
        }
        mass.swap(next);
    }
    auto binom = binomial_row(n);
    DensityTable d;
    d.n = n;
    d.radial.resize(mass.size());
    for (int t = 0; t <= n; ++t) d.radial[t] = mass[t] / binom[t];
    return d;
}

DensityTable density_for(const codes::NoiseSpec& spec, int n) {
    require(n >= 1, "density_for: n < 1");
    auto integer_magnitude = [&](const char* what) {
        double real = spec.magnitude * n;
        int rounded = static_cast<int>(std::lround(real));
        require(std::fabs(real - rounded) <= 1e-9, what);
        return rounded;
    };
    switch (spec.kind) {
        case codes::NoiseKind::UniformSphere:
            return sphere_density(n, integer_magnitude("density_for: sphere radius omega*n is not an integer"));
        case codes::NoiseKind::Bernoulli:
            return bernoulli_density(n, spec.magnitude);
        case codes::NoiseKind::TruncatedBernoulli:
            return truncated_density(n, spec.magnitude, spec.eps);
        case codes::NoiseKind::RandomWalk:
            return random_walk_density(n, integer_magnitude("density_for: step count omega*n is not an integer"));
    }
    throw std::domain_error("density_for: unknown noise kind");
}

// ----- spectra -----------------------------------------------------------------

std::vector<double> radial_spectrum(const DensityTable& d) {
    validate_density(d);
    KrawtchoukTable table(d.n);
    std::vector<double> spectrum(static_cast<std::size_t>(d.n) + 1);
    for (int t = 0; t <= d.n; ++t) {
        Kahan acc;
        for (int s = 0; s <= d.n; ++s)
            if (d.radial[s] != 0.0) acc.add(d.radial[s] * static_cast<double>(table(s, t)));
        spectrum[t] = acc.sum;
    }
    return spectrum;
}

namespace {

void butterfly(std::vector<double>& table) {
    std::size_t size = table.size();
    require(size > 0 && (size & (size - 1)) == 0, "walsh transform: size is not a power of two");
    for (std::size_t len = 1; len < size; len <<= 1)
        for (std::size_t block = 0; block < size; block += len << 1)
            for (std::size_t j = block; j < block + len; ++j) {
                double a = table[j];
                double b = table[j + len];
                table[j] = a + b;
                table[j + len] = a - b;
            }
}

}  // namespace

void walsh_forward(std::vector<double>& table) {
    butterfly(table);
    double scale = 1.0 / static_cast<double>(table.size());
    for (double& v : table) v *= scale;
}

void walsh_inverse(std::vector<double>& table) { butterfly(table); }

std::vector<double> full_table(const DensityTable& d) {
    validate_density(d);
    guard(d.n <= max_n, "full_table: n exceeds the exact-oracle cap");
    std::vector<double> table(std::size_t{1} << d.n);
    for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = d.radial[std::popcount(static_cast<std::uint32_t>(x))];
    return table;
}

// ----- exact distance and the two spectral bounds -------------------------------

double exact_statistical_distance(const BinaryCode& code, const DensityTable& density) {
    require(density.n == code.n, "exact distance: density block length != code length");
    validate_density(density);
    guard(code.n <= max_n, "exact distance: n exceeds the exact-oracle cap");
    guard(code.n - code.k <= max_coset_bits, "exact distance: too many cosets");
    BinaryCode dual_code = dual(code);
    auto masses = coset_masses(code, density, dual_code);
    double uniform = std::ldexp(1.0, code.k - code.n);
    Kahan total;
    for (double m : masses) total.add(std::fabs(m - uniform));
    return 0.5 * total.sum;
}

double finite_cs_bound(const BinaryCode& code, const DensityTable& density) {
    require(density.n == code.n, "spectral bound: density block length != code length");
    auto counts = weight_enumerator(dual(code));
    auto spectrum = radial_spectrum(density);
    Kahan acc;
    for (int t = 1; t <= code.n; ++t)
        if (counts[t] > 0) acc.add(static_cast<double>(counts[t]) * spectrum[t] * spectrum[t]);
    return std::sqrt(std::max(acc.sum, 0.0));
}

double finite_ti_bound(const BinaryCode& code, const DensityTable& density) {
    require(density.n == code.n, "spectral bound: density block length != code length");
    auto counts = weight_enumerator(dual(code));
    auto spectrum = radial_spectrum(density);
    Kahan acc;
    for (int t = 1; t <= code.n; ++t)
        if (counts[t] > 0) acc.add(static_cast<double>(counts[t]) * std::fabs(spectrum[t]));
    return acc.sum;
}

// ----- identity suite -------------------------------------------------------------

IdentityReport verify_identities(const BinaryCode& code, const codes::NoiseSpec& spec,
                                 std::uint64_t seed) {
    guard(code.n <= max_identity_n, "verify_identities: n exceeds the identity-suite cap");
    int n = code.n;
    auto binom = binomial_row(n);
    DensityTable density = density_for(spec, n);
    IdentityReport report;

    // Parseval on the full table: ||f||_2^2 == 2^n ||fhat||_2^2.
    {
        auto f = full_table(density);
        Kahan direct;
        for (double v : f) direct.add(v * v);
        walsh_forward(f);
        Kahan dual_side;
        for (double v : f) dual_side.add(v * v);
        report.parseval_residual =
            std::fabs(direct.sum - std::ldexp(dual_side.sum, n));
    }

    // Coset-sum identity: the character sum of the coset masses at a dual
    // word u equals 2^n fhat evaluated at the corresponding codeword of the
    // dual, which for radial densities is the radial spectrum at its weight.
    {
        BinaryCode dual_code = dual(code);
        auto masses = coset_masses(code, density, dual_code);
        walsh_inverse(masses);
        auto spectrum = radial_spectrum(density);
        double worst = 0.0;
        for (std::size_t u = 0; u < masses.size(); ++u) {
            std::uint32_t word = 0;
            for (int j = 0; j < dual_code.k; ++j)
                if ((u >> j) & 1u) word ^= dual_code.generators[j];
            worst = std::max(worst, std::fabs(masses[u] - spectrum[std::popcount(word)]));
        }
        report.poisson_residual = worst;
    }

    // Sphere character sums reproduce the exact Krawtchouk integers.
    {
        report.krawtchouk_charsum_ok = true;
        std::uint64_t total = std::uint64_t{1} << n;
        for (int t = 0; t <= n && report.krawtchouk_charsum_ok; ++t) {
            std::uint32_t y = t == 0 ? 0u : coord_mask(t);
            std::vector<std::int64_t> sums(static_cast<std::size_t>(n) + 1, 0);
            for (std::uint64_t x = 0; x < total; ++x) {
                std::uint32_t xu = static_cast<std::uint32_t>(x);
                sums[std::popcount(xu)] += (std::popcount(xu & y) & 1) ? -1 : 1;
            }
            for (int s = 0; s <= n; ++s)
                if (sums[s] != krawtchouk_exact(n, s, t)) report.krawtchouk_charsum_ok = false;
        }
    }

    // Any two distinct words of weight above n - d/2 would differ by a word
    // of weight below d, so each such shell of the dual holds at most one.
    {
        BinaryCode dual_code = dual(code);
        auto counts = weight_enumerator(dual_code);
        double cut = n - 0.5 * min_distance(dual_code);
        report.large_weight_single_ok = true;
        for (int t = 0; t <= n; ++t)
            if (t > cut && counts[t] > 1) report.large_weight_single_ok = false;
    }

    BernoulliRef ref = bernoulli_ref(spec);

    // Truncation: the distance between the plain and the conditioned density
    // is exactly the mass outside the window.
    {
        DensityTable plain = bernoulli_density(n, ref.p);
        DensityTable trunc = truncated_density(n, ref.p, ref.eps);
        Kahan dist;
        for (int t = 0; t <= n; ++t)
            dist.add(binom[t] * std::fabs(plain.radial[t] - trunc.radial[t]));
        report.trunc_distance = 0.5 * dist.sum;
        report.trunc_mass_outside = 1.0 - truncated_z(n, ref.p, ref.eps);
        report.trunc_tail_bound_holds =
            report.trunc_mass_outside <= 2.0 * std::exp(-ref.eps * ref.eps * n);
    }

    // Bernoulli is the binomial mixture of the single-shell densities.
    {
        DensityTable plain = bernoulli_density(n, ref.p);
        std::vector<double> mixed(static_cast<std::size_t>(n) + 1, 0.0);
        for (int r = 0; r <= n; ++r) {
            double weight = binom[r] * std::pow(ref.p, r) * std::pow(1.0 - ref.p, n - r);
            DensityTable shell = sphere_density(n, r);
            for (int t = 0; t <= n; ++t) mixed[t] += weight * shell.radial[t];
        }
        double worst = 0.0;
        for (int t = 0; t <= n; ++t) worst = std::max(worst, std::fabs(mixed[t] - plain.radial[t]));
        report.mixture_residual = worst;
    }

    // Distance to uniform is convex in the density: mix four random radial
    // densities and compare against the mixed distances.
    {
        double margin = std::numeric_limits<double>::infinity();
        for (std::uint64_t m = 0; m < 3; ++m) {
            SplitMix64 gen = trial_stream(seed, m);
            std::vector<DensityTable> parts;
            for (int i = 0; i < 4; ++i) {
                DensityTable part;
                part.n = n;
                part.radial.resize(static_cast<std::size_t>(n) + 1);
                Kahan mass;
                for (int t = 0; t <= n; ++t) {
                    part.radial[t] = gen.next_double() + 1e-3;
                    mass.add(binom[t] * part.radial[t]);
                }
                for (double& v : part.radial) v /= mass.sum;
                parts.push_back(std::move(part));
            }
            double weights[4];
            double wsum = 0.0;
            for (double& w : weights) {
                w = gen.next_double() + 1e-3;
                wsum += w;
            }
            for (double& w : weights) w /= wsum;

            DensityTable mix;
            mix.n = n;
            mix.radial.assign(static_cast<std::size_t>(n) + 1, 0.0);
            double averaged = 0.0;
            for (int i = 0; i < 4; ++i) {
                for (int t = 0; t <= n; ++t) mix.radial[t] += weights[i] * parts[i].radial[t];
                averaged += weights[i] * exact_statistical_distance(code, parts[i]);
            }
            margin = std::min(margin, averaged - exact_statistical_distance(code, mix));
        }
        report.convexity_margin = margin;
    }

    report.pass = report.parseval_residual <= 1e-10 && report.poisson_residual <= 1e-10 &&
                  report.krawtchouk_charsum_ok && report.large_weight_single_ok &&
                  std::fabs(report.trunc_distance - report.trunc_mass_outside) <= 1e-12 &&
                  report.mixture_residual <= 1e-12 && report.convexity_margin >= -1e-12;
    return report;
}

}  // namespace smoothing::oracle
