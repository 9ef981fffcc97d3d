#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smoothing/code_bounds.hpp"

// Exact brute-force engine for small block lengths: random linear codes,
// duals, weight enumerators, Walsh spectra, and the exact statistical
// distance of periodized noise to the uniform coset distribution. This is
// the ground truth the asymptotic modules are checked against.

namespace smoothing::oracle {

// Size caps. A full-space table is 2^n doubles and a coset table 2^{n-k}
// doubles; both stay far below half a gigabyte at these limits.
inline constexpr int max_n = 24;
inline constexpr int max_coset_bits = 20;
inline constexpr int max_identity_n = 20;  // full-space identity checks

struct resource_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear code as generator rows in reduced row echelon form, coordinate i
/// stored in bit i, pivots taken lowest coordinate first. The canonical form
/// is unique per subspace, so codes compare by their rows.
struct BinaryCode {
    int n = 0;
    int k = 0;
    std::vector<std::uint32_t> generators;

    bool operator==(const BinaryCode&) const = default;
};

/// Canonicalize arbitrary spanning rows (dependent rows are dropped, k is the
/// resulting rank).
BinaryCode make_code(int n, std::vector<std::uint32_t> rows);
BinaryCode full_space(int n);
BinaryCode zero_code(int n);

/// Uniform k x n generator matrix, redrawn whole until it has rank k, then
/// canonicalized. Deterministic per seed. `resamples`, when non-null,
/// receives the number of rejected rank-deficient draws.
BinaryCode sample_code(int n, int k, std::uint64_t seed, int* resamples = nullptr);

BinaryCode dual(const BinaryCode&);

/// N_t for t = 0..n, by a Gray-code walk over all 2^k words.
std::vector<std::int64_t> weight_enumerator(const BinaryCode&);

/// Least positive codeword weight; n+1 for the zero code (no such weight, and
/// the spectral sums over weights >= d are then empty).
int min_distance(const BinaryCode&);

// ----- noise densities -------------------------------------------------------

/// Radial density: the value of the noise density at any one vector of weight
/// t, for t = 0..n. Invariant: sum_t binom(n,t) radial[t] = 1.
struct DensityTable {
    int n = 0;
    std::vector<double> radial;
};

DensityTable sphere_density(int n, int w);
DensityTable bernoulli_density(int n, double p);

/// Bernoulli conditioned on weights in [(1-eps)pn, (1+eps)pn], the window
/// rounded outward to integers, renormalized by the window mass Z.
DensityTable truncated_density(int n, double p, double eps);

/// The window mass Z itself.
double truncated_z(int n, double p, double eps);

/// Weight after `steps` single-coordinate flips at uniformly random positions:
/// exact weight-space chain (weight i moves to i-1 with probability i/n, else
/// to i+1), divided by binom(n,t) for the per-vector value.
DensityTable random_walk_density(int n, int steps);

/// Dispatcher for relative-unit specs; sphere radius and walk step count must
/// land on integers (magnitude * n within 1e-9 of one).
DensityTable density_for(const codes::NoiseSpec&, int n);

// ----- spectra -----------------------------------------------------------------

/// 2^n * fhat at each output weight t: sum_s radial[s] K_s(t). Exact radial
/// form of the Walsh transform of a radial density.
std::vector<double> radial_spectrum(const DensityTable&);

/// In-place Walsh transform pair on a 2^n table: forward divides by 2^n,
/// inverse is the plain butterfly, so inverse(forward(x)) == x.
void walsh_forward(std::vector<double>& table);
void walsh_inverse(std::vector<double>& table);

/// Full 2^n table with table[x] = radial[popcount(x)].
std::vector<double> full_table(const DensityTable&);

// ----- exact distance and the two spectral bounds -------------------------------

/// Exact distance of noise mod the code to the uniform coset distribution:
/// (1/2) sum over syndromes |P(s) - 2^{k-n}|, by bucket accumulation over all
/// 2^n points, compensated summation throughout.
double exact_statistical_distance(const BinaryCode&, const DensityTable&);

/// Cauchy-Schwarz form: sqrt( sum_{t >= d} N_t(dual) (2^n fhat(t))^2 ).
double finite_cs_bound(const BinaryCode&, const DensityTable&);

/// Triangle-inequality form: sum_{t >= d} N_t(dual) |2^n fhat(t)|.
double finite_ti_bound(const BinaryCode&, const DensityTable&);

// ----- identity suite -------------------------------------------------------------

/// One record per identity. `pass` gates everything except the loose tail
/// comparison: the exact statement behind it, distance(plain, truncated)
/// = 1 - Z, holds to machine precision and is gated, while the Chernoff-style
/// envelope 2 exp(-eps^2 n) it is usually quoted with can be smaller than
/// 1 - Z at desk-scale n, so that comparison is reported informationally.
struct IdentityReport {
    double parseval_residual = 0.0;      // | ||f||_2^2 - 2^n ||fhat||_2^2 |
    double poisson_residual = 0.0;       // coset spectrum vs fhat on the dual
    bool krawtchouk_charsum_ok = false;  // sign sums over spheres = K_s(t), exact
    bool large_weight_single_ok = false; // N_t(dual) <= 1 past n - d(dual)/2
    double trunc_distance = 0.0;         // distance(plain Bernoulli, truncated)
    double trunc_mass_outside = 0.0;     // 1 - Z
    bool trunc_tail_bound_holds = false; // 1 - Z <= 2 exp(-eps^2 n), informational
    double mixture_residual = 0.0;       // Bernoulli = binomial mixture of spheres
    double convexity_margin = 0.0;       // min over mixtures of sum a_i D_i - D_mix
    bool pass = false;
};

/// Runs the identity suite on the code and the densities derived from the
/// noise spec (Bernoulli reference p = 0.1, eps = 0.5 when the spec is not a
/// Bernoulli kind). The seed drives the random mixtures of the convexity
/// check. Requires n <= max_identity_n.
IdentityReport verify_identities(const BinaryCode&, const codes::NoiseSpec&,
                                 std::uint64_t seed = 0);

}  // namespace smoothing::oracle
