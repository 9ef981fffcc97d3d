#pragma once

#include <cstdint>
#include <vector>

// Entropy, binomial and Krawtchouk primitives shared by every bound module.
//
// Convention used throughout the library: exponents are per symbol and base
// 2, so a quantity reported as `a` stands for a bound of the shape 2^{n*a}.
// "Relative" parameters (tau, omega, delta, ...) are fractions of the block
// length n.

namespace smoothing {

/// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double x);

/// Inverse of binary_entropy on the increasing half: the unique x in [0,1/2]
/// with h(x) = y. Bisection, 200 fixed rounds (absolute error < 1e-12).
double inv_binary_entropy(double y);

/// x_perp = 1/2 - sqrt(x(1-x)). Involution on [0,1/2]; perp(1-x) = perp(x).
double perp(double x);

/// Exact log2 of binomial(n, t) through lgamma.
double log2_binom(int n, int t);

/// Entropy form of the same count: h(t/n). log2_binom(n,t) = n*h(t/n) + O(log n).
double log2_binom_rate(int n, int t);

/// log2 of the Euclidean ball volume V_n(w) = pi^{n/2} w^n / Gamma(n/2 + 1).
double ball_volume_log2(int n, double w);

/// Largest n for which every Krawtchouk value fits a signed 64-bit integer
/// (|K_w(t)| <= binom(n,w) and binom(64,32) < 2^63).
inline constexpr int krawtchouk_max_n = 64;

/// K_w(t) over F_2^n, exactly. Three-term recurrence in the degree w,
/// intermediates carried in 128-bit arithmetic; see krawtchouk_max_n.
std::int64_t krawtchouk_exact(int n, int w, int t);

/// Every K_w(t) for one n, built once, immutable afterwards.
class KrawtchoukTable {
public:
    explicit KrawtchoukTable(int n);
    int n() const noexcept { return n_; }
    std::int64_t operator()(int w, int t) const;

private:
    int n_;
    std::vector<std::int64_t> values_;  // (n+1) x (n+1), row index = degree w
};

/// a(tau, omega) = lim (1/n) log2 |K_{omega n}(tau n)|.
///
/// Arguments are (evaluation point, degree): omega in (0,1/2] is the relative
/// degree, tau in [0,1] the relative evaluation point; tau > 1/2 is reflected
/// to 1 - tau (Krawtchouk squares are symmetric under t -> n-t). Below the
/// split point tau = perp(omega) the saddle form in
/// z = (1 - 2 tau - sqrt(D)) / (2(1 - omega)), D = (1-2 tau)^2 - 4 omega (1-omega)
/// applies; above it the value is (1 + h(omega) - h(tau))/2. The branches
/// meet continuously at the split (guard band 1e-12, oscillatory side wins).
double krawtchouk_exponent(double tau, double omega);

}  // namespace smoothing
