#include "smoothing/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace smoothing {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

const double ln2 = std::log(2.0);

}  // namespace

double binary_entropy(double x) {
    require(x >= 0.0 && x <= 1.0, "binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double inv_binary_entropy(double y) {
    require(y >= 0.0 && y <= 1.0, "inv_binary_entropy: y outside [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    // h is strictly increasing on [0,1/2]; 200 halvings push the bracket
    // width far below 1e-12
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double perp(double x) {
    require(x >= 0.0 && x <= 1.0, "perp: x outside [0,1]");
    return 0.5 - std::sqrt(x * (1.0 - x));
}

double log2_binom(int n, int t) {
    require(n >= 1, "log2_binom: n < 1");
    require(t >= 0 && t <= n, "log2_binom: t outside [0,n]");
    return (std::lgamma(n + 1.0) - std::lgamma(t + 1.0) - std::lgamma(n - t + 1.0)) / ln2;
}

double log2_binom_rate(int n, int t) {
    require(n >= 1, "log2_binom_rate: n < 1");
    require(t >= 0 && t <= n, "log2_binom_rate: t outside [0,n]");
    return binary_entropy(static_cast<double>(t) / n);
}

double ball_volume_log2(int n, double w) {
    require(n >= 1, "ball_volume_log2: n < 1");
    require(w > 0.0, "ball_volume_log2: w <= 0");
    return 0.5 * n * std::log2(M_PI) + n * std::log2(w) - std::lgamma(0.5 * n + 1.0) / ln2;
}

namespace {

// Recurrence in the degree: (w+1) K_{w+1}(t) = (n-2t) K_w(t) - (n-w+1) K_{w-1}(t).
// Every K fits int64 for n <= 64, but the products on the right do not, hence
// the 128-bit intermediates. The division is exact.
std::int64_t kraw_recurrence(int n, int w, int t) {
    std::int64_t prev = 1;            // K_0
    if (w == 0) return prev;
    std::int64_t cur = n - 2 * t;     // K_1
    for (int j = 1; j < w; ++j) {
        __int128 next = static_cast<__int128>(n - 2 * t) * cur
                      - static_cast<__int128>(n - j + 1) * prev;
        next /= (j + 1);
        prev = cur;
        cur = static_cast<std::int64_t>(next);
    }
    return cur;
}

}  // namespace

std::int64_t krawtchouk_exact(int n, int w, int t) {
    require(n >= 1 && n <= krawtchouk_max_n, "krawtchouk_exact: n outside [1,64]");
    require(w >= 0 && w <= n, "krawtchouk_exact: w outside [0,n]");
    require(t >= 0 && t <= n, "krawtchouk_exact: t outside [0,n]");
    return kraw_recurrence(n, w, t);
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
    require(n >= 1 && n <= krawtchouk_max_n, "KrawtchoukTable: n outside [1,64]");
    values_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int t = 0; t <= n; ++t) {
        std::int64_t prev = 1;
        std::int64_t cur = n - 2 * t;
        values_[static_cast<std::size_t>(0) * (n + 1) + t] = prev;
        if (n >= 1) values_[static_cast<std::size_t>(1) * (n + 1) + t] = cur;
        for (int j = 1; j < n; ++j) {
            __int128 next = static_cast<__int128>(n - 2 * t) * cur
                          - static_cast<__int128>(n - j + 1) * prev;
            next /= (j + 1);
            prev = cur;
            cur = static_cast<std::int64_t>(next);
            values_[static_cast<std::size_t>(j + 1) * (n + 1) + t] = cur;
        }
    }
}

std::int64_t KrawtchoukTable::operator()(int w, int t) const {
    require(w >= 0 && w <= n_, "KrawtchoukTable: w outside [0,n]");
    require(t >= 0 && t <= n_, "KrawtchoukTable: t outside [0,n]");
    return values_[static_cast<std::size_t>(w) * (n_ + 1) + t];
}

double krawtchouk_exponent(double tau, double omega) {
    require(omega > 0.0 && omega <= 0.5, "krawtchouk_exponent: omega outside (0,1/2]");
    require(tau >= 0.0 && tau <= 1.0, "krawtchouk_exponent: tau outside [0,1]");
    if (tau > 0.5) tau = 1.0 - tau;  // K_w(n-t)^2 = K_w(t)^2
    if (tau <= 0.0) return binary_entropy(omega);
    double split = perp(omega);
    if (tau < split - 1e-12) {
        // oscillation-free regime: saddle point z in (0,1); the discriminant
        // vanishes exactly at the split, clamp rounding noise there
        double disc = (1.0 - 2.0 * tau) * (1.0 - 2.0 * tau) - 4.0 * omega * (1.0 - omega);
        disc = std::max(disc, 0.0);
        double z = (1.0 - 2.0 * tau - std::sqrt(disc)) / (2.0 * (1.0 - omega));
        return tau * std::log2(1.0 - z) + (1.0 - tau) * std::log2(1.0 + z)
             - omega * std::log2(z);
    }
    // oscillatory regime (and the split point itself, continuous limit)
    return 0.5 * (1.0 + binary_entropy(omega) - binary_entropy(tau));
}

}  // namespace smoothing
