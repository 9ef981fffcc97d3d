#pragma once

#include <gmpxx.h>

#include <cmath>
#include <limits>

// Exact big-integer Krawtchouk evaluation for block lengths past the int64
// cap, via the same degree recurrence the library uses:
//   (w+1) K_{w+1}(t) = (n-2t) K_w(t) - (n-w+1) K_{w-1}(t).
inline mpz_class krawtchouk_big(int n, int w, int t) {
    mpz_class prev = 1;
    if (w == 0) return prev;
    mpz_class cur = n - 2 * t;
    for (int j = 1; j < w; ++j) {
        mpz_class next = mpz_class(n - 2 * t) * cur - mpz_class(n - j + 1) * prev;
        next /= (j + 1);  // exact by integrality of the polynomial family
        prev = cur;
        cur = next;
    }
    return cur;
}

// log2 |z| without overflowing doubles; -inf for z = 0.
inline double log2_abs_big(const mpz_class& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log2(std::fabs(mant)) + static_cast<double>(exp2);
}
