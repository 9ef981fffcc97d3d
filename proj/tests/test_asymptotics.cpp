#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gmp_kraw.hpp"
#include "smoothing/asymptotics.hpp"

using namespace smoothing;

TEST_CASE("binary entropy endpoints, symmetry, and a fixed interior value") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-14));
    for (double x : {0.03, 0.2, 0.41})
        CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-15));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("inverse entropy is the left branch and round-trips") {
    CHECK(inv_binary_entropy(0.0) == 0.0);
    CHECK(inv_binary_entropy(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(inv_binary_entropy(0.5) == doctest::Approx(0.11002786443835955).epsilon(1e-14));
    for (double y : {0.1, 0.3, 0.7, 0.95}) {
        double x = inv_binary_entropy(y);
        CHECK(x <= 0.5);
        CHECK(binary_entropy(x) == doctest::Approx(y).epsilon(1e-12));
    }
    CHECK_THROWS_AS(inv_binary_entropy(-0.01), std::domain_error);
    CHECK_THROWS_AS(inv_binary_entropy(1.01), std::domain_error);
}

TEST_CASE("perp is an involution with the documented endpoints") {
    CHECK(perp(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(perp(0.5) == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    CHECK(perp(0.11) == doctest::Approx(0.18711024305675966).epsilon(1e-14));
    for (double x : {0.02, 0.11, 0.27, 0.49})
        CHECK(perp(perp(x)) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("log2 binomial matches exact values and the entropy rate") {
    CHECK(log2_binom(10, 5) == doctest::Approx(7.977279923499917).epsilon(1e-14));
    CHECK(std::exp2(log2_binom(14, 7)) == doctest::Approx(3432.0).epsilon(1e-10));
    CHECK(log2_binom(6, 0) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    // the rate accessor is exactly h(t/n)
    CHECK(log2_binom_rate(200, 60) == doctest::Approx(binary_entropy(0.3)).epsilon(1e-15));
    // and n*h(t/n) dominates log2 C(n,t)
    for (int t : {1, 7, 13})
        CHECK(log2_binom(14, t) <= 14 * binary_entropy(t / 14.0) + 1e-12);
}

TEST_CASE("euclidean ball volume log2") {
    CHECK(ball_volume_log2(2, 1.0) == doctest::Approx(std::log2(M_PI)).epsilon(1e-14));
    CHECK(ball_volume_log2(3, 1.0) ==
          doctest::Approx(std::log2(4.0 * M_PI / 3.0)).epsilon(1e-14));
    // scaling: V_n(cw) = c^n V_n(w)
    CHECK(ball_volume_log2(10, 3.0) ==
          doctest::Approx(ball_volume_log2(10, 1.5) + 10).epsilon(1e-12));
}

TEST_CASE("krawtchouk exact values and degree/evaluation conventions") {
    // K_0 = 1, K_1(t) = n - 2t
    for (int t = 0; t <= 9; ++t) {
        CHECK(krawtchouk_exact(9, 0, t) == 1);
        CHECK(krawtchouk_exact(9, 1, t) == 9 - 2 * t);
    }
    CHECK(krawtchouk_exact(4, 2, 1) == 0);
    // K_w(0) = C(n,w)
    CHECK(krawtchouk_exact(14, 7, 0) == 3432);
    CHECK_THROWS_AS(krawtchouk_exact(krawtchouk_max_n + 1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(krawtchouk_exact(8, 9, 0), std::domain_error);
}

TEST_CASE("krawtchouk reflection and orthogonality are exact up to n = 30") {
    for (int n : {5, 12, 21, 30}) {
        // int64 Pascal row
        std::vector<long long> binom(n + 1, 0);
        binom[0] = 1;
        for (int i = 1; i <= n; ++i)
            for (int t = i; t >= 1; --t) binom[t] += binom[t - 1];

        for (int w = 0; w <= n; ++w)
            for (int t = 0; t <= n; ++t) {
                long long sign = (w % 2 == 0) ? 1 : -1;
                CHECK(krawtchouk_exact(n, w, n - t) == sign * krawtchouk_exact(n, w, t));
            }

        for (int w = 0; w <= n; ++w)
            for (int v = w; v <= n; ++v) {
                __int128 sum = 0;
                for (int t = 0; t <= n; ++t)
                    sum += static_cast<__int128>(binom[t]) * krawtchouk_exact(n, w, t) *
                           krawtchouk_exact(n, v, t);
                __int128 expect =
                    w == v ? (static_cast<__int128>(1) << n) * binom[w] : 0;
                CHECK(sum == expect);
            }
    }
}

TEST_CASE("krawtchouk table matches the scalar recurrence") {
    KrawtchoukTable table(12);
    CHECK(table.n() == 12);
    for (int w = 0; w <= 12; ++w)
        for (int t = 0; t <= 12; ++t) CHECK(table(w, t) == krawtchouk_exact(12, w, t));
}

TEST_CASE("krawtchouk exponent: endpoints, symmetry, monotonicity") {
    for (double om : {0.05, 0.2, 0.5}) {
        CHECK(krawtchouk_exponent(0.0, om) == doctest::Approx(binary_entropy(om)).epsilon(1e-12));
        // tau = 1/2 sits in the oscillatory region: a = h(om)/2
        CHECK(krawtchouk_exponent(0.5, om) ==
              doctest::Approx(binary_entropy(om) / 2).epsilon(1e-12));
        // reflection in the evaluation point
        for (double tau : {0.6, 0.85, 1.0})
            CHECK(krawtchouk_exponent(tau, om) ==
                  doctest::Approx(krawtchouk_exponent(1.0 - tau, om)).epsilon(1e-12));
    }
    CHECK(krawtchouk_exponent(0.3, 0.1) == doctest::Approx(0.2938523471792943).epsilon(1e-13));
    // decreasing in tau on [0, 1/2]
    for (double om : {0.1, 0.3}) {
        double last = krawtchouk_exponent(0.0, om);
        for (double tau = 0.025; tau <= 0.5 + 1e-12; tau += 0.025) {
            double cur = krawtchouk_exponent(tau, om);
            CHECK(cur <= last + 1e-12);
            last = cur;
        }
    }
    CHECK_THROWS_AS(krawtchouk_exponent(0.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(krawtchouk_exponent(0.3, 0.6), std::domain_error);
    CHECK_THROWS_AS(krawtchouk_exponent(-0.1, 0.2), std::domain_error);
    CHECK_THROWS_AS(krawtchouk_exponent(1.1, 0.2), std::domain_error);
}

TEST_CASE("krawtchouk exponent is continuous across the root-region boundary") {
    for (double om : {0.05, 0.11, 0.3, 0.45}) {
        double split = perp(om);
        double below = krawtchouk_exponent(split - 1e-9, om);
        double at = krawtchouk_exponent(split, om);
        double above = krawtchouk_exponent(split + 1e-9, om);
        CHECK(std::fabs(below - at) < 1e-6);
        CHECK(std::fabs(above - at) < 1e-6);
    }
}

TEST_CASE("exponent tracks exact big-integer evaluation at n = 200") {
    const int n = 200;
    // frozen from the exact evaluation: log2 |K_{20}(60)| / 200
    double exact = log2_abs_big(krawtchouk_big(n, 20, 60)) / n;
    CHECK(exact == doctest::Approx(0.27801905561212054).epsilon(1e-12));
    CHECK(std::fabs(krawtchouk_exponent(0.3, 0.1) - exact) < 0.02);
}

TEST_CASE("big-integer helper agrees with the int64 recurrence where both apply") {
    for (int n : {10, 24, 64})
        for (int w : {0, 1, n / 3, n / 2})
            for (int t : {0, 1, n / 4, n / 2, n}) {
                mpz_class big = krawtchouk_big(n, w, t);
                CHECK(big.fits_slong_p());
                CHECK(big.get_si() == krawtchouk_exact(n, w, t));
            }
}
