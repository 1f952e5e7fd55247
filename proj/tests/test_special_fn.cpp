#include "qudit/special_fn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

using namespace qudit::special;

namespace {

double rel_err(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

}  // namespace

TEST(LogFactorial, TableInvariants) {
    const LogFactorialCache cache(400);
    EXPECT_EQ(cache(0), 0.0);
    EXPECT_EQ(cache.max_n(), 400);
    for (int n = 1; n <= 400; ++n) {
        EXPECT_LE(rel_err(cache(n) - cache(n - 1), std::log(static_cast<double>(n))), 1e-13) << n;
    }
    EXPECT_NEAR(log_factorial(20), std::log(2432902008176640000.0), 1e-12);
    EXPECT_NEAR(log_factorial(1000), std::lgamma(1001.0), 1e-9);
}

TEST(HeEval, Examples) {
    EXPECT_EQ(he_eval(0, 1.7), 1.0);
    EXPECT_EQ(he_eval(2, 0.0), -1.0);
    EXPECT_NEAR(he_eval(4, std::sqrt(3 + std::sqrt(6.0))), 0.0, 1e-10);
}

TEST(HeEval, RecurrenceConsistency) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-10, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = ux(rng);
        for (int n = 1; n <= 40; ++n) {
            const double lhs = he_eval(n + 1, x);
            const double rhs = x * he_eval(n, x) - n * he_eval(n - 1, x);
            EXPECT_LE(rel_err(lhs, rhs), 1e-9) << "n=" << n << " x=" << x;
        }
    }
}

TEST(HeEval, ReflectionExact) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-8, 8);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = ux(rng);
        for (int n = 0; n <= 60; ++n) {
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            EXPECT_EQ(he_eval(n, -x), sign * he_eval(n, x));
            EXPECT_EQ(orthonormal_he_eval(n, -x), sign * orthonormal_he_eval(n, x));
        }
    }
}

TEST(HeEval, PhysicistsLink) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const double x = ux(rng);
        for (int n = 0; n <= 20; ++n) {
            const double ref = static_cast<double>(std::pow(2.0L, -n / 2.0L) *
                                                   oracle::hermite_phys(n, x / std::numbers::sqrt2_v<long double>));
            EXPECT_LE(rel_err(he_eval(n, x), ref), 1e-9) << n << " " << x;
        }
    }
}

TEST(OrthonormalHe, Examples) {
    EXPECT_EQ(orthonormal_he_eval(0, 3.3), 1.0);
    EXPECT_NEAR(orthonormal_he_eval(3, 1.0), he_eval(3, 1.0) / std::sqrt(6.0), 1e-15);
    const double v = orthonormal_he_eval(100, 0.5);
    ASSERT_TRUE(std::isfinite(v));
    EXPECT_LE(rel_err(v, oracle::orthonormal_he_logspace(100, 0.5)), 1e-9);
}

TEST(OrthonormalHe, MatchesScaledHe) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ux(-7, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const double x = ux(rng);
        const auto all = orthonormal_he_all(20, x);
        for (int n = 0; n <= 20; ++n) {
            const double scaled = orthonormal_he_eval(n, x) * std::exp(0.5 * log_factorial(n));
            EXPECT_LE(rel_err(scaled, he_eval(n, x)), 1e-9);
            EXPECT_EQ(all[n], orthonormal_he_eval(n, x));
        }
    }
}

TEST(HeZero, Examples) {
    EXPECT_EQ(he_zero(1), 0.0);
    EXPECT_EQ(he_zero(2), -1.0);
    EXPECT_EQ(he_zero(6), -15.0);
    EXPECT_EQ(he_zero(6), he_eval(6, 0.0));
    for (int n = 0; n <= 30; ++n) EXPECT_LE(rel_err(he_zero(n), he_eval(n, 0.0)), 1e-13) << n;
}

TEST(HeAsymptotic, Examples) {
    EXPECT_DOUBLE_EQ(he_asymptotic(2, 0.0), -1.0);
    EXPECT_LT(rel_err(he_asymptotic(10, 0.1), he_eval(10, 0.1)), 0.01);
    // Odd degrees carry an intrinsic slope factor sqrt(1 + 1/(2n)).
    EXPECT_LT(rel_err(he_asymptotic(11, 0.1), he_eval(11, 0.1)), 0.03);
}

TEST(HeAsymptotic, SignChangesNearPredictedRoots) {
    // Roots sit near l pi / sqrt(4d + 2) with l = -(d-1), -(d-3), ..., d-1.
    for (int d : {20, 21}) {
        const double step = std::numbers::pi / std::sqrt(4.0 * d + 2.0);
        for (int l = 1 - d % 2; l <= 7; l += 2) {
            if (l == 0) continue;
            const double x = l * step;
            EXPECT_LT(he_asymptotic(d, x - 0.3 * step) * he_asymptotic(d, x + 0.3 * step), 0.0) << d << " " << l;
            EXPECT_LT(he_eval(d, x - 0.3 * step) * he_eval(d, x + 0.3 * step), 0.0) << d << " " << l;
        }
    }
}

TEST(HeRoots, SmallDegrees) {
    const auto r1 = he_roots(1);
    ASSERT_EQ(r1.roots.size(), 1u);
    EXPECT_EQ(r1.roots[0], 0.0);
    EXPECT_DOUBLE_EQ(r1.christoffel[0], 1.0);

    const auto r2 = he_roots(2);
    EXPECT_NEAR(r2.roots[0], -1.0, 1e-14);
    EXPECT_NEAR(r2.roots[1], 1.0, 1e-14);

    const auto r4 = he_roots(4);
    const double big = std::sqrt(3 + std::sqrt(6.0));
    const double small = std::sqrt(3 - std::sqrt(6.0));
    EXPECT_NEAR(r4.roots[0], -big, 1e-10);
    EXPECT_NEAR(r4.roots[1], -small, 1e-10);
    EXPECT_NEAR(r4.roots[2], small, 1e-10);
    EXPECT_NEAR(r4.roots[3], big, 1e-10);
}

TEST(HeRoots, CentralRootApproximation) {
    const auto t = he_roots(21);
    const double step = std::numbers::pi / std::sqrt(86.0);
    EXPECT_EQ(t.roots[10], 0.0);
    for (int k = 7; k <= 13; ++k) {
        if (k == 10) continue;
        const int l = 2 * k - 20;
        EXPECT_LT(rel_err(t.roots[k], l * step), 0.02) << k;
    }
}

TEST(HeRoots, TableInvariants) {
    for (int d = 1; d <= 150; ++d) {
        const auto t = he_roots(d);
        ASSERT_EQ(t.degree, d);
        ASSERT_EQ(static_cast<int>(t.roots.size()), d);
        double wsum = 0.0;
        for (int k = 0; k < d; ++k) {
            if (k > 0) EXPECT_LT(t.roots[k - 1], t.roots[k]);
            EXPECT_NEAR(t.roots[k], -t.roots[d - 1 - k], 1e-12);
            EXPECT_GT(t.christoffel[k], 0.0);
            wsum += t.christoffel[k];
            // Residual relative to the local slope of p_d.
            const double slope = std::sqrt(static_cast<double>(d)) * orthonormal_he_eval(d - 1, t.roots[k]);
            EXPECT_LE(std::fabs(orthonormal_he_eval(d, t.roots[k]) / slope), 1e-10) << d << " " << k;
        }
        if (d % 2 == 1) EXPECT_EQ(t.roots[d / 2], 0.0);
        EXPECT_NEAR(wsum, 1.0, 1e-12) << d;
    }
}

TEST(HeRoots, MatchBisectionOracle) {
    for (int d = 2; d <= 12; ++d) {
        const auto t = he_roots(d);
        const auto ref = oracle::he_roots_bisection(d);
        ASSERT_EQ(ref.size(), t.roots.size()) << d;
        for (int k = 0; k < d; ++k) EXPECT_NEAR(t.roots[k], static_cast<double>(ref[k]), 1e-12);
    }
}

TEST(HeRoots, DiscreteOrthogonality) {
    for (int d = 1; d <= 40; ++d) {
        const auto t = he_roots(d);
        std::vector<std::vector<double>> p(d);
        for (int k = 0; k < d; ++k) p[k] = orthonormal_he_all(d - 1, t.roots[k]);
        for (int n = 0; n < d; ++n) {
            for (int m = 0; m <= n; ++m) {
                double acc = 0.0;
                for (int k = 0; k < d; ++k) acc += t.christoffel[k] * p[k][n] * p[k][m];
                EXPECT_NEAR(acc, n == m ? 1.0 : 0.0, 1e-9) << d << " " << n << " " << m;
            }
        }
    }
}

TEST(HeRoots, Errors) {
    EXPECT_THROW(he_roots(0), std::invalid_argument);
    EXPECT_THROW(he_roots(151), std::invalid_argument);
}

TEST(HeRoots, CacheIsSharedAndThreadSafe) {
    std::vector<std::jthread> pool;
    std::vector<std::shared_ptr<const HermiteRootTable>> got(8);
    for (int i = 0; i < 8; ++i) pool.emplace_back([&got, i] { got[i] = cached_he_roots(37); });
    pool.clear();
    for (const auto& g : got) EXPECT_EQ(g.get(), got[0].get());
    EXPECT_EQ(got[0]->roots, he_roots(37).roots);
}

TEST(Laguerre, Examples) {
    EXPECT_EQ(laguerre_eval(0, 7, 3.2), 1.0);
    EXPECT_DOUBLE_EQ(laguerre_eval(1, 0, 4.0), -3.0);
    EXPECT_NEAR(laguerre_eval(3, 2, 1.5), static_cast<double>(oracle::laguerre_series(3, 2, 1.5L)), 1e-13);
}

TEST(Laguerre, MatchesSeries) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ux(0, 20);
    for (int trial = 0; trial < 30; ++trial) {
        const double x = ux(rng);
        for (int k = 0; k <= 10; ++k) {
            for (int m = 0; m <= 10; ++m) {
                const double ref = static_cast<double>(oracle::laguerre_series(k, m, x));
                const double got = laguerre_eval(k, m, x);
                // Near a zero the relative measure is meaningless; fall back to the term scale.
                EXPECT_LE(std::fabs(got - ref), 1e-8 * std::max(std::fabs(ref), 1.0)) << k << " " << m << " " << x;
            }
        }
    }
}
