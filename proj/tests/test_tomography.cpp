#include "qudit/tomography.hpp"
#include "qudit/phase_space.hpp"
#include "qudit/qcs.hpp"
#include "qudit/special_fn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace qudit;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double half_period(int d) { return quasiperiod(d).value / 2; }

QuditState random_state(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(static_cast<std::size_t>(d));
    for (auto& c : v) c = {g(rng), g(rng)};
    return QuditState(std::move(v));
}

}  // namespace

TEST(HermiteFunctions, Orthonormal) {
    // Simpson over a wide interval; the functions decay like e^{-q^2/2}.
    for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m <= n; ++m) {
            const double v = oracle::simpson(
                [n, m](double q) {
                    const auto psi = hermite_functions(8, q);
                    return psi[n] * psi[m];
                },
                -12.0, 12.0, 2400);
            EXPECT_NEAR(v, n == m ? 1.0 : 0.0, 1e-10) << n << " " << m;
        }
    }
}

TEST(ClosedForm, FockExamples) {
    for (double q : {-2.0, -0.3, 0.0, 1.1}) {
        for (double t : {0.0, 1.0, 4.0}) {
            EXPECT_NEAR(tomogram_closed_form(QuditState::vacuum(3), q, t), std::exp(-q * q) / kSqrtPi, 1e-15);
            EXPECT_NEAR(tomogram_closed_form(QuditState::fock(3, 1), q, t), 2 * q * q * std::exp(-q * q) / kSqrtPi,
                        1e-15);
        }
    }
}

TEST(ClosedForm, MatchesDoubleSum) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uq(-3, 3), ut(0, 2 * std::numbers::pi);
    std::vector<QuditState> states = {nonlinear_qcs({3, half_period(3)}), nonlinear_qcs({2, 0.7})};
    for (int d = 2; d <= 8; ++d) states.push_back(random_state(d, rng));
    for (const auto& s : states) {
        for (int i = 0; i < 25; ++i) {
            const double q = uq(rng), t = ut(rng);
            EXPECT_NEAR(tomogram_closed_form(s, q, t), oracle::tomogram_double_sum(s, q, t), 1e-10) << s.dim();
        }
    }
}

TEST(ClosedForm, SignConventionAtQubit) {
    // (|0> + i|1>)/sqrt(2): the cross term is cos(-theta + pi/2) = sin(theta).
    const QuditState s({1.0, Complex(0.0, 1.0)});
    for (double q : {-0.8, 0.6}) {
        for (double t : {0.0, 0.5, 2.0, 4.0}) {
            const double expected =
                std::exp(-q * q) / kSqrtPi * 0.5 * (1 + 2 * q * q + 2 * std::sqrt(2.0) * q * std::sin(t));
            EXPECT_NEAR(tomogram_closed_form(s, q, t), expected, 1e-15);
        }
    }
}

TEST(FromWigner, VacuumMarginal) {
    for (double q : {-1.5, 0.0, 0.4, 2.2}) {
        for (double t : {0.0, 0.8, 3.0}) {
            EXPECT_NEAR(tomogram_from_wigner(QuditState::vacuum(4), q, t), std::exp(-q * q) / kSqrtPi, 1e-5);
        }
    }
}

TEST(FromWigner, AgreesWithClosedForm) {
    for (int d = 2; d <= 8; ++d) {
        const double t = half_period(d);
        const std::vector<QuditState> states = {
            nonlinear_qcs({d, t}), linear_qcs({d, t}), cat_state(StateKind::alpha, natural_parity(d), {d, t}),
            cat_state(StateKind::beta, CatParity::even, {d, t}), cat_state(StateKind::beta, CatParity::odd, {d, t})};
        for (const auto& s : states) {
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const double q = -2.4 + 1.2 * i;
                    const double th = 2 * std::numbers::pi * j / 5.0 + 0.1;
                    EXPECT_NEAR(tomogram_from_wigner(s, q, th), tomogram_closed_form(s, q, th), 1e-5) << d;
                }
            }
        }
    }
}

TEST(FromWigner, NonConvergenceRaises) {
    MarginalSpec spec;
    spec.initial_intervals = 4;
    spec.max_intervals = 8;
    spec.tolerance = 1e-14;
    EXPECT_THROW(tomogram_from_wigner(nonlinear_qcs({6, 2.0}), 0.3, 0.2, spec), NumericalError);
}

TEST(TomogramGrid, Layout) {
    const auto s = nonlinear_qcs({3, 1.0});
    const auto g = tomogram_grid(s, 40, 33, "meta");
    ASSERT_EQ(g.nq(), 40);
    ASSERT_EQ(g.ntheta(), 33);
    const double h = std::numbers::sqrt2 * (outer_radius(3) + 2);
    EXPECT_DOUBLE_EQ(g.q_grid.front(), -h);
    EXPECT_DOUBLE_EQ(g.q_grid.back(), h);
    EXPECT_DOUBLE_EQ(g.theta_grid.front(), 0.0);
    EXPECT_DOUBLE_EQ(g.theta_grid.back(), 2 * std::numbers::pi);
    EXPECT_EQ(g.at(7, 5), tomogram_closed_form(s, g.q_grid[7], g.theta_grid[5]));
    EXPECT_THROW(tomogram_grid(s, 31, 40), std::invalid_argument);
    EXPECT_THROW(tomogram_grid(s, 40, 31), std::invalid_argument);
}

TEST(TomogramGrid, Invariants) {
    std::mt19937_64 rng(42);
    for (int d : {1, 2, 5, 9, 16, 32}) {
        for (const auto& s : {random_state(d, rng), nonlinear_qcs({d, d > 1 ? half_period(d) : 0.0})}) {
            const auto g = tomogram_grid(s);
            for (int it = 0; it < g.ntheta(); ++it) EXPECT_NEAR(g.column_integral(it), 1.0, 1e-4) << d;
            for (double v : g.values) EXPECT_GE(v, 0.0);
            for (int iq = 0; iq < g.nq(); ++iq) EXPECT_NEAR(g.at(iq, 0), g.at(iq, g.ntheta() - 1), 1e-10);
        }
    }
}

TEST(TomogramGrid, FockColumnsAreThetaIndependent) {
    for (int n = 0; n <= 10; ++n) {
        const auto g = tomogram_grid(QuditState::fock(11, n), 64, 37);
        for (int iq = 0; iq < g.nq(); ++iq) {
            for (int it = 1; it < g.ntheta(); ++it) EXPECT_NEAR(g.at(iq, it), g.at(iq, 0), 1e-12);
        }
    }
}

TEST(TomogramGrid, ThetaShiftCovariance) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> uq(-3, 3), ut(0, 6.3);
    for (int d : {2, 4, 7}) {
        const auto s = random_state(d, rng);
        const double phi = 0.83;
        std::vector<Complex> rotated(s.amps().begin(), s.amps().end());
        for (int n = 0; n < d; ++n) rotated[n] *= std::polar(1.0, n * phi);
        const auto r = QuditState::from_normalized(rotated);
        for (int i = 0; i < 20; ++i) {
            const double q = uq(rng), t = ut(rng);
            EXPECT_NEAR(tomogram_closed_form(r, q, t), tomogram_closed_form(s, q, t - phi), 1e-10);
        }
    }
}

TEST(TomogramGrid, ParitySupportSymmetry) {
    std::mt19937_64 rng(44);
    std::normal_distribution<double> g;
    for (int parity : {0, 1}) {
        std::vector<Complex> v(9);
        for (int n = parity; n < 9; n += 2) v[n] = {g(rng), g(rng)};
        const QuditState s(v);
        const auto t = tomogram_grid(s, 41, 32);
        for (int iq = 0; iq < 41; ++iq) {
            for (int it = 0; it < 32; ++it) EXPECT_NEAR(t.at(iq, it), t.at(40 - iq, it), 1e-10);
        }
    }
}

TEST(TomogramGrid, ExactCatSymmetries) {
    const double pi = std::numbers::pi;
    for (int d : {2, 3}) {
        const auto s = nonlinear_qcs({d, half_period(d)});
        const auto g = tomogram_grid(s, 41, 37);
        for (int iq = 0; iq < 41; ++iq) {
            for (int it = 0; it < 37; ++it) EXPECT_NEAR(g.at(iq, it), g.at(40 - iq, it), 1e-9);
        }
        for (double q : {-1.7, 0.2, 0.9}) {
            for (double th : {0.1, 0.7, 2.2}) {
                EXPECT_NEAR(tomogram_closed_form(s, q, pi + th), tomogram_closed_form(s, q, pi - th), 1e-9);
            }
        }
    }
}

TEST(TomogramGrid, LinearQcsSymmetry) {
    const double pi = std::numbers::pi;
    for (int d : {3, 4, 7, 10}) {
        const auto s = linear_qcs({d, half_period(d)});
        double worst_q = 0.0;
        for (double q : {-1.7, 0.2, 0.9, 2.5}) {
            for (double th : {0.1, 0.7, 2.2}) {
                EXPECT_NEAR(tomogram_closed_form(s, q, pi + th), tomogram_closed_form(s, q, pi - th), 1e-9);
                worst_q = std::max(worst_q, std::fabs(tomogram_closed_form(s, q, th) - tomogram_closed_form(s, -q, th)));
            }
        }
        // Only the theta reflection holds.
        EXPECT_GT(worst_q, 1e-3) << d;
    }
}

TEST(TomogramGrid, ApproximateReflectionAtD4) {
    const auto g = tomogram_grid(nonlinear_qcs({4, half_period(4)}), 201, 181);
    double worst = 0.0, peak = 0.0;
    for (int iq = 0; iq < g.nq(); ++iq) {
        for (int it = 0; it < g.ntheta(); ++it) {
            worst = std::max(worst, std::fabs(g.at(iq, it) - g.at(g.nq() - 1 - iq, it)));
            peak = std::max(peak, g.at(iq, it));
        }
    }
    EXPECT_LE(worst, 0.05 * peak);
}

TEST(TomogramExport, CsvAndJson) {
    const auto g = tomogram_grid(QuditState::vacuum(2), 32, 32, "vacuum");
    const auto csv = to_csv(g);
    EXPECT_EQ(csv.rfind("q,theta,w\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 32 * 32);
    // theta outer: the first 32 rows share theta = 0.
    std::size_t pos = csv.find('\n') + 1;
    for (int row = 0; row < 32; ++row) {
        const auto end = csv.find('\n', pos);
        const auto line = csv.substr(pos, end - pos);
        const auto c1 = line.find(',');
        EXPECT_EQ(line.substr(c1 + 1, line.find(',', c1 + 1) - c1 - 1), "0");
        pos = end + 1;
    }
    EXPECT_EQ(to_csv(g), csv);
    const auto json = to_json(g);
    EXPECT_NE(json.find("\"theta\""), std::string::npos);
    EXPECT_NE(json.find("\"vacuum\""), std::string::npos);
}
