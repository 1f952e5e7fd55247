#include "qudit/qcs.hpp"

#include "qudit/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qudit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNullNorm = 1e-12;

void require_dim(int d, const char* who) {
    if (d < 1 || d > 150) {
        throw std::invalid_argument(std::string(who) + ": dimension must lie in [1, 150], got " +
                                    std::to_string(d));
    }
}

// e^{i n (phi0 - pi/2)} with the (-i)^n part exact.
Complex fock_phase(int n, double phi0) {
    static constexpr Complex minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const Complex base = minus_i_powers[n % 4];
    return phi0 == 0.0 ? base : base * std::polar(1.0, n * phi0);
}

}  // namespace

QcsParams::QcsParams(int dim_, Complex amplitude_) : dim(dim_), amplitude(amplitude_) {
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
        throw std::invalid_argument("QcsParams: amplitude must be finite");
    }
    phi0 = std::arg(amplitude);
    if (phi0 <= -kPi) phi0 = kPi;
}

Quasiperiod quasiperiod(int d) {
    if (d < 2) throw std::invalid_argument("quasiperiod: d must be >= 2");
    if (d == 2) return {d, kPi};
    if (d == 3) return {d, 2.0 * kPi / std::sqrt(3.0)};
    return {d, std::sqrt(4.0 * d + 2.0)};
}

CatParity natural_parity(int d) { return d % 2 == 1 ? CatParity::even : CatParity::odd; }

QuditState nonlinear_qcs(const QcsParams& p) {
    require_dim(p.dim, "nonlinear_qcs");
    const int d = p.dim;
    const auto table = special::cached_he_roots(d);
    const double mod = p.modulus();

    std::vector<Complex> sums(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const double x = table->roots[k];
        const Complex weight = table->christoffel[k] * std::polar(1.0, x * mod);
        const auto pn = special::orthonormal_he_all(d - 1, x);
        for (int n = 0; n < d; ++n) sums[n] += weight * pn[n];
    }
    for (int n = 0; n < d; ++n) sums[n] *= fock_phase(n, p.phi0);

    double n2 = 0.0;
    for (const auto& c : sums) n2 += std::norm(c);
    if (!(std::abs(n2 - 1.0) <= 1e-10)) {
        throw NumericalError("nonlinear_qcs: coefficient sum lost normalization (norm^2 - 1 = " +
                             std::to_string(n2 - 1.0) + ")");
    }
    return QuditState(std::move(sums));
}

QuditState linear_qcs(const QcsParams& p) {
    require_dim(p.dim, "linear_qcs");
    const int d = p.dim;
    const double mod = p.modulus();
    if (mod == 0.0) return QuditState::vacuum(d);

    // ln|beta^n / sqrt(n!)|, shifted by its maximum before exponentiating.
    const double log_mod = std::log(mod);
    std::vector<double> log_mag(static_cast<std::size_t>(d));
    double peak = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < d; ++n) {
        log_mag[n] = n * log_mod - 0.5 * special::log_factorial(n);
        peak = std::max(peak, log_mag[n]);
    }
    std::vector<Complex> amps(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) amps[n] = std::polar(std::exp(log_mag[n] - peak), n * p.phi0);
    return QuditState(std::move(amps));
}

QuditState cat_state(StateKind kind, CatParity parity, const QcsParams& p) {
    const auto build = [kind](const QcsParams& q) {
        return kind == StateKind::alpha ? nonlinear_qcs(q) : linear_qcs(q);
    };
    const QuditState plus = build(p);
    const QuditState minus = build(p.negated());
    const double sign = parity == CatParity::even ? 1.0 : -1.0;
    const int keep = parity == CatParity::even ? 0 : 1;

    std::vector<Complex> amps(static_cast<std::size_t>(p.dim));
    double n2 = 0.0;
    for (int n = 0; n < p.dim; ++n) {
        if (n % 2 != keep) continue;
        amps[n] = plus[n] + sign * minus[n];
        n2 += std::norm(amps[n]);
    }
    if (std::sqrt(n2) < kNullNorm) {
        throw NullStateError(std::string("cat_state: ") +
                             (parity == CatParity::even ? "even" : "odd") +
                             " superposition is null for this amplitude");
    }
    return QuditState(std::move(amps));
}

QuditState complementary_state(const QcsParams& p) {
    const QuditState alpha = nonlinear_qcs(p);
    const QuditState beta = linear_qcs(p);
    const Complex ab = overlap(alpha, beta);
    std::vector<Complex> gamma(static_cast<std::size_t>(p.dim));
    double sum_norm = 0.0;
    for (int n = 0; n < p.dim; ++n) {
        gamma[n] = 2.0 * ab * alpha[n] - beta[n];
        sum_norm += std::norm(gamma[n] + beta[n]);
    }
    if (std::sqrt(sum_norm) < kNullNorm) {
        throw NullStateError("complementary_state: |beta> + |gamma> vanishes (<alpha|beta> = 0)");
    }
    return QuditState(std::move(gamma));
}

QuditState closed_form_qcs(int d, const QcsParams& p) {
    if (p.dim != d) throw std::invalid_argument("closed_form_qcs: params dimension differs from d");
    const double a = p.modulus();
    const auto e = [&](int n) { return std::polar(1.0, n * p.phi0); };
    switch (d) {
        case 2:
            return QuditState({std::cos(a), e(1) * std::sin(a)});
        case 3: {
            const double y = std::sqrt(3.0) * a;
            return QuditState({(2.0 + std::cos(y)) / 3.0,
                               e(1) * std::sin(y) / std::sqrt(3.0),
                               e(2) * std::sqrt(2.0) / 3.0 * (1.0 - std::cos(y))});
        }
        case 4: {
            const double roots[2] = {std::sqrt(3.0 + std::sqrt(6.0)),
                                     std::sqrt(3.0 - std::sqrt(6.0))};
            Complex c[4] = {};
            for (int k = 1; k <= 2; ++k) {
                const double x = roots[k - 1];
                const double y = x * a;
                const double sgn = k % 2 == 0 ? 1.0 : -1.0;
                c[0] += std::cos(y) / (x * x);
                c[1] += e(1) * std::sin(y) / x;
                c[2] += sgn * e(2) * std::cos(y) / std::sqrt(3.0);
                c[3] += sgn * e(3) * std::sin(y) / x;
            }
            for (auto& v : c) v *= 0.5;
            return QuditState({c[0], c[1], c[2], c[3]});
        }
        default:
            throw std::invalid_argument("closed_form_qcs: only d = 2, 3, 4 have closed forms");
    }
}

std::vector<Complex> ParitySplit::recombine() const {
    std::vector<Complex> out(even.size() + odd.size());
    for (std::size_t j = 0; j < even.size(); ++j) out[2 * j] = even[j];
    for (std::size_t j = 0; j < odd.size(); ++j) out[2 * j + 1] = odd[j];
    return out;
}

ParitySplit parity_coefficients(int d, double alpha_mod) {
    require_dim(d, "parity_coefficients");
    if (!(alpha_mod >= 0.0)) throw std::invalid_argument("parity_coefficients: |alpha| < 0");
    const auto table = special::cached_he_roots(d);
    const int sigma = d / 2;

    std::vector<double> cos_sum(static_cast<std::size_t>(d));
    std::vector<double> sin_sum(static_cast<std::size_t>(d));
    for (int l = 0; l < sigma; ++l) {
        const int k = d - 1 - l;  // positive roots sit at the top of the ascending table
        const double x = table->roots[k];
        const double w = table->christoffel[k];
        const auto pn = special::orthonormal_he_all(d - 1, x);
        for (int n = 0; n < d; ++n) {
            cos_sum[n] += 2.0 * w * pn[n] * std::cos(x * alpha_mod);
            sin_sum[n] += 2.0 * w * pn[n] * std::sin(x * alpha_mod);
        }
    }
    if (d % 2 == 1) {
        const double w0 = table->christoffel[sigma];
        const auto pn = special::orthonormal_he_all(d - 1, 0.0);
        for (int n = 0; n < d; n += 2) cos_sum[n] += w0 * pn[n];
    }

    ParitySplit split;
    for (int n = 0; n < d; ++n) {
        if (n % 2 == 0) {
            split.even.push_back(fock_phase(n, 0.0) * cos_sum[n]);
        } else {
            split.odd.push_back(fock_phase(n, 0.0) * Complex(0.0, sin_sum[n]));
        }
    }
    return split;
}

FidelityRow fidelity_row(int d) {
    const double half = 0.5 * quasiperiod(d).value;
    const QcsParams p(d, half);
    const CatParity parity = natural_parity(d);

    const QuditState alpha = nonlinear_qcs(p);
    const QuditState beta = linear_qcs(p);
    const QuditState beta_neg = linear_qcs(p.negated());
    const QuditState alpha_cat = cat_state(StateKind::alpha, parity, p);
    const QuditState beta_cat = cat_state(StateKind::beta, parity, p);

    return FidelityRow{d,
                       fidelity(alpha, beta),
                       fidelity(alpha, alpha_cat),
                       fidelity(alpha, beta_cat),
                       fidelity(alpha_cat, beta_cat),
                       mixed_fidelity(alpha, beta, beta_neg)};
}

}  // namespace qudit
