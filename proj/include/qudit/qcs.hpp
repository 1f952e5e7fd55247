#ifndef QUDIT_QCS_HPP
#define QUDIT_QCS_HPP

#include "qudit/fock.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qudit {

/// A requested superposition has (numerically) zero norm.
class NullStateError : public std::domain_error {
public:
    explicit NullStateError(const std::string& what) : std::domain_error(what) {}
};

/// Dimension plus complex field amplitude; phi0 = arg(amplitude) in (-pi, pi].
struct QcsParams {
    QcsParams(int dim, Complex amplitude);

    int dim;
    Complex amplitude;
    double phi0;

    double modulus() const { return std::abs(amplitude); }
    QcsParams negated() const { return {dim, -amplitude}; }
};

/// Amplitude spacing T_d after which |alpha>_d (approximately) repeats.
struct Quasiperiod {
    int dim;
    double value;
};

/// pi for d = 2, 2 pi / sqrt(3) for d = 3, sqrt(4d + 2) otherwise.
Quasiperiod quasiperiod(int d);

/// D_d(alpha)|0>, the truncated displacement of the vacuum, evaluated from
/// the Hermite-root expansion
///     c_n = e^{i n (phi0 - pi/2)} sum_k w_k p_n(x_k) e^{i x_k |alpha|}
/// with x_k the roots of He_d and w_k their Christoffel weights.
QuditState nonlinear_qcs(const QcsParams& p);

/// Truncated Poissonian state, amplitudes proportional to beta^n / sqrt(n!).
QuditState linear_qcs(const QcsParams& p);

enum class StateKind { alpha, beta };
enum class CatParity { even, odd };

/// N(|psi(amp)> +- |psi(-amp)>) for psi = nonlinear_qcs or linear_qcs.
/// Wrong-parity entries are exactly zero. Throws NullStateError when the
/// superposition norm falls below 1e-12.
QuditState cat_state(StateKind kind, CatParity parity, const QcsParams& p);

/// |gamma>_d = 2 <alpha|beta> |alpha> - |beta> at alpha = beta = p.amplitude,
/// so that N(|beta> + |gamma>) = |alpha>. Throws NullStateError when
/// |beta> + |gamma> vanishes.
QuditState complementary_state(const QcsParams& p);

/// Trigonometric closed forms of |alpha>_d for d = 2, 3, 4.
QuditState closed_form_qcs(int d, const QcsParams& p);

/// nonlinear_qcs coefficients at real alpha, split by the parity of n and
/// assembled from the positive roots only (plus the zero root for odd d).
struct ParitySplit {
    std::vector<Complex> even;  // c_0, c_2, ...
    std::vector<Complex> odd;   // c_1, c_3, ...

    /// Interleaves back into c_0..c_{d-1}.
    std::vector<Complex> recombine() const;
};
ParitySplit parity_coefficients(int d, double alpha_mod);

/// The cat parity that |T_d/2>_d approximates: even for odd d, odd for even d.
CatParity natural_parity(int d);

/// One Table-I style row at alpha = beta = T_d / 2.
struct FidelityRow {
    int dim;
    double alpha_beta;        // F(alpha | beta)
    double alpha_alpha_cat;   // F(alpha | alpha_pm)
    double alpha_beta_cat;    // F(alpha | beta_pm)
    double cat_cat;           // F(alpha_pm | beta_pm)
    double mixed;             // F_mix
};
FidelityRow fidelity_row(int d);

}  // namespace qudit

#endif  // QUDIT_QCS_HPP
