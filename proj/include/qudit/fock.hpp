#ifndef QUDIT_FOCK_HPP
#define QUDIT_FOCK_HPP

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace qudit {

using Complex = std::complex<double>;

/// Normalized pure state over the truncated Fock basis |0>..|d-1>.
///
/// Every constructor normalizes; global phase is left as given.
class QuditState {
public:
    /// Normalizes `amps`. Throws std::invalid_argument on an empty or null vector.
    explicit QuditState(std::vector<Complex> amps);

    /// Keeps `amps` bit-for-bit after checking |norm^2 - 1| <= tol.
    static QuditState from_normalized(std::vector<Complex> amps, double tol = 1e-10);

    /// Fock state |n> in dimension d.
    static QuditState fock(int d, int n);
    static QuditState vacuum(int d) { return fock(d, 0); }

    int dim() const { return static_cast<int>(amps_.size()); }
    std::span<const Complex> amps() const { return amps_; }
    const Complex& operator[](int n) const { return amps_[static_cast<std::size_t>(n)]; }

    double norm_squared() const;

private:
    struct Unchecked {};
    QuditState(std::vector<Complex> amps, Unchecked) : amps_(std::move(amps)) {}

    std::vector<Complex> amps_;
};

/// Dense d x d operator on the truncated Fock space.
struct QuditOperator {
    Eigen::MatrixXcd entries;

    int dim() const { return static_cast<int>(entries.rows()); }

    /// Applies the operator and renormalizes the result.
    QuditState apply(const QuditState& s) const;
    /// Applies without renormalizing.
    std::vector<Complex> apply_raw(std::span<const Complex> amps) const;
};

/// Truncated annihilation operator: entries(n-1, n) = sqrt(n).
QuditOperator annihilation(int d);
QuditOperator creation(int d);

/// exp(alpha a^dagger - alpha^* a) by eigendecomposition of the Hermitian
/// generator i(alpha a^dagger - alpha^* a). Requires |alpha| <= 50.
QuditOperator displacement_oracle(int d, Complex alpha);

/// |<a|b>|^2. Throws std::invalid_argument on dimension mismatch.
double fidelity(const QuditState& a, const QuditState& b);

/// <a|b>.
Complex overlap(const QuditState& a, const QuditState& b);

/// <alpha| rho_mix |alpha> with rho_mix = (|b+><b+| + |b-><b-|) / 2.
double mixed_fidelity(const QuditState& alpha_state, const QuditState& beta_plus,
                      const QuditState& beta_minus);

/// P_n = |c_n|^2.
std::vector<double> photon_distribution(const QuditState& s);

/// JSON text {"dim": d, "re": [...], "im": [...]}, shortest round-trip doubles.
std::string to_json(const QuditState& s);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
QuditState state_from_json(const std::string& text);

}  // namespace qudit

#endif  // QUDIT_FOCK_HPP
