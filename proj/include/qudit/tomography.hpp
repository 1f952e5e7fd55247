#ifndef QUDIT_TOMOGRAPHY_HPP
#define QUDIT_TOMOGRAPHY_HPP

#include "qudit/fock.hpp"

#include <string>
#include <vector>

namespace qudit {

/// Optical tomogram w(q, theta): the probability density of the rotated
/// quadrature x_theta = (a e^{-i theta} + a^dagger e^{i theta}) / sqrt(2).
/// Stored theta-major: values[itheta * q_grid.size() + iq].
struct Tomogram {
    std::vector<double> q_grid;
    std::vector<double> theta_grid;
    std::vector<double> values;
    std::string state_meta;

    int nq() const { return static_cast<int>(q_grid.size()); }
    int ntheta() const { return static_cast<int>(theta_grid.size()); }
    double at(int iq, int itheta) const {
        return values[static_cast<std::size_t>(itheta) * q_grid.size() + iq];
    }
    /// Riemann sum over q at fixed theta.
    double column_integral(int itheta) const;
};

/// Harmonic-oscillator eigenfunctions psi_0(q)..psi_{n_max}(q).
std::vector<double> hermite_functions(int n_max, double q);

/// |sum_n c_n e^{-i n theta} psi_n(q)|^2.
double tomogram_closed_form(const QuditState& s, double q, double theta);

/// Settings for integrating the Wigner function along a line.
struct MarginalSpec {
    double reach = 0.0;      // half-length of the p range; 0 selects sqrt(2) (outer_radius + 3)
    int initial_intervals = 128;
    int max_intervals = 8192;
    double tolerance = 1e-9;
};

/// Integral over p of the Wigner function at (q cos t - p sin t, q sin t + p cos t),
/// in quadrature units where the vacuum has <x^2> = 1/2. Throws NumericalError
/// if the trapezoid refinement does not settle.
double tomogram_from_wigner(const QuditState& s, double q, double theta,
                            const MarginalSpec& spec = {});

/// Samples tomogram_closed_form on q in [-h, h], h = sqrt(2) (outer_radius + 2), and
/// theta in [0, 2 pi], endpoints included. Requires nq, ntheta >= 32.
Tomogram tomogram_grid(const QuditState& s, int nq = 201, int ntheta = 181,
                       std::string state_meta = {});

/// "q,theta,w" header, theta outer / q inner, 17 significant digits.
std::string to_csv(const Tomogram& t);
std::string to_json(const Tomogram& t);

}  // namespace qudit

#endif  // QUDIT_TOMOGRAPHY_HPP
