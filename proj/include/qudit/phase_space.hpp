#ifndef QUDIT_PHASE_SPACE_HPP
#define QUDIT_PHASE_SPACE_HPP

#include "qudit/fock.hpp"

#include <string>
#include <vector>

namespace qudit {

/// Phase-space point z = q + i p. Coordinates follow the convention in which
/// a coherent state |alpha> has W = (2/pi) exp(-2|z - alpha|^2).
struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

/// sqrt(d - 1) + sqrt(ln 2 / 2): the circle holding the bulk of any
/// d-level state's Wigner function.
double outer_radius(int d);

/// W_n(z) = (2/pi) (-1)^n e^{-2|z|^2} L_n(4|z|^2).
double wigner_fock(int n, PhasePoint pt);

/// W_kl(z) = (2/pi) (-1)^k sqrt(k!/l!) (2 z^*)^{l-k} e^{-2|z|^2} L_k^{(l-k)}(4|z|^2), k < l.
Complex wigner_cross(int k, int l, PhasePoint pt);

/// W split into its diagonal (mixture) and off-diagonal (interference) parts.
/// imag_residue is the imaginary part left over when the interference sum
/// is assembled from both W_kl and W_lk = W_kl^*.
struct WignerParts {
    double mixture = 0.0;
    double interference = 0.0;
    double imag_residue = 0.0;

    double total() const { return mixture + interference; }
};

/// Evaluates W for one state at many points. Per-point cost is O(d^2).
class WignerEvaluator {
public:
    explicit WignerEvaluator(const QuditState& s);

    double operator()(PhasePoint pt) const { return parts(pt).total(); }
    WignerParts parts(PhasePoint pt) const;
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<Complex> amps_;
    // Recurrence coefficients for the scaled Laguerre functions, indexed [m][k].
    std::vector<std::vector<double>> lower_;
    std::vector<std::vector<double>> inv_norm_;
};

double wigner_state(const QuditState& s, PhasePoint pt);
WignerParts wigner_parts(const QuditState& s, PhasePoint pt);

struct Window {
    double q_min = 0.0;
    double q_max = 0.0;
    double p_min = 0.0;
    double p_max = 0.0;
};

/// Square of half-width outer_radius(d) + 2 centred at the origin.
Window default_window(int d);

/// Uniform samples of W, endpoints included, row-major with q outer.
struct WignerGrid {
    Window window;
    int nq = 0;
    int np = 0;
    std::vector<double> values;
    std::string state_meta;

    double dq() const { return (window.q_max - window.q_min) / (nq - 1); }
    double dp() const { return (window.p_max - window.p_min) / (np - 1); }
    double q(int i) const { return window.q_min + i * dq(); }
    double p(int j) const { return window.p_min + j * dp(); }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * np + j]; }

    /// Riemann sum of W dq dp.
    double integral() const;
};

/// Requires nq, np >= 16 and a window of positive extent.
WignerGrid wigner_grid(const QuditState& s, const Window& window, int nq, int np,
                       std::string state_meta = {});
WignerGrid wigner_grid(const QuditState& s, int nq = 201, int np = 201,
                       std::string state_meta = {});

/// "q,p,w" header, q outer / p inner, 17 significant digits, LF endings.
std::string to_csv(const WignerGrid& grid);
/// Grid metadata plus values as a flat row-major array.
std::string to_json(const WignerGrid& grid);

/// Settings for the doubling trapezoid refinement used by the volume and
/// marginal integrals.
struct QuadratureSpec {
    double half_width = 0.0;  // 0 selects outer_radius(d) + 3
    int initial_intervals = 96;
    int max_intervals = 1536;
    double tolerance = 2e-4;  // on successive refinements
};

/// delta = integral of |W| over phase space, minus one. Values in [-2e-4, 0)
/// clamp to zero; anything lower, or a refinement that never settles,
/// raises NumericalError.
double nonclassical_volume(const QuditState& s, const QuadratureSpec& quad = {});

}  // namespace qudit

#endif  // QUDIT_PHASE_SPACE_HPP
