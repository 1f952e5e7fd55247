#include "qudit/phase_space.hpp"

#include "qudit/format.hpp"
#include "qudit/parallel.hpp"
#include "qudit/special_fn.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qudit {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kRescale = 1e200;
const double kLogRescale = std::log(kRescale);

// Scaled associated Laguerre functions
//     l_k^{(m)}(x) = sqrt(k!/(k+m)!) x^{m/2} e^{-x/2} L_k^{(m)}(x),   k = 0..count-1,
// which are bounded by one. The start value is formed in log space and the
// recurrence runs on a rescaled copy so deep underflow of e^{-x/2} does not
// wipe out the whole row.
void scaled_laguerre_row(int m, int count, double x, const std::vector<double>& lower,
                         const std::vector<double>& inv_norm, double* out) {
    if (count <= 0) return;
    if (x == 0.0) {
        for (int k = 0; k < count; ++k) out[k] = m == 0 ? 1.0 : 0.0;
        return;
    }
    double log_scale =
        0.5 * m * std::log(x) - 0.5 * x - 0.5 * special::log_factorial(m);
    double factor = std::exp(log_scale);
    double prev = 0.0;
    double cur = 1.0;
    out[0] = factor;
    for (int k = 0; k + 1 < count; ++k) {
        double next = ((2.0 * k + 1.0 + m - x) * cur - lower[k] * prev) * inv_norm[k];
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            log_scale += kLogRescale;
            factor = std::exp(log_scale);
        }
        out[k + 1] = cur * factor;
    }
}

void require_level(int n, const char* who) {
    if (n < 0 || n > 150) {
        throw std::invalid_argument(std::string(who) + ": Fock index must lie in [0, 150]");
    }
}

std::vector<double> lower_coeffs(int m, int count) {
    std::vector<double> v(static_cast<std::size_t>(std::max(count, 1)));
    for (int k = 0; k < count; ++k) v[k] = std::sqrt(static_cast<double>(k) * (k + m));
    return v;
}

std::vector<double> inv_norm_coeffs(int m, int count) {
    std::vector<double> v(static_cast<std::size_t>(std::max(count, 1)));
    for (int k = 0; k < count; ++k) v[k] = 1.0 / std::sqrt((k + 1.0) * (k + m + 1.0));
    return v;
}

double scaled_laguerre(int k, int m, double x) {
    std::vector<double> row(static_cast<std::size_t>(k) + 1);
    scaled_laguerre_row(m, k + 1, x, lower_coeffs(m, k + 1), inv_norm_coeffs(m, k + 1),
                        row.data());
    return row.back();
}

}  // namespace

double outer_radius(int d) {
    if (d < 1) throw std::invalid_argument("outer_radius: d must be >= 1");
    return std::sqrt(d - 1.0) + std::sqrt(std::log(2.0) / 2.0);
}

double wigner_fock(int n, PhasePoint pt) {
    require_level(n, "wigner_fock");
    const double x = 4.0 * (pt.q * pt.q + pt.p * pt.p);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return kTwoOverPi * sign * scaled_laguerre(n, 0, x);
}

Complex wigner_cross(int k, int l, PhasePoint pt) {
    require_level(k, "wigner_cross");
    require_level(l, "wigner_cross");
    if (l <= k) throw std::invalid_argument("wigner_cross: requires k < l");
    const double r = std::hypot(pt.q, pt.p);
    if (r == 0.0) return 0.0;
    const int m = l - k;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    // (2 z^*)^m = (2|z|)^m e^{-i m arg z}; the modulus lives inside the scaled function.
    const Complex phase = std::polar(1.0, -m * std::atan2(pt.p, pt.q));
    return kTwoOverPi * sign * scaled_laguerre(k, m, 4.0 * r * r) * phase;
}

WignerEvaluator::WignerEvaluator(const QuditState& s)
    : dim_(s.dim()), amps_(s.amps().begin(), s.amps().end()) {
    require_level(dim_ - 1, "WignerEvaluator");
    lower_.reserve(static_cast<std::size_t>(dim_));
    inv_norm_.reserve(static_cast<std::size_t>(dim_));
    for (int m = 0; m < dim_; ++m) {
        lower_.push_back(lower_coeffs(m, dim_ - m));
        inv_norm_.push_back(inv_norm_coeffs(m, dim_ - m));
    }
}

WignerParts WignerEvaluator::parts(PhasePoint pt) const {
    const double r2 = pt.q * pt.q + pt.p * pt.p;
    const double x = 4.0 * r2;
    std::vector<double> row(static_cast<std::size_t>(dim_));

    WignerParts out;
    scaled_laguerre_row(0, dim_, x, lower_[0], inv_norm_[0], row.data());
    for (int n = 0; n < dim_; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        out.mixture += std::norm(amps_[n]) * sign * row[n];
    }
    out.mixture *= kTwoOverPi;
    if (r2 == 0.0 || dim_ == 1) return out;

    const double r = std::sqrt(r2);
    const Complex unit_conj(pt.q / r, -pt.p / r);  // e^{-i arg z}
    Complex rotation = 1.0;
    Complex upper = 0.0;   // sum_{k<l} c_k^* c_l W_kl
    Complex paired = 0.0;  // sum_{k<l} c_l^* c_k W_lk, with W_lk = W_kl^*
    for (int m = 1; m < dim_; ++m) {
        rotation *= unit_conj;
        const int count = dim_ - m;
        scaled_laguerre_row(m, count, x, lower_[m], inv_norm_[m], row.data());
        for (int k = 0; k < count; ++k) {
            const double sign = k % 2 == 0 ? 1.0 : -1.0;
            const Complex w_kl = kTwoOverPi * sign * row[k] * rotation;
            upper += std::conj(amps_[k]) * amps_[k + m] * w_kl;
            paired += std::conj(amps_[k + m]) * amps_[k] * std::conj(w_kl);
        }
    }
    out.interference = 2.0 * upper.real();
    out.imag_residue = std::abs((upper + paired).imag());
    return out;
}

double wigner_state(const QuditState& s, PhasePoint pt) { return WignerEvaluator(s)(pt); }

WignerParts wigner_parts(const QuditState& s, PhasePoint pt) {
    return WignerEvaluator(s).parts(pt);
}

Window default_window(int d) {
    const double h = outer_radius(d) + 2.0;
    return {-h, h, -h, h};
}

double WignerGrid::integral() const {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc * dq() * dp();
}

WignerGrid wigner_grid(const QuditState& s, const Window& window, int nq, int np,
                       std::string state_meta) {
    if (nq < 16 || np < 16) throw std::invalid_argument("wigner_grid: nq and np must be >= 16");
    if (!(window.q_max > window.q_min) || !(window.p_max > window.p_min) ||
        !std::isfinite(window.q_max - window.q_min) || !std::isfinite(window.p_max - window.p_min)) {
        throw std::invalid_argument("wigner_grid: degenerate window");
    }
    WignerGrid grid{window, nq, np, {}, std::move(state_meta)};
    grid.values.resize(static_cast<std::size_t>(nq) * np);
    const WignerEvaluator w(s);
    parallel_for(static_cast<std::size_t>(nq), [&](std::size_t i) {
        const double q = grid.q(static_cast<int>(i));
        for (int j = 0; j < np; ++j) grid.values[i * np + j] = w({q, grid.p(j)});
    });
    return grid;
}

WignerGrid wigner_grid(const QuditState& s, int nq, int np, std::string state_meta) {
    return wigner_grid(s, default_window(s.dim()), nq, np, std::move(state_meta));
}

std::string to_csv(const WignerGrid& grid) {
    std::string out = "q,p,w\n";
    out.reserve(grid.values.size() * 64);
    for (int i = 0; i < grid.nq; ++i) {
        const std::string q = format_g17(grid.q(i));
        for (int j = 0; j < grid.np; ++j) {
            out += q;
            out += ',';
            out += format_g17(grid.p(j));
            out += ',';
            out += format_g17(grid.at(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const WignerGrid& grid) {
    nlohmann::ordered_json j;
    j["kind"] = "wigner";
    j["state"] = grid.state_meta;
    j["q_min"] = grid.window.q_min;
    j["q_max"] = grid.window.q_max;
    j["p_min"] = grid.window.p_min;
    j["p_max"] = grid.window.p_max;
    j["nq"] = grid.nq;
    j["np"] = grid.np;
    j["order"] = "q-major";
    j["values"] = grid.values;
    return j.dump() + "\n";
}

double nonclassical_volume(const QuditState& s, const QuadratureSpec& quad) {
    const double min_half = outer_radius(s.dim()) + 3.0;
    const double half = quad.half_width > 0.0 ? quad.half_width : min_half;
    if (half < min_half - 1e-12) {
        throw std::invalid_argument("nonclassical_volume: window half-width must be >= outer_radius + 3");
    }
    if (quad.initial_intervals < 2 || quad.max_intervals < quad.initial_intervals) {
        throw std::invalid_argument("nonclassical_volume: bad interval settings");
    }

    const WignerEvaluator w(s);
    // Trapezoid rule on [-half, half]^2; each doubling reuses the previous nodes.
    int n = quad.initial_intervals;
    std::vector<double> nodes;
    const auto trapezoid = [&](int intervals, std::vector<double>& vals,
                               const std::vector<double>* coarse) {
        const int pts = intervals + 1;
        const double h = 2.0 * half / intervals;
        vals.assign(static_cast<std::size_t>(pts) * pts, 0.0);
        parallel_for(static_cast<std::size_t>(pts), [&](std::size_t i) {
            const double q = -half + static_cast<double>(i) * h;
            for (int j = 0; j < pts; ++j) {
                const std::size_t idx = i * pts + j;
                if (coarse && i % 2 == 0 && j % 2 == 0) {
                    vals[idx] = (*coarse)[(i / 2) * (intervals / 2 + 1) + j / 2];
                } else {
                    vals[idx] = std::abs(w({q, -half + j * h}));
                }
            }
        });
        double acc = 0.0;
        for (int i = 0; i < pts; ++i) {
            const double wi = (i == 0 || i == pts - 1) ? 0.5 : 1.0;
            double row = 0.0;
            for (int j = 0; j < pts; ++j) {
                const double wj = (j == 0 || j == pts - 1) ? 0.5 : 1.0;
                row += wj * vals[static_cast<std::size_t>(i) * pts + j];
            }
            acc += wi * row;
        }
        return acc * h * h;
    };

    double prev = trapezoid(n, nodes, nullptr);
    while (true) {
        if (2 * n > quad.max_intervals) {
            throw NumericalError("nonclassical_volume: refinement did not converge");
        }
        std::vector<double> finer;
        const double cur = trapezoid(2 * n, finer, &nodes);
        n *= 2;
        nodes.swap(finer);
        if (std::abs(cur - prev) <= quad.tolerance) {
            const double delta = cur - 1.0;
            if (delta >= 0.0) return delta;
            if (delta >= -2e-4) return 0.0;
            throw NumericalError("nonclassical_volume: integral of |W| fell below one");
        }
        prev = cur;
    }
}

}  // namespace qudit
