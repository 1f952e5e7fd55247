#include "qudit/tomography.hpp"

#include "qudit/format.hpp"
#include "qudit/parallel.hpp"
#include "qudit/phase_space.hpp"
#include "qudit/special_fn.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudit {

std::vector<double> hermite_functions(int n_max, double q) {
    if (n_max < 0) throw std::invalid_argument("hermite_functions: negative degree");
    std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
    psi[0] = std::exp(-0.5 * q * q) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n_max >= 1) psi[1] = std::numbers::sqrt2 * q * psi[0];
    for (int n = 1; n < n_max; ++n) {
        psi[n + 1] = (std::numbers::sqrt2 * q * psi[n] - std::sqrt(static_cast<double>(n)) * psi[n - 1]) /
                     std::sqrt(n + 1.0);
    }
    return psi;
}

double tomogram_closed_form(const QuditState& s, double q, double theta) {
    if (s.dim() > 150) throw std::invalid_argument("tomogram_closed_form: dimension above 150");
    const auto psi = hermite_functions(s.dim() - 1, q);
    const Complex step = std::polar(1.0, -theta);
    Complex phase = 1.0;
    Complex amp = 0.0;
    for (int n = 0; n < s.dim(); ++n) {
        amp += s[n] * phase * psi[n];
        phase *= step;
    }
    return std::norm(amp);
}

double tomogram_from_wigner(const QuditState& s, double q, double theta,
                            const MarginalSpec& spec) {
    const double min_reach = outer_radius(s.dim()) + 3.0;
    const double reach = spec.reach > 0.0 ? spec.reach : std::numbers::sqrt2 * min_reach;
    if (reach < min_reach - 1e-12) {
        throw std::invalid_argument("tomogram_from_wigner: reach must be >= outer_radius + 3");
    }
    if (spec.initial_intervals < 2 || spec.max_intervals < spec.initial_intervals) {
        throw std::invalid_argument("tomogram_from_wigner: bad interval settings");
    }

    const WignerEvaluator w(s);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    // Quadrature units (x, y) map to z = (x + i y) / sqrt(2); the density picks up 1/2.
    const auto integrand = [&](double p) {
        const double x = q * c - p * sn;
        const double y = q * sn + p * c;
        return 0.5 * w({x / std::numbers::sqrt2, y / std::numbers::sqrt2});
    };

    int n = spec.initial_intervals;
    double h = 2.0 * reach / n;
    double sum = 0.5 * (integrand(-reach) + integrand(reach));
    for (int i = 1; i < n; ++i) sum += integrand(-reach + i * h);
    double prev = sum * h;
    while (2 * n <= spec.max_intervals) {
        // New midpoints only.
        for (int i = 0; i < n; ++i) sum += integrand(-reach + (i + 0.5) * h);
        n *= 2;
        h *= 0.5;
        const double cur = sum * h;
        if (std::abs(cur - prev) <= spec.tolerance) return cur;
        prev = cur;
    }
    throw NumericalError("tomogram_from_wigner: quadrature did not converge");
}

double Tomogram::column_integral(int itheta) const {
    if (q_grid.size() < 2) return 0.0;
    const double dq = (q_grid.back() - q_grid.front()) / (q_grid.size() - 1.0);
    double acc = 0.0;
    for (int iq = 0; iq < nq(); ++iq) acc += at(iq, itheta);
    return acc * dq;
}

Tomogram tomogram_grid(const QuditState& s, int nq, int ntheta, std::string state_meta) {
    if (nq < 32 || ntheta < 32) {
        throw std::invalid_argument("tomogram_grid: nq and ntheta must be >= 32");
    }
    // outer_radius is measured in z = (x + i y) / sqrt(2); x itself reaches sqrt(2) further.
    const double half = std::numbers::sqrt2 * (outer_radius(s.dim()) + 2.0);
    Tomogram t;
    t.state_meta = std::move(state_meta);
    t.q_grid.resize(static_cast<std::size_t>(nq));
    t.theta_grid.resize(static_cast<std::size_t>(ntheta));
    for (int i = 0; i < nq; ++i) t.q_grid[i] = -half + 2.0 * half * i / (nq - 1);
    for (int j = 0; j < ntheta; ++j) t.theta_grid[j] = 2.0 * std::numbers::pi * j / (ntheta - 1);
    t.values.resize(static_cast<std::size_t>(nq) * ntheta);

    parallel_for(static_cast<std::size_t>(nq), [&](std::size_t iq) {
        const auto psi = hermite_functions(s.dim() - 1, t.q_grid[iq]);
        for (int j = 0; j < ntheta; ++j) {
            const Complex step = std::polar(1.0, -t.theta_grid[j]);
            Complex phase = 1.0;
            Complex amp = 0.0;
            for (int n = 0; n < s.dim(); ++n) {
                amp += s[n] * phase * psi[n];
                phase *= step;
            }
            t.values[static_cast<std::size_t>(j) * nq + iq] = std::norm(amp);
        }
    });
    return t;
}

std::string to_csv(const Tomogram& t) {
    std::string out = "q,theta,w\n";
    out.reserve(t.values.size() * 64);
    for (int j = 0; j < t.ntheta(); ++j) {
        const std::string theta = format_g17(t.theta_grid[j]);
        for (int i = 0; i < t.nq(); ++i) {
            out += format_g17(t.q_grid[i]);
            out += ',';
            out += theta;
            out += ',';
            out += format_g17(t.at(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const Tomogram& t) {
    nlohmann::ordered_json j;
    j["kind"] = "tomogram";
    j["state"] = t.state_meta;
    j["q"] = t.q_grid;
    j["theta"] = t.theta_grid;
    j["order"] = "theta-major";
    j["values"] = t.values;
    return j.dump() + "\n";
}

}  // namespace qudit
