#include "qudit/fock.hpp"

#include "qudit/special_fn.hpp"

#include <json.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qudit {

namespace {

void require_same_dim(const QuditState& a, const QuditState& b, const char* who) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

double norm_sq(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const auto& c : amps) acc += std::norm(c);
    return acc;
}

}  // namespace

QuditState::QuditState(std::vector<Complex> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw std::invalid_argument("QuditState: dimension must be >= 1");
    const double n2 = norm_sq(amps_);
    if (!std::isfinite(n2) || n2 <= 0.0) {
        throw std::invalid_argument("QuditState: amplitudes have zero or non-finite norm");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : amps_) c *= inv;
}

QuditState QuditState::from_normalized(std::vector<Complex> amps, double tol) {
    if (amps.empty()) throw std::invalid_argument("QuditState: dimension must be >= 1");
    const double n2 = norm_sq(amps);
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw std::invalid_argument("QuditState: amplitudes are not normalized (norm^2 = " +
                                    std::to_string(n2) + ")");
    }
    return QuditState(std::move(amps), Unchecked{});
}

QuditState QuditState::fock(int d, int n) {
    if (d < 1 || n < 0 || n >= d) {
        throw std::invalid_argument("QuditState::fock: need 0 <= n < d");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(d));
    amps[static_cast<std::size_t>(n)] = 1.0;
    return QuditState(std::move(amps), Unchecked{});
}

double QuditState::norm_squared() const { return norm_sq(amps_); }

std::vector<Complex> QuditOperator::apply_raw(std::span<const Complex> amps) const {
    if (static_cast<Eigen::Index>(amps.size()) != entries.cols()) {
        throw std::invalid_argument("QuditOperator::apply: dimension mismatch");
    }
    const Eigen::Map<const Eigen::VectorXcd> in(amps.data(), entries.cols());
    const Eigen::VectorXcd out = entries * in;
    return {out.data(), out.data() + out.size()};
}

QuditState QuditOperator::apply(const QuditState& s) const {
    return QuditState(apply_raw(s.amps()));
}

QuditOperator annihilation(int d) {
    if (d < 1) throw std::invalid_argument("annihilation: d must be >= 1");
    QuditOperator op{Eigen::MatrixXcd::Zero(d, d)};
    for (int n = 1; n < d; ++n) op.entries(n - 1, n) = std::sqrt(static_cast<double>(n));
    return op;
}

QuditOperator creation(int d) {
    auto op = annihilation(d);
    op.entries.adjointInPlace();
    return op;
}

QuditOperator displacement_oracle(int d, Complex alpha) {
    if (d < 1) throw std::invalid_argument("displacement_oracle: d must be >= 1");
    if (!(std::abs(alpha) <= 50.0)) {
        throw std::invalid_argument("displacement_oracle: |alpha| must be <= 50");
    }
    const Eigen::MatrixXcd a = annihilation(d).entries;
    const Complex i(0.0, 1.0);
    // H = i (alpha a^dag - alpha^* a) is Hermitian and D = exp(-i H).
    const Eigen::MatrixXcd h = i * (alpha * a.adjoint() - std::conj(alpha) * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("displacement_oracle: eigen-solve did not converge");
    }
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    Eigen::VectorXcd phases(d);
    for (int k = 0; k < d; ++k) phases[k] = std::exp(-i * lambda[k]);
    const Eigen::MatrixXcd& v = solver.eigenvectors();
    return QuditOperator{v * phases.asDiagonal() * v.adjoint()};
}

Complex overlap(const QuditState& a, const QuditState& b) {
    require_same_dim(a, b, "overlap");
    Complex acc = 0.0;
    for (int n = 0; n < a.dim(); ++n) acc += std::conj(a[n]) * b[n];
    return acc;
}

double fidelity(const QuditState& a, const QuditState& b) {
    require_same_dim(a, b, "fidelity");
    return std::min(1.0, std::norm(overlap(a, b)));
}

double mixed_fidelity(const QuditState& alpha_state, const QuditState& beta_plus,
                      const QuditState& beta_minus) {
    require_same_dim(alpha_state, beta_plus, "mixed_fidelity");
    require_same_dim(alpha_state, beta_minus, "mixed_fidelity");
    return 0.5 * (fidelity(alpha_state, beta_plus) + fidelity(alpha_state, beta_minus));
}

std::vector<double> photon_distribution(const QuditState& s) {
    std::vector<double> p(static_cast<std::size_t>(s.dim()));
    for (int n = 0; n < s.dim(); ++n) p[n] = std::norm(s[n]);
    return p;
}

std::string to_json(const QuditState& s) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (const auto& c : s.amps()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    nlohmann::ordered_json out;
    out["dim"] = s.dim();
    out["re"] = std::move(re);
    out["im"] = std::move(im);
    return out.dump();
}

QuditState state_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("state_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
        throw std::invalid_argument("state_from_json: expected keys dim, re, im");
    }
    const int d = j.at("dim").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (d < 1 || re.size() != static_cast<std::size_t>(d) || im.size() != re.size()) {
        throw std::invalid_argument("state_from_json: array lengths do not match dim");
    }
    std::vector<Complex> amps(re.size());
    for (std::size_t n = 0; n < re.size(); ++n) amps[n] = Complex(re[n], im[n]);
    return QuditState::from_normalized(std::move(amps));
}

}  // namespace qudit
