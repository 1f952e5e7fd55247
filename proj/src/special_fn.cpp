#include "qudit/special_fn.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace qudit::special {

namespace {

void require_degree(int n, int n_max, const char* who) {
    if (n < 0 || n > n_max) {
        throw std::invalid_argument(std::string(who) + ": degree " + std::to_string(n) +
                                    " outside [0, " + std::to_string(n_max) + "]");
    }
}

// Returns p_{n-1}(x) and p_n(x).
std::pair<double, double> orthonormal_pair(int n, double x) {
    double prev = 0.0;
    double cur = 1.0;
    for (int j = 0; j < n; ++j) {
        const double next = (x * cur - std::sqrt(static_cast<double>(j)) * prev) /
                            std::sqrt(static_cast<double>(j + 1));
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

double double_factorial(int n) {
    double r = 1.0;
    for (int j = n; j > 1; j -= 2) r *= j;
    return r;
}

}  // namespace

LogFactorialCache::LogFactorialCache(int n_max) {
    if (n_max < 0) throw std::invalid_argument("LogFactorialCache: negative n_max");
    values_.resize(static_cast<std::size_t>(n_max) + 1);
    values_[0] = 0.0;
    // Running sum in extended precision: no drift, and consecutive entries
    // differ by ln(n) to within one ulp of the entry.
    long double acc = 0.0L;
    for (int n = 1; n <= n_max; ++n) {
        acc += std::log(static_cast<long double>(n));
        values_[n] = static_cast<double>(acc);
    }
}

double LogFactorialCache::operator()(int n) const {
    if (n < 0 || n > max_n()) throw std::out_of_range("LogFactorialCache: index out of range");
    return values_[static_cast<std::size_t>(n)];
}

const LogFactorialCache& log_factorials() {
    static const LogFactorialCache cache(400);
    return cache;
}

double log_factorial(int n) {
    const auto& cache = log_factorials();
    if (n <= cache.max_n()) return cache(n);
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double he_eval(int n, double x) {
    require_degree(n, 200, "he_eval");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int j = 1; j < n; ++j) {
        const double next = x * cur - j * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double orthonormal_he_eval(int n, double x) {
    require_degree(n, 200, "orthonormal_he_eval");
    return orthonormal_pair(n, x).second;
}

std::vector<double> orthonormal_he_all(int n_max, double x) {
    require_degree(n_max, 200, "orthonormal_he_all");
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = 1.0;
    if (n_max >= 1) out[1] = x;
    for (int j = 1; j < n_max; ++j) {
        out[j + 1] = (x * out[j] - std::sqrt(static_cast<double>(j)) * out[j - 1]) /
                     std::sqrt(static_cast<double>(j + 1));
    }
    return out;
}

double he_zero(int n) {
    if (n < 0) throw std::invalid_argument("he_zero: negative degree");
    if (n % 2 == 1) return 0.0;
    const double mag = double_factorial(n - 1);
    return (n / 2) % 2 == 0 ? mag : -mag;
}

double he_asymptotic(int n, double x) {
    if (n < 0) throw std::invalid_argument("he_asymptotic: negative degree");
    const double envelope = std::exp(0.25 * x * x);
    const double freq = std::sqrt(n + 0.5);
    if (n % 2 == 0) {
        const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * double_factorial(n - 1) * envelope * std::cos(x * freq);
    }
    const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * double_factorial(n) / std::sqrt(static_cast<double>(n)) * envelope *
           std::sin(x * freq);
}

HermiteRootTable he_roots(int d) {
    if (d < 1 || d > 150) {
        throw std::invalid_argument("he_roots: degree must lie in [1, 150], got " +
                                    std::to_string(d));
    }
    HermiteRootTable table;
    table.degree = d;
    table.roots.assign(static_cast<std::size_t>(d), 0.0);
    table.christoffel.assign(static_cast<std::size_t>(d), 0.0);

    if (d > 1) {
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
        Eigen::VectorXd off(d - 1);
        for (int j = 0; j < d - 1; ++j) off[j] = std::sqrt(static_cast<double>(j + 1));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("he_roots: tridiagonal eigen-solve did not converge for d = " +
                                 std::to_string(d));
        }
        for (int k = 0; k < d; ++k) table.roots[k] = solver.eigenvalues()[k];

        // Newton polish on p_d, with p_d' = sqrt(d) p_{d-1}.
        const double sqrt_d = std::sqrt(static_cast<double>(d));
        for (double& x : table.roots) {
            for (int it = 0; it < 3; ++it) {
                const auto [pm1, p] = orthonormal_pair(d, x);
                if (pm1 == 0.0) break;
                x -= p / (sqrt_d * pm1);
            }
        }

        for (int k = 0; k < d / 2; ++k) {
            const double mirrored = 0.5 * (table.roots[d - 1 - k] - table.roots[k]);
            table.roots[k] = -mirrored;
            table.roots[d - 1 - k] = mirrored;
        }
        if (d % 2 == 1) table.roots[d / 2] = 0.0;
    }

    for (int k = 0; k < d; ++k) {
        const double pm1 = orthonormal_pair(d - 1, table.roots[k]).second;
        table.christoffel[k] = 1.0 / (d * pm1 * pm1);
    }
    return table;
}

std::shared_ptr<const HermiteRootTable> cached_he_roots(int d) {
    static std::shared_mutex mutex;
    static std::map<int, std::shared_ptr<const HermiteRootTable>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const HermiteRootTable>(he_roots(d));
    std::unique_lock lock(mutex);
    return cache.try_emplace(d, std::move(table)).first->second;
}

double laguerre_eval(int k, int m, double x) {
    require_degree(k, 150, "laguerre_eval");
    require_degree(m, 150, "laguerre_eval (order)");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + m - x;
    for (int j = 1; j < k; ++j) {
        const double next = ((2.0 * j + 1.0 + m - x) * cur - (j + m) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace qudit::special
