#ifndef QUDIT_SPECIAL_FN_HPP
#define QUDIT_SPECIAL_FN_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudit {

/// Raised when an iterative numerical procedure fails to converge.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace special {

/// Roots of the probabilists' Hermite polynomial He_d with their Gaussian
/// quadrature (Christoffel) weights.
///
/// christoffel[k] = 1 / (d * p_{d-1}(roots[k])^2), where p_n = He_n / sqrt(n!).
/// The weights sum to one.
struct HermiteRootTable {
    int degree = 0;
    std::vector<double> roots;        // ascending
    std::vector<double> christoffel;  // same order as roots
};

/// ln(n!) for n = 0..n_max, built once.
class LogFactorialCache {
public:
    explicit LogFactorialCache(int n_max);

    double operator()(int n) const;
    int max_n() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Shared table covering every factorial the library needs (n <= 400).
const LogFactorialCache& log_factorials();

/// ln(n!) through the shared cache, falling back to lgamma past its range.
double log_factorial(int n);

/// He_n(x) by the three-term recurrence He_{n+1} = x He_n - n He_{n-1}.
double he_eval(int n, double x);

/// p_n(x) = He_n(x) / sqrt(n!) by the scaled recurrence.
double orthonormal_he_eval(int n, double x);

/// p_0(x) .. p_{n_max}(x) in one pass.
std::vector<double> orthonormal_he_all(int n_max, double x);

/// He_n(0): zero for odd n, (-1)^{n/2} (n-1)!! otherwise.
double he_zero(int n);

/// Small-|x| oscillatory approximation of He_n(x). Test support only.
///
/// even n: (-1)^{n/2} (n-1)!! e^{x^2/4} cos(x sqrt(n + 1/2))
/// odd n:  (-1)^{(n-1)/2} n!!/sqrt(n) e^{x^2/4} sin(x sqrt(n + 1/2))
double he_asymptotic(int n, double x);

/// Roots and weights of He_d from the symmetric tridiagonal Jacobi matrix.
/// Throws NumericalError if the eigen-solve fails.
HermiteRootTable he_roots(int d);

/// Memoized he_roots; safe for concurrent readers.
std::shared_ptr<const HermiteRootTable> cached_he_roots(int d);

/// Associated Laguerre polynomial L_k^{(m)}(x) by the recurrence in k.
double laguerre_eval(int k, int m, double x);

}  // namespace special
}  // namespace qudit

#endif  // QUDIT_SPECIAL_FN_HPP
