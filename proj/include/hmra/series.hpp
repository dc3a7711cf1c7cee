// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace hmra {

using complex_t = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Truncation policy shared by every series evaluator in the library.
struct SeriesPolicy {
    double rel_tail_tol = 1e-16;
    int max_terms = 500;
    /// Domain radius for complex Bessel evaluation.
    double complex_radius = 50.0;
};

/// An iterative evaluation stopped before reaching its tolerance.
/// Carries the partial value accumulated so far.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, complex_t partial)
        : std::runtime_error(what), partial_(partial) {}
    complex_t partial() const { return partial_; }

private:
    complex_t partial_;
};

/// Off-grid access where the operation requires node-to-node maps.
class GridError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Principal argument normalized to (-pi, pi].
inline double principal_arg(complex_t z) {
    double a = std::arg(z);
    if (a <= -pi) a = pi;  // map the -pi branch edge onto +pi
    return a;
}

/// Sum term(0) + term(1) + ... under the shared policy: stop once |term| has
/// stayed below rel_tail_tol * |partial sum| for 3 consecutive terms
/// (oscillating series need the consecutive guard).  Terms that fall below
/// the rounding noise floor of the largest term seen also count as
/// negligible, so sums passing through a zero still terminate.
template <class TermFn>
complex_t sum_series(TermFn&& term, const SeriesPolicy& pol, const char* what) {
    complex_t sum = 0.0;
    double peak = 0.0;
    int run = 0;
    for (int k = 0; k < pol.max_terms; ++k) {
        const complex_t t = term(k);
        sum += t;
        const double at = std::abs(t);
        peak = std::max(peak, at);
        const double floor =
            std::max(pol.rel_tail_tol * std::abs(sum),
                     0.25 * std::numeric_limits<double>::epsilon() * peak);
        if (at <= floor) {
            if (++run >= 3) return sum;
        } else {
            run = 0;
        }
    }
    throw AccuracyError(std::string(what) + ": series did not converge within max_terms",
                        sum);
}

inline void require_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must satisfy 0 < q < 1");
}

inline void require_order(double nu) {
    if (!(nu > -1.0)) throw std::domain_error("order must satisfy nu > -1");
}

}  // namespace hmra
