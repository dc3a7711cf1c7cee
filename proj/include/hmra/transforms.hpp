// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <functional>
#include <vector>

#include "hmra/grids.hpp"
#include "hmra/series.hpp"

namespace hmra::transforms {

using RadialFn = std::function<complex_t(double)>;

struct QuadratureConfig {
    double support_end = 24.0;        // truncation point of [0, inf) integrals
    int panels_per_bessel_period = 4; // >= 4
    double abs_tol = 1e-10;
    int tab_points = 1024;            // tabulation density for nested transforms
    double transform_end = 0.0;       // transform-domain cut; 0 -> support_end
};

struct QuadResult {
    complex_t value{0.0, 0.0};
    bool tail_warning = false;   // integrand not negligible at the cut
    double tail_estimate = 0.0;
};

/// Zeros of J_alpha in (0, upto], bracketing scan + bisection on the series
/// evaluator.  Results are cached per order (thread-safe).
std::vector<double> bessel_zeros(double alpha, double upto);

/// Forward transform: integral_0^support_end J_alpha(x t) f(x) x dx via
/// 16-point Gauss-Legendre panels split at the kernel zeros.
QuadResult hankel_forward(const RadialFn& f, double alpha, double t,
                          const QuadratureConfig& cfg = {});

/// Sampled-carrier overload: uniform grids are interpolated (local cubic,
/// zero beyond the last node); other grid kinds raise a grid error.
QuadResult hankel_forward(const SampledRadialFunction& f, double alpha, double t,
                          const QuadratureConfig& cfg = {});

/// Inverse transform: integral_0^support_end J_alpha(y t) g(t) t dt.
QuadResult hankel_inverse(const RadialFn& g, double alpha, double y,
                          const QuadratureConfig& cfg = {});

/// Closed form of the transform of x^nu on [0, a]:
///   a^{nu+1} J_{nu+1}(a t) / t,   with the exact t -> 0 limit.
double hankel_of_monomial_step(double a, double nu, double t);

/// |integral rho F G - integral x f g| with F, G the forward transforms of
/// f, g (both sides by quadrature; transforms tabulated then interpolated).
double plancherel_residual(const RadialFn& f, const RadialFn& g, double alpha,
                           const QuadratureConfig& cfg = {});

/// Validation-only improper integral: integrate to x0, then accelerate the
/// oscillatory tail by iterated averaging of partial sums taken at
/// consecutive kernel zeros.
complex_t hankel_forward_improper(const RadialFn& f, double alpha, double t,
                                  double x0, int segments, int levels,
                                  const QuadratureConfig& cfg = {});

/// Jackson q-integral over [0, q^{k_upper}]:
///   (1-q) sum_{k >= k_upper} f(q^k) q^k, automatic truncation.
complex_t jackson_q_integral(const RadialFn& f, double q, int k_upper,
                             const SeriesPolicy& pol = {});
/// Fixed term count (exact additivity/linearity in the same summation order).
complex_t jackson_q_integral_fixed(const RadialFn& f, double q, int k_upper, int n_terms);
/// Integral over [q^{k_a}, q^{k_b}] (k_a >= k_b), as a difference of two
/// [0, .] integrals with identical summation order.
complex_t jackson_q_interval(const RadialFn& f, double q, int k_a, int k_b,
                             const SeriesPolicy& pol = {});

/// Discrete q-Hankel pair on the grid {q^k}: forward value at q^n is
///   sum_k q^{2k} J_alpha(q^{k+n}; q^2) f(q^k),
/// the inverse uses the same (symmetric) kernel with the roles of k and n
/// exchanged.
complex_t q_hankel_forward(const SampledRadialFunction& f, double alpha, double q, int n);
complex_t q_hankel_inverse(const SampledRadialFunction& g, double alpha, double q, int k);
SampledRadialFunction q_hankel_forward_range(const SampledRadialFunction& f, double alpha,
                                             double q, int n_lo, int n_hi);

struct QRoundTrip {
    SampledRadialFunction reconstructed;
    double max_error = 0.0;  // max node deviation from the input
    int K_used = 0;          // transform-domain half-width that met abs_tol
};
/// forward-then-inverse with the transform-domain window doubled until two
/// successive reconstructions differ by less than abs_tol.
QRoundTrip q_hankel_round_trip(const SampledRadialFunction& f, double alpha, double q,
                               double abs_tol);

/// Truncated discrete orthogonality sum
///   sum_{|k| <= K} h(x,q,k+n) h(x,q,k+m)  ->  delta_{m,n},
/// where h is the stable orthogonality factor.  Requires |x| < q^{-1/2}.
complex_t discrete_hankel_orthogonality(int m, int n, double x, double q, int K,
                                        const SeriesPolicy& pol = {});

/// Composite 16-point Gauss-Legendre over [a, b] split into equal panels.
/// Exact to machine precision for polynomials of degree <= 31 per panel.
complex_t integrate_panels(const std::function<complex_t(double)>& f, double a, double b,
                           int panels);

/// Uniform-grid tabulation with local 4-point (cubic) interpolation.
class TabulatedFunction {
public:
    TabulatedFunction() = default;
    TabulatedFunction(double a, double b, std::vector<complex_t> vals);
    complex_t operator()(double x) const;
    double a() const { return a_; }
    double b() const { return b_; }

private:
    double a_ = 0.0, b_ = 0.0, h_ = 0.0;
    std::vector<complex_t> vals_;
};

TabulatedFunction tabulate(const std::function<complex_t(double)>& f, double a, double b,
                           int n);

}  // namespace hmra::transforms
