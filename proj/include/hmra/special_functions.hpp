// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <complex>
#include <vector>

#include "hmra/series.hpp"

namespace hmra::special {

/// Gamma function for real z > 0 (Lanczos approximation, <=1e-13 relative
/// error on (0, 50]).  Nonpositive z raises std::domain_error.
double gamma_fn(double z);

/// Bessel function J_nu(x) for real x >= 0.  Power series for moderate x;
/// for large x a stabilized path (asymptotic expansion, with a backward
/// recurrence fallback for high orders) that agrees with the series oracle.
/// Accepts nu > -1, or any integer nu via the reflection J_{-n} = (-1)^n J_n.
double bessel_j(double order, double x, const SeriesPolicy& pol = {});

/// J_nu at a complex point, principal branch for the x^nu prefactor
/// (Arg in (-pi, pi]).  |z| beyond pol.complex_radius raises domain_error.
complex_t bessel_j_complex(double order, complex_t z, const SeriesPolicy& pol = {});

/// J_nu at the point r*e^{i*theta} of the Riemann surface of z^nu: theta is
/// NOT reduced mod 2*pi, so rotating theta by pi*k multiplies the value by
/// e^{i*pi*k*nu} exactly (the multiplicative periodicity of J_nu).
complex_t bessel_j_arg(double order, double r, double theta, const SeriesPolicy& pol = {});

/// Truncated addition formula: sum_{k=-K}^{K} J_k(x) J_{n-k}(y).
double bessel_addition(int n, double x, double y, int K, const SeriesPolicy& pol = {});

/// q-Pochhammer (a;q)_n = prod_{j<n} (1 - a q^j).
complex_t q_pochhammer(complex_t a, double q, int n);
/// (a;q)_infty, truncated once |a q^j| < pol.rel_tail_tol.
complex_t q_pochhammer_inf(complex_t a, double q, const SeriesPolicy& pol = {});

/// log( (a;q)_inf / (q;q)_inf ) for real 0 <= a < 1.  Both products underflow
/// for q near 1; the log-space difference stays bounded.
double q_pochhammer_log_ratio(double a, double q, const SeriesPolicy& pol = {});

/// Basic hypergeometric series
///   phi_1_1(b; q, z) = sum_k (-1)^k q^{k(k-1)/2} z^k / ((b;q)_k (q;q)_k).
/// b = q^{-m} hits a pole of the coefficients -> domain_error.
complex_t phi_1_1(complex_t b, double q, complex_t z, const SeriesPolicy& pol = {});

/// Hahn-Exton q-Bessel function
///   J_alpha(x; q) = ((q^{alpha+1};q)_inf / (q;q)_inf) x^alpha
///                   * phi_1_1(q^{alpha+1}; q, x^2 q),   x >= 0 real.
double q_bessel_hahn_exton(double order, double x, double q, const SeriesPolicy& pol = {});

/// Complex-argument Hahn-Exton q-Bessel for integer order >= 0 (entire in z).
complex_t q_bessel_hahn_exton_c(int order, complex_t z, double q,
                                const SeriesPolicy& pol = {});

/// J_alpha(q^s; q^2) for integer s, evaluated stably on the whole lattice.
/// For s <= -2 the alternating series collapses under catastrophic
/// cancellation; a rearranged expansion with positive-decaying structure is
/// used instead (all infinite products cancel):
///   J_alpha(q^{-M1}; q^2) = (-1)^{M1} q^{M1 (M1+alpha+1)} *
///       sum_i (-1)^i q^{2((M1-1) i) + i(i+1)} q^{2(alpha+1) i}
///             / ((q^2;q^2)_i (q^2;q^2)_{M1+i}).
double q_hankel_kernel(double order, int s, double q, const SeriesPolicy& pol = {});

/// One factor of the discrete Hankel-orthogonality sum:
///   h(x, q, j) = x^j q^{j/2} ((x^2 q;q)_inf/(q;q)_inf)
///                * phi_1_1(x^2 q; q, q^{j+1}),
/// evaluated stably for every integer j (same rearrangement as above for
/// j <= -1; at x = 0 the limit is delta_{j,0}).
double orthogonality_factor(double x, double q, int j, const SeriesPolicy& pol = {});

}  // namespace hmra::special
