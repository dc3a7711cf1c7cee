// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hmra/series.hpp"

namespace hmra::filters {

enum class BranchVariant { RootsOfUnity, QSpiral, HalfTurn };

/// The nu+1 right inverses of z -> z^{nu+1}: roots-of-unity rotations of the
/// principal root, q-spiral sheets, or half-turn sheets.
struct BranchSystem {
    int nu = 1;
    BranchVariant variant = BranchVariant::RootsOfUnity;
    double q = 0.0;  // QSpiral only

    static BranchSystem roots_of_unity(int nu);
    static BranchSystem q_spiral(int nu, double q);
    static BranchSystem half_turn(int nu);
};

/// sigma_j(z) for j = 0..nu; sigma_0 is the principal (nu+1)-th root
/// (Arg in (-pi, pi]).  z = 0 returns all zeros.
std::vector<complex_t> branch_points(complex_t z, const BranchSystem& sys);

using FilterFn = std::function<complex_t(complex_t)>;

/// nu+1 filters with branch system, measure weights rho, polyphase weights
/// w_j and normalization constant.  Filters are either analytic callables or
/// per-base-point sample tables (the form a pointwise completion produces).
struct FilterBank {
    BranchSystem sys;
    std::vector<double> rho;               // measure weights (length nu+1, > 0)
    std::vector<double> polyphase_weights; // w_j in the matrix assembly
    double norm_const = 1.0;               // > 0

    std::vector<FilterFn> analytic;  // size nu+1 when analytic

    // sampled representation: samples[i][k][j] = m_k(sigma_j(base_points[i]))
    std::vector<complex_t> base_points;
    std::vector<std::vector<std::vector<complex_t>>> samples;
    double max_renormalization = 0.0;  // largest | ||v||-1 | absorbed at completion

    bool is_analytic() const { return !analytic.empty(); }
    int nu() const { return sys.nu; }
};

/// One polyphase matrix sample: M_{kj} = pre * sqrt(w_j) * m_k(sigma_j(z)),
/// pre = 1/sqrt(norm_const*(nu+1)), row-major (nu+1)x(nu+1).
struct PolyphaseSample {
    complex_t z;
    int nu = 0;
    std::vector<complex_t> mat;
    complex_t at(int k, int j) const { return mat[static_cast<size_t>(k) * (nu + 1) + j]; }
};

PolyphaseSample assemble_polyphase(const FilterBank& bank, complex_t z);
PolyphaseSample assemble_polyphase_sample(const FilterBank& bank, size_t base_index);

/// Entrywise max norm of M*M - I.
double unitarity_residual(const PolyphaseSample& M);

/// Unitary matrix with prescribed first row (unit vector), built from a
/// phased Householder reflection; deterministic and continuous except at the
/// antipodal point.  Row-major (n x n).
std::vector<complex_t> unitary_with_first_row(const std::vector<complex_t>& v);

/// Complete m0 to a full bank: per base point z the normalized polyphase
/// vector v_j = sqrt(w_j) m0(sigma_j(z)) / sqrt(norm_const*(nu+1)) becomes
/// row 0 of a unitary matrix (after renormalization; rejected when
/// | ||v|| - 1 | > 1e-6), whose remaining rows define m_1..m_nu pointwise.
FilterBank complete_from_m0(const FilterFn& m0, const BranchSystem& sys,
                            const std::vector<double>& rho,
                            const std::vector<double>& polyphase_weights, double norm_const,
                            const std::vector<complex_t>& base_points);

/// Cyclic-group Fourier pair over the nu+1 roots of z:
///   A[i][j] = (1-q^{2(nu+1)}) sum_r omega_r^{-j} m_i(omega_r),
///   m_i(y)  = (1/((nu+1)(1-q^{2(nu+1)}))) sum_j y^j A[i][j];
/// the inverse carries the scalar making the finite pair exact.  Banks
/// without a q parameter use 1 in place of (1-q^{2(nu+1)}).
std::vector<std::vector<complex_t>> cyclic_fourier_forward(const FilterBank& bank, complex_t z);
std::vector<complex_t> cyclic_fourier_inverse(const std::vector<std::vector<complex_t>>& A,
                                              complex_t y, int nu, double q);

/// | 1 - (nu+1) sum_k |b_k|^2 / (k! 2^k)^2 |, the circle-diagonal
/// normalization the half-turn Bessel-series banks must satisfy.
double residue_diagonal_condition(const std::vector<complex_t>& b, int nu);

/// Bessel-series bank on the half-turn system: m_r(y) = sum_k b_k J_{k+r}(y)
/// (or the Hahn-Exton q-Bessel when q is given).  b_k indexes k >= 0.
/// The diagonal condition is enforced (residual <= tol) before accepting.
FilterBank bessel_series_filters(const std::vector<complex_t>& b, int nu,
                                 std::optional<double> q = std::nullopt,
                                 double diagonal_tol = 1e-12);

/// (1/2pi) integral over theta of sum_{r=0}^{nu} |m_r(e^{i theta} e^{pi i r})|^2
/// by the trapezoid rule (exponentially accurate for periodic integrands).
double circle_mean_trapezoid(const FilterBank& bank, int n_points);

}  // namespace hmra::filters
