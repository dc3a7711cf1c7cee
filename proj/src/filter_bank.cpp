// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hmra/special_functions.hpp"

namespace hmra::filters {

BranchSystem BranchSystem::roots_of_unity(int nu) {
    if (nu < 0) throw std::invalid_argument("BranchSystem: nu >= 0");
    return {nu, BranchVariant::RootsOfUnity, 0.0};
}

BranchSystem BranchSystem::q_spiral(int nu, double q) {
    if (nu < 0) throw std::invalid_argument("BranchSystem: nu >= 0");
    require_q(q);
    return {nu, BranchVariant::QSpiral, q};
}

BranchSystem BranchSystem::half_turn(int nu) {
    if (nu < 0) throw std::invalid_argument("BranchSystem: nu >= 0");
    return {nu, BranchVariant::HalfTurn, 0.0};
}

std::vector<complex_t> branch_points(complex_t z, const BranchSystem& sys) {
    const int n = sys.nu + 1;
    std::vector<complex_t> out(n, complex_t(0.0, 0.0));
    if (z == complex_t(0.0, 0.0)) return out;
    const double r = std::pow(std::abs(z), 1.0 / n);
    const double th = principal_arg(z) / n;
    const complex_t sigma0 = std::polar(r, th);
    for (int j = 0; j < n; ++j) {
        switch (sys.variant) {
            case BranchVariant::RootsOfUnity:
                out[j] = sigma0 * std::polar(1.0, 2.0 * pi * j / n);
                break;
            case BranchVariant::QSpiral:
                out[j] = sigma0 * std::pow(sys.q, j);
                break;
            case BranchVariant::HalfTurn:
                out[j] = sigma0 * std::polar(1.0, pi * j);
                break;
        }
    }
    return out;
}

namespace {

void check_bank_shapes(const FilterBank& b) {
    const size_t n = static_cast<size_t>(b.nu()) + 1;
    if (b.rho.size() != n || b.polyphase_weights.size() != n)
        throw std::invalid_argument("FilterBank: weights must have length nu+1");
    for (double r : b.rho)
        if (!(r > 0.0)) throw std::invalid_argument("FilterBank: rho must be positive");
    for (double w : b.polyphase_weights)
        if (!(w > 0.0)) throw std::invalid_argument("FilterBank: polyphase weights must be positive");
    if (!(b.norm_const > 0.0)) throw std::invalid_argument("FilterBank: norm_const must be positive");
}

}  // namespace

PolyphaseSample assemble_polyphase(const FilterBank& bank, complex_t z) {
    check_bank_shapes(bank);
    if (!bank.is_analytic())
        throw std::invalid_argument("assemble_polyphase: bank has no analytic filters");
    const int n = bank.nu() + 1;
    const double pre = 1.0 / std::sqrt(bank.norm_const * n);
    PolyphaseSample M;
    M.z = z;
    M.nu = bank.nu();
    M.mat.resize(static_cast<size_t>(n) * n);
    const auto pts = branch_points(z, bank.sys);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            M.mat[static_cast<size_t>(k) * n + j] =
                pre * std::sqrt(bank.polyphase_weights[j]) * bank.analytic[k](pts[j]);
    return M;
}

PolyphaseSample assemble_polyphase_sample(const FilterBank& bank, size_t base_index) {
    check_bank_shapes(bank);
    if (base_index >= bank.samples.size())
        throw std::out_of_range("assemble_polyphase_sample: base index out of range");
    const int n = bank.nu() + 1;
    const double pre = 1.0 / std::sqrt(bank.norm_const * n);
    PolyphaseSample M;
    M.z = bank.base_points[base_index];
    M.nu = bank.nu();
    M.mat.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            M.mat[static_cast<size_t>(k) * n + j] = pre *
                                                    std::sqrt(bank.polyphase_weights[j]) *
                                                    bank.samples[base_index][k][j];
    return M;
}

double unitarity_residual(const PolyphaseSample& M) {
    const int n = M.nu + 1;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            complex_t acc = 0.0;
            for (int k = 0; k < n; ++k) acc += std::conj(M.at(k, i)) * M.at(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

std::vector<complex_t> unitary_with_first_row(const std::vector<complex_t>& v) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("unitary_with_first_row: empty vector");
    double nrm = 0.0;
    for (const auto& c : v) nrm += std::norm(c);
    nrm = std::sqrt(nrm);
    if (std::abs(nrm - 1.0) > 1e-9)
        throw std::invalid_argument("unitary_with_first_row: input must be a unit vector");
    // Phase-align so the reflected pair has a real leading entry.
    const double theta = (std::abs(v[0]) < 1e-300) ? 0.0 : std::arg(v[0]);
    const complex_t phase = std::polar(1.0, theta);
    std::vector<complex_t> u(v.size());
    for (int i = 0; i < n; ++i) u[i] = v[i] / phase;
    u[0] -= 1.0;  // u = vtilde - e0
    double usq = 0.0;
    for (const auto& c : u) usq += std::norm(c);
    std::vector<complex_t> W(static_cast<size_t>(n) * n, complex_t(0.0, 0.0));
    if (usq < 1e-24) {
        for (int i = 0; i < n; ++i)
            W[static_cast<size_t>(i) * n + i] = (i == 0) ? phase : complex_t(1.0, 0.0);
        for (int j = 0; j < n; ++j) W[j] = v[j];  // row 0 exactly v
        return W;
    }
    // C = phase * (I - 2 u u* / |u|^2) maps e0 to v; W = C^T has first row v.
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            complex_t c = (row == col) ? complex_t(1.0, 0.0) : complex_t(0.0, 0.0);
            c -= 2.0 * u[col] * std::conj(u[row]) / usq;  // C_{col,row} transposed
            W[static_cast<size_t>(row) * n + col] = phase * c;
        }
    }
    // pin row 0 to the exact input
    for (int j = 0; j < n; ++j) W[j] = v[j];
    return W;
}

FilterBank complete_from_m0(const FilterFn& m0, const BranchSystem& sys,
                            const std::vector<double>& rho,
                            const std::vector<double>& polyphase_weights, double norm_const,
                            const std::vector<complex_t>& base_points) {
    const int n = sys.nu + 1;
    FilterBank bank;
    bank.sys = sys;
    bank.rho = rho;
    bank.polyphase_weights = polyphase_weights;
    bank.norm_const = norm_const;
    check_bank_shapes(bank);
    bank.base_points = base_points;
    bank.samples.resize(base_points.size());
    const double pre = 1.0 / std::sqrt(norm_const * n);
    const double unscale = 1.0 / pre;
    double worst_renorm = 0.0;
    for (size_t i = 0; i < base_points.size(); ++i) {
        const auto pts = branch_points(base_points[i], sys);
        std::vector<complex_t> v(n);
        double nsq = 0.0;
        for (int j = 0; j < n; ++j) {
            v[j] = pre * std::sqrt(polyphase_weights[j]) * m0(pts[j]);
            nsq += std::norm(v[j]);
        }
        const double nrm = std::sqrt(nsq);
        if (std::abs(nrm - 1.0) > 1e-6)
            throw std::domain_error(
                "complete_from_m0: polyphase vector is not unit at z = (" +
                std::to_string(base_points[i].real()) + ", " +
                std::to_string(base_points[i].imag()) + "), ||v|| = " + std::to_string(nrm));
        worst_renorm = std::max(worst_renorm, std::abs(nrm - 1.0));
        for (auto& c : v) c /= nrm;
        const auto W = unitary_with_first_row(v);
        auto& tab = bank.samples[i];
        tab.assign(n, std::vector<complex_t>(n));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                tab[k][j] = W[static_cast<size_t>(k) * n + j] * unscale /
                            std::sqrt(polyphase_weights[j]);
    }
    bank.max_renormalization = worst_renorm;
    return bank;
}

std::vector<std::vector<complex_t>> cyclic_fourier_forward(const FilterBank& bank, complex_t z) {
    if (z == complex_t(0.0, 0.0))
        throw std::domain_error("cyclic_fourier_forward: z must be nonzero");
    if (!bank.is_analytic())
        throw std::invalid_argument("cyclic_fourier_forward: bank has no analytic filters");
    const int n = bank.nu() + 1;
    const double q = bank.sys.q;
    const double pre = (q > 0.0) ? (1.0 - std::pow(q, 2.0 * n)) : 1.0;
    // roots-of-unity fibre over z, independent of the bank's own branch variant
    const auto omegas = branch_points(z, BranchSystem::roots_of_unity(bank.nu()));
    std::vector<std::vector<complex_t>> A(n, std::vector<complex_t>(n, complex_t(0.0, 0.0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            complex_t acc = 0.0;
            for (int r = 0; r < n; ++r)
                acc += std::pow(omegas[r], -j) * bank.analytic[i](omegas[r]);
            A[i][j] = pre * acc;
        }
    return A;
}

std::vector<complex_t> cyclic_fourier_inverse(const std::vector<std::vector<complex_t>>& A,
                                              complex_t y, int nu, double q) {
    const int n = nu + 1;
    if (static_cast<int>(A.size()) != n)
        throw std::invalid_argument("cyclic_fourier_inverse: matrix has wrong shape");
    const double pre = (q > 0.0) ? (1.0 - std::pow(q, 2.0 * n)) : 1.0;
    std::vector<complex_t> m(n, complex_t(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        complex_t acc = 0.0;
        complex_t yj = 1.0;
        for (int j = 0; j < n; ++j) {
            acc += yj * A[i][j];
            yj *= y;
        }
        m[i] = acc / (pre * static_cast<double>(n));
    }
    return m;
}

double residue_diagonal_condition(const std::vector<complex_t>& b, int nu) {
    if (nu < 0) throw std::invalid_argument("residue_diagonal_condition: nu >= 0");
    double s = 0.0;
    double fact = 1.0, pow2 = 1.0;
    for (size_t k = 0; k < b.size(); ++k) {
        if (k > 0) {
            fact *= static_cast<double>(k);
            pow2 *= 2.0;
        }
        const double denom = fact * pow2;
        s += std::norm(b[k]) / (denom * denom);
    }
    return std::abs(1.0 - (nu + 1.0) * s);
}

FilterBank bessel_series_filters(const std::vector<complex_t>& b, int nu,
                                 std::optional<double> q, double diagonal_tol) {
    if (nu < 0) throw std::invalid_argument("bessel_series_filters: nu >= 0");
    const double resid = residue_diagonal_condition(b, nu);
    if (resid > diagonal_tol)
        throw std::invalid_argument(
            "bessel_series_filters: coefficients violate the diagonal normalization, residual = " +
            std::to_string(resid));
    FilterBank bank;
    bank.sys = BranchSystem::half_turn(nu);
    const int n = nu + 1;
    bank.rho.assign(n, 1.0 / n);
    bank.polyphase_weights.assign(n, 1.0);
    bank.norm_const = 1.0;
    const auto coeffs = b;
    for (int r = 0; r < n; ++r) {
        if (q) {
            const double qq = *q;
            require_q(qq);
            bank.analytic.push_back([coeffs, r, qq](complex_t y) -> complex_t {
                complex_t acc = 0.0;
                for (size_t k = 0; k < coeffs.size(); ++k)
                    acc += coeffs[k] *
                           special::q_bessel_hahn_exton_c(static_cast<int>(k) + r, y, qq);
                return acc;
            });
        } else {
            bank.analytic.push_back([coeffs, r](complex_t y) -> complex_t {
                complex_t acc = 0.0;
                for (size_t k = 0; k < coeffs.size(); ++k)
                    acc += coeffs[k] *
                           special::bessel_j_complex(static_cast<double>(k) + r, y);
                return acc;
            });
        }
    }
    return bank;
}

double circle_mean_trapezoid(const FilterBank& bank, int n_points) {
    if (!bank.is_analytic())
        throw std::invalid_argument("circle_mean_trapezoid: bank has no analytic filters");
    const int n = bank.nu() + 1;
    double acc = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double th = 2.0 * pi * i / n_points;
        for (int r = 0; r < n; ++r) {
            const complex_t zr = std::polar(1.0, th + pi * r);
            acc += std::norm(bank.analytic[r](zr));
        }
    }
    return acc / n_points;
}

}  // namespace hmra::filters
