// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/frames.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hmra/transforms.hpp"

namespace hmra::frames {

complex_t cascade_product(const std::function<complex_t(double)>& m0, int nu, double t, int L) {
    if (nu < 0) throw std::invalid_argument("cascade_product: nu >= 0");
    if (L < 1) throw std::invalid_argument("cascade_product: L >= 1");
    if (std::abs(m0(0.0) - complex_t(1.0, 0.0)) > 1e-10)
        throw std::domain_error("cascade_product: requires m0(0) = 1");
    const double N = nu + 1.0;
    complex_t prod = 1.0;
    double scale = 1.0;
    for (int l = 1; l <= L; ++l) {
        scale /= N;
        prod *= m0(t * scale);
    }
    return prod;
}

WaveletFamily haar_wavelet_family(int nu, int J, int K, HaarLattice* lattice, double span,
                                  int lattice_J) {
    if (nu < 1) throw std::invalid_argument("haar_wavelet_family: nu >= 1");
    if (J < 0 || K < 0) throw std::invalid_argument("haar_wavelet_family: J, K >= 0");
    if (lattice_J < 0) lattice_J = J;
    if (lattice_J < J) throw std::invalid_argument("haar_wavelet_family: lattice_J >= J");
    const int N = nu + 1;
    const double cell = std::pow(static_cast<double>(N), -lattice_J - 1);
    const size_t n_cells = static_cast<size_t>(std::llround(2.0 * span / cell));
    WaveletFamily fam;
    fam.nu = nu;
    fam.J = J;
    fam.K = K;
    fam.n_points = n_cells;
    fam.weights.assign(n_cells, cell);
    fam.certification_residual = 0.0;  // character rows are exactly unitary
    const complex_t omega = std::polar(1.0, 2.0 * pi / N);
    for (int r = 1; r <= nu; ++r) {
        for (int m = -J; m <= J; ++m) {
            const double width = std::pow(static_cast<double>(N), m);
            const double amp = std::pow(static_cast<double>(N), -0.5 * m);
            for (int j = -K; j <= K; ++j) {
                std::vector<complex_t> vals(n_cells, complex_t(0.0, 0.0));
                const double lo = j * width;
                for (size_t i = 0; i < n_cells; ++i) {
                    const double x = -span + (i + 0.5) * cell;
                    const double u = (x - lo) / width;  // position inside [0,1)
                    if (u < 0.0 || u >= 1.0) continue;
                    const int p = std::min(N - 1, static_cast<int>(std::floor(u * N)));
                    vals[i] = amp * std::pow(omega, r * p);
                }
                fam.members.push_back(std::move(vals));
            }
        }
    }
    if (lattice) {
        lattice->nu = nu;
        lattice->J = lattice_J;
        lattice->K = K;
        lattice->span = span;
        lattice->cell = cell;
        lattice->n_cells = n_cells;
    }
    return fam;
}

std::vector<complex_t> haar_bandlimited_test(const HaarLattice& lat, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<complex_t> f(lat.n_cells);
    for (auto& v : f) v = complex_t(gauss(eng), gauss(eng));
    // mean-zero on every unit interval: keeps all coarse-scale coefficients
    // of the family expansion inside the truncation window
    const size_t per_unit = static_cast<size_t>(std::llround(1.0 / lat.cell));
    for (size_t start = 0; start + per_unit <= lat.n_cells; start += per_unit) {
        complex_t mean = 0.0;
        for (size_t i = start; i < start + per_unit; ++i) mean += f[i];
        mean /= static_cast<double>(per_unit);
        for (size_t i = start; i < start + per_unit; ++i) f[i] -= mean;
    }
    return f;
}

complex_t haar_band_profile(int nu, int r, double t) {
    if (nu < 1 || r < 0 || r > nu) throw std::invalid_argument("haar_band_profile: bad band");
    const int N = nu + 1;
    const complex_t omega = std::polar(1.0, 2.0 * pi / N);
    complex_t acc = 0.0;
    double prev = 0.0;  // step transform at a = 0 vanishes
    for (int p = 0; p < N; ++p) {
        const double a = static_cast<double>(p + 1) / N;
        const double cur = transforms::hankel_of_monomial_step(a, nu, t);
        acc += std::pow(omega, r * p) * (cur - prev);
        prev = cur;
    }
    return acc;
}

WaveletFamily orbit_family_from_bank(const filters::FilterBank& bank,
                                     const std::vector<complex_t>& base_points,
                                     bool include_scaling_row) {
    const int n1 = bank.nu() + 1;
    WaveletFamily fam;
    fam.nu = bank.nu();
    fam.J = 0;
    fam.K = static_cast<int>(base_points.size());
    fam.n_points = base_points.size() * static_cast<size_t>(n1);
    fam.weights.assign(fam.n_points, 1.0 / static_cast<double>(fam.n_points));
    double resid = 0.0;
    const double scale = std::sqrt(static_cast<double>(fam.n_points));
    for (size_t i = 0; i < base_points.size(); ++i) {
        const auto M = bank.is_analytic() ? filters::assemble_polyphase(bank, base_points[i])
                                          : filters::assemble_polyphase_sample(bank, i);
        resid = std::max(resid, filters::unitarity_residual(M));
        for (int r = include_scaling_row ? 0 : 1; r <= bank.nu(); ++r) {
            std::vector<complex_t> vals(fam.n_points, complex_t(0.0, 0.0));
            for (int j = 0; j < n1; ++j)
                vals[i * n1 + j] = std::conj(M.at(r, j)) * scale;
            fam.members.push_back(std::move(vals));
        }
    }
    fam.certification_residual = resid;
    return fam;
}

double frame_sum(const std::vector<complex_t>& f, const WaveletFamily& fam) {
    if (f.size() != fam.n_points) throw GridError("frame_sum: sample vector does not match family");
    double fn = 0.0;
    for (size_t i = 0; i < f.size(); ++i) fn += fam.weights[i] * std::norm(f[i]);
    if (!(fn > 0.0)) throw std::domain_error("frame_sum: zero test function");
    double acc = 0.0;
    for (const auto& psi : fam.members) {
        complex_t coef = 0.0;
        for (size_t i = 0; i < f.size(); ++i)
            coef += fam.weights[i] * std::conj(f[i]) * psi[i];
        acc += std::norm(coef);
    }
    return acc / fn;
}

FrameReport frame_bounds_estimate(const WaveletFamily& fam, int n_tests, std::uint64_t seed) {
    if (n_tests < 1) throw std::invalid_argument("frame_bounds_estimate: n_tests >= 1");
    if (fam.members.empty()) throw std::domain_error("frame_bounds_estimate: empty family");
    FrameReport rep;
    rep.J = fam.J;
    rep.K = fam.K;
    rep.seed = seed;
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double mn = 1e300, mx = -1e300;
    for (int t = 0; t < n_tests; ++t) {
        // random member combination: stays inside the family's span
        std::vector<complex_t> f(fam.n_points, complex_t(0.0, 0.0));
        for (const auto& psi : fam.members) {
            const complex_t c(gauss(eng), gauss(eng));
            for (size_t i = 0; i < f.size(); ++i) f[i] += c * psi[i];
        }
        const double ratio = frame_sum(f, fam);
        rep.per_function_ratios.push_back(ratio);
        mn = std::min(mn, ratio);
        mx = std::max(mx, ratio);
    }
    rep.ratio_min = mn;
    rep.ratio_max = mx;
    return rep;
}

FrameReport frame_bounds_for(const WaveletFamily& fam,
                             const std::vector<std::vector<complex_t>>& test_functions) {
    if (test_functions.empty())
        throw std::invalid_argument("frame_bounds_for: need at least one test function");
    FrameReport rep;
    rep.J = fam.J;
    rep.K = fam.K;
    double mn = 1e300, mx = -1e300;
    for (const auto& f : test_functions) {
        const double ratio = frame_sum(f, fam);
        rep.per_function_ratios.push_back(ratio);
        mn = std::min(mn, ratio);
        mx = std::max(mx, ratio);
    }
    rep.ratio_min = mn;
    rep.ratio_max = mx;
    return rep;
}

}  // namespace hmra::frames
