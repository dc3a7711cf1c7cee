// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hmra/filter_bank.hpp"
#include "hmra/series.hpp"

namespace hmra::frames {

/// Truncated refinement product prod_{l=1}^{L} m0((nu+1)^{-l} t).
/// Requires |m0(0) - 1| <= 1e-10.
complex_t cascade_product(const std::function<complex_t(double)>& m0, int nu, double t, int L);

/// A sampled wavelet family: dense member vectors over a weighted sample
/// space, with the certification residual of the construction recorded.
struct WaveletFamily {
    size_t n_points = 0;
    std::vector<double> weights;
    std::vector<std::vector<complex_t>> members;
    double certification_residual = 0.0;
    int nu = 1, J = 0, K = 0;
    size_t size() const { return members.size(); }
};

/// Classical (nu+1)-band Haar wavelet family on the line, scales |m| <= J,
/// translates |j| <= K, bands r = 1..nu.  Members are piecewise constant on
/// (nu+1)-adic cells; the sample space is the finest cell lattice on
/// [-R, R], R = (K+1)(nu+1)^J, restricted to [-span, span].
struct HaarLattice {
    int nu = 1, J = 0, K = 0;
    double span = 1.0;        // test functions live on [-span, span]
    double cell = 0.0;        // finest cell width (nu+1)^{-J-1}
    size_t n_cells = 0;
};

/// lattice_J >= J selects the fine sample lattice (cell (nu+1)^{-lattice_J-1})
/// so that families at different truncations share one sample space;
/// -1 means lattice_J = J.
WaveletFamily haar_wavelet_family(int nu, int J, int K, HaarLattice* lattice = nullptr,
                                  double span = 1.0, int lattice_J = -1);

/// Mean-zero piecewise-constant test function on the lattice (band-limited
/// for this family: it lies in the span of the included members).
std::vector<complex_t> haar_bandlimited_test(const HaarLattice& lat, std::uint64_t seed);

/// Transform-domain profile of band r of the weighted Haar model on [0, 1):
/// the subcell step transforms combined with the (nu+1)-point character row,
/// including the 1/t factor.
complex_t haar_band_profile(int nu, int r, double t);

/// Orthonormal-per-orbit family read off a filter bank's polyphase rows over
/// the branch orbits of the given base points (bands 1..nu, optionally the
/// row-0 scaling members too).  Orthonormality is certified by the max
/// unitarity residual over the sampled matrices.
WaveletFamily orbit_family_from_bank(const filters::FilterBank& bank,
                                     const std::vector<complex_t>& base_points,
                                     bool include_scaling_row = false);

/// sum_members |<f, psi>|^2 / ||f||^2 under the family's weights.
double frame_sum(const std::vector<complex_t>& f, const WaveletFamily& fam);

struct FrameReport {
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    int J = 0, K = 0;
    std::vector<double> per_function_ratios;
    std::uint64_t seed = 0;
};

/// min/max of frame_sum over seeded random in-span test functions
/// (random member combinations).
FrameReport frame_bounds_estimate(const WaveletFamily& fam, int n_tests, std::uint64_t seed);

/// min/max of frame_sum over the given test functions.
FrameReport frame_bounds_for(const WaveletFamily& fam,
                             const std::vector<std::vector<complex_t>>& test_functions);

}  // namespace hmra::frames
