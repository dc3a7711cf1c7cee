// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <functional>
#include <vector>

#include "hmra/grids.hpp"
#include "hmra/series.hpp"

namespace hmra::mra {

/// The three scaling-function models: weighted Haar cells on the half line,
/// an angular sector of the disk, and the q-geometric annulus decomposition.
struct ScalingModel {
    enum class Kind { HaarLine, AngularSector, QAnnulus };
    Kind kind = Kind::HaarLine;
    int nu = 1;
    int m_sectors = 0;  // AngularSector: sector angle alpha = 2*pi/m (exact rational)
    double q = 0.0;     // QAnnulus

    static ScalingModel haar_line(int nu);
    static ScalingModel angular_sector(int nu, int m = 0);  // default m = nu+1
    static ScalingModel q_annulus(int nu, double q);
};

struct MRAConstants {
    double c = 0.0;         // nu/(nu+2)
    double c_q = 0.0;       // (1-q^nu)/(1-q^{nu+2})
    double d_q = 0.0;       // 1/(1-q^{2(nu+1)})
    double q_number = 0.0;  // (1-q^{2(nu+1)})/(1-q^2)
    static MRAConstants compute(int nu, double q);
};

/// Scaling operator (U^j xi)(z) = (nu+1)^{-j/2} xi(z/(nu+1)^j) on sampled
/// carriers.  Exact index shift on a scale-geometric grid; on a uniform grid
/// starting at 0 the map needs (nu+1)^j | i, otherwise linear interpolation
/// when enabled, else a grid error.
SampledRadialFunction scale_operator(const SampledRadialFunction& xi, int nu, int j,
                                     bool interpolate = false);

/// Translation (T^k xi)(x) = xi(x - k) on a uniform integer-aligned grid.
SampledRadialFunction translate_operator(const SampledRadialFunction& xi, int k);

/// Weighted discrete norms matching the carrier (Lebesgue weights per node
/// spacing); the scale operator is exactly unitary under this norm for
/// interior-supported samples.
double carrier_norm(const SampledRadialFunction& xi);

struct MraAxiomReport {
    double gram_offdiag_max = 0.0;
    double gram_diag_min = 0.0;
    double refinement_residual = 0.0;
    std::vector<double> coarse_projection_norms;    // shrinking with J
    std::vector<double> fine_approximation_errors;  // shrinking with J
    double closed_form_residual = 0.0;  // sector/annulus generator pairing vs closed form
    bool scale_lattice_aligned = true;  // QAnnulus: nu+1 an integer power of 1/q
};

MraAxiomReport mra_axiom_report(const ScalingModel& model, int J);

enum class StepExponent { ClosedForm, Literal };

/// Low-pass filter from scaling coefficients b (b[i] multiplies the cell
/// [offset+i, offset+i+1)):
///   m0(t) = sum_k b_k [ (k+1)^{nu+1} J_{nu+1}(t(k+1)) - k^E J_{nu+1}(t k) ],
/// E = nu+1 (ClosedForm, the step-transform value) or E = nu (Literal).
std::function<complex_t(complex_t)> build_m0_from_coeffs(const std::vector<complex_t>& b,
                                                         int offset, int nu,
                                                         StepExponent mode = StepExponent::ClosedForm);

/// Annular low-pass filter from cell coefficients a (a[i] multiplies the
/// annulus cell [q^{offset+i+1}, q^{offset+i}]):
///   m0(t) = sum_k a_k [ q^{k(nu+1)} J_{nu+1}((1-q)t q^k; q)
///                       - q^{(k+1)(nu+1)} J_{nu+1}((1-q)t q^{k+1}; q) ].
std::function<complex_t(double)> build_m0_annular(const std::vector<complex_t>& a, int offset,
                                                  int nu, double q);

struct QmfReport {
    double max_residual = 0.0;  // max |branch sum / model constant - 1|
    double empirical_min = 0.0, empirical_max = 0.0, empirical_mean = 0.0;
    double model_constant = 0.0;
};

/// Branch-sum identity over the nu+1 rotations t e^{2*pi*i*j/(nu+1)}:
/// empirical E(t) = (1/(nu+1)) sum_j |m0|^2 compared against c = nu/(nu+2).
QmfReport qmf_check_classical(const std::function<complex_t(complex_t)>& m0, int nu,
                              const std::vector<double>& t_grid);

/// Same with the q-deformed constant c_q = (1-q^nu)/(1-q^{nu+2}).
QmfReport qmf_check_q(const std::function<complex_t(complex_t)>& m0, int nu, double q,
                      const std::vector<double>& t_grid);

enum class AnnularWeight {
    PlainWeight,   // raw weight q^{-2j}
    InverseSquare,  // weight q^{-2j} / t^2
};

/// Annular branch-sum identity over t q^j, j = 0..nu, t in [q, 1]:
/// sum_j w_j |m0(t q^j)|^2 compared against d_q = 1/(1-q^{2(nu+1)}).
QmfReport qmf_check_annular(const std::function<complex_t(double)>& m0, int nu, double q,
                            const std::vector<double>& t_grid,
                            AnnularWeight conv = AnnularWeight::PlainWeight);

}  // namespace hmra::mra
