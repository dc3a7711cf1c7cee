// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmra/filter_bank.hpp"
#include "hmra/series.hpp"

namespace hmra::cuntz {

/// The three constructions the operators are built from: the plane model
/// with constant c, its q-deformation with c_q, and the annular model with
/// d_q and geometric branch weights.
enum class RepVariant { ClassicalC, QDeformedCq, AnnularDq };

/// Branch-weight bookkeeping: the raw weights from the construction
/// (q^{-2r}, not a probability vector) or the normalized probability
/// convention.  The per-branch adjoint factor beta_r = rho_r * adjoint_const
/// is identical under both, so the operator algebra does not change.
enum class RhoConvention { GeometricWeights, Probability };

/// Node-indexed carrier: sigma (the (nu+1)-fold cover map) and its nu+1
/// right inverses as exact node-to-node maps, plus the self-similar
/// inner-product weights w(z) = beta_{r(z)} w(sigma(z)).
struct MapGrid {
    size_t n = 0;
    std::vector<long> sigma;                  // -1 where off-grid
    std::vector<std::vector<long>> branch;    // branch[r][i], -1 where off-grid
    std::vector<complex_t> points;            // embedding (filter arguments)
    std::vector<double> weights;              // self-similar measure weights
    std::vector<double> physical;             // plain cell masses (reporting)
    std::vector<size_t> isometry_nodes;       // sigma_r defined, sigma(sigma_r) = id
    std::vector<size_t> completeness_nodes;   // sigma and branches of sigma defined
    std::string descriptor;
};

struct RepConfig {
    RepVariant variant = RepVariant::ClassicalC;
    int nu = 1;
    double q = 0.5;   // lattice ratio (polar) / deformation parameter (annular)
    int k_max = 0;    // polar radial depth; 0 -> default 2*(nu+1)^2
    int M = 0;        // polar angular count; 0 -> default (nu+1)^2
    int depth = 4;    // address-tree depth for AnnularDq
    RhoConvention convention = RhoConvention::GeometricWeights;
};

/// The operator pair (S_k, S_k*) acting on sampled functions over a MapGrid,
/// parameterized by per-node filter tables.
struct Representation {
    RepConfig cfg;
    MapGrid grid;
    double norm_const = 1.0;
    double adjoint_const = 1.0;
    std::vector<double> rho;   // per the convention flag
    std::vector<double> beta;  // rho_r * adjoint_const (convention-invariant)
    // filter_values[k][node]; NaN where no completion orbit covers the node
    std::vector<std::vector<complex_t>> filter_values;
    double max_renormalization = 0.0;

    int nu() const { return cfg.nu; }
    size_t n_nodes() const { return grid.n; }
};

/// Branch orbits of a grid: each parent node with a full in-grid branch set,
/// listed with its nu+1 branch members (one polyphase column each).  The
/// enumeration order is the serialization order of completed filter tables.
struct OrbitTable {
    std::vector<size_t> parents;
    std::vector<std::vector<long>> members;
};
OrbitTable orbit_table(const MapGrid& g, int nu);

/// Build with per-orbit random unit polyphase rows (seeded).
Representation make_representation_random(const RepConfig& cfg, std::uint64_t seed);

/// Build from per-orbit filter tables samples[orbit][k][j] (the serialized
/// form of a completed bank; orbit order as in orbit_table).
Representation make_representation_from_orbit_samples(
    const RepConfig& cfg, const std::vector<std::vector<std::vector<complex_t>>>& samples);
/// Build by completing a low-pass filter on the grid (must satisfy the
/// branch-sum identity at every orbit to 1e-6).
Representation make_representation_from_m0(const RepConfig& cfg, const filters::FilterFn& m0);
/// Build from a fully analytic bank (all nu+1 filters given).
Representation make_representation_from_bank(const RepConfig& cfg,
                                             const filters::FilterBank& bank);

/// (S_k xi)(z) = m_k(z) xi(z^{nu+1}); reads 0 where sigma leaves the grid.
std::vector<complex_t> apply_S(const Representation& rep, int k,
                               const std::vector<complex_t>& xi);

/// (S_k* xi)(z) = sum_r beta_r conj(m_k(sigma_r z)) xi(sigma_r z);
/// 0 at nodes whose branch points leave the grid.
std::vector<complex_t> apply_S_adjoint(const Representation& rep, int k,
                                       const std::vector<complex_t>& xi);

/// Weighted inner product and norm of the representation space.
complex_t rep_inner(const Representation& rep, const std::vector<complex_t>& a,
                    const std::vector<complex_t>& b);
double rep_norm(const Representation& rep, const std::vector<complex_t>& a);

struct RelationReport {
    double max_isometry_residual = 0.0;   // over all pairs (k, k')
    double completeness_residual = 0.0;
    int test_count = 0;
    std::uint64_t seed = 0;
    std::string grid_descriptor;
    std::string rho_convention;
    std::string variant;
};

/// max over seeded test functions of ||S_k* S_k' xi - delta xi|| / ||xi||
/// and ||sum_k S_k S_k* xi - xi|| / ||xi||, on the interior sub-grid.
RelationReport relation_report(const Representation& rep, int n_tests, std::uint64_t seed);

struct SelfSimilarityReport {
    // ratios[cell][r] = mu(sigma_r(E)) / mu(E) under the physical cell masses
    std::vector<std::vector<double>> ratios;
    std::vector<double> rho;
    double f1_residual = 0.0;              // change-of-variables identity at f = 1
    std::vector<double> test_fn_residuals; // relative residuals for 5 test functions
};

SelfSimilarityReport measure_selfsimilarity_check(const Representation& rep, int n_cells);

}  // namespace hmra::cuntz
