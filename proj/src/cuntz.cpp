// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/cuntz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hmra::cuntz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------------------
// Polar lattice carrier (roots-of-unity branch geometry).
// Radial nodes |z| = q^k, k in [1, k_max]; angular index l in [0, M).
// sigma multiplies the radial exponent and the angular index by nu+1;
// branch maps divide them on the divisible sublattice.
// ---------------------------------------------------------------------------

struct PolarShape {
    int nu, k_max, M;
    double q;
    size_t node(int k, int l) const {
        return static_cast<size_t>(k - 1) * M + static_cast<size_t>(l);
    }
};

MapGrid build_polar_grid(int nu, double q, int k_max, int M,
                         const std::vector<double>& beta) {
    const int n1 = nu + 1;
    if (M % n1 != 0) throw std::invalid_argument("polar grid: M must be a multiple of nu+1");
    PolarShape sh{nu, k_max, M, q};
    MapGrid g;
    g.n = static_cast<size_t>(k_max) * M;
    g.sigma.assign(g.n, -1);
    g.branch.assign(n1, std::vector<long>(g.n, -1));
    g.points.resize(g.n);
    g.weights.assign(g.n, 0.0);
    g.physical.resize(g.n);
    const int Mp = M / n1;
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 0; l < M; ++l) {
            const size_t i = sh.node(k, l);
            const double r = std::pow(q, k);
            const double th = 2.0 * pi * l / M;
            g.points[i] = std::polar(r, th);
            g.physical[i] = std::pow(q, k * (nu + 2.0)) * (1.0 - q) * (2.0 * pi / M);
            if (nu == 0) {
                g.sigma[i] = static_cast<long>(i);
                g.branch[0][i] = static_cast<long>(i);
                continue;
            }
            if (static_cast<long>(k) * n1 <= k_max)
                g.sigma[i] = static_cast<long>(sh.node(k * n1, (l * n1) % M));
            if (k % n1 == 0 && k / n1 >= 1 && l % n1 == 0) {
                for (int r_b = 0; r_b < n1; ++r_b)
                    g.branch[r_b][i] =
                        static_cast<long>(sh.node(k / n1, (l / n1 + r_b * Mp) % M));
            }
        }
    }
    // Self-similar weights: w(z) = beta_{r(z)} w(sigma z), anchored at the
    // deepest shells with the physical masses.  Parents sit at larger k, so
    // a descending sweep resolves every chain.
    if (nu == 0) {
        g.weights = g.physical;
    } else {
        for (int k = k_max; k >= 1; --k) {
            for (int l = 0; l < M; ++l) {
                const size_t i = sh.node(k, l);
                const long p = g.sigma[i];
                if (p < 0) {
                    g.weights[i] = g.physical[i];
                } else {
                    // branch index of i under its parent
                    const int lp = static_cast<int>(p % M);
                    const int r_b = ((l - lp / n1) / Mp) % n1;
                    g.weights[i] = beta[static_cast<size_t>(r_b)] * g.weights[p];
                }
            }
        }
    }
    for (size_t i = 0; i < g.n; ++i) {
        bool iso = true;
        for (int r = 0; r < n1; ++r) iso = iso && g.branch[r][i] >= 0;
        if (iso) g.isometry_nodes.push_back(i);
        const long s = g.sigma[i];
        if (s >= 0 && g.branch[0][s] >= 0) g.completeness_nodes.push_back(i);
    }
    g.descriptor = "polar{q=" + std::to_string(q) + ",k_max=" + std::to_string(k_max) +
                   ",M=" + std::to_string(M) + "}";
    return g;
}

// ---------------------------------------------------------------------------
// Address-tree carrier for the annular model.  Nodes are branch-index words
// of length 0..D rooted at the point 1; sigma drops the leading symbol
// (the (nu+1)-fold cover with the annulus identification z ~ z q^{nu+1}),
// branch maps prepend one.  |z(w)| = q^{w_1 + w_2/(nu+1) + ...}.
// ---------------------------------------------------------------------------

MapGrid build_tree_grid(int nu, double q, int depth, const std::vector<double>& beta) {
    const int n1 = nu + 1;
    // enumerate words breadth-first, children = prepended symbols
    std::vector<std::vector<int>> words;
    words.push_back({});  // root
    std::vector<size_t> frontier{0};
    for (int d = 1; d <= depth; ++d) {
        std::vector<size_t> next;
        for (size_t pi : frontier)
            for (int r = 0; r < n1; ++r) {
                auto w = words[pi];
                w.insert(w.begin(), r);
                words.push_back(std::move(w));
                next.push_back(words.size() - 1);
            }
        frontier = std::move(next);
    }
    MapGrid g;
    g.n = words.size();
    g.sigma.assign(g.n, -1);
    g.branch.assign(n1, std::vector<long>(g.n, -1));
    g.points.resize(g.n);
    g.weights.assign(g.n, 0.0);
    g.physical.resize(g.n);
    // index lookup by word
    auto index_of = [&](const std::vector<int>& w) -> long {
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i] == w) return static_cast<long>(i);
        return -1;
    };
    for (size_t i = 0; i < g.n; ++i) {
        const auto& w = words[i];
        double e = 0.0;
        for (size_t j = 0; j < w.size(); ++j) e += w[j] / std::pow(n1, static_cast<double>(j));
        g.points[i] = std::pow(q, e);
        g.physical[i] = std::pow(q, e * (nu + 2.0)) * (1.0 - q);
        if (!w.empty()) {
            auto parent = std::vector<int>(w.begin() + 1, w.end());
            g.sigma[i] = index_of(parent);
        }
        if (static_cast<int>(w.size()) < depth) {
            for (int r = 0; r < n1; ++r) {
                auto child = w;
                child.insert(child.begin(), r);
                g.branch[r][i] = index_of(child);
            }
        }
    }
    // w(root) = 1; w(word) = prod beta over the symbols
    for (size_t i = 0; i < g.n; ++i) {
        double w = 1.0;
        for (int s : words[i]) w *= beta[static_cast<size_t>(s)];
        g.weights[i] = w;
    }
    for (size_t i = 0; i < g.n; ++i) {
        if (static_cast<int>(words[i].size()) < depth) g.isometry_nodes.push_back(i);
        const long s = g.sigma[i];
        if (s >= 0 && g.branch[0][s] >= 0) g.completeness_nodes.push_back(i);
    }
    g.descriptor = "tree{q=" + std::to_string(q) + ",depth=" + std::to_string(depth) + "}";
    return g;
}

// ---------------------------------------------------------------------------

struct VariantConstants {
    double norm_const;
    double adjoint_const;
    std::vector<double> rho;
    std::vector<double> poly_w;
    std::vector<double> beta;
    std::string name;
};

VariantConstants variant_constants(const RepConfig& cfg) {
    const int nu = cfg.nu;
    const int n1 = nu + 1;
    VariantConstants vc;
    vc.poly_w.assign(n1, 1.0);
    switch (cfg.variant) {
        case RepVariant::ClassicalC: {
            vc.name = "classical_c";
            vc.norm_const = (nu == 0) ? 1.0 : static_cast<double>(nu) / (nu + 2.0);
            vc.rho.assign(n1, 1.0 / n1);
            vc.adjoint_const = 1.0 / vc.norm_const;
            break;
        }
        case RepVariant::QDeformedCq: {
            vc.name = "q_deformed_cq";
            require_q(cfg.q);
            vc.norm_const = (nu == 0)
                                ? 1.0
                                : (1.0 - std::pow(cfg.q, nu)) / (1.0 - std::pow(cfg.q, nu + 2.0));
            vc.rho.assign(n1, 1.0 / n1);
            vc.adjoint_const = 1.0 / vc.norm_const;
            break;
        }
        case RepVariant::AnnularDq: {
            vc.name = "annular_dq";
            require_q(cfg.q);
            const double d_q = 1.0 / (1.0 - std::pow(cfg.q, 2.0 * n1));
            vc.norm_const = d_q / n1;
            vc.rho.resize(n1);
            vc.poly_w.resize(n1);
            for (int r = 0; r < n1; ++r) {
                vc.rho[r] = std::pow(cfg.q, -2.0 * r);
                vc.poly_w[r] = vc.rho[r];
            }
            vc.adjoint_const = 1.0 / d_q;
            break;
        }
    }
    vc.beta.resize(n1);
    for (int r = 0; r < n1; ++r) vc.beta[r] = vc.rho[r] * vc.adjoint_const;
    if (cfg.convention == RhoConvention::Probability) {
        // renormalize rho to a probability vector and fold the factor into
        // the adjoint constant; beta is unchanged
        double sum = 0.0;
        for (double r : vc.rho) sum += r;
        for (double& r : vc.rho) r /= sum;
        vc.adjoint_const *= sum;
    }
    return vc;
}

MapGrid build_grid(const RepConfig& cfg, const VariantConstants& vc) {
    const int n1 = cfg.nu + 1;
    if (cfg.variant == RepVariant::AnnularDq)
        return build_tree_grid(cfg.nu, cfg.q, cfg.depth, vc.beta);
    const int k_max = cfg.k_max > 0 ? cfg.k_max : 2 * n1 * n1;
    const int M = cfg.M > 0 ? cfg.M : n1 * n1;
    return build_polar_grid(cfg.nu, cfg.q, k_max, M, vc.beta);
}

// Orbits: every node with in-grid branch points is a parent; its nu+1
// branch nodes carry one polyphase matrix column each.
struct Orbit {
    size_t parent;
    std::vector<long> members;  // branch node per column
};

std::vector<Orbit> collect_orbits(const MapGrid& g, int nu) {
    std::vector<Orbit> orbits;
    const int n1 = nu + 1;
    for (size_t i = 0; i < g.n; ++i) {
        bool full = true;
        for (int r = 0; r < n1; ++r) full = full && g.branch[r][i] >= 0;
        if (!full) continue;
        Orbit o;
        o.parent = i;
        for (int r = 0; r < n1; ++r) o.members.push_back(g.branch[r][i]);
        orbits.push_back(std::move(o));
    }
    return orbits;
}

}  // namespace

OrbitTable orbit_table(const MapGrid& g, int nu) {
    OrbitTable t;
    for (const auto& o : collect_orbits(g, nu)) {
        t.parents.push_back(o.parent);
        t.members.push_back(o.members);
    }
    return t;
}

namespace {

Representation assemble(const RepConfig& cfg,
                        const std::function<std::vector<complex_t>(const MapGrid&, const Orbit&)>&
                            unit_row_for_orbit) {
    if (cfg.nu < 0) throw std::invalid_argument("representation: nu >= 0");
    const auto vc = variant_constants(cfg);
    Representation rep;
    rep.cfg = cfg;
    rep.norm_const = vc.norm_const;
    rep.adjoint_const = vc.adjoint_const;
    rep.rho = vc.rho;
    rep.beta = vc.beta;
    rep.grid = build_grid(cfg, vc);
    const int n1 = cfg.nu + 1;
    rep.filter_values.assign(n1, std::vector<complex_t>(rep.grid.n, complex_t(kNaN, kNaN)));
    const double unscale = std::sqrt(vc.norm_const * n1);
    const auto orbits = collect_orbits(rep.grid, cfg.nu);
    double worst = 0.0;
    for (const auto& o : orbits) {
        std::vector<complex_t> v = unit_row_for_orbit(rep.grid, o);
        double nsq = 0.0;
        for (const auto& c : v) nsq += std::norm(c);
        const double nrm = std::sqrt(nsq);
        if (std::abs(nrm - 1.0) > 1e-6)
            throw std::domain_error(
                "representation: polyphase row is not unit on an orbit, ||v|| = " +
                std::to_string(nrm));
        worst = std::max(worst, std::abs(nrm - 1.0));
        for (auto& c : v) c /= nrm;
        const auto W = filters::unitary_with_first_row(v);
        for (int k = 0; k < n1; ++k)
            for (int j = 0; j < n1; ++j)
                rep.filter_values[k][static_cast<size_t>(o.members[j])] =
                    W[static_cast<size_t>(k) * n1 + j] * unscale / std::sqrt(vc.poly_w[j]);
    }
    rep.max_renormalization = worst;
    return rep;
}

}  // namespace

Representation make_representation_random(const RepConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n1 = cfg.nu + 1;
    return assemble(cfg, [&](const MapGrid&, const Orbit&) {
        std::vector<complex_t> v(n1);
        for (auto& c : v) c = complex_t(gauss(eng), gauss(eng));
        double nsq = 0.0;
        for (const auto& c : v) nsq += std::norm(c);
        for (auto& c : v) c /= std::sqrt(nsq);
        return v;
    });
}

Representation make_representation_from_m0(const RepConfig& cfg, const filters::FilterFn& m0) {
    const auto vc = variant_constants(cfg);
    const int n1 = cfg.nu + 1;
    const double pre = 1.0 / std::sqrt(vc.norm_const * n1);
    return assemble(cfg, [&, pre](const MapGrid& g, const Orbit& o) {
        std::vector<complex_t> v(n1);
        for (int j = 0; j < n1; ++j)
            v[j] = pre * std::sqrt(vc.poly_w[j]) * m0(g.points[static_cast<size_t>(o.members[j])]);
        return v;
    });
}

Representation make_representation_from_orbit_samples(
    const RepConfig& cfg, const std::vector<std::vector<std::vector<complex_t>>>& samples) {
    const auto vc = variant_constants(cfg);
    Representation rep;
    rep.cfg = cfg;
    rep.norm_const = vc.norm_const;
    rep.adjoint_const = vc.adjoint_const;
    rep.rho = vc.rho;
    rep.beta = vc.beta;
    rep.grid = build_grid(cfg, vc);
    const int n1 = cfg.nu + 1;
    const auto orbits = collect_orbits(rep.grid, cfg.nu);
    if (samples.size() != orbits.size())
        throw std::invalid_argument("make_representation_from_orbit_samples: orbit count mismatch");
    rep.filter_values.assign(n1, std::vector<complex_t>(rep.grid.n, complex_t(kNaN, kNaN)));
    for (size_t o = 0; o < orbits.size(); ++o) {
        if (static_cast<int>(samples[o].size()) != n1)
            throw std::invalid_argument("make_representation_from_orbit_samples: bad filter count");
        for (int k = 0; k < n1; ++k) {
            if (static_cast<int>(samples[o][k].size()) != n1)
                throw std::invalid_argument("make_representation_from_orbit_samples: bad row size");
            for (int j = 0; j < n1; ++j)
                rep.filter_values[k][static_cast<size_t>(orbits[o].members[j])] =
                    samples[o][k][j];
        }
    }
    return rep;
}

Representation make_representation_from_bank(const RepConfig& cfg,
                                             const filters::FilterBank& bank) {
    if (!bank.is_analytic())
        throw std::invalid_argument("make_representation_from_bank: bank must be analytic");
    if (bank.nu() != cfg.nu) throw std::invalid_argument("make_representation_from_bank: nu mismatch");
    const auto vc = variant_constants(cfg);
    Representation rep;
    rep.cfg = cfg;
    rep.norm_const = vc.norm_const;
    rep.adjoint_const = vc.adjoint_const;
    rep.rho = vc.rho;
    rep.beta = vc.beta;
    rep.grid = build_grid(cfg, vc);
    const int n1 = cfg.nu + 1;
    rep.filter_values.assign(n1, std::vector<complex_t>(rep.grid.n));
    for (int k = 0; k < n1; ++k)
        for (size_t i = 0; i < rep.grid.n; ++i)
            rep.filter_values[k][i] = bank.analytic[k](rep.grid.points[i]);
    return rep;
}

std::vector<complex_t> apply_S(const Representation& rep, int k,
                               const std::vector<complex_t>& xi) {
    if (k < 0 || k > rep.nu()) throw std::invalid_argument("apply_S: filter index out of range");
    if (xi.size() != rep.grid.n) throw GridError("apply_S: sample vector does not match grid");
    std::vector<complex_t> out(rep.grid.n, complex_t(0.0, 0.0));
    for (size_t i = 0; i < rep.grid.n; ++i) {
        const long s = rep.grid.sigma[i];
        if (s < 0) continue;
        const complex_t m = rep.filter_values[static_cast<size_t>(k)][i];
        if (std::isnan(m.real())) continue;  // outside completion coverage
        out[i] = m * xi[static_cast<size_t>(s)];
    }
    return out;
}

std::vector<complex_t> apply_S_adjoint(const Representation& rep, int k,
                                       const std::vector<complex_t>& xi) {
    if (k < 0 || k > rep.nu())
        throw std::invalid_argument("apply_S_adjoint: filter index out of range");
    if (xi.size() != rep.grid.n)
        throw GridError("apply_S_adjoint: sample vector does not match grid");
    const int n1 = rep.nu() + 1;
    std::vector<complex_t> out(rep.grid.n, complex_t(0.0, 0.0));
    for (size_t i = 0; i < rep.grid.n; ++i) {
        complex_t acc = 0.0;
        bool ok = true;
        for (int r = 0; r < n1; ++r) {
            const long b = rep.grid.branch[r][i];
            if (b < 0) {
                ok = false;
                break;
            }
            const complex_t m = rep.filter_values[static_cast<size_t>(k)][static_cast<size_t>(b)];
            if (std::isnan(m.real())) {
                ok = false;
                break;
            }
            acc += rep.beta[static_cast<size_t>(r)] * std::conj(m) * xi[static_cast<size_t>(b)];
        }
        if (ok) out[i] = acc;
    }
    return out;
}

complex_t rep_inner(const Representation& rep, const std::vector<complex_t>& a,
                    const std::vector<complex_t>& b) {
    complex_t acc = 0.0;
    for (size_t i = 0; i < rep.grid.n; ++i)
        acc += rep.grid.weights[i] * std::conj(a[i]) * b[i];
    return acc;
}

double rep_norm(const Representation& rep, const std::vector<complex_t>& a) {
    return std::sqrt(std::abs(rep_inner(rep, a, a).real()));
}

RelationReport relation_report(const Representation& rep, int n_tests, std::uint64_t seed) {
    if (n_tests < 1) throw std::invalid_argument("relation_report: n_tests >= 1");
    RelationReport rr;
    rr.test_count = n_tests;
    rr.seed = seed;
    rr.grid_descriptor = rep.grid.descriptor;
    rr.rho_convention = rep.cfg.convention == RhoConvention::GeometricWeights ? "geometric_weights"
                                                                          : "probability";
    switch (rep.cfg.variant) {
        case RepVariant::ClassicalC: rr.variant = "classical_c"; break;
        case RepVariant::QDeformedCq: rr.variant = "q_deformed_cq"; break;
        case RepVariant::AnnularDq: rr.variant = "annular_dq"; break;
    }
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n1 = rep.nu() + 1;
    // support: nodes where both relation chains stay on the grid
    std::vector<size_t> support;
    {
        std::vector<char> is_iso(rep.grid.n, 0);
        for (size_t i : rep.grid.isometry_nodes) is_iso[i] = 1;
        for (size_t i : rep.grid.completeness_nodes)
            if (is_iso[i]) support.push_back(i);
    }
    if (support.empty()) throw GridError("relation_report: empty interior sub-grid");
    double iso = 0.0, comp = 0.0;
    for (int t = 0; t < n_tests; ++t) {
        std::vector<complex_t> xi(rep.grid.n, complex_t(0.0, 0.0));
        for (size_t i : support) xi[i] = complex_t(gauss(eng), gauss(eng));
        const double nxi = rep_norm(rep, xi);
        // isometry pairs
        std::vector<std::vector<complex_t>> Skxi(n1);
        for (int k = 0; k < n1; ++k) Skxi[k] = apply_S(rep, k, xi);
        for (int k = 0; k < n1; ++k) {
            for (int kp = 0; kp < n1; ++kp) {
                auto v = apply_S_adjoint(rep, k, Skxi[kp]);
                if (k == kp)
                    for (size_t i : rep.grid.isometry_nodes) v[i] -= xi[i];
                // restrict to the interior where the composition is defined
                std::vector<complex_t> d(rep.grid.n, complex_t(0.0, 0.0));
                for (size_t i : rep.grid.isometry_nodes) d[i] = v[i];
                iso = std::max(iso, rep_norm(rep, d) / nxi);
            }
        }
        // completeness
        std::vector<complex_t> sum(rep.grid.n, complex_t(0.0, 0.0));
        for (int k = 0; k < n1; ++k) {
            const auto a = apply_S_adjoint(rep, k, xi);
            const auto b = apply_S(rep, k, a);
            for (size_t i = 0; i < rep.grid.n; ++i) sum[i] += b[i];
        }
        std::vector<complex_t> d(rep.grid.n, complex_t(0.0, 0.0));
        for (size_t i : rep.grid.completeness_nodes) d[i] = sum[i] - xi[i];
        comp = std::max(comp, rep_norm(rep, d) / nxi);
    }
    rr.max_isometry_residual = iso;
    rr.completeness_residual = comp;
    return rr;
}

SelfSimilarityReport measure_selfsimilarity_check(const Representation& rep, int n_cells) {
    SelfSimilarityReport rr;
    rr.rho = rep.rho;
    const int n1 = rep.nu() + 1;
    // cells: slices of the branch-defined node set
    std::vector<size_t> branch_defined;
    for (size_t i = 0; i < rep.grid.n; ++i) {
        bool full = true;
        for (int r = 0; r < n1; ++r) full = full && rep.grid.branch[r][i] >= 0;
        if (full) branch_defined.push_back(i);
    }
    const size_t per = std::max<size_t>(1, branch_defined.size() / std::max(1, n_cells));
    for (size_t c0 = 0; c0 < branch_defined.size(); c0 += per) {
        std::vector<double> row(n1, 0.0);
        double mass = 0.0;
        std::vector<double> img(n1, 0.0);
        for (size_t j = c0; j < std::min(branch_defined.size(), c0 + per); ++j) {
            const size_t i = branch_defined[j];
            mass += rep.grid.physical[i];
            for (int r = 0; r < n1; ++r)
                img[r] += rep.grid.physical[static_cast<size_t>(rep.grid.branch[r][i])];
        }
        if (mass > 0.0)
            for (int r = 0; r < n1; ++r) row[r] = img[r] / mass;
        rr.ratios.push_back(std::move(row));
        if (static_cast<int>(rr.ratios.size()) >= n_cells) break;
    }
    // change-of-variables identity at f = 1: both sides are multiples of the
    // total mass, so the residual isolates |1 - sum rho_r|
    double rho_sum = 0.0;
    for (double r : rep.rho) rho_sum += r;
    rr.f1_residual = std::abs(1.0 - rho_sum);
    // five fixed test functions, evaluated through the branch maps
    const std::vector<std::function<double(complex_t)>> tests = {
        [](complex_t z) { return 1.0 / (1.0 + std::norm(z)); },
        [](complex_t z) { return std::abs(z); },
        [](complex_t z) { return std::exp(-std::norm(z)); },
        [](complex_t z) { return z.real() * z.real(); },
        [](complex_t z) { return 1.0 + 0.5 * z.imag(); },
    };
    for (const auto& f : tests) {
        double lhs = 0.0, rhs = 0.0;
        for (size_t i : branch_defined) {
            lhs += rep.grid.physical[i] * f(rep.grid.points[i]);
            for (int r = 0; r < n1; ++r)
                rhs += rep.rho[static_cast<size_t>(r)] * rep.grid.physical[i] *
                       f(rep.grid.points[static_cast<size_t>(rep.grid.branch[r][i])]);
        }
        rr.test_fn_residuals.push_back(std::abs(lhs - rhs) / std::max(1e-300, std::abs(lhs)));
    }
    return rr;
}

}  // namespace hmra::cuntz
