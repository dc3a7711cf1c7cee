// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <cmath>
#include <vector>

#include "hmra/series.hpp"

namespace hmra {

/// Structured radial grids: the universal carriers for sampled functions.
struct RadialGrid {
    enum class Kind { Uniform, QGeometric, ScaleGeometric };

    Kind kind = Kind::Uniform;
    std::vector<double> nodes;  // strictly increasing, all > 0

    // QGeometric: nodes are exactly {q^k : k_min <= k <= k_max}, descending in k.
    double q = 0.0;
    int k_min = 0, k_max = 0;

    // ScaleGeometric: nodes are {base^k}, base = nu+1 (carrier for the scale
    // operator, which acts as an exact index shift here).
    int base = 0;

    // Uniform: nodes are {x0 + i*h}.
    double x0 = 0.0, h = 0.0;

    static RadialGrid uniform(double x0, double h, int n);
    static RadialGrid q_geometric(double q, int k_min, int k_max);
    static RadialGrid scale_geometric(int base, int k_min, int k_max);

    size_t size() const { return nodes.size(); }
    /// QGeometric/ScaleGeometric: node index for exponent k.
    size_t index_of_exponent(int k) const;
    int exponent_of_index(size_t i) const;
};

struct SampledRadialFunction {
    RadialGrid grid;
    std::vector<complex_t> values;  // one value per node, finite

    SampledRadialFunction() = default;
    SampledRadialFunction(RadialGrid g, std::vector<complex_t> v);
    void validate() const;
};

/// Polar tensor grid: radial grid x angular roots of unity e^{2*pi*i*j/M}.
struct PolarGrid {
    RadialGrid radial;
    int M = 1;  // positive multiple of nu+1

    PolarGrid() = default;
    PolarGrid(RadialGrid r, int M_, int nu);
    size_t size() const { return radial.size() * static_cast<size_t>(M); }
    size_t node(size_t ri, int l) const { return ri * static_cast<size_t>(M) + static_cast<size_t>(l); }
    complex_t point(size_t ri, int l) const;
};

struct PolarSampledFunction {
    PolarGrid grid;
    std::vector<complex_t> values;
};

}  // namespace hmra
