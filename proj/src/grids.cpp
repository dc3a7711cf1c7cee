// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/grids.hpp"

#include <stdexcept>

namespace hmra {

RadialGrid RadialGrid::uniform(double x0, double h, int n) {
    if (!(h > 0.0) || n < 1 || !(x0 + h > 0.0))
        throw std::invalid_argument("RadialGrid::uniform: bad parameters");
    RadialGrid g;
    g.kind = Kind::Uniform;
    g.x0 = x0;
    g.h = h;
    g.nodes.resize(n);
    for (int i = 0; i < n; ++i) g.nodes[i] = x0 + (i + 1) * h;  // all nodes > 0
    return g;
}

RadialGrid RadialGrid::q_geometric(double q, int k_min, int k_max) {
    require_q(q);
    if (k_min > k_max) throw std::invalid_argument("RadialGrid::q_geometric: k_min > k_max");
    RadialGrid g;
    g.kind = Kind::QGeometric;
    g.q = q;
    g.k_min = k_min;
    g.k_max = k_max;
    // q^k descends in k; store ascending.
    for (int k = k_max; k >= k_min; --k) g.nodes.push_back(std::pow(q, k));
    return g;
}

RadialGrid RadialGrid::scale_geometric(int base, int k_min, int k_max) {
    if (base < 2) throw std::invalid_argument("RadialGrid::scale_geometric: base >= 2");
    if (k_min > k_max) throw std::invalid_argument("RadialGrid::scale_geometric: k_min > k_max");
    RadialGrid g;
    g.kind = Kind::ScaleGeometric;
    g.base = base;
    g.k_min = k_min;
    g.k_max = k_max;
    for (int k = k_min; k <= k_max; ++k)
        g.nodes.push_back(std::pow(static_cast<double>(base), k));
    return g;
}

size_t RadialGrid::index_of_exponent(int k) const {
    if (kind == Kind::QGeometric) {
        if (k < k_min || k > k_max) throw GridError("radial exponent off grid");
        return static_cast<size_t>(k_max - k);
    }
    if (kind == Kind::ScaleGeometric) {
        if (k < k_min || k > k_max) throw GridError("radial exponent off grid");
        return static_cast<size_t>(k - k_min);
    }
    throw GridError("index_of_exponent: grid has no exponent structure");
}

int RadialGrid::exponent_of_index(size_t i) const {
    if (kind == Kind::QGeometric) return k_max - static_cast<int>(i);
    if (kind == Kind::ScaleGeometric) return k_min + static_cast<int>(i);
    throw GridError("exponent_of_index: grid has no exponent structure");
}

SampledRadialFunction::SampledRadialFunction(RadialGrid g, std::vector<complex_t> v)
    : grid(std::move(g)), values(std::move(v)) {
    validate();
}

void SampledRadialFunction::validate() const {
    if (values.size() != grid.size())
        throw std::invalid_argument("SampledRadialFunction: values/grid size mismatch");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("SampledRadialFunction: non-finite value");
}

PolarGrid::PolarGrid(RadialGrid r, int M_, int nu) : radial(std::move(r)), M(M_) {
    if (M <= 0 || M % (nu + 1) != 0)
        throw std::invalid_argument("PolarGrid: M must be a positive multiple of nu+1");
}

complex_t PolarGrid::point(size_t ri, int l) const {
    const double r = radial.nodes[ri];
    const double th = 2.0 * pi * l / M;
    return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace hmra
