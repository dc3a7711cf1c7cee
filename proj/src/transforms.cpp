// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hmra/special_functions.hpp"

namespace hmra::transforms {

namespace {

struct GaussLegendre {
    std::array<double, 16> x{};  // nodes on [-1, 1]
    std::array<double, 16> w{};
};

// Newton iteration on P_16; standard construction.
const GaussLegendre& gl16() {
    static const GaussLegendre table = [] {
        GaussLegendre g;
        const int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double p0 = 0.0, p1 = 0.0, dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            g.x[i] = -x;
            g.x[n - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            g.w[i] = w;
            g.w[n - 1 - i] = w;
        }
        return g;
    }();
    return table;
}

complex_t gl_panel(const std::function<complex_t(double)>& f, double a, double b) {
    const auto& g = gl16();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    complex_t s = 0.0;
    for (int i = 0; i < 16; ++i) s += g.w[i] * f(c + h * g.x[i]);
    return h * s;
}

std::mutex zeros_mutex;
std::map<double, std::vector<double>> zeros_cache;

}  // namespace

std::vector<double> bessel_zeros(double alpha, double upto) {
    std::lock_guard<std::mutex> lock(zeros_mutex);
    auto& cached = zeros_cache[alpha];
    double start = 1e-6;
    if (!cached.empty() && cached.back() >= upto) {
        std::vector<double> out;
        for (double z : cached)
            if (z <= upto) out.push_back(z);
        return out;
    }
    if (!cached.empty()) start = cached.back() + 1e-6;
    const double step = 0.25 * pi;
    double x0 = start;
    double f0 = special::bessel_j(alpha, x0);
    while (x0 < upto) {
        double x1 = std::min(x0 + step, upto);
        double f1 = special::bessel_j(alpha, x1);
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = special::bessel_j(alpha, mid);
                if ((flo < 0.0) != (fm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if (hi - lo < 1e-15 * hi) break;
            }
            cached.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
        if (x1 >= upto) break;
    }
    std::vector<double> out;
    for (double z : cached)
        if (z <= upto) out.push_back(z);
    return out;
}

namespace {

// Panel boundaries for integral_0^X of a J_alpha(x t)-oscillatory integrand:
// split at the kernel zeros, then refine per config.
std::vector<double> oscillatory_panels(double alpha, double t, double X,
                                       const QuadratureConfig& cfg) {
    std::vector<double> bounds{0.0};
    if (t > 0.0) {
        for (double z : bessel_zeros(alpha, t * X)) bounds.push_back(z / t);
    }
    bounds.push_back(X);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    const int sub = std::max(1, cfg.panels_per_bessel_period / 2);
    std::vector<double> out;
    // graded refinement toward 0: fractional orders put an x^{alpha+1}
    // factor in the integrand whose higher derivatives blow up there
    out.push_back(0.0);
    for (int lvl = 16; lvl >= 1; --lvl) {
        const double v = bounds[1] * std::ldexp(1.0, -lvl);
        if (v > out.back()) out.push_back(v);
    }
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        for (int s = 0; s <= sub; ++s) {
            const double v = bounds[i] + (bounds[i + 1] - bounds[i]) * s / sub;
            if (v > out.back()) out.push_back(v);
        }
    }
    return out;
}

QuadResult bessel_weighted_integral(const RadialFn& f, double alpha, double t, double X,
                                    const QuadratureConfig& cfg) {
    QuadResult res;
    if (t < 0.0) throw std::domain_error("hankel transform: requires t >= 0");
    if (!(X > 0.0)) throw std::domain_error("hankel transform: support_end must be > 0");
    const auto integrand = [&](double x) -> complex_t {
        return special::bessel_j(alpha, x * t) * f(x) * x;
    };
    const auto panels = oscillatory_panels(alpha, t, X, cfg);
    complex_t sum = 0.0;
    for (size_t i = 0; i + 1 < panels.size(); ++i) sum += gl_panel(integrand, panels[i], panels[i + 1]);
    res.value = sum;
    // Tail heuristic: is the integrand still alive at the cut?
    double tail = 0.0;
    for (double frac : {0.9, 0.95, 1.0}) tail = std::max(tail, std::abs(f(frac * X)) * X);
    res.tail_estimate = tail;
    res.tail_warning = tail > 100.0 * cfg.abs_tol;
    return res;
}

}  // namespace

QuadResult hankel_forward(const RadialFn& f, double alpha, double t,
                          const QuadratureConfig& cfg) {
    require_order(alpha);
    return bessel_weighted_integral(f, alpha, t, cfg.support_end, cfg);
}

QuadResult hankel_forward(const SampledRadialFunction& f, double alpha, double t,
                          const QuadratureConfig& cfg) {
    if (f.grid.kind != RadialGrid::Kind::Uniform)
        throw GridError("hankel_forward: sampled input requires a uniform grid");
    const double a = f.grid.nodes.front(), b = f.grid.nodes.back();
    TabulatedFunction tab(a, b, f.values);
    QuadratureConfig local = cfg;
    local.support_end = std::min(cfg.support_end, b);
    return hankel_forward(
        [&](double x) -> complex_t {
            if (x < a || x > b) return 0.0;
            return tab(x);
        },
        alpha, t, local);
}

QuadResult hankel_inverse(const RadialFn& g, double alpha, double y,
                          const QuadratureConfig& cfg) {
    require_order(alpha);
    return bessel_weighted_integral(g, alpha, y, cfg.support_end, cfg);
}

double hankel_of_monomial_step(double a, double nu, double t) {
    if (!(a > 0.0)) throw std::domain_error("hankel_of_monomial_step: requires a > 0");
    require_order(nu);
    if (t < 0.0) throw std::domain_error("hankel_of_monomial_step: requires t >= 0");
    if (t == 0.0) {
        // limit of a^{nu+1} J_{nu+1}(a t) / t: nonzero only at nu = 0
        if (nu == 0.0) return 0.5 * a * a;
        return 0.0;
    }
    return std::pow(a, nu + 1.0) * special::bessel_j(nu + 1.0, a * t) / t;
}

double plancherel_residual(const RadialFn& f, const RadialFn& g, double alpha,
                           const QuadratureConfig& cfg) {
    require_order(alpha);
    const double X = cfg.support_end;
    const double T = cfg.transform_end > 0.0 ? cfg.transform_end : cfg.support_end;
    // right side: integral x f g
    const auto rhs_integrand = [&](double x) -> complex_t { return x * f(x) * g(x); };
    complex_t rhs = 0.0;
    const int pan = 256;
    for (int i = 0; i < pan; ++i)
        rhs += gl_panel(rhs_integrand, X * i / pan, X * (i + 1) / pan);
    // left side: integral rho F G with the transforms tabulated once
    const auto F = tabulate([&](double rho) { return hankel_forward(f, alpha, rho, cfg).value; },
                            0.0, T, cfg.tab_points);
    const auto G = tabulate([&](double rho) { return hankel_forward(g, alpha, rho, cfg).value; },
                            0.0, T, cfg.tab_points);
    const auto lhs_integrand = [&](double rho) -> complex_t { return rho * F(rho) * G(rho); };
    complex_t lhs = 0.0;
    const int tpan = std::max(pan, cfg.tab_points / 4);
    for (int i = 0; i < tpan; ++i)
        lhs += gl_panel(lhs_integrand, T * i / tpan, T * (i + 1) / tpan);
    return std::abs(lhs - rhs);
}

complex_t hankel_forward_improper(const RadialFn& f, double alpha, double t, double x0,
                                  int segments, int levels, const QuadratureConfig& cfg) {
    require_order(alpha);
    if (!(t > 0.0)) throw std::domain_error("hankel_forward_improper: requires t > 0");
    QuadratureConfig head = cfg;
    head.support_end = x0;
    complex_t acc = bessel_weighted_integral(f, alpha, t, x0, head).value;
    // partial sums at consecutive kernel zeros past x0
    auto zs = bessel_zeros(alpha, t * x0 + (segments + 2) * pi + 10.0);
    std::vector<double> cuts;
    for (double z : zs)
        if (z / t > x0) cuts.push_back(z / t);
    if (static_cast<int>(cuts.size()) < segments + 1)
        throw AccuracyError("hankel_forward_improper: not enough kernel zeros", acc);
    const auto integrand = [&](double x) -> complex_t {
        return special::bessel_j(alpha, x * t) * f(x) * x;
    };
    std::vector<complex_t> partial(segments + 1);
    complex_t run = acc + gl_panel(integrand, x0, cuts[0]);
    partial[0] = run;
    for (int i = 1; i <= segments; ++i) {
        run += gl_panel(integrand, cuts[i - 1], cuts[i]);
        partial[i] = run;
    }
    // iterated averaging of the alternating partial sums
    for (int l = 0; l < levels; ++l) {
        if (partial.size() < 2) break;
        for (size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return partial.front();
}

complex_t jackson_q_integral(const RadialFn& f, double q, int k_upper,
                             const SeriesPolicy& pol) {
    require_q(q);
    const int cap = std::max(pol.max_terms, 200000);
    complex_t sum = 0.0;
    double qk = std::pow(q, k_upper);
    double prev = -1.0;
    int nondecreasing = 0, small_run = 0;
    for (int i = 0; i < cap; ++i) {
        const complex_t term = f(qk) * qk;
        sum += term;
        const double at = std::abs(term);
        if (prev >= 0.0 && at >= prev) {
            if (++nondecreasing >= 50)
                throw AccuracyError("jackson_q_integral: divergent tail detected", (1.0 - q) * sum);
        } else {
            nondecreasing = 0;
        }
        prev = at;
        if (at <= pol.rel_tail_tol * std::abs(sum)) {
            if (++small_run >= 3) return (1.0 - q) * sum;
        } else {
            small_run = 0;
        }
        qk *= q;
    }
    throw AccuracyError("jackson_q_integral: did not converge", (1.0 - q) * sum);
}

complex_t jackson_q_integral_fixed(const RadialFn& f, double q, int k_upper, int n_terms) {
    require_q(q);
    complex_t sum = 0.0;
    double qk = std::pow(q, k_upper);
    for (int i = 0; i < n_terms; ++i) {
        sum += f(qk) * qk;
        qk *= q;
    }
    return (1.0 - q) * sum;
}

complex_t jackson_q_interval(const RadialFn& f, double q, int k_a, int k_b,
                             const SeriesPolicy& pol) {
    if (k_a < k_b) throw std::domain_error("jackson_q_interval: requires k_a >= k_b (a <= b)");
    // [0, q^{k_b}] minus [0, q^{k_a}]; identical summation order makes the
    // shared tail cancel exactly.
    return jackson_q_integral(f, q, k_b, pol) - jackson_q_integral(f, q, k_a, pol);
}

namespace {

void require_q_grid(const SampledRadialFunction& f, double q) {
    if (f.grid.kind != RadialGrid::Kind::QGeometric || f.grid.q != q)
        throw GridError("q-Hankel transform: function must live on the matching q-geometric grid");
}

}  // namespace

complex_t q_hankel_forward(const SampledRadialFunction& f, double alpha, double q, int n) {
    require_q_grid(f, q);
    complex_t sum = 0.0;
    for (size_t i = 0; i < f.grid.size(); ++i) {
        const int k = f.grid.exponent_of_index(i);
        if (f.values[i] == complex_t(0.0, 0.0)) continue;
        sum += std::pow(q, 2.0 * k) * special::q_hankel_kernel(alpha, k + n, q) * f.values[i];
    }
    return sum;
}

complex_t q_hankel_inverse(const SampledRadialFunction& g, double alpha, double q, int k) {
    require_q_grid(g, q);
    complex_t sum = 0.0;
    for (size_t i = 0; i < g.grid.size(); ++i) {
        const int n = g.grid.exponent_of_index(i);
        if (g.values[i] == complex_t(0.0, 0.0)) continue;
        sum += std::pow(q, 2.0 * n) * special::q_hankel_kernel(alpha, k + n, q) * g.values[i];
    }
    return sum;
}

SampledRadialFunction q_hankel_forward_range(const SampledRadialFunction& f, double alpha,
                                             double q, int n_lo, int n_hi) {
    RadialGrid out = RadialGrid::q_geometric(q, n_lo, n_hi);
    std::vector<complex_t> vals(out.size());
    for (size_t i = 0; i < out.size(); ++i)
        vals[i] = q_hankel_forward(f, alpha, q, out.exponent_of_index(i));
    return SampledRadialFunction(std::move(out), std::move(vals));
}

QRoundTrip q_hankel_round_trip(const SampledRadialFunction& f, double alpha, double q,
                               double abs_tol) {
    require_q_grid(f, q);
    const int k_lo = f.grid.k_min, k_hi = f.grid.k_max;
    std::vector<complex_t> prev;
    QRoundTrip rt;
    for (int K = 16; K <= 512; K *= 2) {
        const auto g = q_hankel_forward_range(f, alpha, q, k_lo - K, k_hi + K);
        std::vector<complex_t> rec(f.grid.size());
        for (size_t i = 0; i < f.grid.size(); ++i)
            rec[i] = q_hankel_inverse(g, alpha, q, f.grid.exponent_of_index(i));
        if (!prev.empty()) {
            double d = 0.0;
            for (size_t i = 0; i < rec.size(); ++i) d = std::max(d, std::abs(rec[i] - prev[i]));
            if (d < abs_tol) {
                rt.reconstructed = SampledRadialFunction(f.grid, rec);
                rt.K_used = K;
                double err = 0.0;
                for (size_t i = 0; i < rec.size(); ++i)
                    err = std::max(err, std::abs(rec[i] - f.values[i]));
                rt.max_error = err;
                return rt;
            }
        }
        prev = std::move(rec);
    }
    throw AccuracyError("q_hankel_round_trip: window doubling did not stabilize", 0.0);
}

complex_t discrete_hankel_orthogonality(int m, int n, double x, double q, int K,
                                        const SeriesPolicy& pol) {
    require_q(q);
    if (!(std::abs(x) < 1.0 / std::sqrt(q)))
        throw std::domain_error("discrete_hankel_orthogonality: requires |x| < q^{-1/2}");
    if (K < 1) throw std::domain_error("discrete_hankel_orthogonality: requires K >= 1");
    double sum = 0.0;
    for (int k = -K; k <= K; ++k)
        sum += special::orthogonality_factor(x, q, k + n, pol) *
               special::orthogonality_factor(x, q, k + m, pol);
    return sum;
}

complex_t integrate_panels(const std::function<complex_t(double)>& f, double a, double b,
                           int panels) {
    if (panels < 1) throw std::invalid_argument("integrate_panels: panels >= 1");
    complex_t s = 0.0;
    for (int i = 0; i < panels; ++i)
        s += gl_panel(f, a + (b - a) * i / panels, a + (b - a) * (i + 1) / panels);
    return s;
}

TabulatedFunction::TabulatedFunction(double a, double b, std::vector<complex_t> vals)
    : a_(a), b_(b), vals_(std::move(vals)) {
    if (vals_.size() < 4 || !(b > a))
        throw std::invalid_argument("TabulatedFunction: need >= 4 points and b > a");
    h_ = (b_ - a_) / static_cast<double>(vals_.size() - 1);
}

complex_t TabulatedFunction::operator()(double x) const {
    const int n = static_cast<int>(vals_.size());
    double u = (x - a_) / h_;
    int i = static_cast<int>(std::floor(u)) - 1;
    i = std::clamp(i, 0, n - 4);
    // 4-point Lagrange on nodes i .. i+3
    const double s = u - i;
    const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return l0 * vals_[i] + l1 * vals_[i + 1] + l2 * vals_[i + 2] + l3 * vals_[i + 3];
}

TabulatedFunction tabulate(const std::function<complex_t(double)>& f, double a, double b,
                           int n) {
    std::vector<complex_t> vals(n + 1);
    for (int i = 0; i <= n; ++i) vals[i] = f(a + (b - a) * i / n);
    return TabulatedFunction(a, b, std::move(vals));
}

}  // namespace hmra::transforms
