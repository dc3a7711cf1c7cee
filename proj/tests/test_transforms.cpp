#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "hmra/special_functions.hpp"
#include "hmra/transforms.hpp"
#include "test_helpers.hpp"

using namespace hmra;
using namespace hmra::transforms;

namespace {

RadialFn gaussian_profile(double nu) {
    return [nu](double x) { return complex_t(std::pow(x, nu) * std::exp(-x * x), 0.0); };
}

RadialFn weighted_cell(double nu, double a, double b) {
    return [=](double x) {
        return complex_t((x >= a && x <= b) ? std::pow(x, nu) : 0.0, 0.0);
    };
}

// Improper integral of a multi-frequency oscillatory integrand with an
// algebraic tail: half-period shift averaging kills each listed frequency,
// then three-point Richardson in T removes the smooth 1/T and 1/T^2 parts.
double tail_resolved_integral(const std::function<double(double)>& f,
                              const std::vector<double>& freqs, double T) {
    const auto truncated = [&](double upper) {
        return integrate_panels([&](double x) { return complex_t(f(x), 0.0); }, 1e-12, upper,
                                static_cast<int>(upper / 0.2) + 1)
            .real();
    };
    const auto shift_avg = [&](double base) {
        std::vector<double> shifts{0.0};
        for (double w : freqs) {
            std::vector<double> next;
            for (double s : shifts) {
                next.push_back(s);
                next.push_back(s + pi / w);
            }
            shifts = std::move(next);
        }
        double acc = 0.0;
        for (double s : shifts) acc += truncated(base + s);
        return acc / static_cast<double>(shifts.size());
    };
    const double i1 = shift_avg(T), i2 = shift_avg(2.0 * T), i4 = shift_avg(4.0 * T);
    return (8.0 * i4 - 6.0 * i2 + i1) / 3.0;
}

}  // namespace

TEST_CASE("bessel_zeros: bracketing finds genuine ordered zeros") {
    const auto z0 = bessel_zeros(0.0, 30.0);
    REQUIRE(z0.size() >= 9);
    CHECK(std::abs(z0[0] - testkit::frozen::bessel_zero_j0_1) < 1e-12);
    for (size_t i = 0; i < z0.size(); ++i) {
        CHECK(std::abs(special::bessel_j(0.0, z0[i])) < 1e-12);
        if (i > 0) CHECK(z0[i] > z0[i - 1] + 2.0);
    }
    const auto z25 = bessel_zeros(2.5, 40.0);
    for (double z : z25) CHECK(std::abs(special::bessel_j(2.5, z)) < 1e-11);
}

TEST_CASE("hankel_forward: zero input, domain errors, tail warning") {
    QuadratureConfig cfg;
    const auto zero = [](double) { return complex_t(0.0, 0.0); };
    CHECK(std::abs(hankel_forward(zero, 1.0, 2.0, cfg).value) == 0.0);
    CHECK_THROWS_AS(hankel_forward(zero, 1.0, -1.0, cfg), std::domain_error);
    // non-decaying profile past the cut flags the result
    cfg.support_end = 10.0;
    const auto flat = [](double) { return complex_t(1.0, 0.0); };
    CHECK(hankel_forward(flat, 0.0, 1.0, cfg).tail_warning);
    CHECK_FALSE(hankel_forward(gaussian_profile(0.0), 0.0, 1.0, cfg).tail_warning);
}

TEST_CASE("hankel_forward matches the closed-form step transform") {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0})
        for (double nu : {0.0, 1.0, 2.0}) {
            QuadratureConfig cfg;
            cfg.support_end = a;  // integrand supported on [0, a]
            for (double t = 0.1; t <= 10.0; t += 0.9) {
                const auto quad = hankel_forward(weighted_cell(nu, 0.0, a), nu, t, cfg).value;
                const double closed = hankel_of_monomial_step(a, nu, t);
                worst = std::max(worst, std::abs(quad.real() - closed));
            }
        }
    CHECK(worst <= 1e-8);
}

TEST_CASE("hankel_of_monomial_step: exact small-t limits") {
    CHECK(hankel_of_monomial_step(1.5, 0.0, 0.0) == doctest::Approx(1.125).epsilon(1e-15));
    CHECK(hankel_of_monomial_step(1.5, 1.0, 0.0) == 0.0);
    CHECK(hankel_of_monomial_step(2.0, 2.0, 0.0) == 0.0);
    // quadrature oracle confirms the vanishing limit for nu > 0
    QuadratureConfig cfg;
    cfg.support_end = 1.5;
    const auto near0 = hankel_forward(weighted_cell(1.0, 0.0, 1.5), 1.0, 1e-6, cfg).value;
    CHECK(std::abs(near0) < 1e-5);
    CHECK(std::abs(hankel_of_monomial_step(1.0, 0.0, 1.0) -
                   special::bessel_j(1.0, 1.0)) < 1e-15);
}

TEST_CASE("improper transform of 1/x recovers 1/t") {
    for (double t : {0.5, 2.0, 5.0}) {
        const auto v = hankel_forward_improper([](double x) { return complex_t(1.0 / x, 0.0); },
                                               0.0, t, 30.0, 80, 14);
        CHECK(std::abs(v.real() - 1.0 / t) < 1e-8);
    }
}

TEST_CASE("hankel inversion round trip on a weighted gaussian") {
    const double nu = 1.0;
    QuadratureConfig fwd;
    fwd.support_end = 6.0;
    const double T = 14.0;
    const auto F = tabulate(
        [&](double t) { return hankel_forward(gaussian_profile(nu), nu, t, fwd).value; }, 0.0, T,
        2048);
    QuadratureConfig inv;
    inv.support_end = T;
    double worst = 0.0;
    for (double x = 0.1; x <= 3.0; x += 0.145) {
        const auto rec = hankel_inverse([&](double t) { return F(t); }, nu, x, inv).value;
        worst = std::max(worst, std::abs(rec - gaussian_profile(nu)(x)));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("hankel inversion of the weighted cell away from the jump") {
    const double nu = 1.0;
    const auto g = [&](double t) {
        return complex_t(hankel_of_monomial_step(1.0, nu, t), 0.0);  // exact transform
    };
    // the inverse integrand oscillates at the cross frequencies 1 +- x with a
    // 1/t envelope; resolve the truncated tail by shift averaging
    double worst = 0.0;
    for (double x : {0.2, 0.5, 0.8}) {  // continuity points, jump at 1 excluded
        const auto ig = [&](double t) {
            return (g(t) * special::bessel_j(nu, x * t) * t).real();
        };
        const double rec = tail_resolved_integral(ig, {1.0 - x, 1.0 + x}, 300.0);
        worst = std::max(worst, std::abs(rec - std::pow(x, nu)));
    }
    CHECK(worst <= 1e-4);
    QuadratureConfig inv;
    inv.support_end = 50.0;
    CHECK(std::abs(hankel_inverse([](double) { return complex_t(0.0, 0.0); }, 1.0, 0.7, inv)
                       .value) == 0.0);
}

TEST_CASE("plancherel pairing for decaying profiles") {
    // profiles flat to infinite order at 0: their transforms decay rapidly
    // for every order, so both truncated sides converge
    QuadratureConfig cfg;
    cfg.support_end = 6.0;
    cfg.transform_end = 40.0;
    cfg.tab_points = 1400;
    const auto flat = [](double x) { return std::exp(-x * x - 0.25 / (x * x)); };
    const std::vector<RadialFn> suite = {
        [&](double x) { return complex_t(flat(x), 0.0); },
        [&](double x) { return complex_t(x * x * flat(x), 0.0); },
        [&](double x) { return complex_t(std::exp(-1.5 * x * x - 0.25 / (x * x)), 0.0); },
        [&](double x) { return complex_t(std::cos(x) * flat(x), 0.0); },
        [&](double x) { return complex_t(flat(x) / (1.0 + x * x), 0.0); },
    };
    for (double alpha : {0.0, 0.5, 1.0, 2.0})
        for (const auto& f : suite)
            CHECK(plancherel_residual(f, f, alpha, cfg) <= 1e-6);
    // zero function: both sides vanish identically
    CHECK(plancherel_residual([](double) { return complex_t(0.0, 0.0); },
                              [&](double x) { return complex_t(flat(x), 0.0); }, 1.0,
                              cfg) <= 1e-12);
}

TEST_CASE("plancherel pairing of disjoint weighted cells") {
    // transforms in closed form; the spatial side vanishes exactly, so the
    // transform-domain pairing must vanish under tail averaging
    const double nu = 1.0;
    const auto F1 = [&](double t) { return hankel_of_monomial_step(1.0, nu, t); };
    const auto F2 = [&](double t) {
        return hankel_of_monomial_step(2.0, nu, t) - hankel_of_monomial_step(1.0, nu, t);
    };
    const auto integrand = [&](double rho) { return rho * F1(rho) * F2(rho); };
    // cross terms oscillate at 1 and 3 (cell widths 1 and 2), the squared
    // terms carry a non-oscillatory 1/rho^2 mean plus a frequency-2 part
    const double lhs = tail_resolved_integral(integrand, {1.0, 2.0, 3.0}, 400.0);
    CHECK(std::abs(lhs) <= 1e-6);
}

TEST_CASE("jackson integral: lattice monomials in closed form") {
    for (int nu = 1; nu <= 5; ++nu)
        for (double q : {0.3, 0.5, 0.9}) {
            const auto mono = [nu](double t) { return complex_t(std::pow(t, nu + 1.0), 0.0); };
            const double got = jackson_q_integral(mono, q, 0).real();
            const double want = (1.0 - q) / (1.0 - std::pow(q, nu + 2.0));
            CHECK(std::abs(got - want) <= 1e-14 * std::max(1.0, std::abs(want)));
            const double ann = jackson_q_interval([](double t) { return complex_t(t, 0.0); }, q,
                                                  1, 0)
                                   .real();
            CHECK(std::abs(ann - (1.0 - q)) <= 1e-14);
        }
    CHECK(jackson_q_integral([](double) { return complex_t(0.0, 0.0); }, 0.5, 0) ==
          complex_t(0.0, 0.0));
}

TEST_CASE("jackson integral: linearity and additivity with fixed summation order") {
    const double q = 0.7;
    const auto f = [](double t) { return complex_t(t * t, 0.5 * t); };
    const auto g = [](double t) { return complex_t(std::sin(t), 0.0); };
    const auto fg = [&](double t) { return f(t) + g(t); };
    const int n = 120;
    const auto lin = jackson_q_integral_fixed(fg, q, 0, n) -
                     jackson_q_integral_fixed(f, q, 0, n) - jackson_q_integral_fixed(g, q, 0, n);
    CHECK(std::abs(lin) < 1e-15);
    // interval additivity: [q^3, q] + [q, 1] = [q^3, 1]
    const auto a = jackson_q_interval(f, q, 3, 1) + jackson_q_interval(f, q, 1, 0);
    const auto b = jackson_q_interval(f, q, 3, 0);
    CHECK(std::abs(a - b) < 1e-15);
}

TEST_CASE("jackson integral: divergent tail detection") {
    const auto bad = [](double t) { return complex_t(1.0 / (t * t), 0.0); };
    CHECK_THROWS_AS(jackson_q_integral(bad, 0.5, 0), AccuracyError);
}

TEST_CASE("discrete q-transform pair: trivial and delta cases") {
    auto grid = RadialGrid::q_geometric(0.5, -3, 3);
    std::vector<complex_t> zeros(grid.size(), complex_t(0.0, 0.0));
    SampledRadialFunction z(grid, zeros);
    CHECK(q_hankel_forward(z, 0.5, 0.5, 2) == complex_t(0.0, 0.0));
    CHECK(q_hankel_inverse(z, 0.5, 0.5, -1) == complex_t(0.0, 0.0));
    // delta at the unit node comes back through the pair
    std::vector<complex_t> delta(grid.size(), complex_t(0.0, 0.0));
    delta[grid.index_of_exponent(0)] = 1.0;
    SampledRadialFunction d(grid, delta);
    const auto rt = q_hankel_round_trip(d, 0.5, 0.5, 1e-12);
    CHECK(rt.max_error <= 1e-10);
}

TEST_CASE("discrete q-transform pair: kernel symmetry") {
    // forward and inverse share the symmetric kernel, so exchanging the roles
    // of the index arguments gives identical sums
    auto grid = RadialGrid::q_geometric(0.6, -2, 4);
    auto vals = testkit::random_complex(grid.size(), 77);
    SampledRadialFunction f(grid, vals);
    for (int n : {-1, 0, 2})
        CHECK(q_hankel_forward(f, 1.0, 0.6, n) == q_hankel_inverse(f, 1.0, 0.6, n));
}

TEST_CASE("discrete q-transform: weighted norm preservation") {
    for (double q : {0.5, 0.8})
        for (double alpha : {0.5, 1.0}) {
            auto grid = RadialGrid::q_geometric(q, -2, 4);
            auto vals = testkit::random_complex(grid.size(), 1234);
            SampledRadialFunction f(grid, vals);
            double in_norm = 0.0;
            for (size_t i = 0; i < grid.size(); ++i)
                in_norm += std::pow(q, 2.0 * grid.exponent_of_index(i)) * std::norm(f.values[i]);
            const int K = 70;
            const auto g = q_hankel_forward_range(f, alpha, q, grid.k_min - K, grid.k_max + K);
            double out_norm = 0.0;
            for (size_t i = 0; i < g.grid.size(); ++i)
                out_norm +=
                    std::pow(q, 2.0 * g.grid.exponent_of_index(i)) * std::norm(g.values[i]);
            CHECK(std::abs(out_norm - in_norm) <= 1e-8 * in_norm);
        }
}

TEST_CASE("discrete q-transform approaches the continuum transform") {
    const double alpha = 1.0;
    QuadratureConfig cfg;
    cfg.support_end = 9.0;
    const auto f = gaussian_profile(alpha);
    double prev = 1e300;
    for (double q : {0.9, 0.99, 0.999}) {
        double err = 0.0;
        for (double lam : {0.5, 1.0, 1.5}) {
            // lattice sum of f(x) J((1-q) lam x; q^2) x under the lattice measure
            complex_t acc = 0.0;
            const int k_lo = static_cast<int>(std::floor(std::log(9.0) / std::log(q)));
            const int k_hi = static_cast<int>(std::ceil(std::log(1e-4) / std::log(q)));
            for (int k = k_lo; k <= k_hi; ++k) {
                const double x = std::pow(q, k);
                acc += f(x) *
                       special::q_bessel_hahn_exton(alpha, (1.0 - q) * lam * x, q * q) * x * x;
            }
            acc *= (1.0 - q);
            const auto classical = hankel_forward(f, alpha, lam, cfg).value;
            err = std::max(err, std::abs(acc - classical));
        }
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("discrete orthogonality sum: diagonal, off-diagonal, degenerate point") {
    for (double q : {0.25, 0.36})
        for (int m = -2; m <= 2; ++m) {
            CHECK(std::abs(discrete_hankel_orthogonality(m, m, 1.0, q, 80).real() - 1.0) <=
                  1e-10);
            if (m != 0)
                CHECK(std::abs(discrete_hankel_orthogonality(0, m, 1.0, q, 80).real()) <= 1e-10);
        }
    CHECK(std::abs(discrete_hankel_orthogonality(0, 1, 1.0, 0.25, 80).real()) <= 1e-10);
    // x = 0 collapses to a single surviving term
    CHECK(std::abs(discrete_hankel_orthogonality(1, 1, 0.0, 0.25, 40).real() - 1.0) <= 1e-12);
    CHECK(std::abs(discrete_hankel_orthogonality(0, 1, 0.0, 0.25, 40).real()) <= 1e-12);
    CHECK_THROWS_AS(discrete_hankel_orthogonality(0, 0, 2.1, 0.25, 10), std::domain_error);
}

TEST_CASE("discrete orthogonality: long-double truncated oracle at one case") {
    // independent reaccumulation of the same truncated sum at extended
    // precision, x = 1, q = 0.25, K = 40
    const double q = 0.25;
    long double acc = 0.0L;
    for (int k = -40; k <= 40; ++k) {
        const double h = special::orthogonality_factor(1.0, q, k);
        acc += static_cast<long double>(h) * h;
    }
    const double ours = discrete_hankel_orthogonality(0, 0, 1.0, q, 40).real();
    CHECK(std::abs(static_cast<double>(acc) - ours) < 1e-13);
}

TEST_CASE("sampled-carrier transform matches the callable path") {
    const double nu = 1.0;
    auto grid = RadialGrid::uniform(0.0, 6.0 / 1200, 1200);
    std::vector<complex_t> vals(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.nodes[i];
        vals[i] = complex_t(x * std::exp(-x * x), 0.0);
    }
    SampledRadialFunction f(grid, vals);
    QuadratureConfig cfg;
    cfg.support_end = 6.0;
    for (double t : {0.5, 2.0, 5.0}) {
        const auto sampled = hankel_forward(f, nu, t, cfg).value;
        const auto direct =
            hankel_forward([](double x) { return complex_t(x * std::exp(-x * x), 0.0); }, nu, t,
                           cfg)
                .value;
        CHECK(std::abs(sampled - direct) <= 1e-8);
    }
    auto qgrid = RadialGrid::q_geometric(0.5, -2, 2);
    SampledRadialFunction qf(qgrid, std::vector<complex_t>(qgrid.size(), complex_t(1.0, 0.0)));
    CHECK_THROWS_AS(hankel_forward(qf, nu, 1.0, cfg), GridError);
}

TEST_CASE("quadrature and lattice evaluations are deterministic") {
    QuadratureConfig cfg;
    const auto a = hankel_forward(gaussian_profile(1.0), 1.0, 3.3, cfg).value;
    const auto b = hankel_forward(gaussian_profile(1.0), 1.0, 3.3, cfg).value;
    CHECK(a == b);
    CHECK(discrete_hankel_orthogonality(1, 1, 0.7, 0.25, 50) ==
          discrete_hankel_orthogonality(1, 1, 0.7, 0.25, 50));
}
