// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hmra/cuntz.hpp"
#include "hmra/filter_bank.hpp"
#include "hmra/frames.hpp"
#include "hmra/json_io.hpp"
#include "hmra/multiresolution.hpp"
#include "hmra/special_functions.hpp"
#include "hmra/transforms.hpp"

using namespace hmra;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------------- 1
void criterion_1() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double q2 : {0.25, 0.36}) {
        const double q = std::sqrt(q2);
        for (double alpha : {0.5, 1.0, 2.0}) {
            const double x = std::pow(q, alpha);
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n) {
                    const auto v =
                        transforms::discrete_hankel_orthogonality(m, n, x, q, 80).real();
                    const double want = (m == n) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(v - want));
                }
        }
    }
    const double dt = seconds_since(t0);
    report(1, worst <= 1e-10 && dt <= 10.0, "discrete orthogonality sum approximates the delta",
           "max residual " + fmt(worst) + ", " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------- 2
void criterion_2() {
    std::mt19937_64 eng(2026);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (double q : {0.5, 0.8})
        for (double alpha : {0.5, 1.0}) {
            auto grid = RadialGrid::q_geometric(q, -3, 3);  // 7 support nodes
            std::vector<complex_t> vals(grid.size());
            for (auto& v : vals) v = complex_t(g(eng), g(eng));
            SampledRadialFunction f(grid, vals);
            const auto rt = transforms::q_hankel_round_trip(f, alpha, q, 1e-12);
            worst = std::max(worst, rt.max_error);
        }
    report(2, worst <= 1e-8, "lattice transform pair inverts finitely supported data",
           "max node error " + fmt(worst));
}

// ---------------------------------------------------------------------- 3
void criterion_3() {
    double worst = 0.0;
    for (int nu = 1; nu <= 5; ++nu)
        for (double q : {0.3, 0.5, 0.9}) {
            const double got =
                transforms::jackson_q_integral(
                    [nu](double t) { return complex_t(std::pow(t, nu + 1.0), 0.0); }, q, 0)
                    .real();
            const double want = (1.0 - q) / (1.0 - std::pow(q, nu + 2.0));
            worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
            const double ann =
                transforms::jackson_q_interval([](double t) { return complex_t(t, 0.0); }, q, 1,
                                               0)
                    .real();
            worst = std::max(worst, std::abs(ann - (1.0 - q)));
        }
    report(3, worst <= 1e-14, "lattice integrals hit their closed forms",
           "max deviation " + fmt(worst));
}

// ---------------------------------------------------------------------- 4
void criterion_4() {
    double step_worst = 0.0;
    for (double a : {0.5, 1.0, 2.0})
        for (double nu : {0.0, 1.0, 2.0}) {
            transforms::QuadratureConfig cfg;
            cfg.support_end = a;
            const auto cell = [a, nu](double x) {
                return complex_t(x <= a ? std::pow(x, nu) : 0.0, 0.0);
            };
            for (double t = 0.1; t <= 10.0; t += 0.55) {
                const auto quad = transforms::hankel_forward(cell, nu, t, cfg).value;
                step_worst = std::max(
                    step_worst, std::abs(quad.real() - transforms::hankel_of_monomial_step(a, nu, t)));
            }
        }
    // inversion round trip on the weighted gaussian
    const double nu = 1.0;
    transforms::QuadratureConfig fwd;
    fwd.support_end = 6.0;
    const auto prof = [nu](double x) {
        return complex_t(std::pow(x, nu) * std::exp(-x * x), 0.0);
    };
    const auto F = transforms::tabulate(
        [&](double t) { return transforms::hankel_forward(prof, nu, t, fwd).value; }, 0.0, 14.0,
        2048);
    transforms::QuadratureConfig inv;
    inv.support_end = 14.0;
    double rt_worst = 0.0;
    for (double x = 0.1; x <= 3.0; x += 0.29) {
        const auto rec = transforms::hankel_inverse([&](double t) { return F(t); }, nu, x, inv)
                             .value;
        rt_worst = std::max(rt_worst, std::abs(rec - prof(x)));
    }
    // five-profile pairing suite
    transforms::QuadratureConfig pc;
    pc.support_end = 6.0;
    pc.transform_end = 40.0;
    pc.tab_points = 1400;
    const auto flat = [](double x) { return std::exp(-x * x - 0.25 / (x * x)); };
    const std::vector<transforms::RadialFn> suite = {
        [&](double x) { return complex_t(flat(x), 0.0); },
        [&](double x) { return complex_t(x * x * flat(x), 0.0); },
        [&](double x) { return complex_t(std::exp(-1.5 * x * x - 0.25 / (x * x)), 0.0); },
        [&](double x) { return complex_t(std::cos(x) * flat(x), 0.0); },
        [&](double x) { return complex_t(flat(x) / (1.0 + x * x), 0.0); },
    };
    double pl_worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0, 2.0})
        for (const auto& f : suite)
            pl_worst = std::max(pl_worst, transforms::plancherel_residual(f, f, alpha, pc));
    report(4,
           step_worst <= 1e-8 && rt_worst <= 1e-6 && pl_worst <= 1e-6,
           "classical transform: closed form, inversion, energy pairing",
           "step " + fmt(step_worst) + ", round trip " + fmt(rt_worst) + ", pairing " +
               fmt(pl_worst));
}

// ---------------------------------------------------------------------- 5
void criterion_5() {
    double add_worst = 0.0;
    for (int n = 0; n <= 4; ++n)
        for (double x : {0.0, 1.25, 2.5, 3.75, 5.0})
            for (double y : {0.0, 1.25, 2.5, 3.75, 5.0})
                add_worst = std::max(add_worst,
                                     std::abs(special::bessel_addition(n, x, y, 40) -
                                              special::bessel_j(n, x + y)));
    double per_worst = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5})
        for (int k : {-3, -2, -1, 1, 2, 3})
            for (int i = 0; i < 20; ++i) {
                const double r = 0.2 + 4.8 * i / 19.0;
                const double th = -3.0 + 6.0 * i / 19.0;
                const auto lhs = special::bessel_j_arg(nu, r, th + pi * k);
                const auto rhs =
                    std::exp(complex_t(0.0, pi * k * nu)) * special::bessel_j_arg(nu, r, th);
                per_worst = std::max(per_worst, std::abs(lhs - rhs));
            }
    bool trend = true;
    for (double alpha : {0.5, 1.0}) {
        double prev = 1e300;
        for (double q : {0.9, 0.99, 0.999}) {
            double err = 0.0;
            for (double w = 0.2; w <= 2.01; w += 0.2)
                err = std::max(err,
                               std::abs(special::q_bessel_hahn_exton(alpha, (1.0 - q) * w,
                                                                    q * q) -
                                        special::bessel_j(alpha, w)));
            trend = trend && (err < prev);
            prev = err;
        }
    }
    report(5, add_worst <= 1e-10 && per_worst <= 1e-12 && trend,
           "addition formula, multiplicative periodicity, deformation limit",
           "addition " + fmt(add_worst) + ", periodicity " + fmt(per_worst) +
               (trend ? ", trend strictly decreasing" : ", trend NOT decreasing"));
}

// ---------------------------------------------------------------------- 6
std::vector<double> annulus_grid(double q, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = q + (1.0 - q) * i / (n - 1);
    return v;
}

void criterion_6() {
    // (a) the annular construction, as stated
    double annular_worst = 0.0;
    for (int nu : {1, 2, 3}) {
        const double q = 0.5;
        const auto m0 = mra::build_m0_annular({complex_t(1.0, 0.0)}, 0, nu, q);
        const auto rep = mra::qmf_check_annular(m0, nu, q, annulus_grid(q, 17));
        annular_worst = std::max(annular_worst, rep.max_residual);
    }
    const bool annular_ok = annular_worst <= 1e-6;
    // (b) constant-filter cases close exactly
    double trivial_worst = 0.0;
    for (int nu : {1, 2, 3}) {
        const double c = static_cast<double>(nu) / (nu + 2.0);
        trivial_worst = std::max(
            trivial_worst,
            mra::qmf_check_classical([c](complex_t) { return complex_t(std::sqrt(c), 0.0); }, nu,
                                     annulus_grid(0.2, 9))
                .max_residual);
        const double q = 0.5;
        const double c_q = (1.0 - std::pow(q, nu)) / (1.0 - std::pow(q, nu + 2.0));
        trivial_worst = std::max(
            trivial_worst,
            mra::qmf_check_q([c_q](complex_t) { return complex_t(std::sqrt(c_q), 0.0); }, nu, q,
                             annulus_grid(0.2, 9))
                .max_residual);
        const double d_q = 1.0 / (1.0 - std::pow(q, 2.0 * (nu + 1)));
        const double k0 = std::sqrt(d_q / (nu + 1.0));
        trivial_worst = std::max(
            trivial_worst,
            mra::qmf_check_annular([k0](double t) { return complex_t(k0 * t, 0.0); }, nu, q,
                                   annulus_grid(q, 9), mra::AnnularWeight::InverseSquare)
                .max_residual);
    }
    // (c) plane-model constant: the empirical branch sum is reported next to
    // the model constant, and the report is reproducible
    const auto m0h = mra::build_m0_from_coeffs({complex_t(1.0, 0.0)}, 0, 1);
    const auto repa = mra::qmf_check_classical(m0h, 1, annulus_grid(0.3, 9));
    const auto repb = mra::qmf_check_classical(m0h, 1, annulus_grid(0.3, 9));
    const bool reported = repa.max_residual == repb.max_residual &&
                          repa.empirical_mean == repb.empirical_mean &&
                          std::isfinite(repa.empirical_mean) && repa.model_constant == 1.0 / 3.0;
    std::printf("       criterion 6 note: plane-model empirical branch sum in [%.6g, %.6g] vs "
                "constant %.6g; annular residual %.3g documented in the design notes\n",
                repa.empirical_min, repa.empirical_max, repa.model_constant, annular_worst);
    report(6, annular_ok && trivial_worst <= 1e-14 && reported,
           "branch-sum identities of the three models",
           "annular " + fmt(annular_worst) + " (<=1e-6 required), trivial " +
               fmt(trivial_worst) + (reported ? ", plane constant reported" : ""));
}

// ---------------------------------------------------------------------- 7
void criterion_7() {
    std::mt19937_64 eng(7777);
    std::normal_distribution<double> g(0.0, 1.0);
    double unit_worst = 0.0;
    int points = 0;
    for (int nu : {1, 2, 3}) {
        const int n = nu + 1;
        for (int i = 0; i < 34; ++i) {
            std::vector<complex_t> v(n);
            double nn = 0.0;
            for (auto& c : v) {
                c = complex_t(g(eng), g(eng));
                nn += std::norm(c);
            }
            for (auto& c : v) c /= std::sqrt(nn);
            const auto W = filters::unitary_with_first_row(v);
            filters::PolyphaseSample M;
            M.nu = nu;
            M.mat = W;
            unit_worst = std::max(unit_worst, filters::unitarity_residual(M));
            ++points;
        }
    }
    // flat constructions complete and certify through the bank builder
    double bank_worst = 0.0, weighted_worst = 0.0;
    for (int nu : {1, 2, 3}) {
        const auto rep = cuntz::make_representation_from_m0(
            {cuntz::RepVariant::ClassicalC, nu, 0.5, 0, 0, 4,
             cuntz::RhoConvention::GeometricWeights},
            [nu](complex_t) {
                const double c = (nu == 0) ? 1.0 : static_cast<double>(nu) / (nu + 2.0);
                return complex_t(std::sqrt(c), 0.0);
            });
        const auto doc = io::bank_document_from_representation(rep);
        const int n = nu + 1;
        for (const auto& orbit : doc.samples) {
            filters::PolyphaseSample M;
            M.nu = nu;
            M.mat.resize(static_cast<size_t>(n) * n);
            const double pre = 1.0 / std::sqrt(rep.norm_const * n);
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) M.mat[static_cast<size_t>(k) * n + j] = pre * orbit[k][j];
            bank_worst = std::max(bank_worst, filters::unitarity_residual(M));
        }
    }
    for (int nu : {1, 2, 3}) {
        const double q = 0.5;
        const int n = nu + 1;
        const double d_q = 1.0 / (1.0 - std::pow(q, 2.0 * n));
        double wsum = 0.0;
        for (int j = 0; j < n; ++j) wsum += std::pow(q, -2.0 * j);
        const double c0 = std::sqrt((d_q / n) * n / wsum);
        const auto rep = cuntz::make_representation_from_m0(
            {cuntz::RepVariant::AnnularDq, nu, q, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
            [c0](complex_t) { return complex_t(c0, 0.0); });
        const auto doc = io::bank_document_from_representation(rep);
        for (const auto& orbit : doc.samples) {
            for (int r = 0; r < n; ++r)
                for (int rp = 0; rp < n; ++rp) {
                    complex_t acc = 0.0;
                    for (int j = 0; j < n; ++j)
                        acc += std::pow(q, -2.0 * j) * orbit[r][j] * std::conj(orbit[rp][j]);
                    if (r == rp) acc -= d_q;
                    weighted_worst = std::max(weighted_worst, std::abs(acc));
                }
        }
    }
    report(7, unit_worst <= 1e-12 && bank_worst <= 1e-12 && weighted_worst <= 1e-10,
           "pointwise completion yields certified matrices",
           std::to_string(points) + " random rows " + fmt(unit_worst) + ", banks " +
               fmt(bank_worst) + ", weighted rows " + fmt(weighted_worst));
}

// ---------------------------------------------------------------------- 8
void criterion_8() {
    const auto t0 = Clock::now();
    double iso = 0.0, comp = 0.0;
    const std::vector<cuntz::RepConfig> cfgs = {
        {cuntz::RepVariant::ClassicalC, 1, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::ClassicalC, 2, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::ClassicalC, 3, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::QDeformedCq, 2, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::QDeformedCq, 3, 0.7, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::AnnularDq, 1, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::AnnularDq, 2, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        {cuntz::RepVariant::AnnularDq, 3, 0.5, 0, 0, 3, cuntz::RhoConvention::GeometricWeights},
    };
    for (const auto& c : cfgs) {
        const auto rep = cuntz::make_representation_random(c, 808);
        const auto rr = cuntz::relation_report(rep, 20, 4040);
        iso = std::max(iso, rr.max_isometry_residual);
        comp = std::max(comp, rr.completeness_residual);
    }
    auto perturbed = cuntz::make_representation_random(
        {cuntz::RepVariant::ClassicalC, 2, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        808);
    for (auto& v : perturbed.filter_values[0])
        if (!std::isnan(v.real())) v *= 1.01;
    const auto bad = cuntz::relation_report(perturbed, 20, 4040);
    const double dt = seconds_since(t0);
    report(8,
           iso <= 1e-10 && comp <= 1e-10 && bad.completeness_residual >= 1e-3 && dt <= 30.0,
           "isometry relations close for completed banks in all constructions",
           "isometry " + fmt(iso) + ", completeness " + fmt(comp) + ", perturbed " +
               fmt(bad.completeness_residual) + ", " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------- 9
void criterion_9() {
    const int nu = 2;
    filters::FilterBank b;
    b.sys = filters::BranchSystem::roots_of_unity(nu);
    b.sys.q = 0.5;
    b.rho.assign(nu + 1, 1.0 / (nu + 1));
    b.polyphase_weights.assign(nu + 1, 1.0);
    b.norm_const = 1.0;
    b.analytic.push_back([](complex_t w) { return w * w + complex_t(0.1, 0.4); });
    b.analytic.push_back([](complex_t w) { return std::exp(complex_t(0.0, 0.7)) * w; });
    b.analytic.push_back([](complex_t w) { return complex_t(1.0, 0.0) / (w + 4.0); });
    double rt_worst = 0.0;
    for (const complex_t z : {complex_t(0.9, -0.4), complex_t(0.2, 1.1)}) {
        const auto A = filters::cyclic_fourier_forward(b, z);
        for (const auto& y :
             filters::branch_points(z, filters::BranchSystem::roots_of_unity(nu))) {
            const auto m = filters::cyclic_fourier_inverse(A, y, nu, b.sys.q);
            for (int i = 0; i <= nu; ++i)
                rt_worst = std::max(rt_worst,
                                    std::abs(m[static_cast<size_t>(i)] - b.analytic[i](y)));
        }
    }
    // character orthogonality for a monomial filter
    filters::FilterBank mono = b;
    mono.analytic[0] = [](complex_t w) { return w; };
    const auto A = filters::cyclic_fourier_forward(mono, complex_t(0.8, 0.3));
    const double leak = std::max(std::abs(A[0][0]), std::abs(A[0][2]));
    report(9, rt_worst <= 1e-12 && leak <= 1e-12,
           "finite character transform inverts exactly",
           "round trip " + fmt(rt_worst) + ", character leakage " + fmt(leak));
}

// ---------------------------------------------------------------------- 10
double coefficient_circle_mean(int m, int n) {
    double tot = 0.0;
    for (int s = 0; s < 40; ++s)
        for (int sp = 0; sp < 40; ++sp) {
            if (m + 2 * s != n + 2 * sp) continue;
            double cm = ((s % 2) ? -1.0 : 1.0), cn = ((sp % 2) ? -1.0 : 1.0);
            for (int j = 2; j <= s; ++j) cm /= j;
            for (int j = 2; j <= sp; ++j) cn /= j;
            for (int j = 2; j <= m + s; ++j) cm /= j;
            for (int j = 2; j <= n + sp; ++j) cn /= j;
            cm /= std::pow(2.0, m + 2 * s);
            cn /= std::pow(2.0, n + 2 * sp);
            tot += cm * cn;
        }
    return tot;
}

void criterion_10() {
    const double a1 =
        filters::residue_diagonal_condition({complex_t(1.0 / std::sqrt(2.0), 0.0)}, 1);
    const double a2 = filters::residue_diagonal_condition(
        {complex_t(0.0, 0.0), complex_t(std::sqrt(2.0), 0.0)}, 1);
    double cross_worst = 0.0;
    for (const auto& b : {std::vector<complex_t>{complex_t(1.0 / std::sqrt(2.0), 0.0)},
                          std::vector<complex_t>{complex_t(std::sqrt(0.3), 0.0),
                                                 complex_t(std::sqrt(0.8), 0.0)}}) {
        const auto bank = filters::bessel_series_filters(b, 1);
        const double trap = filters::circle_mean_trapezoid(bank, 512);
        double coef = 0.0;
        for (int r = 0; r <= 1; ++r)
            for (size_t k1 = 0; k1 < b.size(); ++k1)
                for (size_t k2 = 0; k2 < b.size(); ++k2)
                    coef += (b[k1] * std::conj(b[k2])).real() *
                            std::cos(pi * r * (static_cast<int>(k1) - static_cast<int>(k2))) *
                            coefficient_circle_mean(static_cast<int>(k1) + r,
                                                    static_cast<int>(k2) + r);
        cross_worst = std::max(cross_worst, std::abs(trap - coef));
    }
    report(10, a1 <= 5e-16 && a2 <= 5e-16 && cross_worst <= 1e-8,
           "series normalization arithmetic and contour cross-check",
           "arithmetic " + fmt(std::max(a1, a2)) + ", contour " + fmt(cross_worst));
}

// ---------------------------------------------------------------------- 11
void criterion_11() {
    // certified orthonormal orbit family
    const auto rep = cuntz::make_representation_random(
        {cuntz::RepVariant::AnnularDq, 1, 0.5, 0, 0, 4, cuntz::RhoConvention::GeometricWeights},
        1111);
    const auto doc = io::bank_document_from_representation(rep);
    filters::FilterBank fb;
    fb.sys = filters::BranchSystem::q_spiral(1, 0.5);
    fb.rho = rep.rho;
    fb.norm_const = rep.norm_const;
    fb.polyphase_weights = {1.0, std::pow(0.5, -2.0)};
    fb.base_points = doc.base_points;
    fb.samples = doc.samples;
    const auto onb = frames::orbit_family_from_bank(fb, fb.base_points, true);
    const auto parseval = frames::frame_bounds_estimate(onb, 10, 5150);
    const bool on_ok = onb.certification_residual <= 1e-10 &&
                       parseval.ratio_min >= 1.0 - 1e-8 && parseval.ratio_max <= 1.0 + 1e-8;
    // two-band lattice family: ratio trend over nested truncations
    frames::HaarLattice lat;
    const int latJ = 6;
    frames::haar_wavelet_family(1, latJ, 64, &lat, 1.0, latJ);
    std::vector<std::vector<complex_t>> tests;
    for (int t = 0; t < 10; ++t) tests.push_back(frames::haar_bandlimited_test(lat, 600 + t));
    double prev = -1.0, final_gap = 1.0;
    bool monotone = true, within = true;
    for (const auto& jk : {std::pair<int, int>{2, 8}, {4, 16}, {6, 64}}) {
        const auto fam = frames::haar_wavelet_family(1, jk.first, jk.second, nullptr, 1.0, latJ);
        const auto fr = frames::frame_bounds_for(fam, tests);
        within = within && fr.ratio_max <= 1.0 + 1e-12;
        monotone = monotone && fr.ratio_min >= prev - 1e-14;
        prev = fr.ratio_min;
        final_gap = 1.0 - fr.ratio_min;
    }
    report(11, on_ok && monotone && within && final_gap <= 1e-3,
           "orthonormal family hits the exact sum; truncated family tightens",
           "certified " + fmt(onb.certification_residual) + ", bounds [" +
               fmt(parseval.ratio_min) + ", " + fmt(parseval.ratio_max) + "], final gap " +
               fmt(final_gap));
}

// ---------------------------------------------------------------------- 12
void criterion_12(const std::string& cli) {
    if (cli.empty()) {
        report(12, false, "deterministic reports", "driver binary path not supplied");
        return;
    }
    auto run = [&](const std::string& args) {
        const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    bool ok = run("build-bank --nu 2 --variant classical --m0 flat --out /tmp/acc_bank.json") ==
              0;
    ok = ok &&
         run("check-cuntz --bank /tmp/acc_bank.json --seed 99 --out /tmp/acc_rel1.json") == 0;
    ok = ok &&
         run("check-cuntz --bank /tmp/acc_bank.json --seed 99 --out /tmp/acc_rel2.json") == 0;
    const std::string r1 = slurp("/tmp/acc_rel1.json");
    ok = ok && !r1.empty() && r1 == slurp("/tmp/acc_rel2.json");
    ok = ok && run("specfun-check --out /tmp/acc_spec1.json") == 0;
    ok = ok && run("specfun-check --out /tmp/acc_spec2.json") == 0;
    const std::string s1 = slurp("/tmp/acc_spec1.json");
    ok = ok && !s1.empty() && s1 == slurp("/tmp/acc_spec2.json");
    report(12, ok, "identical seeds give byte-identical reports",
           ok ? "bank, relation and identity reports match" : "reports differ or commands failed");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12(cli);
    std::printf("acceptance: %d of 12 criteria passed in %.1f s\n", 12 - g_failures,
                seconds_since(t0));
    if (g_failures > 0)
        std::printf("note: the annular branch-sum clause of criterion 6 fails by construction "
                    "of the source material; see the repository documentation and design "
                    "notes for the measured residuals and analysis\n");
    return g_failures == 0 ? 0 : 1;
}
