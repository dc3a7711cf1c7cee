// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
//
// Batch driver: every verification suite and construction behind one binary
// with machine-readable output.  Exit codes: 0 = all checks passed,
// 1 = a numerical check failed, 2 = usage or parse error.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmra/cuntz.hpp"
#include "hmra/filter_bank.hpp"
#include "hmra/frames.hpp"
#include "hmra/json_io.hpp"
#include "hmra/multiresolution.hpp"
#include "hmra/special_functions.hpp"
#include "hmra/transforms.hpp"

namespace {

using namespace hmra;
using io::json;

constexpr int kExitPass = 0;
constexpr int kExitNumericalFail = 1;
constexpr int kExitUsage = 2;

std::string out_path(const std::string& name, const std::string& explicit_path) {
    if (!explicit_path.empty()) return explicit_path;
    const char* dir = std::getenv("HMRA_OUT_DIR");
    std::filesystem::path base = dir ? dir : ".";
    return (base / name).string();
}

void emit(const json& report, const std::vector<io::CsvRow>& rows, const std::string& path,
          const std::string& format) {
    if (format == "csv")
        io::write_text_file(path, io::to_csv(rows));
    else
        io::write_text_file(path, io::dump_report(report));
    std::cout << "report written to " << path << "\n";
}

// ---------------------------------------------------------------------------
// specfun-check
// ---------------------------------------------------------------------------

int run_specfun_check(double tol_override, const std::string& out, const std::string& format) {
    std::vector<io::CsvRow> rows;
    json identities = json::array();
    auto add = [&](const std::string& name, const std::string& params, double residual,
                   double threshold) {
        const double thr = tol_override > 0.0 ? tol_override : threshold;
        io::CsvRow r{name, params, residual, thr, residual <= thr};
        rows.push_back(r);
        json ji;
        ji["identity"] = name;
        ji["params"] = params;
        ji["residual"] = residual;
        ji["threshold"] = thr;
        ji["pass"] = r.pass;
        identities.push_back(ji);
    };

    {  // gamma recurrence
        double worst = 0.0;
        for (double z = 0.25; z <= 10.0; z += 0.25)
            worst = std::max(worst, std::abs(special::gamma_fn(z + 1.0) -
                                             z * special::gamma_fn(z)) /
                                        special::gamma_fn(z + 1.0));
        add("gamma_recurrence", "z in (0,10]", worst, 1e-12);
    }
    {  // multiplicative periodicity on the surface
        double worst = 0.0;
        for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5})
            for (int k : {-3, -1, 1, 2, 3})
                for (int i = 0; i < 20; ++i) {
                    const double r = 0.25 + 4.5 * i / 19.0;
                    const double th = -2.8 + 5.6 * i / 19.0;
                    const auto lhs = special::bessel_j_arg(nu, r, th + pi * k);
                    const auto rhs =
                        std::exp(complex_t(0.0, pi * k * nu)) * special::bessel_j_arg(nu, r, th);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
        add("bessel_multiplicative_periodicity", "nu in {0,.5,1,2,3.5}, k in [-3,3]", worst,
            1e-12);
    }
    {  // addition formula
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n)
            for (double x : {0.0, 1.25, 2.5, 3.75, 5.0})
                for (double y : {0.0, 1.25, 2.5, 3.75, 5.0})
                    worst = std::max(worst, std::abs(special::bessel_addition(n, x, y, 40) -
                                                     special::bessel_j(n, x + y)));
        add("bessel_addition_formula", "n in [0,4], x,y in [0,5], K=40", worst, 1e-10);
    }
    {  // q-Bessel: series route against the factored route
        double worst = 0.0;
        for (double q : {0.25, 0.5, 0.8})
            for (double alpha : {0.0, 0.5, 2.0})
                for (double x : {0.1, 0.5, 0.9, 1.3}) {
                    const double direct = special::q_bessel_hahn_exton(alpha, x, q);
                    const auto C = special::q_pochhammer_inf(std::pow(q, alpha + 1.0), q) /
                                   special::q_pochhammer_inf(q, q);
                    const auto via_phi =
                        C * std::pow(x, alpha) *
                        special::phi_1_1(std::pow(q, alpha + 1.0), q, x * x * q);
                    worst = std::max(worst, std::abs(direct - via_phi.real()));
                }
        add("q_bessel_two_forms", "q in {.25,.5,.8}", worst, 1e-13);
    }
    {  // deformation limit trend
        double prev = 1e300;
        bool decreasing = true;
        for (double q : {0.9, 0.99, 0.999}) {
            double err = 0.0;
            for (double w = 0.2; w <= 2.0; w += 0.3)
                err = std::max(err, std::abs(special::q_bessel_hahn_exton(1.0, (1.0 - q) * w,
                                                                          q * q) -
                                             special::bessel_j(1.0, w)));
            decreasing = decreasing && err < prev;
            prev = err;
        }
        add("q_to_1_limit_trend", "q in {0.9,0.99,0.999}", decreasing ? 0.0 : 1.0, 0.5);
    }
    {  // determinism
        const double a = special::bessel_j(1.5, 7.3);
        const double b = special::bessel_j(1.5, 7.3);
        add("series_determinism", "J_1.5(7.3) twice", a == b ? 0.0 : 1.0, 0.5);
    }

    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    json rep;
    rep["command"] = "specfun-check";
    rep["config"] = {{"tol_override", tol_override}, {"format", format}};
    rep["identities"] = identities;
    rep["pass"] = all;
    emit(rep, rows, out_path("specfun_check." + format, out), format);
    return all ? kExitPass : kExitNumericalFail;
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

int run_transform(const std::string& direction, double alpha, double q, bool has_q,
                  const std::string& input, const std::string& out, double tol) {
    if (!(alpha > -1.0)) {
        std::cerr << "transform: order must satisfy alpha > -1\n";
        return kExitUsage;
    }
    io::SampleFile in;
    try {
        in = io::read_samples_csv(input);
    } catch (const std::exception& e) {
        std::cerr << "transform: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::string path = out_path("transform_out.csv", out);
    const auto write_sidecar = [&](const json& grid) {
        io::write_text_file(path + ".grid.json", io::dump_report(grid));
    };
    if (in.index.empty()) {
        io::write_samples_csv(path, {});
        write_sidecar({{"kind", "empty"}});
        std::cout << "empty input, empty output written to " << path << "\n";
        return kExitPass;
    }
    if (has_q) {
        require_q(q);
        int k_min = in.index.front(), k_max = in.index.front();
        for (int k : in.index) {
            k_min = std::min(k_min, k);
            k_max = std::max(k_max, k);
        }
        auto grid = RadialGrid::q_geometric(q, k_min, k_max);
        std::vector<complex_t> vals(grid.size(), complex_t(0.0, 0.0));
        for (size_t i = 0; i < in.index.size(); ++i)
            vals[grid.index_of_exponent(in.index[i])] = in.value[i];
        SampledRadialFunction f(grid, vals);
        if (direction == "roundtrip") {
            const auto rt = transforms::q_hankel_round_trip(f, alpha, q, 1e-12);
            io::SampleFile outf;
            for (size_t i = 0; i < rt.reconstructed.grid.size(); ++i) {
                outf.index.push_back(rt.reconstructed.grid.exponent_of_index(i));
                outf.node.push_back(rt.reconstructed.grid.nodes[i]);
                outf.value.push_back(rt.reconstructed.values[i]);
            }
            io::write_samples_csv(path, outf);
            write_sidecar({{"kind", "q_geometric"},
                           {"q", q},
                           {"k_min", rt.reconstructed.grid.k_min},
                           {"k_max", rt.reconstructed.grid.k_max}});
            std::cout << "round-trip max error " << rt.max_error << " (window K=" << rt.K_used
                      << ")\n";
            return rt.max_error <= tol ? kExitPass : kExitNumericalFail;
        }
        const int pad = 20;
        io::SampleFile outf;
        for (int n = k_min - pad; n <= k_max + pad; ++n) {
            const complex_t v = (direction == "inverse")
                                    ? transforms::q_hankel_inverse(f, alpha, q, n)
                                    : transforms::q_hankel_forward(f, alpha, q, n);
            outf.index.push_back(n);
            outf.node.push_back(std::pow(q, n));
            outf.value.push_back(v);
        }
        io::write_samples_csv(path, outf);
        write_sidecar({{"kind", "q_geometric"},
                       {"q", q},
                       {"k_min", k_min - pad},
                       {"k_max", k_max + pad}});
        return kExitPass;
    }
    // classical: cubic interpolant of the samples, zero beyond the last node
    const double x_end = in.node.back();
    transforms::TabulatedFunction tab(in.node.front(), x_end, in.value);
    const auto f = [&](double x) -> complex_t {
        if (x < in.node.front() || x > x_end) return 0.0;
        return tab(x);
    };
    transforms::QuadratureConfig cfg;
    cfg.support_end = x_end;
    if (direction == "roundtrip") {
        const double T = 4.0 * x_end;
        const auto F = transforms::tabulate(
            [&](double t) { return transforms::hankel_forward(f, alpha, t, cfg).value; }, 0.0, T,
            2048);
        transforms::QuadratureConfig icfg;
        icfg.support_end = T;
        double max_err = 0.0;
        io::SampleFile outf;
        for (size_t i = 0; i < in.node.size(); i += std::max<size_t>(1, in.node.size() / 64)) {
            const double x = in.node[i];
            const auto rec =
                transforms::hankel_inverse([&](double t) { return F(t); }, alpha, x, icfg).value;
            max_err = std::max(max_err, std::abs(rec - in.value[i]));
            outf.index.push_back(in.index[i]);
            outf.node.push_back(x);
            outf.value.push_back(rec);
        }
        io::write_samples_csv(path, outf);
        write_sidecar({{"kind", "uniform_subset"}, {"x_end", x_end}});
        std::cout << "round-trip max error " << max_err << "\n";
        return max_err <= tol ? kExitPass : kExitNumericalFail;
    }
    io::SampleFile outf;
    const int n_out = static_cast<int>(in.node.size());
    const double T = (direction == "inverse") ? x_end : 4.0 * x_end;
    for (int i = 0; i < n_out; ++i) {
        const double t = T * (i + 1) / n_out;
        outf.index.push_back(i);
        outf.node.push_back(t);
        outf.value.push_back(transforms::hankel_forward(f, alpha, t, cfg).value);
    }
    io::write_samples_csv(path, outf);
    write_sidecar({{"kind", "uniform"}, {"x0", 0.0}, {"n", n_out}, {"t_end", T}});
    return kExitPass;
}

// ---------------------------------------------------------------------------
// build-bank
// ---------------------------------------------------------------------------

cuntz::RepVariant parse_variant(const std::string& v) {
    if (v == "classical") return cuntz::RepVariant::ClassicalC;
    if (v == "qdeformed") return cuntz::RepVariant::QDeformedCq;
    if (v == "annular") return cuntz::RepVariant::AnnularDq;
    throw CLI::ValidationError("--variant must be classical|qdeformed|annular");
}

double bank_unitarity_residual(const io::BankDocument& doc) {
    filters::FilterBank fb;
    fb.sys = doc.cfg.variant == cuntz::RepVariant::AnnularDq
                 ? filters::BranchSystem::q_spiral(doc.cfg.nu, doc.cfg.q)
                 : filters::BranchSystem::roots_of_unity(doc.cfg.nu);
    const int n1 = doc.cfg.nu + 1;
    fb.rho = doc.rho;
    fb.norm_const = doc.norm_const;
    fb.polyphase_weights.assign(n1, 1.0);
    if (doc.cfg.variant == cuntz::RepVariant::AnnularDq)
        for (int j = 0; j < n1; ++j) fb.polyphase_weights[j] = std::pow(doc.cfg.q, -2.0 * j);
    fb.base_points = doc.base_points;
    fb.samples = doc.samples;
    double worst = 0.0;
    for (size_t i = 0; i < doc.samples.size(); ++i)
        worst = std::max(worst,
                         filters::unitarity_residual(filters::assemble_polyphase_sample(fb, i)));
    return worst;
}

double bank_weighted_row_residual(const io::BankDocument& doc) {
    // annular variant: sum_j q^{-2j} m_r conj(m_r') over each orbit vs
    // delta_{r r'} / (1 - q^{2(nu+1)})
    if (doc.cfg.variant != cuntz::RepVariant::AnnularDq) return 0.0;
    const int n1 = doc.cfg.nu + 1;
    const double q = doc.cfg.q;
    const double d_q = 1.0 / (1.0 - std::pow(q, 2.0 * n1));
    double worst = 0.0;
    for (const auto& orbit : doc.samples) {
        for (int r = 0; r < n1; ++r)
            for (int rp = 0; rp < n1; ++rp) {
                complex_t acc = 0.0;
                for (int j = 0; j < n1; ++j)
                    acc += std::pow(q, -2.0 * j) * orbit[r][j] * std::conj(orbit[rp][j]);
                if (r == rp) acc -= d_q;
                worst = std::max(worst, std::abs(acc));
            }
    }
    return worst;
}

int run_build_bank(int nu, const std::string& variant_s, double q, const std::string& m0_kind,
                   const std::vector<double>& coeffs, const std::string& rho_conv,
                   const std::string& out) {
    cuntz::RepConfig cfg;
    cfg.variant = parse_variant(variant_s);
    cfg.nu = nu;
    cfg.q = q;
    cfg.convention = rho_conv == "probability" ? cuntz::RhoConvention::Probability
                                               : cuntz::RhoConvention::GeometricWeights;
    const std::string path = out_path("bank.json", out);
    if (m0_kind == "bessel-series") {
        std::vector<complex_t> b;
        if (coeffs.empty())
            b = {complex_t(1.0 / std::sqrt(nu + 1.0), 0.0)};
        else
            for (double c : coeffs) b.emplace_back(c, 0.0);
        const double resid = filters::residue_diagonal_condition(b, nu);
        if (resid > 1e-12) {
            std::cerr << "build-bank: coefficients violate the diagonal normalization, residual = "
                      << resid << "\n";
            return kExitNumericalFail;
        }
        const auto bank = filters::bessel_series_filters(b, nu);
        json j;
        j["kind"] = "bessel_series";
        j["nu"] = nu;
        j["coefficients"] = coeffs;
        j["diagonal_residual"] = resid;
        // sample the analytic filters on a circle orbit set
        json samples = json::array();
        double worst = 0.0;
        for (int i = 0; i < 16; ++i) {
            const complex_t z = std::polar(1.0, 2.0 * pi * (i + 0.5) / 16.0);
            const auto M = filters::assemble_polyphase(bank, z);
            worst = std::max(worst, filters::unitarity_residual(M));
            json row = json::array();
            for (const auto& c : M.mat) row.push_back(json::array({c.real(), c.imag()}));
            samples.push_back({{"z", {z.real(), z.imag()}}, {"matrix", row}});
        }
        j["samples"] = samples;
        j["max_unitarity_residual"] = worst;
        io::write_text_file(path, io::dump_report(j));
        std::cout << "bessel-series bank written to " << path << " (unitarity residual " << worst
                  << ")\n";
        return kExitPass;
    }

    cuntz::Representation rep;
    try {
        if (m0_kind == "flat") {
            const int n1 = nu + 1;
            double wsum = 0.0;
            for (int j = 0; j < n1; ++j)
                wsum += (cfg.variant == cuntz::RepVariant::AnnularDq) ? std::pow(q, -2.0 * j) : 1.0;
            double nc;
            if (cfg.variant == cuntz::RepVariant::AnnularDq)
                nc = (1.0 / (1.0 - std::pow(q, 2.0 * n1))) / n1;
            else if (cfg.variant == cuntz::RepVariant::QDeformedCq)
                nc = (nu == 0) ? 1.0 : (1.0 - std::pow(q, nu)) / (1.0 - std::pow(q, nu + 2.0));
            else
                nc = (nu == 0) ? 1.0 : static_cast<double>(nu) / (nu + 2.0);
            const double c0 = std::sqrt(nc * n1 / wsum);
            rep = cuntz::make_representation_from_m0(cfg, [c0](complex_t) { return complex_t(c0, 0.0); });
        } else if (m0_kind == "step") {
            auto m0 = mra::build_m0_from_coeffs({complex_t(1.0, 0.0)}, 0, nu);
            rep = cuntz::make_representation_from_m0(cfg, m0);
        } else if (m0_kind == "annular") {
            auto m0r = mra::build_m0_annular({complex_t(1.0, 0.0)}, 0, nu, q);
            rep = cuntz::make_representation_from_m0(
                cfg, [m0r](complex_t z) { return m0r(std::abs(z)); });
        } else {
            std::cerr << "build-bank: unknown m0 source '" << m0_kind << "'\n";
            return kExitUsage;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "build-bank: low-pass filter fails the branch identity: " << e.what()
                  << "\n";
        return kExitNumericalFail;
    }
    auto doc = io::bank_document_from_representation(rep);
    doc.max_unitarity_residual = bank_unitarity_residual(doc);
    doc.weighted_row_orthogonality_residual = bank_weighted_row_residual(doc);
    json j = io::bank_to_json(doc);
    j["kind"] = "completed";
    io::write_text_file(path, io::dump_report(j));
    std::cout << "bank written to " << path << " (unitarity residual "
              << doc.max_unitarity_residual << ")\n";
    const bool ok = doc.max_unitarity_residual <= 1e-12 &&
                    doc.weighted_row_orthogonality_residual <= 1e-10;
    return ok ? kExitPass : kExitNumericalFail;
}

// ---------------------------------------------------------------------------
// check-cuntz
// ---------------------------------------------------------------------------

int run_check_cuntz(const std::string& bank_path, int n_tests, std::uint64_t seed, double tol,
                    const std::string& out) {
    json j;
    try {
        std::ifstream in(bank_path);
        if (!in) throw std::runtime_error("cannot open bank file: " + bank_path);
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "check-cuntz: " << e.what() << "\n";
        return kExitUsage;
    }
    io::BankDocument doc;
    try {
        if (j.value("kind", "completed") != "completed")
            throw std::invalid_argument("bank kind not supported for relation checks");
        doc = io::bank_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "check-cuntz: invalid bank document: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto rep = cuntz::make_representation_from_orbit_samples(doc.cfg, doc.samples);
    const auto rr = cuntz::relation_report(rep, n_tests, seed);
    json out_j = io::relation_report_to_json(rr);
    out_j["config"] = {{"bank", bank_path}, {"n_tests", n_tests}, {"seed", seed}, {"tol", tol}};
    io::write_text_file(out_path("relation_report.json", out), io::dump_report(out_j));
    std::cout << "isometry residual " << rr.max_isometry_residual << ", completeness residual "
              << rr.completeness_residual << "\n";
    return (rr.max_isometry_residual <= tol && rr.completeness_residual <= tol)
               ? kExitPass
               : kExitNumericalFail;
}

// ---------------------------------------------------------------------------
// frame-bounds
// ---------------------------------------------------------------------------

int run_frame_bounds(const std::string& family, int nu, int J, int K, int n_tests,
                     std::uint64_t seed, double q, const std::string& out) {
    frames::FrameReport rep;
    double certification = 0.0;
    std::vector<int> trend_J;
    std::vector<double> trend_ratio;
    if (family == "haar") {
        frames::HaarLattice lat;
        const auto fam = frames::haar_wavelet_family(nu, J, K, &lat);
        if (fam.members.empty()) {
            std::cerr << "frame-bounds: empty family\n";
            return kExitNumericalFail;
        }
        std::vector<std::vector<complex_t>> tests;
        for (int t = 0; t < n_tests; ++t)
            tests.push_back(frames::haar_bandlimited_test(lat, seed + t));
        rep = frames::frame_bounds_for(fam, tests);
        rep.seed = seed;
        certification = fam.certification_residual;
        // truncation curve at nested windows on the same lattice
        trend_J.clear();
        trend_ratio.clear();
        for (int jj = 1; jj <= J; ++jj) {
            const auto sub = frames::haar_wavelet_family(nu, jj, (K * jj) / J, nullptr, 1.0, J);
            const auto fr = frames::frame_bounds_for(sub, tests);
            trend_J.push_back(jj);
            trend_ratio.push_back(fr.ratio_min);
        }
    } else if (family == "orbit") {
        cuntz::RepConfig cfg;
        cfg.variant = cuntz::RepVariant::AnnularDq;
        cfg.nu = nu;
        cfg.q = q;
        const auto r = cuntz::make_representation_random(cfg, seed);
        const auto doc = io::bank_document_from_representation(r);
        filters::FilterBank fb;
        fb.sys = filters::BranchSystem::q_spiral(nu, q);
        const int n1 = nu + 1;
        fb.rho = r.rho;
        fb.norm_const = r.norm_const;
        fb.polyphase_weights.resize(n1);
        for (int jj = 0; jj < n1; ++jj) fb.polyphase_weights[jj] = std::pow(q, -2.0 * jj);
        fb.base_points = doc.base_points;
        fb.samples = doc.samples;
        const auto fam = frames::orbit_family_from_bank(fb, fb.base_points, true);
        rep = frames::frame_bounds_estimate(fam, n_tests, seed);
        certification = fam.certification_residual;
    } else if (family == "bessel-series") {
        const std::vector<complex_t> b{complex_t(1.0 / std::sqrt(nu + 1.0), 0.0)};
        const auto bank = filters::bessel_series_filters(b, nu);
        std::vector<complex_t> pts;
        for (int i = 0; i < 24; ++i)
            pts.push_back(std::polar(1.0, 2.0 * pi * (i + 0.5) / 24.0));
        const auto fam = frames::orbit_family_from_bank(bank, pts, true);
        rep = frames::frame_bounds_estimate(fam, n_tests, seed);
        certification = fam.certification_residual;
    } else {
        std::cerr << "frame-bounds: --family must be haar|orbit|bessel-series\n";
        return kExitUsage;
    }
    json j = io::frame_report_to_json(rep);
    j["certification_residual"] = certification;
    if (!trend_J.empty()) {
        j["truncation_curve_J"] = trend_J;
        j["truncation_curve_ratio_min"] = trend_ratio;
    }
    j["config"] = {{"family", family}, {"nu", nu},     {"J", J},
                   {"K", K},           {"n_tests", n_tests}, {"seed", seed}};
    if (rep.ratio_max - rep.ratio_min > 0.25) j["warning"] = "wide bounds at this truncation";
    io::write_text_file(out_path("frame_report.json", out), io::dump_report(j));
    std::cout << "frame ratio bounds [" << rep.ratio_min << ", " << rep.ratio_max << "]\n";
    if (!(rep.ratio_max > 0.0)) return kExitNumericalFail;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel-transform multiresolution toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    // specfun-check
    auto* sc = app.add_subcommand("specfun-check", "special-function identity suite");
    double sc_tol = 0.0;
    std::string sc_out, sc_format = "json";
    sc->add_option("--tol", sc_tol, "override every identity threshold");
    sc->add_option("--out", sc_out, "output path");
    sc->add_option("--format", sc_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // transform
    auto* tr = app.add_subcommand("transform", "apply the classical or q-deformed transform");
    std::string tr_dir = "forward", tr_in, tr_out;
    double tr_alpha = 0.0, tr_q = 0.0, tr_tol = 1e-6;
    tr->add_option("--direction", tr_dir, "forward|inverse|roundtrip")
        ->check(CLI::IsMember({"forward", "inverse", "roundtrip"}));
    tr->add_option("--alpha", tr_alpha, "transform order (> -1)")->required();
    tr->add_option("--q", tr_q, "lattice ratio: selects the q-deformed transform");
    tr->add_option("--input", tr_in, "samples CSV (index,node,re,im)")->required();
    tr->add_option("--out", tr_out, "output samples CSV");
    tr->add_option("--tol", tr_tol, "round-trip acceptance tolerance");

    // build-bank
    auto* bb = app.add_subcommand("build-bank", "build, complete and certify a filter bank");
    int bb_nu = 2;
    std::string bb_variant = "classical", bb_m0 = "flat", bb_conv = "geometric", bb_out;
    double bb_q = 0.5;
    std::vector<double> bb_coeffs;
    bb->add_option("--nu", bb_nu, "number of bands minus one")->required();
    bb->add_option("--variant", bb_variant, "classical|qdeformed|annular");
    bb->add_option("--q", bb_q, "deformation / lattice parameter");
    bb->add_option("--m0", bb_m0, "flat|step|annular|bessel-series");
    bb->add_option("--coeffs", bb_coeffs, "bessel-series coefficients");
    bb->add_option("--rho-convention", bb_conv, "geometric|probability");
    bb->add_option("--out", bb_out, "bank JSON path");

    // check-cuntz
    auto* cc = app.add_subcommand("check-cuntz", "verify the isometry relations of a bank");
    std::string cc_bank, cc_out;
    int cc_tests = 20;
    std::uint64_t cc_seed = 20260810;
    double cc_tol = 1e-10;
    cc->add_option("--bank", cc_bank, "bank JSON file")->required();
    cc->add_option("--n-tests", cc_tests, "number of seeded test functions");
    cc->add_option("--seed", cc_seed, "random seed");
    cc->add_option("--tol", cc_tol, "residual tolerance");
    cc->add_option("--out", cc_out, "report path");

    // frame-bounds
    auto* fb = app.add_subcommand("frame-bounds", "estimate frame bounds of a wavelet family");
    std::string fb_family = "haar", fb_out;
    int fb_nu = 1, fb_J = 4, fb_K = 32, fb_tests = 10;
    std::uint64_t fb_seed = 20260810;
    double fb_q = 0.5;
    fb->add_option("--family", fb_family, "haar|orbit|bessel-series");
    fb->add_option("--nu", fb_nu, "bands minus one");
    fb->add_option("--J", fb_J, "scale truncation");
    fb->add_option("--K", fb_K, "translate truncation");
    fb->add_option("--n-tests", fb_tests, "number of test functions");
    fb->add_option("--seed", fb_seed, "random seed");
    fb->add_option("--q", fb_q, "lattice parameter for orbit families");
    fb->add_option("--out", fb_out, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitPass : kExitUsage;
    }

    try {
        if (sc->parsed()) return run_specfun_check(sc_tol, sc_out, sc_format);
        if (tr->parsed())
            return run_transform(tr_dir, tr_alpha, tr_q, tr->count("--q") > 0, tr_in, tr_out,
                                 tr_tol);
        if (bb->parsed())
            return run_build_bank(bb_nu, bb_variant, bb_q, bb_m0, bb_coeffs, bb_conv, bb_out);
        if (cc->parsed()) return run_check_cuntz(cc_bank, cc_tests, cc_seed, cc_tol, cc_out);
        if (fb->parsed())
            return run_frame_bounds(fb_family, fb_nu, fb_J, fb_K, fb_tests, fb_seed, fb_q,
                                    fb_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitNumericalFail;
    }
    return kExitUsage;
}
