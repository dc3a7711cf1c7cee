// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#include "hmra/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hmra::io {

namespace {

json complex_to_json(const complex_t& c) { return json::array({c.real(), c.imag()}); }

complex_t complex_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::string variant_name(cuntz::RepVariant v) {
    switch (v) {
        case cuntz::RepVariant::ClassicalC: return "classical_c";
        case cuntz::RepVariant::QDeformedCq: return "q_deformed_cq";
        case cuntz::RepVariant::AnnularDq: return "annular_dq";
    }
    throw std::logic_error("unknown variant");
}

cuntz::RepVariant variant_from_name(const std::string& s) {
    if (s == "classical_c") return cuntz::RepVariant::ClassicalC;
    if (s == "q_deformed_cq") return cuntz::RepVariant::QDeformedCq;
    if (s == "annular_dq") return cuntz::RepVariant::AnnularDq;
    throw std::invalid_argument("unknown bank variant: " + s);
}

}  // namespace

BankDocument bank_document_from_representation(const cuntz::Representation& rep) {
    BankDocument doc;
    doc.cfg = rep.cfg;
    doc.rho = rep.rho;
    doc.norm_const = rep.norm_const;
    doc.max_renormalization = rep.max_renormalization;
    const auto orbits = cuntz::orbit_table(rep.grid, rep.nu());
    const int n1 = rep.nu() + 1;
    for (size_t o = 0; o < orbits.parents.size(); ++o) {
        doc.base_points.push_back(rep.grid.points[orbits.parents[o]]);
        std::vector<std::vector<complex_t>> mat(n1, std::vector<complex_t>(n1));
        for (int k = 0; k < n1; ++k)
            for (int j = 0; j < n1; ++j)
                mat[k][j] =
                    rep.filter_values[k][static_cast<size_t>(orbits.members[o][j])];
        doc.samples.push_back(std::move(mat));
    }
    return doc;
}

json bank_to_json(const BankDocument& doc) {
    json j;
    j["nu"] = doc.cfg.nu;
    j["variant"] = variant_name(doc.cfg.variant);
    j["q"] = doc.cfg.q;
    j["rho"] = doc.rho;
    j["norm_const"] = doc.norm_const;
    j["rho_convention"] =
        doc.cfg.convention == cuntz::RhoConvention::GeometricWeights ? "geometric_weights"
                                                                 : "probability";
    json grid;
    grid["kind"] = doc.cfg.variant == cuntz::RepVariant::AnnularDq ? "tree" : "polar";
    grid["q"] = doc.cfg.q;
    grid["k_max"] = doc.cfg.k_max;
    grid["M"] = doc.cfg.M;
    grid["depth"] = doc.cfg.depth;
    j["grid"] = grid;
    json pts = json::array();
    for (const auto& p : doc.base_points) pts.push_back(complex_to_json(p));
    j["base_points"] = pts;
    json filters = json::array();
    const int n1 = doc.cfg.nu + 1;
    for (int k = 0; k < n1; ++k) {
        json fk;
        fk["k"] = k;
        json samples = json::array();
        for (const auto& orbit : doc.samples) {
            json row = json::array();
            for (int col = 0; col < n1; ++col) row.push_back(complex_to_json(orbit[k][col]));
            samples.push_back(row);
        }
        fk["samples"] = samples;
        filters.push_back(fk);
    }
    j["filters"] = filters;
    j["max_renormalization"] = doc.max_renormalization;
    j["max_unitarity_residual"] = doc.max_unitarity_residual;
    j["weighted_row_orthogonality_residual"] = doc.weighted_row_orthogonality_residual;
    return j;
}

BankDocument bank_from_json(const json& j) {
    BankDocument doc;
    doc.cfg.nu = j.at("nu").get<int>();
    doc.cfg.variant = variant_from_name(j.at("variant").get<std::string>());
    doc.cfg.q = j.at("q").get<double>();
    doc.cfg.convention = j.at("rho_convention").get<std::string>() == "probability"
                             ? cuntz::RhoConvention::Probability
                             : cuntz::RhoConvention::GeometricWeights;
    const auto& grid = j.at("grid");
    doc.cfg.k_max = grid.at("k_max").get<int>();
    doc.cfg.M = grid.at("M").get<int>();
    doc.cfg.depth = grid.at("depth").get<int>();
    doc.rho = j.at("rho").get<std::vector<double>>();
    doc.norm_const = j.at("norm_const").get<double>();
    doc.max_renormalization = j.at("max_renormalization").get<double>();
    doc.max_unitarity_residual = j.value("max_unitarity_residual", 0.0);
    doc.weighted_row_orthogonality_residual =
        j.value("weighted_row_orthogonality_residual", 0.0);
    for (const auto& p : j.at("base_points")) doc.base_points.push_back(complex_from_json(p));
    const int n1 = doc.cfg.nu + 1;
    const auto& filters = j.at("filters");
    if (static_cast<int>(filters.size()) != n1)
        throw std::invalid_argument("bank_from_json: filter count mismatch");
    const size_t n_orbits = doc.base_points.size();
    doc.samples.assign(n_orbits,
                       std::vector<std::vector<complex_t>>(n1, std::vector<complex_t>(n1)));
    for (const auto& fk : filters) {
        const int k = fk.at("k").get<int>();
        const auto& samples = fk.at("samples");
        if (samples.size() != n_orbits)
            throw std::invalid_argument("bank_from_json: orbit count mismatch");
        for (size_t o = 0; o < n_orbits; ++o)
            for (int col = 0; col < n1; ++col)
                doc.samples[o][k][col] = complex_from_json(samples.at(o).at(col));
    }
    return doc;
}

json relation_report_to_json(const cuntz::RelationReport& r) {
    json j;
    j["variant"] = r.variant;
    j["max_isometry_residual"] = r.max_isometry_residual;
    j["completeness_residual"] = r.completeness_residual;
    j["test_count"] = r.test_count;
    j["seed"] = r.seed;
    j["grid"] = r.grid_descriptor;
    j["rho_convention"] = r.rho_convention;
    return j;
}

json frame_report_to_json(const frames::FrameReport& r) {
    json j;
    j["ratio_min"] = r.ratio_min;
    j["ratio_max"] = r.ratio_max;
    j["J"] = r.J;
    j["K"] = r.K;
    j["per_function_ratios"] = r.per_function_ratios;
    j["seed"] = r.seed;
    return j;
}

json qmf_report_to_json(const mra::QmfReport& r) {
    json j;
    j["max_residual"] = r.max_residual;
    j["empirical_min"] = r.empirical_min;
    j["empirical_max"] = r.empirical_max;
    j["empirical_mean"] = r.empirical_mean;
    j["model_constant"] = r.model_constant;
    return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

std::string to_csv(const std::vector<CsvRow>& rows) {
    std::ostringstream os;
    os << "identity,params,residual,threshold,pass\n";
    os.precision(17);
    for (const auto& r : rows) {
        os << r.identity << "," << r.params << "," << r.residual << "," << r.threshold << ","
           << (r.pass ? 1 : 0) << "\n";
    }
    return os.str();
}

SampleFile read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples file: " + path);
    SampleFile s;
    std::string line;
    if (!std::getline(in, line)) return s;  // empty file -> empty samples
    if (line.rfind("index", 0) != 0)
        throw std::invalid_argument("samples file must start with the header index,node,re,im");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> cols;
        while (std::getline(ls, tok, ',')) cols.push_back(tok);
        if (cols.size() != 4)
            throw std::invalid_argument("samples file row must have 4 columns: " + line);
        s.index.push_back(std::stoi(cols[0]));
        s.node.push_back(std::stod(cols[1]));
        s.value.emplace_back(std::stod(cols[2]), std::stod(cols[3]));
    }
    return s;
}

void write_samples_csv(const std::string& path, const SampleFile& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write samples file: " + path);
    out << "index,node,re,im\n";
    out.precision(17);
    for (size_t i = 0; i < s.index.size(); ++i)
        out << s.index[i] << "," << s.node[i] << "," << s.value[i].real() << ","
            << s.value[i].imag() << "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace hmra::io
