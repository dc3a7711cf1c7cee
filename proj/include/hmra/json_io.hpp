// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 hmra contributors
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hmra/cuntz.hpp"
#include "hmra/frames.hpp"
#include "hmra/multiresolution.hpp"

namespace hmra::io {

using json = nlohmann::ordered_json;

/// Serialized filter-bank document: the completion output of a
/// representation grid, reloadable bit-exactly.
struct BankDocument {
    cuntz::RepConfig cfg;
    std::vector<double> rho;
    double norm_const = 1.0;
    double max_renormalization = 0.0;
    // samples[orbit][k][j] = m_k at branch j of the orbit
    std::vector<std::vector<std::vector<complex_t>>> samples;
    std::vector<complex_t> base_points;  // orbit parent points
    double max_unitarity_residual = 0.0;
    double weighted_row_orthogonality_residual = 0.0;  // annular variant only
};

BankDocument bank_document_from_representation(const cuntz::Representation& rep);
json bank_to_json(const BankDocument& doc);
BankDocument bank_from_json(const json& j);

json relation_report_to_json(const cuntz::RelationReport& r);
json frame_report_to_json(const frames::FrameReport& r);
json qmf_report_to_json(const mra::QmfReport& r);

/// Deterministic serialization: ordered keys, 2-space indent, trailing
/// newline; doubles round-trip exactly.
std::string dump_report(const json& j);

struct CsvRow {
    std::string identity;
    std::string params;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = true;
};
std::string to_csv(const std::vector<CsvRow>& rows);

/// Sample files: CSV with header "index,node,re,im".
struct SampleFile {
    std::vector<int> index;
    std::vector<double> node;
    std::vector<complex_t> value;
};
SampleFile read_samples_csv(const std::string& path);
void write_samples_csv(const std::string& path, const SampleFile& s);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hmra::io
