// Copyright 2026 The entkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace entkit::io {

using matkit::Mat;

json matrix_to_json(const Mat& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat matrix_from_json(const json& j) {
    Eigen::Index rows = j.at("rows").get<Eigen::Index>();
    Eigen::Index cols = j.at("cols").get<Eigen::Index>();
    const json& entries = j.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw matkit::DimensionError("matrix_from_json: entry count mismatch");
    Mat m(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++k)
            m(i, j2) = matkit::Complex(entries[k][0].get<double>(), entries[k][1].get<double>());
    return m;
}

json state_to_json(const statebank::DensityMatrix& rho) {
    json j = matrix_to_json(rho.matrix);
    j.erase("rows");
    j.erase("cols");
    j["label"] = rho.label;
    j["dims"] = rho.dims.dims;
    return j;
}

statebank::DensityMatrix state_from_json(const json& j) {
    statebank::DensityMatrix rho;
    rho.label = j.at("label").get<std::string>();
    rho.dims = matkit::DimSpec(j.at("dims").get<std::vector<int>>());
    int n = rho.dims.total();
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n * n)
        throw matkit::DimensionError("state_from_json: entry count mismatch");
    rho.matrix = Mat(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c, ++k)
            rho.matrix(i, c) =
                matkit::Complex(entries[k][0].get<double>(), entries[k][1].get<double>());
    return rho;
}

json witness_to_json(const witness::WitnessOperator& w) {
    json j = matrix_to_json(w.matrix);
    j["metadata"] = {{"family", w.family},
                     {"params", w.params},
                     {"target", w.target_label},
                     {"antihermitian_residue", w.antihermitian_residue}};
    return j;
}

json verdict_to_json(const criteria::CriterionVerdict& v) {
    return json{{"criterion", v.criterion},
                {"statistic", v.statistic},
                {"threshold", v.threshold},
                {"verdict", criteria::verdict_name(v.verdict)},
                {"notes", v.notes}};
}

std::string csv_escape(const std::string& field) {
    bool needs_quoting = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quoting) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec <= 16; ++prec) {
        char probe[40];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, x);
        double back = std::strtod(probe, nullptr);
        if (back == x) return probe;
    }
    return buf;
}

std::string moments_to_csv(const std::vector<moments::MomentVector>& mvs) {
    std::string out = csv_row({"kind", "k", "value"});
    for (const auto& mv : mvs)
        for (size_t i = 0; i < mv.values.size(); ++i)
            out += csv_row({moments::kind_name(mv.kind), std::to_string(i + 1),
                            format_double(mv.values[i])});
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw matkit::DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw matkit::DomainError("cannot write file: " + path);
    out << content;
}

}  // namespace entkit::io
