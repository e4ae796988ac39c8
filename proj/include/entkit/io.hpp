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

#ifndef ENTKIT_IO_HPP
#define ENTKIT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "entkit/criteria.hpp"
#include "entkit/moments.hpp"
#include "entkit/statebank.hpp"
#include "entkit/witness.hpp"

namespace entkit::io {

using nlohmann::json;

/// State schema: {label, dims, entries as [re, im] pairs, row-major}.
/// Round trips are bit exact for finite doubles.
json state_to_json(const statebank::DensityMatrix& rho);
statebank::DensityMatrix state_from_json(const json& j);

/// Matrix schema shared by witness/Choi export, with an optional metadata block.
json matrix_to_json(const matkit::Mat& m);
matkit::Mat matrix_from_json(const json& j);

json witness_to_json(const witness::WitnessOperator& w);

/// Verdict schema: {criterion, statistic, threshold, verdict, notes}.
json verdict_to_json(const criteria::CriterionVerdict& v);

/// RFC-4180-style field quoting.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

/// Deterministic shortest-round-trip formatting used in CSV output.
std::string format_double(double x);

/// Moment vector as CSV rows (kind, k, value) with a header row.
std::string moments_to_csv(const std::vector<moments::MomentVector>& mvs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace entkit::io

#endif  // ENTKIT_IO_HPP
