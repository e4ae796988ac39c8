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

#ifndef ENTKIT_TABLES_HPP
#define ENTKIT_TABLES_HPP

#include <map>
#include <string>
#include <vector>

namespace entkit::tables {

/// A reproduced table: display rows plus the named numeric values that are
/// diffed against the embedded fixture.
struct TableArtifact {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, double> numeric;
};

struct FixtureEntry {
    std::string key;
    double expected;
    double tol;
    std::string anchor;  // where the reference value is published
};

struct DiffEntry {
    std::string key;
    double expected;
    double computed;
    double tol;
    bool ok;
};

struct TableDiff {
    std::vector<DiffEntry> entries;
    bool ok = true;
};

const std::vector<std::string>& table_ids();

TableArtifact compute_table(const std::string& id);

const std::vector<FixtureEntry>& fixture(const std::string& id);

TableDiff diff_against_fixture(const TableArtifact& artifact);

std::string to_csv(const TableArtifact& artifact);
std::string diff_to_string(const TableDiff& diff);

}  // namespace entkit::tables

#endif  // ENTKIT_TABLES_HPP
