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

#ifndef ENTKIT_SWEEP_HPP
#define ENTKIT_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entkit/criteria.hpp"
#include "entkit/statebank.hpp"

namespace entkit::sweep {

struct SweepSpec {
    std::string family;
    std::string param;
    double start = 0.0;
    double stop = 1.0;
    int steps = 1;                      // number of grid points, >= 1
    std::vector<double> explicit_list;  // overrides the grid when non-empty
    statebank::Params fixed;            // remaining family parameters
    std::vector<std::string> criteria;
    std::string out;
    std::uint64_t seed = 0;
    bool unchecked = false;
};

struct SweepResult {
    std::vector<double> grid;
    // rows[i][c] = verdict of criteria[c] at grid[i]; rows are written in grid
    // order regardless of evaluation order.
    std::vector<std::vector<criteria::CriterionVerdict>> rows;
    std::vector<std::string> columns;
};

std::vector<double> make_grid(const SweepSpec& spec);

/// Grid points evaluated independently; parallelized over points with OpenMP
/// when available.
SweepResult run(const SweepSpec& spec, const criteria::Options& opt = {});

/// Reference implementation: same evaluation in a plain serial loop. Output
/// must be byte-identical to run().
SweepResult run_serial(const SweepSpec& spec, const criteria::Options& opt = {});

std::string to_csv(const SweepSpec& spec, const SweepResult& result);

struct Boundary {
    std::string criterion;
    double location;
};

/// Sign changes of each criterion statistic along the grid, refined by
/// bisection to 1e-6 parameter resolution (50-iteration cap).
std::vector<Boundary> find_boundaries(const SweepSpec& spec, const SweepResult& result,
                                      const criteria::Options& opt = {});

std::string boundaries_to_csv(const std::vector<Boundary>& bs);

}  // namespace entkit::sweep

#endif  // ENTKIT_SWEEP_HPP
