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

#ifndef ENTKIT_STATEBANK_HPP
#define ENTKIT_STATEBANK_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "entkit/matkit.hpp"

namespace entkit::statebank {

using matkit::Complex;
using matkit::DimSpec;
using matkit::Mat;
using matkit::Vec;

struct DensityMatrix {
    Mat matrix;
    DimSpec dims;
    std::string label;
};

struct ValidationReport {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;
    bool pass() const { return hermitian_ok && trace_ok && psd_ok; }
};

struct ParamSpec {
    std::string name;
    double lo;
    double hi;
    double default_value;
};

struct StateFamily {
    std::string id;
    std::vector<ParamSpec> params;
    std::vector<int> dims;
    std::string summary;
};

using Params = std::map<std::string, double>;

/// All catalog families with parameter names, documented ranges and defaults.
const std::vector<StateFamily>& catalog();

const StateFamily* find_family(const std::string& id);

/// Build a catalog state. Parameters outside the documented ranges are
/// rejected unless `unchecked` is set; the result is always validated as a
/// density matrix (Hermitian, unit trace, PSD within tolerance) unless
/// `unchecked` is set.
DensityMatrix make_state(const std::string& family, const Params& params = {},
                         bool unchecked = false);

ValidationReport validate(const DensityMatrix& rho);

/// Bell states phi+, phi-, psi+, psi- for which = 0..3.
Vec bell_vector(int which);

// -- random generators used by property tests --------------------------------

Vec random_pure(int dim, std::mt19937_64& rng);
DensityMatrix random_density(const DimSpec& dims, int rank, std::mt19937_64& rng);
DensityMatrix random_separable(int d1, int d2, int terms, std::mt19937_64& rng);
DensityMatrix random_product_pure(int d1, int d2, std::mt19937_64& rng);
/// Fully separable three-qubit mixture sum_i p_i a_i (x) b_i (x) c_i.
DensityMatrix random_fully_separable_3q(int terms, std::mt19937_64& rng);

}  // namespace entkit::statebank

#endif  // ENTKIT_STATEBANK_HPP
