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

#ifndef ENTKIT_WITNESS_HPP
#define ENTKIT_WITNESS_HPP

#include <map>
#include <string>
#include <vector>

#include "entkit/statebank.hpp"

namespace entkit::witness {

using matkit::Complex;
using matkit::DimSpec;
using matkit::Mat;
using matkit::Vec;
using statebank::DensityMatrix;

struct WitnessOperator {
    Mat matrix;  // Hermitian (symmetrized when the residue exceeds tolerance)
    std::string family;  // choi | det | wo | wn
    std::map<std::string, double> params;
    std::string target_label;
    double antihermitian_residue = 0.0;
};

/// k_rho = det(I + rho) - det(I_{d2} + Tr_A rho); determinants evaluated as
/// prod(1 + lambda_i) from the Hermitian spectra.
double k_rho(const DensityMatrix& rho);

/// Choi-based witness O - gamma I on 4 (x) 4 targets, O = C_Phi C_Phi^dag and
/// gamma = 2 (Tr[B Y^dag] + Tr[A] ||Y||_2) from the target's upper-right block.
WitnessOperator choi_witness(double alpha, double beta, const DensityMatrix& target);

/// Determinant witness built from an eigenvector of the target (largest
/// eigenvalue, deterministic tie-break by smallest index).
WitnessOperator det_witness(const DensityMatrix& target);

/// W0 witness from the partially transposed realignment of the target.
WitnessOperator wo_witness(const DensityMatrix& target);

/// W_(n) family combining k_rho^n with the W0 structure.
WitnessOperator wn_witness(int n, const DensityMatrix& target);

/// Tr[W rho]; the imaginary residue must stay below 1e-10.
double witness_expectation(const WitnessOperator& w, const DensityMatrix& rho);

struct ConcurrenceBounds {
    double c_min = 0.0;                          // trace-norm bound, normalized
    std::vector<std::pair<int, double>> phi_wn;  // -Tr[W_(n) rho] per requested n
    double phi_limit = 0.0;                      // n -> infinity value
    double swap_lb = 0.0;                        // SWAP first-moment bound
    double k = 0.0;                              // k_rho of the state
};

ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho, const std::vector<int>& n_list);

/// Wootters concurrence of a two-qubit state.
double wootters_concurrence(const DensityMatrix& rho);

struct SchmidtDecomposition {
    std::vector<double> coeffs;  // descending, sum of squares = 1
    int rank = 0;
};

SchmidtDecomposition schmidt_decompose(const Vec& psi, const DimSpec& dims,
                                       double tol = matkit::kDefaultRankTol);

}  // namespace entkit::witness

#endif  // ENTKIT_WITNESS_HPP
