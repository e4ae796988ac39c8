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

#ifndef ENTKIT_QMAPS_HPP
#define ENTKIT_QMAPS_HPP

#include <string>

#include "entkit/statebank.hpp"

namespace entkit::qmaps {

using matkit::Complex;
using matkit::DimSpec;
using matkit::Mat;
using statebank::DensityMatrix;

/// alpha * rho^{T_B} + beta * R(rho) on a d (x) d state.
Mat phi_map(const DensityMatrix& rho, double alpha, double beta);

struct PositivityBound {
    enum Kind { All, None, LowerRatio, UpperRatio, NotApplicable } kind = NotApplicable;
    // 1: PT and R both PSD; 2: PT PSD, R indefinite; 3: PT indefinite, R PSD;
    // 4: both indefinite.
    int case_tag = 0;
    double threshold = 0.0;  // bound on alpha/beta for LowerRatio / UpperRatio
    std::string note;
};

/// Classifies a state by the signs of lambda_min(rho^{T_B}) and
/// lambda_min(R(rho)) and returns the alpha/beta range on which the map
/// alpha PT + beta R stays positive on that state. Requires R(rho) Hermitian
/// within tolerance; otherwise NotApplicable.
PositivityBound phi_positivity_bound(const DensityMatrix& rho);

struct ChoiMatrix {
    Mat matrix;
    std::string map_id;
    int input_dim = 0;  // the map acts on M_{input_dim}
    double hermiticity_defect = 0.0;
};

/// Choi matrix sum_ij e_ij (x) Phi(e_ij).
/// map_id "phi": Phi_{alpha,beta} on M_{d^2} viewed as a d (x) d system
///               (d = 2 supported; the witness construction targets 4 (x) 4).
/// map_id "transpose": plain transpose on M_d.
ChoiMatrix choi_matrix(const std::string& map_id, double alpha, double beta, int d);

/// (p/d^2) I + (1-p)/Tr[R(rho)] R(rho). Requires Tr[R(rho)] > 0.
Mat spa_realign(const DensityMatrix& rho, double p);

/// Smallest admissible mixing probability per the moment-based bound:
/// 0 when lambda_min^{lb}[R(rho)] >= 0, else d^2 k / (Tr[R] + d^2 k) with
/// k = -lambda_min^{lb}[R(rho)].
double spa_lower_p(const DensityMatrix& rho);

/// Same threshold computed from the exact spectrum of R(rho); cross-check only.
double spa_lower_p_exact(const DensityMatrix& rho);

/// SPA of single-qubit partial transposition on a three-qubit state:
/// (1/10) I_8 + (1/5) rho^{T_X}, part in {0,1,2}.
Mat spa_pt_qubit(const DensityMatrix& rho, int part);

/// R(rho) computed as (rho P)^{T_B} P with P the SWAP operator.
Mat realign_via_swap(const DensityMatrix& rho);

/// Three-qubit realignment: 8x8 matrix whose rows are the column-major vecs
/// of the 2x2 blocks of rho, in the documented block order.
Mat realign_tripartite(const DensityMatrix& rho);

/// Same operation computed as (rho Q)^tau with Q the column permutation
/// (0,4,1,5,2,6,3,7) and tau the blockwise 2x2 transpose.
Mat realign_tripartite_qtau(const DensityMatrix& rho);

}  // namespace entkit::qmaps

#endif  // ENTKIT_QMAPS_HPP
