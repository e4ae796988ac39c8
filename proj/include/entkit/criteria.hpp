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

#ifndef ENTKIT_CRITERIA_HPP
#define ENTKIT_CRITERIA_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entkit/moments.hpp"
#include "entkit/statebank.hpp"

namespace entkit::criteria {

using statebank::DensityMatrix;

enum class Verdict { Entangled, Inconclusive, NotApplicable, Error };

std::string verdict_name(Verdict v);

/// One criterion evaluation. `statistic` exceeds `threshold` in the direction
/// of violation by more than the decision margin iff verdict == Entangled;
/// within-margin results are Inconclusive.
struct CriterionVerdict {
    std::string criterion;
    double statistic = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::string notes;
};

struct Options {
    double margin = 1e-9;
    double rank_tol = matkit::kDefaultRankTol;
    /// (x,y) evaluation points for the correlation-tensor criterion; empty
    /// selects the default grid plus the x = y diagonal.
    std::vector<std::pair<double, double>> ct_grid;
    /// Mixing probability for the SPA-R criteria; unset means spa_lower_p.
    std::optional<double> spa_p;
    int zhang_max_k = 0;  // 0: derive from the local dimension
};

CriterionVerdict ppt(const DensityMatrix& rho, const Options& opt = {});
CriterionVerdict ccnr(const DensityMatrix& rho, const Options& opt = {});

/// ||D_x C^can D_y||_1 - N_A(x) N_B(y) at a single grid point.
CriterionVerdict correlation_tensor(const DensityMatrix& rho, double x, double y,
                                    const Options& opt = {});
/// Best violator over the grid in Options (default grid if empty).
CriterionVerdict correlation_tensor_best(const DensityMatrix& rho, const Options& opt = {});

/// Traceless-block correlation norm against sqrt((dA-1)(dB-1)/(dA dB))
/// (canonical-basis normalization of the de Vicente bound).
CriterionVerdict dv(const DensityMatrix& rho, const Options& opt = {});

CriterionVerdict majorization(const DensityMatrix& rho, const Options& opt = {});

/// {p3-PPT, D3(in), p3-OPPT} statistics from the first three PT moments.
std::array<CriterionVerdict, 3> pt_moment_suite(const DensityMatrix& rho,
                                                const Options& opt = {});

/// {L4, Hankel} criteria from realignment singular-value moments, with the
/// first moment pinned to 1 in the Hankel sequences.
std::array<CriterionVerdict, 2> zhang_suite(const DensityMatrix& rho, const Options& opt = {});

/// k(k-1) D_k^{1/k} + T_1 - 1 for m (x) n states with mn != 4.
CriterionVerdict r_moment(const DensityMatrix& rho, const Options& opt = {});

/// sqrt(3 X^{2/3} + 2Y - 2 T_1) - 1 for two-qubit states.
CriterionVerdict r2_two_qubit(const DensityMatrix& rho, const Options& opt = {});

/// ||R~(rho)||_1 - (p (Tr[R]-1) + 1)/Tr[R].
CriterionVerdict spa_r(const DensityMatrix& rho, const Options& opt = {});

/// ||R~(rho) - R(rho)||_1 - (1-p)(1 - Tr[R])/Tr[R].
CriterionVerdict spa_error_inequality(const DensityMatrix& rho, double p,
                                      const Options& opt = {});

/// t1 = Tr[rho P^{T_B}] against 1.
CriterionVerdict first_moment_criterion(const DensityMatrix& rho, const Options& opt = {});

/// t1^2/k - 1 + k(k-1) D_k^{1/k}.
CriterionVerdict thm64(const DensityMatrix& rho, const Options& opt = {});

struct SchmidtSymmetric {
    bool symmetric = false;
    double defect = 0.0;  // | ||R||_1 - Tr[R] |
};
SchmidtSymmetric schmidt_symmetric_check(const DensityMatrix& rho, double margin = 1e-9);

struct TriGenuineResult {
    std::array<CriterionVerdict, 3> cuts;  // A|BC, B|AC, C|AB
    bool genuine = false;
};
/// Three-qubit genuine-entanglement test combining the tripartite
/// realignment Gram matrix with the SPA of single-qubit partial transposition.
TriGenuineResult tri_genuine(const DensityMatrix& rho, const Options& opt = {});

/// Names understood by run_battery / the CLI --criteria flag.
const std::vector<std::string>& criterion_names();

/// Evaluate named criteria ("all" expands to the full battery, including the
/// adaptive witness expectations).
std::vector<CriterionVerdict> run_battery(const DensityMatrix& rho,
                                          const std::vector<std::string>& which,
                                          const Options& opt = {});

}  // namespace entkit::criteria

#endif  // ENTKIT_CRITERIA_HPP
