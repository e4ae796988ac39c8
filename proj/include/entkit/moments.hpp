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

#ifndef ENTKIT_MOMENTS_HPP
#define ENTKIT_MOMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entkit/statebank.hpp"

namespace entkit::moments {

using matkit::Complex;
using matkit::Mat;
using statebank::DensityMatrix;

enum class MomentKind { PartialTranspose, Realign, Gram, Zhang };

std::string kind_name(MomentKind k);

struct MomentVector {
    MomentKind kind;
    std::vector<double> values;  // values[k-1] = k-th moment
    double operator[](int k) const { return values.at(k - 1); }
};

/// p_k = Tr[(rho^{T_B})^k], k = 1..K.
MomentVector pt_moments(const DensityMatrix& rho, int K);

/// m_k = Tr[R(rho)^k], k = 1..K (square realignment required).
MomentVector realign_moments(const DensityMatrix& rho, int K);

/// T_k = Tr[(R(rho)^dag R(rho))^k], k = 1..K.
MomentVector gram_moments(const DensityMatrix& rho, int K);

/// r_k = sum_i sigma_i(R(rho))^k, k = 1..K.
MomentVector zhang_moments(const DensityMatrix& rho, int K);

struct DescartesResult {
    bool psd = false;
    std::vector<double> coeffs;  // a_1..a_n of the characteristic polynomial
};

/// PSD test for a real-spectrum matrix via the signs of its characteristic
/// coefficients; a_i >= -1e-10 * max(1, |a|_inf) counts as nonnegative.
DescartesResult descartes_psd(const Mat& a);

/// Tr[A]/n - sqrt((n-1)(Tr[A^2]/n - (Tr[A]/n)^2)); a lower bound on the
/// minimum eigenvalue of a real-spectrum matrix.
double lambda_min_lb(const Mat& a);

struct EigenBounds {
    double lambda_min_lb = 0.0;
    double lambda_max_lb = 0.0;  // f(T1,T2,T3)
    double lambda_max_ub = 0.0;  // g(T1,T2,T3)
};

/// Bounds on the extreme eigenvalues of an order-n PSD matrix from its first
/// three moments. The upper bound is the largest real root of
/// T1 x^3 - 2 T2 x^2 + T3 x + T2^2 - T1 T3 = 0 (companion-matrix roots).
EigenBounds lambda_max_bounds(double T1, double T2, double T3, int n);

/// Closed-form evaluation of the cubic's largest root; numerically fragile
/// near repeated roots, kept for cross-checking only.
double lambda_max_ub_closed_form(double T1, double T2, double T3);

struct DkResult {
    int k = 0;        // rank of R(rho) at the tolerance
    double dk = 0.0;  // product of the k nonzero squared singular values
    // Signed characteristic coefficients from the first three Gram moments.
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

DkResult dk_product(const DensityMatrix& rho, double tol = matkit::kDefaultRankTol);

/// Tr[rho P^{T_B}]; equals Tr[R(rho)] on d (x) d states.
double first_moment_via_swap(const DensityMatrix& rho);

struct CopiesProbe {
    int k = 0;
    double cyclic_value = 0.0;      // Tr[(R^(x)k) W_k], W_k the cyclic shift
    double normalized_value = 0.0;  // cyclic_value / d^k
    double reference = 0.0;         // Tr[R(rho)^k]
    bool cyclic_matches = false;
    bool normalized_matches = false;
};

/// Evaluates the k-copy moment expression with the cyclic-shift reading of
/// the permutation power and reports which normalization reproduces
/// Tr[R(rho)^k]. Desk-scale probe: d in {2,3}, k <= 3.
CopiesProbe moment_via_copies(const DensityMatrix& rho, int k);

struct MomentEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long shots = 0;
};

/// Simulated Born-rule estimation of Tr[rho P^{T_B}]: draws i.i.d. outcomes
/// from the spectral measure of P^{T_B} under the state's weights.
MomentEstimate estimate_first_moment(const DensityMatrix& rho, long shots, std::uint64_t seed);

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

/// m1^2/k <= T1 <= m1^2/j for 1 <= j <= k.
Interval t1_interval_from_m1(double m1, int j, int k);

/// m1^4/(d^2 k^2) <= T2 <= m1^4/j^2.
Interval t2_interval_from_m1(double m1, int j, int k, int d);

struct M1Interval {
    enum Case { Case1, Case2, NoCase } tag = NoCase;
    double lower = 0.0;
    double upper = 0.0;
};

/// Interval for m1 in terms of s1 = Tr[R~(rho) P] and the mixing floor l,
/// selected by the position of d^4 l relative to 2 - d^2 s1 -+ 2 sqrt(1 - d^2 s1).
M1Interval m1_interval_from_s1(double s1, double l, int d);

}  // namespace entkit::moments

#endif  // ENTKIT_MOMENTS_HPP
