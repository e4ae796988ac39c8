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

#ifndef ENTKIT_MATKIT_HPP
#define ENTKIT_MATKIT_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entkit::matkit {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hermiticity tolerance: max|A - A^dag| <= kHermTol * max(1, max|A|).
inline constexpr double kHermTol = 1e-10;

/// Default relative rank cutoff: singular values sigma > kRankTol * sigma_max count.
inline constexpr double kDefaultRankTol = 1e-10;

/// Ordered list of subsystem dimensions, e.g. (2,2), (3,3) or (2,2,2).
struct DimSpec {
    std::vector<int> dims;

    DimSpec() = default;
    DimSpec(std::initializer_list<int> d) : dims(d) { check(); }
    explicit DimSpec(std::vector<int> d) : dims(std::move(d)) { check(); }

    int total() const {
        int n = 1;
        for (int d : dims) n *= d;
        return n;
    }
    int parties() const { return static_cast<int>(dims.size()); }
    bool bipartite() const { return dims.size() == 2; }
    bool square_bipartite() const { return bipartite() && dims[0] == dims[1]; }

    void check() const {
        if (dims.empty()) throw DimensionError("DimSpec: empty dimension list");
        for (int d : dims)
            if (d < 2) throw DimensionError("DimSpec: each subsystem dimension must be >= 2");
    }
};

/// Eigen- or singular-value summary: values sorted non-increasing plus the
/// rank implied by the tolerance (relative to the largest magnitude).
struct SpectralSummary {
    std::vector<double> values;
    double tolerance = kDefaultRankTol;
    int rank_at_tolerance = 0;
};

double hermiticity_defect(const Mat& a);
bool is_hermitian(const Mat& a, double tol = kHermTol);
void require_finite(const Mat& a, const std::string& where);

Mat kron(const Mat& a, const Mat& b);

/// Reduced matrix of subsystem `keep` (all other subsystems traced out).
Mat partial_trace(const Mat& rho, const DimSpec& dims, int keep);

/// Transpose of subsystem `part`, identity on the rest.
Mat partial_transpose(const Mat& rho, const DimSpec& dims, int part);

/// Block-vec rearrangement of a bipartite d1*d2 x d1*d2 matrix into the
/// d1^2 x d2^2 realigned matrix: row (i*d1+j) holds the row-major vec of the
/// (i,j) block of size d2 x d2.
Mat realign(const Mat& rho, const DimSpec& dims);

/// Row-major flattening of a matrix into a column vector.
Vec vec_row_major(const Mat& a);

SpectralSummary svd_values(const Mat& a, double tol = kDefaultRankTol);

/// Real eigenvalues of a Hermitian matrix, descending. Throws NumericalError
/// if the input fails the Hermiticity tolerance, unless `symmetrize` is set,
/// in which case (A + A^dag)/2 is diagonalized instead.
SpectralSummary eig_hermitian(const Mat& a, bool symmetrize = false,
                              double tol = kDefaultRankTol);

double trace_norm(const Mat& a);
double frobenius_norm(const Mat& a);

/// SWAP operator P = sum_ij |ij><ji| on a d x d bipartite space.
Mat swap_operator(int d);

/// P^{T_B} = sum_ij |ii><jj| (partial transpose of the SWAP operator).
Mat swap_partial_transpose(int d);

/// Orthonormal Hermitian operator basis: G_0 = I/sqrt(d) followed by the
/// d^2-1 traceless generalized Gell-Mann matrices normalized to
/// Tr[G_i G_j] = delta_ij (symmetric, antisymmetric, then diagonal).
std::vector<Mat> gell_mann_basis(int d);

/// Characteristic-polynomial coefficients a_1..a_upto of
/// f(x) = x^n - a_1 x^{n-1} + a_2 x^{n-2} - ... via the Newton recursion
/// a_k = (1/k) sum_{i=1..k} (-1)^{i-1} a_{k-i} Tr[A^i]. Caller asserts the
/// spectrum is real; imaginary residues of the moments are discarded.
std::vector<double> char_coeffs(const Mat& a, int upto);

/// Moments Tr[A^k] for k = 1..K by repeated multiplication.
std::vector<Complex> power_moments(const Mat& a, int K);

}  // namespace entkit::matkit

#endif  // ENTKIT_MATKIT_HPP
