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

#include "entkit/matkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entkit::matkit {

double hermiticity_defect(const Mat& a) {
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& a, double tol) {
    if (a.rows() != a.cols()) return false;
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return hermiticity_defect(a) <= tol * scale;
}

void require_finite(const Mat& a, const std::string& where) {
    if (!a.allFinite()) throw NumericalError(where + ": non-finite entries");
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {

void check_square_dims(const Mat& rho, const DimSpec& dims, const char* op) {
    if (rho.rows() != rho.cols())
        throw DimensionError(std::string(op) + ": matrix not square");
    if (rho.rows() != dims.total())
        throw DimensionError(std::string(op) + ": order does not match dims");
}

// Strides for mixed-radix decomposition of a composite index.
std::vector<int> strides_of(const DimSpec& dims) {
    int n = dims.parties();
    std::vector<int> s(n, 1);
    for (int k = n - 2; k >= 0; --k) s[k] = s[k + 1] * dims.dims[k + 1];
    return s;
}

}  // namespace

Mat partial_trace(const Mat& rho, const DimSpec& dims, int keep) {
    check_square_dims(rho, dims, "partial_trace");
    int n = dims.parties();
    if (keep < 0 || keep >= n) throw DimensionError("partial_trace: bad subsystem index");
    auto st = strides_of(dims);
    int dk = dims.dims[keep];
    int rest = dims.total() / dk;
    Mat out = Mat::Zero(dk, dk);
    // Enumerate the traced-out multi-index once per (i,j) pair of the kept one.
    for (int i = 0; i < dk; ++i) {
        for (int j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (int r = 0; r < rest; ++r) {
                int row = 0, col = 0, rr = r;
                for (int p = n - 1; p >= 0; --p) {
                    if (p == keep) continue;
                    int digit = rr % dims.dims[p];
                    rr /= dims.dims[p];
                    row += digit * st[p];
                    col += digit * st[p];
                }
                acc += rho(row + i * st[keep], col + j * st[keep]);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

Mat partial_transpose(const Mat& rho, const DimSpec& dims, int part) {
    check_square_dims(rho, dims, "partial_transpose");
    int n = dims.parties();
    if (part < 0 || part >= n) throw DimensionError("partial_transpose: bad subsystem index");
    auto st = strides_of(dims);
    int dp = dims.dims[part];
    int total = dims.total();
    Mat out(total, total);
    for (int r = 0; r < total; ++r) {
        int rp = (r / st[part]) % dp;
        int rbase = r - rp * st[part];
        for (int c = 0; c < total; ++c) {
            int cp = (c / st[part]) % dp;
            int cbase = c - cp * st[part];
            out(rbase + cp * st[part], cbase + rp * st[part]) = rho(r, c);
        }
    }
    return out;
}

Mat realign(const Mat& rho, const DimSpec& dims) {
    if (!dims.bipartite()) throw DimensionError("realign: bipartite dims required");
    check_square_dims(rho, dims, "realign");
    int d1 = dims.dims[0], d2 = dims.dims[1];
    Mat out(d1 * d1, d2 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k)
                for (int l = 0; l < d2; ++l)
                    out(i * d1 + j, k * d2 + l) = rho(i * d2 + k, j * d2 + l);
    return out;
}

Vec vec_row_major(const Mat& a) {
    Vec v(a.rows() * a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            v(i * a.cols() + j) = a(i, j);
    return v;
}

SpectralSummary svd_values(const Mat& a, double tol) {
    require_finite(a, "svd_values");
    Eigen::JacobiSVD<Mat> svd(a);
    if (svd.info() != Eigen::Success)
        throw NumericalError("svd_values: decomposition did not converge");
    SpectralSummary out;
    out.tolerance = tol;
    out.values.assign(svd.singularValues().data(),
                      svd.singularValues().data() + svd.singularValues().size());
    double smax = out.values.empty() ? 0.0 : out.values.front();
    for (double s : out.values)
        if (s > tol * std::max(smax, 1e-300)) ++out.rank_at_tolerance;
    return out;
}

SpectralSummary eig_hermitian(const Mat& a, bool symmetrize, double tol) {
    require_finite(a, "eig_hermitian");
    if (a.rows() != a.cols()) throw DimensionError("eig_hermitian: matrix not square");
    Mat h = a;
    if (!is_hermitian(a)) {
        if (!symmetrize)
            throw NumericalError("eig_hermitian: input exceeds Hermiticity tolerance");
        h = 0.5 * (a + a.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("eig_hermitian: eigensolver did not converge");
    SpectralSummary out;
    out.tolerance = tol;
    out.values.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + es.eigenvalues().size());
    std::reverse(out.values.begin(), out.values.end());
    double amax = 0.0;
    for (double v : out.values) amax = std::max(amax, std::abs(v));
    for (double v : out.values)
        if (std::abs(v) > tol * std::max(amax, 1e-300)) ++out.rank_at_tolerance;
    return out;
}

double trace_norm(const Mat& a) {
    auto s = svd_values(a);
    double sum = 0.0;
    for (double v : s.values) sum += v;
    return sum;
}

double frobenius_norm(const Mat& a) { return a.norm(); }

Mat swap_operator(int d) {
    if (d < 2) throw DimensionError("swap_operator: d must be >= 2");
    Mat p = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
    return p;
}

Mat swap_partial_transpose(int d) {
    Mat p = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(i * d + i, j * d + j) = 1.0;
    return p;
}

std::vector<Mat> gell_mann_basis(int d) {
    if (d < 2 || d > 4) throw DimensionError("gell_mann_basis: supported dims are 2, 3, 4");
    std::vector<Mat> basis;
    basis.reserve(d * d);
    basis.push_back(Mat::Identity(d, d) / std::sqrt(double(d)));
    const double r2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Mat g = Mat::Zero(d, d);
            g(j, k) = r2;
            g(k, j) = r2;
            basis.push_back(g);
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Mat g = Mat::Zero(d, d);
            g(j, k) = Complex(0, -r2);
            g(k, j) = Complex(0, r2);
            basis.push_back(g);
        }
    for (int l = 1; l < d; ++l) {
        Mat g = Mat::Zero(d, d);
        double norm = 1.0 / std::sqrt(double(l) * (l + 1));
        for (int m = 0; m < l; ++m) g(m, m) = norm;
        g(l, l) = -double(l) * norm;
        basis.push_back(g);
    }
    return basis;
}

std::vector<Complex> power_moments(const Mat& a, int K) {
    if (a.rows() != a.cols()) throw DimensionError("power_moments: matrix not square");
    std::vector<Complex> m;
    m.reserve(K);
    Mat p = a;
    for (int k = 1; k <= K; ++k) {
        m.push_back(p.trace());
        if (k < K) p = p * a;
    }
    return m;
}

std::vector<double> char_coeffs(const Mat& a, int upto) {
    if (a.rows() != a.cols()) throw DimensionError("char_coeffs: matrix not square");
    if (upto < 1 || upto > a.rows())
        throw DimensionError("char_coeffs: upto out of range");
    auto moments = power_moments(a, upto);
    std::vector<double> coeff(upto + 1, 0.0);
    coeff[0] = 1.0;
    for (int k = 1; k <= upto; ++k) {
        double acc = 0.0;
        for (int i = 1; i <= k; ++i) {
            double sign = (i % 2 == 1) ? 1.0 : -1.0;
            acc += sign * coeff[k - i] * moments[i - 1].real();
        }
        coeff[k] = acc / k;
    }
    return std::vector<double>(coeff.begin() + 1, coeff.end());
}

}  // namespace entkit::matkit
