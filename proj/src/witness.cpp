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

#include "entkit/witness.hpp"

#include <cmath>

#include "entkit/qmaps.hpp"

namespace entkit::witness {

using matkit::DimensionError;
using matkit::DomainError;

namespace {

constexpr double kResidueTol = 1e-10;

double det_one_plus(const Mat& hermitian) {
    auto eig = matkit::eig_hermitian(hermitian, /*symmetrize=*/true);
    double logdet = 0.0;
    for (double v : eig.values) logdet += std::log1p(v);
    return std::exp(logdet);
}

/// Symmetrize only when the anti-Hermitian residue exceeds tolerance; the
/// residue magnitude is recorded either way.
void finalize(WitnessOperator& w) {
    w.antihermitian_residue = matkit::hermiticity_defect(w.matrix);
    double scale = std::max(1.0, w.matrix.cwiseAbs().maxCoeff());
    if (w.antihermitian_residue > kResidueTol * scale) {
        Mat sym = 0.5 * (w.matrix + w.matrix.adjoint());
        w.matrix = sym;
    }
}

double sigma_max_pt(const DensityMatrix& rho) {
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 1);
    auto sv = matkit::svd_values(pt);
    return sv.values.front();
}

}  // namespace

double k_rho(const DensityMatrix& rho) {
    if (!rho.dims.bipartite()) throw DimensionError("k_rho: bipartite state required");
    Mat red = matkit::partial_trace(rho.matrix, rho.dims, 1);
    return det_one_plus(rho.matrix) - det_one_plus(red);
}

WitnessOperator choi_witness(double alpha, double beta, const DensityMatrix& target) {
    if (target.dims.dims != std::vector<int>{4, 4})
        throw DimensionError("choi_witness: 4 (x) 4 target required");
    if (alpha <= 0 || beta <= 0)
        throw DomainError("choi_witness: alpha, beta must be positive");
    auto choi = qmaps::choi_matrix("phi", alpha, beta, 2);
    Mat o = choi.matrix * choi.matrix.adjoint();
    Mat blockA = o.block(0, 0, 8, 8);
    Mat blockB = o.block(0, 8, 8, 8);
    Mat y = target.matrix.block(0, 8, 8, 8);
    double gamma = 2.0 * ((blockB * y.adjoint()).trace().real() +
                          blockA.trace().real() * matkit::frobenius_norm(y));
    WitnessOperator w;
    w.matrix = o - gamma * Mat::Identity(16, 16);
    w.family = "choi";
    w.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
    w.target_label = target.label;
    finalize(w);
    return w;
}

WitnessOperator det_witness(const DensityMatrix& target) {
    if (!target.dims.bipartite()) throw DimensionError("det_witness: bipartite state required");
    int n = target.dims.total();
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (target.matrix + target.matrix.adjoint()));
    // eigenvector of the largest eigenvalue; Eigen sorts ascending, ties keep
    // the smaller index first so the last column is a deterministic choice
    double lambda = es.eigenvalues()(n - 1);
    Vec psi = es.eigenvectors().col(n - 1);
    if (lambda <= 0) throw DomainError("det_witness: target has no positive eigenvalue");
    Mat red = matkit::partial_trace(target.matrix, target.dims, 1);
    double dfull = det_one_plus(target.matrix);
    double dred = det_one_plus(red);
    WitnessOperator w;
    w.matrix = (dfull / lambda) * (psi * psi.adjoint()) - dred * Mat::Identity(n, n);
    w.family = "det";
    w.params = {{"eigenvalue", lambda}};
    w.target_label = target.label;
    finalize(w);
    return w;
}

WitnessOperator wo_witness(const DensityMatrix& target) {
    if (!target.dims.square_bipartite())
        throw DimensionError("wo_witness: d (x) d target required");
    int n = target.dims.total();
    Mat r = matkit::realign(target.matrix, target.dims);
    auto rv = matkit::svd_values(r);
    double norm1 = 0.0;
    for (double s : rv.values) norm1 += s;
    double norm2 = matkit::frobenius_norm(r);
    int rank = rv.rank_at_tolerance;
    double smax = sigma_max_pt(target);
    Mat rtb = matkit::partial_transpose(r, target.dims, 1);
    WitnessOperator w;
    w.matrix = (1.0 + (1.0 - norm1) / (std::sqrt(double(rank)) * norm2)) * Mat::Identity(n, n) -
               rtb / smax;
    w.family = "wo";
    w.params = {{"rank", double(rank)}};
    w.target_label = target.label;
    finalize(w);
    return w;
}

WitnessOperator wn_witness(int n, const DensityMatrix& target) {
    if (n < 1) throw DomainError("wn_witness: n must be >= 1");
    if (!target.dims.square_bipartite())
        throw DimensionError("wn_witness: d (x) d target required");
    int order = target.dims.total();
    int d1 = target.dims.dims[0];
    Mat r = matkit::realign(target.matrix, target.dims);
    auto rv = matkit::svd_values(r);
    double norm1 = 0.0;
    for (double s : rv.values) norm1 += s;
    double norm2 = matkit::frobenius_norm(r);
    int rank = rv.rank_at_tolerance;
    double smax = sigma_max_pt(target);
    Mat rtb = matkit::partial_transpose(r, target.dims, 1);
    double k = k_rho(target);
    double pref = double(d1) / (d1 - 1);
    Mat id = Mat::Identity(order, order);
    WitnessOperator w;
    w.matrix = pref * (std::pow(k, n) * (id - rtb / smax) +
                       ((1.0 - norm1) / (std::sqrt(double(rank)) * norm2)) * id);
    w.family = "wn";
    w.params = {{"n", double(n)}, {"k_rho", k}};
    w.target_label = target.label;
    finalize(w);
    return w;
}

double witness_expectation(const WitnessOperator& w, const DensityMatrix& rho) {
    if (w.matrix.rows() != rho.matrix.rows())
        throw DimensionError("witness_expectation: dimension mismatch");
    Complex val = (w.matrix * rho.matrix).trace();
    if (std::abs(val.imag()) > kResidueTol * std::max(1.0, std::abs(val.real())))
        throw matkit::NumericalError("witness_expectation: imaginary residue too large");
    return val.real();
}

ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho, const std::vector<int>& n_list) {
    if (!rho.dims.bipartite())
        throw DimensionError("concurrence_bounds: bipartite state required");
    ConcurrenceBounds out;
    int d1 = std::min(rho.dims.dims[0], rho.dims.dims[1]);
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 0);
    Mat r = matkit::realign(rho.matrix, rho.dims);
    double pt_norm = matkit::trace_norm(pt);
    double r_norm = matkit::trace_norm(r);
    out.c_min = (std::max(pt_norm, r_norm) - 1.0) / (d1 - 1);
    if (rho.dims.square_bipartite()) {
        auto rv = matkit::svd_values(r);
        double norm2 = matkit::frobenius_norm(r);
        out.phi_limit = double(d1) / (d1 - 1) * (r_norm - 1.0) /
                        (std::sqrt(double(rv.rank_at_tolerance)) * norm2);
        out.k = k_rho(rho);
        for (int n : n_list) {
            auto w = wn_witness(n, rho);
            out.phi_wn.emplace_back(n, -witness_expectation(w, rho));
        }
        int d = rho.dims.dims[0];
        double t1 = (rho.matrix * matkit::swap_partial_transpose(d)).trace().real();
        out.swap_lb = std::sqrt(2.0 / (double(d) * (d - 1))) * (t1 - 1.0);
    } else {
        out.k = k_rho(rho);
    }
    return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.dims.dims != std::vector<int>{2, 2})
        throw DimensionError("wootters_concurrence: two-qubit state required");
    Mat sy(2, 2);
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    Mat yy = matkit::kron(sy, sy);
    Mat tilde = yy * rho.matrix.conjugate() * yy;
    Mat prod = rho.matrix * tilde;
    Eigen::ComplexEigenSolver<Mat> es(prod);
    std::vector<double> vals;
    for (Eigen::Index i = 0; i < 4; ++i) vals.push_back(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    double c = std::sqrt(vals[0]) - std::sqrt(vals[1]) - std::sqrt(vals[2]) - std::sqrt(vals[3]);
    return std::max(0.0, c);
}

SchmidtDecomposition schmidt_decompose(const Vec& psi, const DimSpec& dims, double tol) {
    if (!dims.bipartite()) throw DimensionError("schmidt_decompose: bipartite dims required");
    if (psi.size() != dims.total())
        throw DimensionError("schmidt_decompose: vector length does not match dims");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw DomainError("schmidt_decompose: vector is not normalized");
    int d1 = dims.dims[0], d2 = dims.dims[1];
    Mat amp(d1, d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) amp(i, j) = psi(i * d2 + j);
    auto sv = matkit::svd_values(amp, tol);
    SchmidtDecomposition out;
    out.coeffs = sv.values;
    out.rank = sv.rank_at_tolerance;
    return out;
}

}  // namespace entkit::witness
