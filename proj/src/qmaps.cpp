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

#include "entkit/qmaps.hpp"

#include <cmath>

#include "entkit/moments.hpp"

namespace entkit::qmaps {

using matkit::DimensionError;
using matkit::DomainError;

namespace {

void require_square_bipartite(const DensityMatrix& rho, const char* op) {
    if (!rho.dims.square_bipartite())
        throw DimensionError(std::string(op) + ": d (x) d state required");
}

void require_three_qubit(const DensityMatrix& rho, const char* op) {
    if (rho.dims.parties() != 3 || rho.dims.total() != 8)
        throw DimensionError(std::string(op) + ": (2,2,2) state required");
}

}  // namespace

Mat phi_map(const DensityMatrix& rho, double alpha, double beta) {
    require_square_bipartite(rho, "phi_map");
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 1);
    Mat r = matkit::realign(rho.matrix, rho.dims);
    return alpha * pt + beta * r;
}

PositivityBound phi_positivity_bound(const DensityMatrix& rho) {
    require_square_bipartite(rho, "phi_positivity_bound");
    PositivityBound out;
    Mat r = matkit::realign(rho.matrix, rho.dims);
    if (!matkit::is_hermitian(r)) {
        out.kind = PositivityBound::NotApplicable;
        out.note = "R(rho) is not Hermitian";
        return out;
    }
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 1);
    double lmin_pt = matkit::eig_hermitian(pt).values.back();
    double lmin_r = matkit::eig_hermitian(r).values.back();
    const double margin = 1e-12;
    bool pt_psd = lmin_pt >= -margin;
    bool r_psd = lmin_r >= -margin;
    if (pt_psd && r_psd) {
        out.kind = PositivityBound::All;
        out.case_tag = 1;
    } else if (pt_psd && !r_psd) {
        out.case_tag = 2;
        if (lmin_pt <= margin) {
            out.kind = PositivityBound::None;
            out.note = "lambda_min(rho^{T_B}) = 0 cannot offset a negative R eigenvalue";
        } else {
            out.kind = PositivityBound::LowerRatio;
            out.threshold = -lmin_r / lmin_pt;
        }
    } else if (!pt_psd && r_psd) {
        out.case_tag = 3;
        out.kind = PositivityBound::None;
        out.note = "NPT input: the map is not positive on the full domain";
    } else {
        out.case_tag = 4;
        out.kind = PositivityBound::None;
    }
    return out;
}

ChoiMatrix choi_matrix(const std::string& map_id, double alpha, double beta, int d) {
    ChoiMatrix out;
    out.map_id = map_id;
    if (map_id == "transpose") {
        if (d < 2) throw DimensionError("choi_matrix: d must be >= 2");
        out.input_dim = d;
        Mat c = Mat::Zero(d * d, d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Mat e = Mat::Zero(d, d);
                e(i, j) = 1.0;
                c.block(i * d, j * d, d, d) = e.transpose();
            }
        out.matrix = c;
    } else if (map_id == "phi") {
        if (d != 2) throw DimensionError("choi_matrix: phi map is built on 2 (x) 2 inputs");
        int n = d * d;
        DimSpec dims({d, d});
        Mat c = Mat::Zero(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat e = Mat::Zero(n, n);
                e(i, j) = 1.0;
                Mat img = alpha * matkit::partial_transpose(e, dims, 1) +
                          beta * matkit::realign(e, dims);
                c.block(i * n, j * n, n, n) = img;
            }
        out.matrix = c;
    } else {
        throw DomainError("choi_matrix: unknown map id '" + map_id + "'");
    }
    out.hermiticity_defect = matkit::hermiticity_defect(out.matrix);
    return out;
}

Mat spa_realign(const DensityMatrix& rho, double p) {
    require_square_bipartite(rho, "spa_realign");
    if (p < 0 || p > 1) throw DomainError("spa_realign: p must lie in [0,1]");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    Complex tr = r.trace();
    if (tr.real() <= 0 || std::abs(tr.imag()) > 1e-10)
        throw DomainError("spa_realign: Tr[R(rho)] must be real and positive");
    int n = rho.dims.total();
    return (p / n) * Mat::Identity(n, n) + ((1 - p) / tr.real()) * r;
}

double spa_lower_p(const DensityMatrix& rho) {
    require_square_bipartite(rho, "spa_lower_p");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    Complex tr = r.trace();
    if (tr.real() <= 0 || std::abs(tr.imag()) > 1e-10)
        throw DomainError("spa_lower_p: Tr[R(rho)] must be real and positive");
    double lb = moments::lambda_min_lb(r);
    if (lb >= 0) return 0.0;
    double k = -lb;
    double n2 = rho.dims.total();
    return n2 * k / (tr.real() + n2 * k);
}

double spa_lower_p_exact(const DensityMatrix& rho) {
    require_square_bipartite(rho, "spa_lower_p_exact");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    Complex tr = r.trace();
    if (tr.real() <= 0 || std::abs(tr.imag()) > 1e-10)
        throw DomainError("spa_lower_p_exact: Tr[R(rho)] must be real and positive");
    Eigen::ComplexEigenSolver<Mat> es(r);
    double lmin = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (std::abs(es.eigenvalues()(i).imag()) > 1e-8)
            throw DomainError("spa_lower_p_exact: R(rho) has a complex eigenvalue");
        lmin = std::min(lmin, es.eigenvalues()(i).real());
    }
    if (lmin >= 0) return 0.0;
    double k = -lmin;
    double n2 = rho.dims.total();
    return n2 * k / (tr.real() + n2 * k);
}

Mat spa_pt_qubit(const DensityMatrix& rho, int part) {
    require_three_qubit(rho, "spa_pt_qubit");
    if (part < 0 || part > 2) throw DimensionError("spa_pt_qubit: part must be 0, 1 or 2");
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, part);
    return 0.1 * Mat::Identity(8, 8) + 0.2 * pt;
}

Mat realign_via_swap(const DensityMatrix& rho) {
    require_square_bipartite(rho, "realign_via_swap");
    int d = rho.dims.dims[0];
    Mat p = matkit::swap_operator(d);
    Mat m = rho.matrix * p;
    return matkit::partial_transpose(m, rho.dims, 1) * p;
}

Mat realign_tripartite(const DensityMatrix& rho) {
    require_three_qubit(rho, "realign_tripartite");
    const Mat& m = rho.matrix;
    Mat out(8, 8);
    // Row 2I + s holds [vec(block(I, 2s)), vec(block(I, 2s+1))] with
    // column-major vec of each 2x2 block.
    for (int bi = 0; bi < 4; ++bi) {
        for (int s = 0; s < 2; ++s) {
            for (int half = 0; half < 2; ++half) {
                int bj = 2 * s + half;
                for (int col = 0; col < 2; ++col)
                    for (int row = 0; row < 2; ++row)
                        out(2 * bi + s, 4 * half + 2 * col + row) =
                            m(2 * bi + row, 2 * bj + col);
            }
        }
    }
    return out;
}

Mat realign_tripartite_qtau(const DensityMatrix& rho) {
    require_three_qubit(rho, "realign_tripartite_qtau");
    static const int perm[8] = {0, 4, 1, 5, 2, 6, 3, 7};  // column s of rho*Q
    Mat rq(8, 8);
    for (int c = 0; c < 8; ++c) rq.col(c) = rho.matrix.col(perm[c]);
    Mat out(8, 8);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            out.block(2 * bi, 2 * bj, 2, 2) = rq.block(2 * bi, 2 * bj, 2, 2).transpose();
    return out;
}

}  // namespace entkit::qmaps
