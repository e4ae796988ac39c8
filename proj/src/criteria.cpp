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

#include "entkit/criteria.hpp"

#include <cmath>
#include <sstream>

#include "entkit/qmaps.hpp"
#include "entkit/witness.hpp"

namespace entkit::criteria {

using matkit::Complex;
using matkit::Mat;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Entangled: return "Entangled";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::NotApplicable: return "NotApplicable";
        case Verdict::Error: return "Error";
    }
    return "?";
}

namespace {

Verdict decide_above(double stat, double thr, double margin) {
    return stat > thr + margin ? Verdict::Entangled : Verdict::Inconclusive;
}

Verdict decide_below(double stat, double thr, double margin) {
    return stat < thr - margin ? Verdict::Entangled : Verdict::Inconclusive;
}

CriterionVerdict error_verdict(const std::string& name, const std::string& why) {
    CriterionVerdict v;
    v.criterion = name;
    v.verdict = Verdict::Error;
    v.notes = why;
    return v;
}

CriterionVerdict na_verdict(const std::string& name, const std::string& why) {
    CriterionVerdict v;
    v.criterion = name;
    v.verdict = Verdict::NotApplicable;
    v.notes = why;
    return v;
}

// Correlation matrix in the canonical (orthonormal, G0 = I/sqrt(d)) basis.
Eigen::MatrixXd canonical_correlation(const DensityMatrix& rho) {
    int da = rho.dims.dims[0], db = rho.dims.dims[1];
    auto ga = matkit::gell_mann_basis(da);
    auto gb = matkit::gell_mann_basis(db);
    Eigen::MatrixXd c(da * da, db * db);
    for (int a = 0; a < da * da; ++a)
        for (int b = 0; b < db * db; ++b) {
            Complex val = (rho.matrix * matkit::kron(ga[a], gb[b])).trace();
            c(a, b) = val.real();
        }
    return c;
}

double real_trace_norm(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().sum();
}

}  // namespace

CriterionVerdict ppt(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "ppt";
    if (!rho.dims.bipartite()) return na_verdict("ppt", "bipartite state required");
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 1);
    v.statistic = matkit::eig_hermitian(pt).values.back();
    v.threshold = 0.0;
    v.verdict = decide_below(v.statistic, v.threshold, opt.margin);
    return v;
}

CriterionVerdict ccnr(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "ccnr";
    if (!rho.dims.bipartite()) return na_verdict("ccnr", "bipartite state required");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    v.statistic = matkit::trace_norm(r);
    v.threshold = 1.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    return v;
}

CriterionVerdict correlation_tensor(const DensityMatrix& rho, double x, double y,
                                    const Options& opt) {
    CriterionVerdict v;
    v.criterion = "ct";
    if (!rho.dims.bipartite()) return na_verdict("ct", "bipartite state required");
    int da = rho.dims.dims[0], db = rho.dims.dims[1];
    if (da > 4 || db > 4) return na_verdict("ct", "no operator basis for local dimension > 4");
    if (x < 0 || y < 0) return error_verdict("ct", "x, y must be nonnegative");
    Eigen::MatrixXd c = canonical_correlation(rho);
    Eigen::VectorXd dx = Eigen::VectorXd::Ones(da * da);
    Eigen::VectorXd dy = Eigen::VectorXd::Ones(db * db);
    dx(0) = x;
    dy(0) = y;
    double lhs = real_trace_norm(dx.asDiagonal() * c * dy.asDiagonal());
    double na = std::sqrt((da - 1 + x * x) / da);
    double nb = std::sqrt((db - 1 + y * y) / db);
    v.statistic = lhs - na * nb;
    v.threshold = 0.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    std::ostringstream os;
    os << "x=" << x << " y=" << y;
    v.notes = os.str();
    return v;
}

CriterionVerdict correlation_tensor_best(const DensityMatrix& rho, const Options& opt) {
    if (!rho.dims.bipartite()) return na_verdict("ct", "bipartite state required");
    std::vector<std::pair<double, double>> grid = opt.ct_grid;
    if (grid.empty()) {
        const double pts[] = {0, 1.0 / 16, 1.0 / 32, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1, 2};
        for (double x : pts)
            for (double y : pts) grid.emplace_back(x, y);
        for (double x : pts) grid.emplace_back(x, x);
    }
    CriterionVerdict best;
    bool have = false;
    for (auto [x, y] : grid) {
        CriterionVerdict v = correlation_tensor(rho, x, y, opt);
        if (v.verdict == Verdict::NotApplicable || v.verdict == Verdict::Error) return v;
        if (!have || v.statistic > best.statistic) {
            best = v;
            have = true;
        }
    }
    return best;
}

CriterionVerdict dv(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "dv";
    if (!rho.dims.bipartite()) return na_verdict("dv", "bipartite state required");
    int da = rho.dims.dims[0], db = rho.dims.dims[1];
    if (da > 4 || db > 4) return na_verdict("dv", "no operator basis for local dimension > 4");
    Eigen::MatrixXd c = canonical_correlation(rho);
    Eigen::MatrixXd tl = c.block(1, 1, da * da - 1, db * db - 1);
    v.statistic = real_trace_norm(tl) - std::sqrt(double(da - 1) * (db - 1) / (da * db));
    v.threshold = 0.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    v.notes = "canonical-basis normalization";
    return v;
}

CriterionVerdict majorization(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "majorization";
    if (!rho.dims.bipartite()) return na_verdict("majorization", "bipartite state required");
    auto global = matkit::eig_hermitian(rho.matrix).values;
    double worst = -std::numeric_limits<double>::infinity();
    for (int part = 0; part < 2; ++part) {
        Mat red = matkit::partial_trace(rho.matrix, rho.dims, part);
        auto local = matkit::eig_hermitian(red).values;
        local.resize(global.size(), 0.0);
        double pg = 0.0, pl = 0.0;
        for (size_t i = 0; i < global.size(); ++i) {
            pg += global[i];
            pl += local[i];
            worst = std::max(worst, pg - pl);
        }
    }
    v.statistic = worst;
    v.threshold = 0.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    return v;
}

std::array<CriterionVerdict, 3> pt_moment_suite(const DensityMatrix& rho, const Options& opt) {
    std::array<CriterionVerdict, 3> out;
    out[0].criterion = "p3ppt";
    out[1].criterion = "d3";
    out[2].criterion = "p3oppt";
    if (!rho.dims.bipartite()) {
        for (auto& v : out) v = na_verdict(v.criterion, "bipartite state required");
        return out;
    }
    auto pm = moments::pt_moments(rho, 3);
    double p1 = pm[1], p2 = pm[2], p3 = pm[3];
    out[0].statistic = p2 * p2 - p3 * p1;
    out[0].verdict = decide_above(out[0].statistic, 0.0, opt.margin);
    out[1].statistic = 1.5 * p1 * p2 - 0.5 * p1 * p1 * p1 - p3;
    out[1].verdict = decide_above(out[1].statistic, 0.0, opt.margin);
    if (p2 <= 0) {
        out[2] = error_verdict("p3oppt", "degenerate second PT moment");
    } else {
        double p2c = std::min(p2, 1.0);
        double mu = std::floor(1.0 / p2c);
        double rad = std::max(0.0, mu * (p2c * (mu + 1) - 1));
        double x = (mu + std::sqrt(rad)) / (mu * (mu + 1));
        out[2].statistic = mu * x * x * x + std::pow(1 - mu * x, 3.0) - p3;
        out[2].verdict = decide_above(out[2].statistic, 0.0, opt.margin);
    }
    return out;
}

std::array<CriterionVerdict, 2> zhang_suite(const DensityMatrix& rho, const Options& opt) {
    std::array<CriterionVerdict, 2> out;
    out[0].criterion = "zhang_l4";
    out[1].criterion = "zhang_hankel";
    if (!rho.dims.bipartite()) {
        for (auto& v : out) v = na_verdict(v.criterion, "bipartite state required");
        return out;
    }
    int da = rho.dims.dims[0], db = rho.dims.dims[1];
    int s = std::min(da * da, db * db);  // number of singular values of R
    int kmax = opt.zhang_max_k > 0 ? opt.zhang_max_k : s / 2;
    int lmax = opt.zhang_max_k > 0 ? opt.zhang_max_k : (s - 1) / 2;
    int need = std::max(2 * kmax + 1, 2 * lmax + 2);
    need = std::max(need, 3);
    auto r = moments::zhang_moments(rho, need);

    out[0].statistic = r[2] * r[2] - r[3];
    out[0].verdict = decide_above(out[0].statistic, 0.0, opt.margin);

    // Hankel sequence with the first moment pinned to 1.
    auto seq = [&](int j) { return j == 0 ? 1.0 : r[j + 1]; };
    double min_eig = std::numeric_limits<double>::infinity();
    std::string where;
    for (int k = 1; k <= kmax; ++k) {
        Eigen::MatrixXd h(k + 1, k + 1);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) h(i, j) = seq(i + j);
        double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues()(0);
        if (lmin < min_eig) {
            min_eig = lmin;
            where = "H_" + std::to_string(k);
        }
    }
    for (int l = 1; l <= lmax; ++l) {
        Eigen::MatrixXd b(l + 1, l + 1);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= l; ++j) b(i, j) = seq(i + j + 1);
        double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b).eigenvalues()(0);
        if (lmin < min_eig) {
            min_eig = lmin;
            where = "B_" + std::to_string(l);
        }
    }
    out[1].statistic = -min_eig;
    out[1].verdict = decide_above(out[1].statistic, 0.0, opt.margin);
    out[1].notes = "most negative eigenvalue in " + where;
    return out;
}

CriterionVerdict r_moment(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "r_moment";
    if (!rho.dims.bipartite()) return na_verdict("r_moment", "bipartite state required");
    if (rho.dims.total() == 4)
        return na_verdict("r_moment", "mn = 4 excluded; use the two-qubit criterion");
    auto dk = moments::dk_product(rho, opt.rank_tol);
    double t1 = moments::gram_moments(rho, 1)[1];
    v.statistic = double(dk.k) * (dk.k - 1) * std::pow(dk.dk, 1.0 / dk.k) + t1 - 1.0;
    v.threshold = 0.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    v.notes = "k=" + std::to_string(dk.k);
    return v;
}

CriterionVerdict r2_two_qubit(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "r2";
    if (!rho.dims.bipartite() || rho.dims.dims[0] != 2 || rho.dims.dims[1] != 2)
        return na_verdict("r2", "two-qubit state required");
    auto gm = moments::gram_moments(rho, 3);
    double t1 = gm[1], t2 = gm[2], t3 = gm[3];
    auto bounds = moments::lambda_max_bounds(t1, t2, t3, 4);
    double d2 = std::max(0.0, 0.5 * (t1 * t1 - t2));
    double d3 = -(t1 * t1 * t1 - 3 * t1 * t2 + 2 * t3) / 6.0;
    double x = bounds.lambda_max_lb * std::sqrt(2 * std::sqrt(d2) + t1) + std::sqrt(std::abs(d3));
    double yrad = d2 - bounds.lambda_max_ub * t1 + bounds.lambda_max_lb * bounds.lambda_max_lb;
    if (yrad < 0) {
        std::ostringstream os;
        os << "negative inner radicand in Y: " << yrad;
        return error_verdict("r2", os.str());
    }
    double y = t1 - bounds.lambda_max_ub + std::sqrt(yrad);
    double inner = 3 * std::pow(x, 2.0 / 3.0) + 2 * y - 2 * t1;
    v.statistic = std::sqrt(std::max(0.0, inner)) - 1.0;
    v.threshold = 0.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    return v;
}

CriterionVerdict spa_r(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "spa_r";
    if (!rho.dims.square_bipartite()) return na_verdict("spa_r", "d (x) d state required");
    try {
        double p = opt.spa_p ? *opt.spa_p : qmaps::spa_lower_p(rho);
        Mat rt = qmaps::spa_realign(rho, p);
        double m1 = moments::realign_moments(rho, 1)[1];
        double ub = (p * (m1 - 1) + 1) / m1;
        v.statistic = matkit::trace_norm(rt) - ub;
        v.threshold = 0.0;
        v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
        std::ostringstream os;
        os << "p=" << p;
        v.notes = os.str();
    } catch (const matkit::DomainError& e) {
        return error_verdict("spa_r", e.what());
    } catch (const matkit::NumericalError& e) {
        return error_verdict("spa_r", e.what());
    }
    return v;
}

CriterionVerdict spa_error_inequality(const DensityMatrix& rho, double p, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "spa_error";
    if (!rho.dims.square_bipartite()) return na_verdict("spa_error", "d (x) d state required");
    try {
        Mat r = matkit::realign(rho.matrix, rho.dims);
        Mat rt = qmaps::spa_realign(rho, p);
        double m1 = r.trace().real();
        v.statistic = matkit::trace_norm(rt - r) - (1 - p) * (1 - m1) / m1;
        v.threshold = 0.0;
        auto sc = schmidt_symmetric_check(rho, opt.margin);
        if (v.statistic > opt.margin && sc.symmetric)
            return [&] {
                auto na = na_verdict("spa_error", "undefined for Schmidt-symmetric states");
                na.statistic = v.statistic;
                return na;
            }();
        if (v.statistic > opt.margin && m1 > 1 - p) {
            auto na = na_verdict("spa_error", "Tr[R] > 1-p: bound regime invalid");
            na.statistic = v.statistic;
            return na;
        }
        v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    } catch (const matkit::DomainError& e) {
        return error_verdict("spa_error", e.what());
    }
    return v;
}

CriterionVerdict first_moment_criterion(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "t1";
    if (!rho.dims.square_bipartite()) return na_verdict("t1", "d (x) d state required");
    v.statistic = moments::first_moment_via_swap(rho);
    v.threshold = 1.0;
    v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
    return v;
}

CriterionVerdict thm64(const DensityMatrix& rho, const Options& opt) {
    CriterionVerdict v;
    v.criterion = "thm64";
    if (!rho.dims.square_bipartite()) return na_verdict("thm64", "d (x) d state required");
    try {
        auto dk = moments::dk_product(rho, opt.rank_tol);
        double t1 = moments::first_moment_via_swap(rho);
        v.statistic = t1 * t1 / dk.k - 1.0 + double(dk.k) * (dk.k - 1) * std::pow(dk.dk, 1.0 / dk.k);
        v.threshold = 0.0;
        v.verdict = decide_above(v.statistic, v.threshold, opt.margin);
        v.notes = "k=" + std::to_string(dk.k);
    } catch (const matkit::DomainError& e) {
        return error_verdict("thm64", e.what());
    }
    return v;
}

SchmidtSymmetric schmidt_symmetric_check(const DensityMatrix& rho, double margin) {
    SchmidtSymmetric out;
    Mat r = matkit::realign(rho.matrix, rho.dims);
    out.defect = std::abs(Complex(matkit::trace_norm(r), 0) - r.trace());
    out.symmetric = out.defect <= margin;
    return out;
}

TriGenuineResult tri_genuine(const DensityMatrix& rho, const Options& opt) {
    TriGenuineResult out;
    const char* names[3] = {"tri_genuine_A", "tri_genuine_B", "tri_genuine_C"};
    if (rho.dims.parties() != 3 || rho.dims.total() != 8) {
        for (int i = 0; i < 3; ++i) out.cuts[i] = na_verdict(names[i], "(2,2,2) state required");
        return out;
    }
    Mat r = qmaps::realign_tripartite(rho);
    Mat gram = r.adjoint() * r;
    double base = matkit::eig_hermitian(gram).values.back();
    out.genuine = true;
    for (int part = 0; part < 3; ++part) {
        Mat spa = qmaps::spa_pt_qubit(rho, part);
        double shifted = matkit::eig_hermitian(gram + spa, /*symmetrize=*/true).values.back();
        CriterionVerdict v;
        v.criterion = names[part];
        v.statistic = shifted - base - 0.1;
        v.threshold = 0.0;
        v.verdict = decide_below(v.statistic, v.threshold, opt.margin);
        out.cuts[part] = v;
        out.genuine = out.genuine && v.verdict == Verdict::Entangled;
    }
    return out;
}

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names = {
        "ppt", "ccnr", "ct", "dv", "majorization", "p3ppt", "d3", "p3oppt",
        "zhang_l4", "zhang_hankel", "r_moment", "r2", "spa_r", "spa_error",
        "t1", "thm64", "tri_genuine", "witness_det", "witness_wo", "witness_wn",
        "witness_choi"};
    return names;
}

namespace {

CriterionVerdict witness_criterion(const std::string& name, const DensityMatrix& rho,
                                   const Options& opt) {
    try {
        witness::WitnessOperator w;
        if (name == "witness_det") {
            w = witness::det_witness(rho);
        } else if (name == "witness_wo") {
            if (!rho.dims.square_bipartite())
                return na_verdict(name, "d (x) d state required");
            w = witness::wo_witness(rho);
        } else if (name == "witness_wn") {
            if (!rho.dims.square_bipartite())
                return na_verdict(name, "d (x) d state required");
            w = witness::wn_witness(3, rho);
        } else {  // witness_choi
            if (rho.dims.dims != std::vector<int>{4, 4})
                return na_verdict(name, "4 (x) 4 state required");
            w = witness::choi_witness(1.0, 1.0, rho);
        }
        CriterionVerdict v;
        v.criterion = name;
        v.statistic = witness::witness_expectation(w, rho);
        v.threshold = 0.0;
        v.verdict = decide_below(v.statistic, v.threshold, opt.margin);
        return v;
    } catch (const std::exception& e) {
        return error_verdict(name, e.what());
    }
}

}  // namespace

std::vector<CriterionVerdict> run_battery(const DensityMatrix& rho,
                                          const std::vector<std::string>& which,
                                          const Options& opt) {
    std::vector<std::string> names = which;
    if (names.size() == 1 && names[0] == "all") names = criterion_names();
    std::vector<CriterionVerdict> out;
    for (const auto& name : names) {
        if (name == "ppt") out.push_back(ppt(rho, opt));
        else if (name == "ccnr") out.push_back(ccnr(rho, opt));
        else if (name == "ct") out.push_back(correlation_tensor_best(rho, opt));
        else if (name == "dv") out.push_back(dv(rho, opt));
        else if (name == "majorization") out.push_back(majorization(rho, opt));
        else if (name == "p3ppt") out.push_back(pt_moment_suite(rho, opt)[0]);
        else if (name == "d3") out.push_back(pt_moment_suite(rho, opt)[1]);
        else if (name == "p3oppt") out.push_back(pt_moment_suite(rho, opt)[2]);
        else if (name == "zhang_l4") out.push_back(zhang_suite(rho, opt)[0]);
        else if (name == "zhang_hankel") out.push_back(zhang_suite(rho, opt)[1]);
        else if (name == "r_moment") out.push_back(r_moment(rho, opt));
        else if (name == "r2") out.push_back(r2_two_qubit(rho, opt));
        else if (name == "spa_r") out.push_back(spa_r(rho, opt));
        else if (name == "spa_error") {
            double p = 0.0;
            if (opt.spa_p) {
                p = *opt.spa_p;
            } else if (rho.dims.square_bipartite()) {
                try {
                    p = qmaps::spa_lower_p(rho);
                } catch (const std::exception&) {
                    p = 0.0;
                }
            }
            out.push_back(spa_error_inequality(rho, p, opt));
        } else if (name == "t1") out.push_back(first_moment_criterion(rho, opt));
        else if (name == "thm64") out.push_back(thm64(rho, opt));
        else if (name == "tri_genuine") {
            auto tg = tri_genuine(rho, opt);
            for (auto& cut : tg.cuts) out.push_back(cut);
        } else if (name.rfind("witness_", 0) == 0) {
            out.push_back(witness_criterion(name, rho, opt));
        } else {
            out.push_back(error_verdict(name, "unknown criterion"));
        }
    }
    return out;
}

}  // namespace entkit::criteria
