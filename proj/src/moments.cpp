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

#include "entkit/moments.hpp"

#include <cmath>
#include <numeric>

namespace entkit::moments {

using matkit::DimensionError;
using matkit::DomainError;

std::string kind_name(MomentKind k) {
    switch (k) {
        case MomentKind::PartialTranspose: return "pt";
        case MomentKind::Realign: return "realign";
        case MomentKind::Gram: return "gram";
        case MomentKind::Zhang: return "zhang";
    }
    return "?";
}

namespace {

std::vector<double> real_power_moments(const Mat& a, int K, const char* op) {
    auto m = matkit::power_moments(a, K);
    std::vector<double> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        if (std::abs(m[i].imag()) > 1e-9 * std::max(1.0, std::abs(m[i].real())))
            throw matkit::NumericalError(std::string(op) + ": complex moment encountered");
        out[i] = m[i].real();
    }
    return out;
}

}  // namespace

MomentVector pt_moments(const DensityMatrix& rho, int K) {
    if (!rho.dims.bipartite()) throw DimensionError("pt_moments: bipartite state required");
    Mat pt = matkit::partial_transpose(rho.matrix, rho.dims, 1);
    return {MomentKind::PartialTranspose, real_power_moments(pt, K, "pt_moments")};
}

MomentVector realign_moments(const DensityMatrix& rho, int K) {
    if (!rho.dims.square_bipartite())
        throw DimensionError("realign_moments: d (x) d state required");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    return {MomentKind::Realign, real_power_moments(r, K, "realign_moments")};
}

MomentVector gram_moments(const DensityMatrix& rho, int K) {
    if (!rho.dims.bipartite()) throw DimensionError("gram_moments: bipartite state required");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    Mat gram = r.adjoint() * r;
    return {MomentKind::Gram, real_power_moments(gram, K, "gram_moments")};
}

MomentVector zhang_moments(const DensityMatrix& rho, int K) {
    if (!rho.dims.bipartite()) throw DimensionError("zhang_moments: bipartite state required");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    auto sv = matkit::svd_values(r);
    MomentVector out{MomentKind::Zhang, std::vector<double>(K, 0.0)};
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (double s : sv.values) acc += std::pow(s, k);
        out.values[k - 1] = acc;
    }
    return out;
}

DescartesResult descartes_psd(const Mat& a) {
    DescartesResult out;
    out.coeffs = matkit::char_coeffs(a, static_cast<int>(a.rows()));
    double amax = 1.0;
    for (double c : out.coeffs) amax = std::max(amax, std::abs(c));
    double tol = 1e-10 * amax;
    out.psd = true;
    for (double c : out.coeffs)
        if (c < -tol) out.psd = false;
    return out;
}

double lambda_min_lb(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("lambda_min_lb: matrix not square");
    double n = static_cast<double>(a.rows());
    double t1 = a.trace().real();
    double t2 = (a * a).trace().real();
    double var = t2 / n - (t1 / n) * (t1 / n);
    return t1 / n - std::sqrt(std::max(0.0, (n - 1) * var));
}

EigenBounds lambda_max_bounds(double T1, double T2, double T3, int n) {
    EigenBounds out;
    if (n < 1) throw DimensionError("lambda_max_bounds: n must be positive");
    double mean = T1 / n;
    double a = T2 / n - mean * mean;
    double var = std::max(0.0, a);
    out.lambda_min_lb = mean - std::sqrt((n - 1) * var);
    if (a <= 1e-14 * std::max(1.0, std::abs(T2))) {
        // all eigenvalues coincide
        out.lambda_max_lb = mean;
        out.lambda_max_ub = mean;
        return out;
    }
    double b = (n * n * T3 - 3.0 * n * T1 * T2 + 2.0 * T1 * T1 * T1) / (double(n) * n * n);
    out.lambda_max_lb = mean + (b + std::sqrt(b * b + 4 * a * a * a)) / (2 * a);
    if (std::abs(T1) < 1e-300) {
        out.lambda_max_ub = 0.0;
        return out;
    }
    // largest real root of T1 x^3 - 2 T2 x^2 + T3 x + (T2^2 - T1 T3) = 0
    double c2 = -2 * T2 / T1;
    double c1 = T3 / T1;
    double c0 = (T2 * T2 - T1 * T3) / T1;
    Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
    comp(0, 2) = -c0;
    comp(1, 2) = -c1;
    comp(2, 2) = -c2;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        auto z = es.eigenvalues()(i);
        if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z.real())))
            best = std::max(best, z.real());
    }
    out.lambda_max_ub = best;
    return out;
}

double lambda_max_ub_closed_form(double T1, double T2, double T3) {
    double p = -27 * T1 * T1 * T2 * T2 + 16 * T2 * T2 * T2 + 27 * T1 * T1 * T1 * T3 -
               18 * T1 * T2 * T3;
    double r = 4 * T2 * T2 - 3 * T1 * T3;
    double q = p * p - 4 * r * r * r;
    Complex sq = std::sqrt(Complex(q, 0));
    Complex croot = std::pow(Complex(p, 0) + sq, 1.0 / 3.0);
    Complex val = (4 * T2 + 2.0 * std::pow(2.0, 1.0 / 3.0) * r / croot +
                   std::pow(2.0, 2.0 / 3.0) * croot) /
                  (6 * T1);
    return val.real();
}

DkResult dk_product(const DensityMatrix& rho, double tol) {
    if (!rho.dims.bipartite()) throw DimensionError("dk_product: bipartite state required");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    auto sv = matkit::svd_values(r, tol);
    DkResult out;
    out.k = sv.rank_at_tolerance;
    if (out.k == 0) throw DomainError("dk_product: R(rho) is numerically zero");
    double logsum = 0.0;
    for (int i = 0; i < out.k; ++i) logsum += 2.0 * std::log(sv.values[i]);
    out.dk = std::exp(logsum);
    auto gm = gram_moments(rho, 3);
    double t1 = gm[1], t2 = gm[2], t3 = gm[3];
    out.d1 = -t1;
    out.d2 = 0.5 * (t1 * t1 - t2);
    out.d3 = -(t1 * t1 * t1 - 3 * t1 * t2 + 2 * t3) / 6.0;
    return out;
}

double first_moment_via_swap(const DensityMatrix& rho) {
    if (!rho.dims.square_bipartite())
        throw DimensionError("first_moment_via_swap: d (x) d state required");
    int d = rho.dims.dims[0];
    Mat ptb = matkit::swap_partial_transpose(d);
    return (rho.matrix * ptb).trace().real();
}

CopiesProbe moment_via_copies(const DensityMatrix& rho, int k) {
    if (!rho.dims.square_bipartite())
        throw DimensionError("moment_via_copies: d (x) d state required");
    int d = rho.dims.dims[0];
    if (d > 3 || k < 1 || k > 3)
        throw DimensionError("moment_via_copies: desk-scale probe needs d <= 3, k <= 3");
    Mat r = matkit::realign(rho.matrix, rho.dims);
    int n = d * d;

    CopiesProbe out;
    out.k = k;
    out.reference = matkit::power_moments(r, k).back().real();

    // Literal evaluation: build the k-fold tensor product and contract it
    // against the cyclic shift W_k |x1..xk> = |x2..xk x1>.
    Mat big = r;
    for (int c = 1; c < k; ++c) big = matkit::kron(big, r);
    long count = big.rows();
    Complex total = 0.0;
    std::vector<long> radix(k, 1);
    for (int c = k - 2; c >= 0; --c) radix[c] = radix[c + 1] * n;
    for (long flat = 0; flat < count; ++flat) {
        // image of basis state flat under the cyclic shift
        long rest = flat % radix[0];
        long first = flat / radix[0];
        long image = rest * n + first;
        total += big(flat, image);
    }
    out.cyclic_value = total.real();
    out.normalized_value = out.cyclic_value / std::pow(double(d), k);
    double tol = 1e-9 * std::max(1.0, std::abs(out.reference));
    out.cyclic_matches = std::abs(out.cyclic_value - out.reference) <= tol;
    out.normalized_matches = std::abs(out.normalized_value - out.reference) <= tol;
    return out;
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

MomentEstimate estimate_first_moment(const DensityMatrix& rho, long shots, std::uint64_t seed) {
    if (!rho.dims.square_bipartite())
        throw DimensionError("estimate_first_moment: d (x) d state required");
    if (shots < 1) throw DomainError("estimate_first_moment: shots must be >= 1");
    int d = rho.dims.dims[0];
    Mat obs = matkit::swap_partial_transpose(d);
    Eigen::SelfAdjointEigenSolver<Mat> es(obs);
    const auto& evals = es.eigenvalues();
    const auto& evecs = es.eigenvectors();
    int n = static_cast<int>(evals.size());
    std::vector<double> prob(n), cdf(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex w = (evecs.col(i).adjoint() * rho.matrix * evecs.col(i))(0, 0);
        prob[i] = std::max(0.0, w.real());
        acc += prob[i];
        cdf[i] = acc;
    }
    for (double& c : cdf) c /= acc;

    std::mt19937_64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (long s = 0; s < shots; ++s) {
        double u = uniform01(rng);
        int i = static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        i = std::min(i, n - 1);
        double x = evals(i);
        sum += x;
        sumsq += x * x;
    }
    MomentEstimate out;
    out.shots = shots;
    out.estimate = sum / shots;
    double var = std::max(0.0, sumsq / shots - out.estimate * out.estimate);
    out.std_error = shots > 1 ? std::sqrt(var / (shots - 1)) : std::sqrt(var);
    return out;
}

Interval t1_interval_from_m1(double m1, int j, int k) {
    if (j < 1 || j > k) throw DomainError("t1_interval_from_m1: need 1 <= j <= k");
    return {m1 * m1 / k, m1 * m1 / j};
}

Interval t2_interval_from_m1(double m1, int j, int k, int d) {
    if (j < 1 || j > k) throw DomainError("t2_interval_from_m1: need 1 <= j <= k");
    double m4 = m1 * m1 * m1 * m1;
    return {m4 / (double(d) * d * k * k), m4 / (double(j) * j)};
}

M1Interval m1_interval_from_s1(double s1, double l, int d) {
    if (l < 0 || l > 1) throw DomainError("m1_interval_from_s1: l must lie in [0,1]");
    double d2 = double(d) * d;
    double d4 = d2 * d2;
    double x = 1 - d2 * s1;
    if (x < 0) throw DomainError("m1_interval_from_s1: 1 - d^2 s1 < 0");
    double sx = std::sqrt(x);
    M1Interval out;
    double hi_gate = 2 - d2 * s1 + 2 * sx;
    double lo_gate = 2 - d2 * s1 - 2 * sx;
    if (d4 * l >= hi_gate && d4 * l <= d4) {
        out.tag = M1Interval::Case1;
        double rad = d4 * d4 + 2 * d4 * d2 * s1 + 4 * d2 * s1 + d4 * s1 * s1 - 8 * (1 + sx);
        double root = std::sqrt(std::max(0.0, rad));
        out.lower = 0.5 * (-d2 + s1) - root / (2 * d2);
        out.upper = -(x + sx) / d2 + root / (2 * d2);
    } else if (d4 * l >= 0 && d4 * l <= lo_gate) {
        out.tag = M1Interval::Case2;
        double w = std::sqrt(std::max(0.0, 1 + x - 2 * sx));
        out.lower = (-x + sx - w) / d2;
        out.upper = s1 / 2 + w / d2;
    } else {
        out.tag = M1Interval::NoCase;
    }
    return out;
}

}  // namespace entkit::moments
