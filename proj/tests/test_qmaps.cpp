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

#include <doctest.h>

#include "entkit/moments.hpp"
#include "entkit/qmaps.hpp"
#include "entkit/statebank.hpp"
#include "support.hpp"

using namespace entkit::qmaps;
using entkit::matkit::Complex;
using entkit::matkit::DimensionError;
using entkit::matkit::DimSpec;
using entkit::matkit::Mat;
using entkit::statebank::make_state;
using entkit::statebank::random_density;
using testsupport::max_abs_diff;
using testsupport::state;

namespace {

std::vector<double> real_spectrum(const Mat& m) {
    Eigen::ComplexEigenSolver<Mat> es(m);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        REQUIRE(std::abs(es.eigenvalues()(i).imag()) < 1e-9);
        out.push_back(es.eigenvalues()(i).real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("phi map degenerate parameters") {
    auto rho = state("iso2", {{"f", 0.7}});
    Mat pt = entkit::matkit::partial_transpose(rho.matrix, rho.dims, 1);
    Mat r = entkit::matkit::realign(rho.matrix, rho.dims);
    CHECK(max_abs_diff(phi_map(rho, 1, 0), pt) == 0.0);
    CHECK(max_abs_diff(phi_map(rho, 0, 1), r) == 0.0);
}

TEST_CASE("phi positivity classification") {
    SUBCASE("separable, PSD realignment: positive for all parameters") {
        auto rho = make_state("mixed_marginals", {{"t1", 0.0}, {"t2", 0.0}, {"t3", 0.5}});
        auto b = phi_positivity_bound(rho);
        CHECK(b.kind == PositivityBound::All);
        CHECK(b.case_tag == 1);
    }
    SUBCASE("separable with a negative realignment eigenvalue: ratio threshold") {
        for (double t : {0.2, 0.4, 0.7}) {
            auto rho = make_state("mixed_marginals", {{"t1", 0.0}, {"t2", 0.0}, {"t3", -t}});
            auto b = phi_positivity_bound(rho);
            CHECK(b.kind == PositivityBound::LowerRatio);
            CHECK(b.case_tag == 2);
            CHECK(b.threshold == doctest::Approx(2 * t / (1 - t)).epsilon(1e-10));
        }
    }
    SUBCASE("both minimum eigenvalues negative: never positive") {
        auto rho = make_state("mixed_marginals", {{"t1", -1.0}, {"t2", -1.0}, {"t3", -1.0}});
        auto b = phi_positivity_bound(rho);
        CHECK(b.kind == PositivityBound::None);
        CHECK(b.case_tag == 4);
    }
    SUBCASE("non-Hermitian realignment is out of scope") {
        auto rho = state("horodecki_a", {{"a", 0.3}});
        CHECK(phi_positivity_bound(rho).kind == PositivityBound::NotApplicable);
    }
}

TEST_CASE("choi matrices") {
    SUBCASE("transpose map gives the SWAP operator") {
        auto choi = choi_matrix("transpose", 0, 0, 2);
        CHECK(max_abs_diff(choi.matrix, entkit::matkit::swap_operator(2)) == 0.0);
        auto eig = entkit::matkit::eig_hermitian(choi.matrix).values;
        CHECK(eig == std::vector<double>{1, 1, 1, -1});
    }

    SUBCASE("nonzero spectrum is {-2a, 2a, 2(a+b)}") {
        auto g = testsupport::rng(20);
        for (int i = 0; i < 5; ++i) {
            double al = 0.1 + 0.9 * (i / 5.0), be = 1.0 - 0.15 * i;
            auto choi = choi_matrix("phi", al, be, 2);
            auto eig = real_spectrum(choi.matrix);
            CHECK(eig.front() == doctest::Approx(-2 * al).epsilon(1e-10));
            CHECK(eig.back() == doctest::Approx(2 * (al + be)).epsilon(1e-10));
            CHECK(eig[14] == doctest::Approx(2 * al).epsilon(1e-10));
            for (int k = 1; k <= 13; ++k) CHECK(std::abs(eig[k]) < 1e-10);
        }
    }

    SUBCASE("completely positive exactly when alpha = 0") {
        for (double al : {0.0, 0.2, 0.5, 1.0}) {
            for (double be : {0.0, 0.3, 1.0}) {
                auto choi = choi_matrix("phi", al, be, 2);
                double lmin = real_spectrum(choi.matrix).front();
                if (al == 0.0) {
                    CHECK(lmin >= -1e-12);
                } else {
                    CHECK(lmin < -1e-12);
                }
            }
        }
    }

    SUBCASE("regression against the hand-written 16x16 blocks") {
        double al = 0.37, be = 0.81;
        auto choi = choi_matrix("phi", al, be, 2);
        Mat c = Mat::Zero(16, 16);
        auto put = [&](int r, int col, double v) { c(r, col) = v; };
        // block C11
        put(0, 0, al + be); put(0, 5, be); put(1, 4, al);
        put(4, 1, al); put(4, 2, be); put(4, 7, be); put(5, 5, al);
        // block C12
        put(0, 10, al); put(1, 8, be); put(1, 13, be); put(1, 14, al);
        put(4, 11, al); put(5, 10, be); put(5, 15, al + be);
        // block C21
        put(10, 0, al + be); put(10, 5, be); put(11, 4, al);
        put(14, 1, al); put(14, 2, be); put(14, 7, be); put(15, 5, al);
        // block C22
        put(10, 10, al); put(11, 8, be); put(11, 13, be); put(11, 14, al);
        put(14, 11, al); put(15, 10, be); put(15, 15, al + be);
        double dev = max_abs_diff(choi.matrix, c);
        INFO("max deviation from the printed blocks: ", dev);
        CHECK(dev < 1e-14);
    }
}

TEST_CASE("spa of the realignment map") {
    SUBCASE("p = 1 is the maximally mixed point") {
        auto rho = state("iso2", {{"f", 0.8}});
        CHECK(max_abs_diff(spa_realign(rho, 1.0), Mat::Identity(4, 4) / 4) < 1e-14);
    }
    SUBCASE("unit trace for all p") {
        auto rho = state("qutrit_mu", {{"mu", 0.9}});
        for (double p : {0.0, 0.3, 0.9}) {
            CHECK(std::abs(spa_realign(rho, p).trace() - Complex(1, 0)) < 1e-12);
        }
    }
    SUBCASE("Schmidt-symmetric states keep unit trace norm for all p") {
        for (auto rho : {state("bell"), state("iso3", {{"f", 0.6}})}) {
            for (double p : {0.0, 0.4, 1.0}) {
                CHECK(entkit::matkit::trace_norm(spa_realign(rho, p)) ==
                      doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }
    SUBCASE("negative-t family turns eigenvalue-positive exactly at the exact threshold") {
        for (double t : {-0.3, -0.6}) {
            auto rho = state("rho_t", {{"t", t}});
            double pexact = spa_lower_p_exact(rho);
            auto spec_lo = real_spectrum(spa_realign(rho, pexact - 1e-4));
            auto spec_hi = real_spectrum(spa_realign(rho, pexact + 1e-4));
            CHECK(spec_lo.front() < 0.0);
            CHECK(spec_hi.front() > -1e-12);
        }
    }
    SUBCASE("moment bound is sufficient: the map is eigenvalue-positive at spa_lower_p") {
        auto mm = make_state("mixed_marginals", {{"t1", 0.0}, {"t2", 0.0}, {"t3", -0.6}});
        for (auto rho : {state("rho_t", {{"t", -0.5}}), mm}) {
            double l = spa_lower_p(rho);
            CHECK(l >= spa_lower_p_exact(rho) - 1e-12);
            CHECK(real_spectrum(spa_realign(rho, l)).front() >= -1e-10);
        }
    }
    SUBCASE("Weyl floor holds on Hermitian realignments") {
        auto rho = make_state("mixed_marginals", {{"t1", 0.1}, {"t2", -0.2}, {"t3", -0.5}});
        Mat r = entkit::matkit::realign(rho.matrix, rho.dims);
        REQUIRE(entkit::matkit::is_hermitian(r));
        double lminr = entkit::matkit::eig_hermitian(r).values.back();
        double trr = r.trace().real();
        for (double p : {0.0, 0.25, 0.75, 1.0}) {
            double lmin = entkit::matkit::eig_hermitian(spa_realign(rho, p), true).values.back();
            CHECK(lmin >= p / 4 + (1 - p) * lminr / trr - 1e-12);
        }
    }
}

TEST_CASE("spa_lower_p values") {
    SUBCASE("zero when the moment bound already certifies positivity") {
        CHECK(spa_lower_p(state("rho_t", {{"t", 0.4}})) == 0.0);
    }
    SUBCASE("closed form for the negative-t family") {
        // follows from the moment bound: l = 1 - (8t+7)/sqrt(3(64t^2-112t+67))
        for (double t : {-0.3, -0.5, -0.7}) {
            auto rho = state("rho_t", {{"t", t}});
            double want = 1 - (8 * t + 7) / std::sqrt(3 * (64 * t * t - 112 * t + 67));
            CHECK(spa_lower_p(rho) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    SUBCASE("horodecki_a: eigenvalue-positive realignment but a loose moment bound") {
        auto rho = state("horodecki_a", {{"a", 0.3}});
        Mat r = entkit::matkit::realign(rho.matrix, rho.dims);
        CHECK(entkit::moments::descartes_psd(r).psd);
        CHECK(spa_lower_p_exact(rho) == 0.0);
        CHECK(spa_lower_p(rho) > 0.0);
    }
}

TEST_CASE("spa of single-qubit partial transposition") {
    SUBCASE("maximally mixed three-qubit state is a fixed point") {
        entkit::statebank::DensityMatrix mm{Mat::Identity(8, 8) / 8, DimSpec({2, 2, 2}), "mm"};
        for (int part : {0, 1, 2})
            CHECK(max_abs_diff(spa_pt_qubit(mm, part), Mat::Identity(8, 8) / 8) < 1e-14);
    }
    SUBCASE("product state spectrum is {3/10, 1/10 x7}") {
        entkit::statebank::DensityMatrix v000{Mat::Zero(8, 8), DimSpec({2, 2, 2}), "000"};
        v000.matrix(0, 0) = 1.0;
        for (int part : {0, 1, 2}) {
            auto eig = entkit::matkit::eig_hermitian(spa_pt_qubit(v000, part)).values;
            CHECK(eig.front() == doctest::Approx(0.3).epsilon(1e-12));
            CHECK(eig.back() == doctest::Approx(0.1).epsilon(1e-12));
        }
    }
    SUBCASE("detected mub3 point dips below 1/10 in every cut") {
        auto rho = make_state("mub3", {{"p1", 0.3}, {"p3", 0.05}});
        for (int part : {0, 1, 2}) {
            double lmin = entkit::matkit::eig_hermitian(spa_pt_qubit(rho, part)).values.back();
            CHECK(lmin < 0.1 - 1e-9);
        }
    }
    CHECK_THROWS_AS(spa_pt_qubit(state("iso2"), 0), DimensionError);
}

TEST_CASE("realignment via the SWAP identity") {
    auto g = testsupport::rng(21);
    for (int d : {2, 3, 4}) {
        for (int i = 0; i < (d == 4 ? 20 : 100); ++i) {
            auto rho = random_density(DimSpec({d, d}), 3, g);
            Mat viaswap = realign_via_swap(rho);
            Mat direct = entkit::matkit::realign(rho.matrix, rho.dims);
            CHECK(max_abs_diff(viaswap, direct) < 1e-12);
        }
    }
    CHECK_THROWS_AS(realign_via_swap(state("two_param_2xn")), DimensionError);
}

TEST_CASE("three-qubit realignment") {
    SUBCASE("product basis state has a single unit entry") {
        entkit::statebank::DensityMatrix v000{Mat::Zero(8, 8), DimSpec({2, 2, 2}), "000"};
        v000.matrix(0, 0) = 1.0;
        Mat r = realign_tripartite(v000);
        CHECK(r(0, 0) == Complex(1, 0));
        CHECK(r.cwiseAbs().sum() == doctest::Approx(1.0));
    }
    SUBCASE("block-vec and permuted-blockwise-transpose constructions agree") {
        auto g = testsupport::rng(22);
        for (int i = 0; i < 100; ++i) {
            auto rho = random_density(DimSpec({2, 2, 2}), 4, g);
            CHECK(max_abs_diff(realign_tripartite(rho), realign_tripartite_qtau(rho)) == 0.0);
        }
    }
    CHECK_THROWS_AS(realign_tripartite(state("iso3")), DimensionError);
}
