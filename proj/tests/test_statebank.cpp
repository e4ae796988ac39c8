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
#include "entkit/statebank.hpp"
#include "support.hpp"

using namespace entkit::statebank;
using entkit::matkit::DimSpec;
using entkit::matkit::DomainError;
using entkit::matkit::Mat;
using testsupport::max_abs_diff;
using testsupport::state;

TEST_CASE("every catalog family validates at its defaults") {
    for (const auto& fam : catalog()) {
        auto rho = make_state(fam.id);
        auto report = validate(rho);
        INFO("family ", fam.id);
        CHECK(report.pass());
        CHECK(rho.dims.total() == rho.matrix.rows());
        CHECK(rho.label.rfind(fam.id, 0) == 0);
    }
}

TEST_CASE("bes4x4 checkpoints") {
    auto rho = state("bes4x4");
    Mat pt = entkit::matkit::partial_transpose(rho.matrix, rho.dims, 1);
    SUBCASE("PPT at (p0, q0), in fact PT-invariant") {
        CHECK(entkit::matkit::eig_hermitian(pt).values.back() >= -1e-9);
        CHECK(max_abs_diff(pt, rho.matrix) < 1e-12);
    }
    SUBCASE("trace one along the 4p + 2q = 1 line") {
        for (double q : {0.0, 0.1, 0.3, 0.5}) {
            auto st = make_state("bes4x4", {{"q", q}, {"p", (1 - 2 * q) / 4}});
            CHECK(std::abs(st.matrix.trace().real() - 1.0) < 1e-12);
        }
    }
    SUBCASE("off-constraint parameters are rejected") {
        CHECK_THROWS_AS(make_state("bes4x4", {{"p", 0.2}, {"q", 0.2}}), DomainError);
    }
}

TEST_CASE("isotropic special points") {
    auto rho = state("iso3", {{"f", 1.0 / 9}});
    CHECK(max_abs_diff(rho.matrix, Mat::Identity(9, 9) / 9) < 1e-14);

    // the two isotropic parameterizations agree where beta = (9f-1)/8
    for (double f : {0.2, 0.5, 0.9}) {
        auto a = state("iso3", {{"f", f}});
        auto b = state("iso3_beta", {{"beta", (9 * f - 1) / 8}});
        CHECK(max_abs_diff(a.matrix, b.matrix) < 1e-12);
    }
}

TEST_CASE("horodecki_a stays PPT across its range") {
    for (int i = 1; i <= 9; ++i) {
        auto rho = state("horodecki_a", {{"a", i / 10.0}});
        Mat pt = entkit::matkit::partial_transpose(rho.matrix, rho.dims, 1);
        CHECK(entkit::matkit::eig_hermitian(pt).values.back() >= -1e-9);
    }
}

TEST_CASE("rho_t realignment sign structure") {
    for (double t : {0.1, 0.4, 0.7}) {
        auto rho = state("rho_t", {{"t", t}});
        auto r = entkit::matkit::realign(rho.matrix, rho.dims);
        CHECK(entkit::moments::descartes_psd(r).psd);
    }
    for (double t : {-0.1, -0.4, -0.7}) {
        auto rho = state("rho_t", {{"t", t}});
        auto r = entkit::matkit::realign(rho.matrix, rho.dims);
        CHECK_FALSE(entkit::moments::descartes_psd(r).psd);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_state("nosuchfamily"), DomainError);
    CHECK_THROWS_AS(make_state("iso2", {{"f", 1.5}}), DomainError);
    CHECK_THROWS_AS(make_state("iso2", {{"g", 0.5}}), DomainError);
    CHECK_THROWS_AS(make_state("kye", {{"r", 0.0}}), DomainError);
    CHECK_THROWS_AS(make_state("eps3x3", {{"eps", 1.0}}), DomainError);
    CHECK_THROWS_AS(make_state("rudolph_st", {{"s", 0.6}, {"t", 0.0}}), DomainError);
    CHECK_THROWS_AS(make_state("mixed_marginals", {{"t1", 1.0}, {"t2", 1.0}, {"t3", 0.9}}),
                    DomainError);
    // rudolph with t too large for positivity fails the PSD validation
    CHECK_THROWS_AS(make_state("rudolph_st", {{"s", 0.9}, {"t", 0.4}}), DomainError);

    SUBCASE("unchecked skips range checks and validation") {
        auto rho = make_state("iso2", {{"f", 1.5}}, /*unchecked=*/true);
        CHECK_FALSE(validate(rho).pass());
    }
}

TEST_CASE("labels are stable ids") {
    CHECK(state("iso2", {{"f", 0.5}}).label == "iso2 f=0.5");
    CHECK(state("upb_tiles").label == "upb_tiles");
}

TEST_CASE("random generators") {
    auto g = testsupport::rng(100);
    SUBCASE("pure states are normalized") {
        for (int i = 0; i < 20; ++i) CHECK(std::abs(random_pure(4, g).norm() - 1) < 1e-12);
    }
    SUBCASE("random densities and separable mixtures validate") {
        for (int i = 0; i < 20; ++i) {
            CHECK(validate(random_density(DimSpec({2, 3}), 3, g)).pass());
            CHECK(validate(random_separable(3, 3, 5, g)).pass());
            CHECK(validate(random_fully_separable_3q(4, g)).pass());
        }
    }
    SUBCASE("fixed seed reproduces the same state") {
        auto g1 = testsupport::rng(7), g2 = testsupport::rng(7);
        auto a = random_density(DimSpec({2, 2}), 3, g1);
        auto b = random_density(DimSpec({2, 2}), 3, g2);
        CHECK(max_abs_diff(a.matrix, b.matrix) == 0.0);
    }
}
