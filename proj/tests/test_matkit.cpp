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

#include "entkit/matkit.hpp"
#include "entkit/statebank.hpp"
#include "support.hpp"

using namespace entkit::matkit;
using entkit::statebank::random_density;
using entkit::statebank::random_pure;
using testsupport::max_abs_diff;
using testsupport::state;

namespace {

Mat ket(int dim, int i) {
    Mat v = Mat::Zero(dim, 1);
    v(i, 0) = 1.0;
    return v;
}

Mat random_square(int n, std::mt19937_64& g) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = random_pure(2, g);
            m(i, j) = v(0);
        }
    return m;
}

}  // namespace

TEST_CASE("kron basics") {
    CHECK(max_abs_diff(kron(Mat::Identity(2, 2), Mat::Identity(2, 2)), Mat::Identity(4, 4)) == 0.0);

    Mat v = kron(ket(2, 0), ket(2, 1));
    CHECK(v(1, 0) == Complex(1, 0));
    CHECK(v.col(0).norm() == 1.0);

    auto g = testsupport::rng(1);
    for (int i = 0; i < 10; ++i) {
        Mat a = random_square(2, g), b = random_square(2, g);
        Complex lhs = kron(a, b).trace();
        Complex rhs = a.trace() * b.trace();
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("partial trace") {
    auto g = testsupport::rng(2);
    auto ra = random_density(DimSpec({2, 2}), 2, g);

    SUBCASE("product state reduces to its factor") {
        Vec va = random_pure(2, g), vb = random_pure(2, g);
        Mat rhoA = va * va.adjoint(), rhoB = vb * vb.adjoint();
        Mat prod = kron(rhoA, rhoB);
        CHECK(max_abs_diff(partial_trace(prod, DimSpec({2, 2}), 0), rhoA) < 1e-12);
        CHECK(max_abs_diff(partial_trace(prod, DimSpec({2, 2}), 1), rhoB) < 1e-12);
    }

    SUBCASE("Bell projector reduces to I/2, against a direct index sum") {
        auto bell = state("bell");
        Mat reduced = partial_trace(bell.matrix, bell.dims, 0);
        Mat oracle = Mat::Zero(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) oracle(i, j) += bell.matrix(2 * i + k, 2 * j + k);
        CHECK(max_abs_diff(reduced, oracle) < 1e-14);
        CHECK(max_abs_diff(reduced, 0.5 * Mat::Identity(2, 2)) < 1e-12);
    }

    SUBCASE("trace is preserved") {
        for (auto dims : {DimSpec({2, 3}), DimSpec({3, 3}), DimSpec({2, 2, 2})}) {
            auto rho = random_density(dims, 3, g);
            for (int p = 0; p < dims.parties(); ++p) {
                Complex tr = partial_trace(rho.matrix, dims, p).trace();
                CHECK(std::abs(tr - Complex(1, 0)) < 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(partial_trace(Mat::Identity(4, 4), DimSpec({2, 3}), 0), DimensionError);
}

TEST_CASE("partial transpose") {
    SUBCASE("two-qubit isotropic family: minimum PT eigenvalue") {
        for (double f : {0.3, 0.4, 0.5}) {
            auto rho = state("iso2", {{"f", f}});
            Mat pt = partial_transpose(rho.matrix, rho.dims, 1);
            double lmin = eig_hermitian(pt).values.back();
            CHECK(lmin == doctest::Approx((1 - 2 * f) / 2).epsilon(1e-12));
        }
        auto rho = state("iso2", {{"f", 0.8}});
        Mat pt = partial_transpose(rho.matrix, rho.dims, 1);
        CHECK(eig_hermitian(pt).values.back() < 0.0);
    }

    SUBCASE("identity is a fixed point") {
        Mat id = Mat::Identity(4, 4) / 4;
        CHECK(max_abs_diff(partial_transpose(id, DimSpec({2, 2}), 1), id) == 0.0);
    }

    SUBCASE("2x2 block pattern") {
        // entries labeled by position so the block exchange is visible
        Mat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = Complex(i, j);
        Mat pt = partial_transpose(m, DimSpec({2, 2}), 1);
        // within each 2x2 block, (r,c) -> (c,r)
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj)
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c)
                        CHECK(pt(2 * bi + r, 2 * bj + c) == m(2 * bi + c, 2 * bj + r));
    }

    SUBCASE("involution") {
        auto g = testsupport::rng(3);
        for (auto dims : {DimSpec({2, 3}), DimSpec({3, 3}), DimSpec({2, 2, 2})}) {
            auto rho = random_density(dims, 4, g);
            for (int p = 0; p < dims.parties(); ++p) {
                Mat twice = partial_transpose(partial_transpose(rho.matrix, dims, p), dims, p);
                CHECK(max_abs_diff(twice, rho.matrix) == 0.0);
            }
        }
    }
}

TEST_CASE("realign") {
    SUBCASE("2x2 symbolic template") {
        Mat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = Complex(10 * i + j, 0);
        Mat r = realign(m, DimSpec({2, 2}));
        // rows are the row-major vecs of the four blocks, block row-major
        Mat expect(4, 4);
        expect << m(0, 0), m(0, 1), m(1, 0), m(1, 1),  //
            m(0, 2), m(0, 3), m(1, 2), m(1, 3),        //
            m(2, 0), m(2, 1), m(3, 0), m(3, 1),        //
            m(2, 2), m(2, 3), m(3, 2), m(3, 3);
        CHECK(max_abs_diff(r, expect) == 0.0);
    }

    SUBCASE("maximally mixed state realigns to a rank-1 matrix") {
        Mat r = realign(Mat::Identity(4, 4) / 4, DimSpec({2, 2}));
        auto sv = svd_values(r);
        CHECK(sv.rank_at_tolerance == 1);
        CHECK(trace_norm(r) == doctest::Approx(0.5).epsilon(1e-14));
    }

    SUBCASE("published trace-norm checkpoint") {
        auto bes = state("bes4x4");
        CHECK(trace_norm(realign(bes.matrix, bes.dims)) == doctest::Approx(1.08579).epsilon(1e-4));
    }

    SUBCASE("product inputs give outer products of vecs") {
        auto g = testsupport::rng(4);
        for (int i = 0; i < 20; ++i) {
            Vec va = random_pure(3, g), vb = random_pure(3, g);
            Mat a = va * va.adjoint(), b = vb * vb.adjoint();
            Mat r = realign(kron(a, b), DimSpec({3, 3}));
            Mat outer = vec_row_major(a) * vec_row_major(b).conjugate().transpose();
            CHECK(max_abs_diff(r, outer) < 1e-12);
            CHECK(trace_norm(r) <= 1.0 + 1e-12);
        }
    }

    SUBCASE("rank bound min(d1^2, d2^2)") {
        auto g = testsupport::rng(5);
        for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            auto rho = random_density(DimSpec({d1, d2}), d1 * d2, g);
            auto sv = svd_values(realign(rho.matrix, rho.dims));
            CHECK(sv.rank_at_tolerance <= std::min(d1 * d1, d2 * d2));
        }
    }

    CHECK_THROWS_AS(realign(Mat::Identity(4, 4), DimSpec({2, 3})), DimensionError);
}

TEST_CASE("svd_values") {
    auto id3 = svd_values(Mat::Identity(3, 3));
    CHECK(id3.values == std::vector<double>{1, 1, 1});
    CHECK(id3.rank_at_tolerance == 3);

    auto upb = state("upb_tiles");
    CHECK(svd_values(realign(upb.matrix, upb.dims)).rank_at_tolerance == 6);

    auto g = testsupport::rng(6);
    auto rho23 = random_density(DimSpec({2, 3}), 6, g);
    CHECK(svd_values(realign(rho23.matrix, rho23.dims)).rank_at_tolerance <= 4);
}

TEST_CASE("eig_hermitian") {
    Mat sz(2, 2);
    sz << 1, 0, 0, -1;
    auto e = eig_hermitian(sz);
    CHECK(e.values == std::vector<double>{1, -1});

    Mat skew(2, 2);
    skew << 0, 1, 2, 0;
    CHECK_THROWS_AS(eig_hermitian(skew), NumericalError);
    CHECK_NOTHROW(eig_hermitian(skew, /*symmetrize=*/true));

    auto g = testsupport::rng(7);
    auto rho = random_density(DimSpec({3, 3}), 5, g);
    auto vals = eig_hermitian(rho.matrix).values;
    for (size_t i = 1; i < vals.size(); ++i) CHECK(vals[i - 1] >= vals[i]);
}

TEST_CASE("norm chain") {
    CHECK(trace_norm(Mat::Identity(5, 5)) == doctest::Approx(5.0));
    CHECK(frobenius_norm(0.5 * Mat::Identity(2, 2)) == doctest::Approx(1.0 / std::sqrt(2.0)));

    auto upb = state("upb_tiles");
    Mat r = realign(upb.matrix, upb.dims);
    CHECK(trace_norm(r) == doctest::Approx(1.08741).epsilon(1e-4));
    CHECK(frobenius_norm(r) == doctest::Approx(0.5).epsilon(1e-10));

    for (double f : {0.2, 0.6, 0.9}) {
        auto iso = state("iso3", {{"f", f}});
        CHECK(frobenius_norm(realign(iso.matrix, iso.dims)) ==
              doctest::Approx(std::sqrt((1 - 2 * f + 9 * f * f) / 8)).epsilon(1e-12));
    }

    auto g = testsupport::rng(8);
    for (int i = 0; i < 200; ++i) {
        Mat a = random_square(3 + (i % 3), g);
        auto sv = svd_values(a);
        double n1 = trace_norm(a);
        CHECK(std::abs(a.trace()) <= n1 + 1e-10);
        CHECK(n1 <= std::sqrt(double(sv.rank_at_tolerance)) * frobenius_norm(a) + 1e-10);
    }
}

TEST_CASE("swap operator") {
    for (int d : {2, 3}) {
        Mat p = swap_operator(d);
        CHECK(max_abs_diff(p * p, Mat::Identity(d * d, d * d)) == 0.0);
        CHECK(p.trace().real() == doctest::Approx(d));
        Mat ptb = swap_partial_transpose(d);
        CHECK(ptb.trace().real() == doctest::Approx(d));
        CHECK(max_abs_diff(partial_transpose(p, DimSpec({d, d}), 1), ptb) == 0.0);
        CHECK(max_abs_diff(p * ptb, ptb) < 1e-14);
    }
    Mat p2 = swap_operator(2);
    CHECK(p2(1, 2) == Complex(1, 0));
    CHECK(p2(2, 1) == Complex(1, 0));
    CHECK(p2(0, 0) == Complex(1, 0));
    // P^{T_B} for d=3 is the unnormalized projector sum |ii><jj|
    Mat ptb3 = swap_partial_transpose(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ptb3(4 * i, 4 * j) == Complex(1, 0));
}

TEST_CASE("gell-mann basis") {
    SUBCASE("d=2 reproduces the Pauli basis") {
        auto basis = gell_mann_basis(2);
        REQUIRE(basis.size() == 4);
        Mat sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0, 1, 1, 0;
        sy << 0, Complex(0, -1), Complex(0, 1), 0;
        sz << 1, 0, 0, -1;
        double r2 = std::sqrt(2.0);
        CHECK(max_abs_diff(basis[1] * r2, sx) < 1e-14);
        CHECK(max_abs_diff(basis[2] * r2, sy) < 1e-14);
        CHECK(max_abs_diff(basis[3] * r2, sz) < 1e-14);
    }

    SUBCASE("orthonormality and trace normalization") {
        for (int d : {2, 3, 4}) {
            auto basis = gell_mann_basis(d);
            REQUIRE(static_cast<int>(basis.size()) == d * d);
            for (size_t i = 0; i < basis.size(); ++i) {
                CHECK(is_hermitian(basis[i]));
                for (size_t j = 0; j < basis.size(); ++j) {
                    Complex ip = (basis[i].adjoint() * basis[j]).trace();
                    CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
                }
                if (i > 0) CHECK(std::abs(basis[i].trace()) < 1e-14);
            }
            // unnormalized matrices satisfy Tr[L_i L_j] = 2 delta_ij
            Complex t = ((basis[1] * std::sqrt(2.0)) * (basis[1] * std::sqrt(2.0))).trace();
            CHECK(std::abs(t - Complex(2, 0)) < 1e-12);
        }
    }

    SUBCASE("d=4 splits into 6 symmetric, 6 antisymmetric, 3 diagonal") {
        auto basis = gell_mann_basis(4);
        int sym = 0, anti = 0, diag = 0;
        for (size_t i = 1; i < basis.size(); ++i) {
            const Mat& m = basis[i];
            if (max_abs_diff(m, m.transpose()) < 1e-14) {
                bool is_diag = true;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        if (r != c && std::abs(m(r, c)) > 1e-14) is_diag = false;
                (is_diag ? diag : sym)++;
            } else {
                ++anti;
            }
        }
        CHECK(sym == 6);
        CHECK(anti == 6);
        CHECK(diag == 3);
    }

    CHECK_THROWS_AS(gell_mann_basis(5), DimensionError);
}

TEST_CASE("characteristic coefficients") {
    auto c = char_coeffs(Mat::Identity(3, 3), 3);
    CHECK(c[0] == doctest::Approx(3));
    CHECK(c[1] == doctest::Approx(3));
    CHECK(c[2] == doctest::Approx(1));

    for (double t : {0.2, -0.3, 0.6}) {
        auto rho = state("rho_t", {{"t", t}});
        Mat r = realign(rho.matrix, rho.dims);
        CHECK(char_coeffs(r, 1)[0] == doctest::Approx(t + 7.0 / 8).epsilon(1e-12));
    }

    SUBCASE("agrees with expansion from the spectrum") {
        auto g = testsupport::rng(9);
        for (int n : {3, 4, 5, 6}) {
            Mat raw(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Vec v = random_pure(2, g);
                    raw(i, j) = v(0);
                }
            Mat h = 0.5 * (raw + raw.adjoint());
            auto lam = eig_hermitian(h, true).values;
            // elementary symmetric polynomials of the eigenvalues
            std::vector<double> e(n + 1, 0.0);
            e[0] = 1.0;
            for (double x : lam)
                for (int k = n; k >= 1; --k) e[k] += x * e[k - 1];
            auto got = char_coeffs(h, n);
            for (int k = 1; k <= n; ++k)
                CHECK(got[k - 1] == doctest::Approx(e[k]).epsilon(1e-9).scale(1.0));
        }
    }
}
