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

#include "entkit/statebank.hpp"

#include <cmath>
#include <limits>
#include <functional>
#include <sstream>

namespace entkit::statebank {

using matkit::DimensionError;
using matkit::DomainError;

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = 1e-9;

Vec basis_ket(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
}

Mat projector(const Vec& psi) { return psi * psi.adjoint(); }

Mat pauli(int which) {
    Mat s(2, 2);
    switch (which) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: s = Mat::Identity(2, 2); break;
    }
    return s;
}

double get_param(const Params& p, const std::string& name, double def) {
    auto it = p.find(name);
    return it == p.end() ? def : it->second;
}

struct Builder {
    std::function<Mat(const Params&)> build;
    std::function<void(const Params&)> check_range;  // throws DomainError
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError("make_state: " + msg);
}

// ---- family constructors ----------------------------------------------------

Mat build_bell(int which) {
    return projector(bell_vector(which));
}

Mat build_iso2(double f) {
    Vec phi = (matkit::kron(basis_ket(2, 0), basis_ket(2, 0)) +
               matkit::kron(basis_ket(2, 1), basis_ket(2, 1))) / std::sqrt(2.0);
    return (1 - f) / 3.0 * Mat::Identity(4, 4) + (4 * f - 1) / 3.0 * projector(phi);
}

Vec max_entangled3() {
    Vec v = Vec::Zero(9);
    v(0) = v(4) = v(8) = 1.0 / std::sqrt(3.0);
    return v;
}

Mat build_iso3(double f) {
    return (1 - f) / 8.0 * Mat::Identity(9, 9) + (9 * f - 1) / 8.0 * projector(max_entangled3());
}

Mat build_iso3_beta(double beta) {
    return beta * projector(max_entangled3()) + (1 - beta) / 9.0 * Mat::Identity(9, 9);
}

Mat build_horodecki_a(double a) {
    Mat m = Mat::Zero(9, 9);
    for (int i : {0, 4, 8})
        for (int j : {0, 4, 8}) m(i, j) = a;
    m(1, 1) = m(2, 2) = m(3, 3) = m(5, 5) = m(7, 7) = a;
    m(6, 6) = 0.5 * (1 + a);
    m(8, 8) = 0.5 * (1 + a);
    m(6, 8) = m(8, 6) = 0.5 * std::sqrt(std::max(0.0, 1 - a * a));
    return m / (8 * a + 1);
}

Mat build_horodecki_alpha(double alpha) {
    Mat sp = Mat::Zero(9, 9), sm = Mat::Zero(9, 9);
    sp(1, 1) = sp(5, 5) = sp(6, 6) = 1.0 / 3.0;  // |01>,|12>,|20>
    sm(3, 3) = sm(7, 7) = sm(2, 2) = 1.0 / 3.0;  // |10>,|21>,|02>
    return 2.0 / 7.0 * projector(max_entangled3()) + alpha / 7.0 * sp + (5 - alpha) / 7.0 * sm;
}

std::vector<Vec> upb_tiles_vectors() {
    Vec k0 = basis_ket(3, 0), k1 = basis_ket(3, 1), k2 = basis_ket(3, 2);
    double r2 = 1.0 / std::sqrt(2.0);
    std::vector<Vec> psis;
    psis.push_back(matkit::kron(k0, r2 * (k0 - k1)));
    psis.push_back(matkit::kron(r2 * (k0 - k1), k2));
    psis.push_back(matkit::kron(k2, r2 * (k1 - k2)));
    psis.push_back(matkit::kron(r2 * (k1 - k2), k0));
    Vec sum3 = (k0 + k1 + k2) / std::sqrt(3.0);
    psis.push_back(matkit::kron(sum3, sum3));
    return psis;
}

Mat build_upb_tiles() {
    Mat m = Mat::Identity(9, 9);
    for (const Vec& psi : upb_tiles_vectors()) m -= projector(psi);
    return m / 4.0;
}

Mat build_upb_mixture(int i, double gamma) {
    auto psis = upb_tiles_vectors();
    return gamma * projector(psis[i - 1]) + (1 - gamma) * build_upb_tiles();
}

std::vector<Vec> bes4x4_vectors() {
    auto ket = [](int a, int b) {
        Vec v = Vec::Zero(16);
        v(4 * a + b) = 1.0;
        return v;
    };
    double r2 = 1.0 / std::sqrt(2.0);
    std::vector<Vec> w;
    w.push_back(r2 * (ket(0, 1) + ket(2, 3)));
    w.push_back(r2 * (ket(1, 0) + ket(3, 2)));
    w.push_back(r2 * (ket(1, 1) + ket(2, 2)));
    w.push_back(r2 * (ket(0, 0) - ket(3, 3)));
    w.push_back(0.5 * (ket(0, 3) + ket(1, 2)) + r2 * ket(2, 1));
    w.push_back(0.5 * (-ket(0, 3) + ket(1, 2)) + r2 * ket(3, 0));
    return w;
}

Mat build_bes4x4(double p, double q) {
    auto w = bes4x4_vectors();
    Mat m = Mat::Zero(16, 16);
    for (int i = 0; i < 4; ++i) m += p * projector(w[i]);
    for (int i = 4; i < 6; ++i) m += q * projector(w[i]);
    return m;
}

double bes_q0() { return (std::sqrt(2.0) - 1) / 2.0; }
double bes_p0() { return (1 - 2 * bes_q0()) / 4.0; }

Mat build_bes4x4_noisy(double lambda) {
    return lambda * build_bes4x4(bes_p0(), bes_q0()) +
           (1 - lambda) / 16.0 * Mat::Identity(16, 16);
}

// General rho_{z,p,r}; all published numbers use the p = z = 1 slice.
Mat build_kye_general(Complex z, double p, double r) {
    Complex zbar = std::conj(z);
    double two_rez = 2 * z.real();
    Mat a11 = Mat::Zero(4, 4), a22 = Mat::Zero(4, 4), a33 = Mat::Zero(4, 4),
        a44 = Mat::Zero(4, 4), a12 = Mat::Zero(4, 4), a13 = Mat::Zero(4, 4),
        a24 = Mat::Zero(4, 4), a34 = Mat::Zero(4, 4);
    a11.diagonal() << two_rez, 1 / p, p, r / p + r;
    a22.diagonal() << p, two_rez, r / p + r, 1 / p;
    a33.diagonal() << 1 / p, r * p + r, two_rez, p;
    a44.diagonal() << r * p + r, p, 1 / p, two_rez;
    a12(0, 1) = -z;
    a12(2, 3) = -r;
    a13(0, 2) = -zbar;
    a13(1, 3) = -r * z;
    a24(0, 2) = -r * z;
    a24(1, 3) = -z;
    a34(0, 1) = -r;
    a34(2, 3) = -zbar;
    Mat m = Mat::Zero(16, 16);
    auto put = [&](int bi, int bj, const Mat& blk) {
        m.block(4 * bi, 4 * bj, 4, 4) = blk;
        if (bi != bj) m.block(4 * bj, 4 * bi, 4, 4) = blk.adjoint();
    };
    put(0, 0, a11);
    put(1, 1, a22);
    put(2, 2, a33);
    put(3, 3, a44);
    put(0, 1, a12);
    put(0, 2, a13);
    put(1, 3, a24);
    put(2, 3, a34);
    double n = 4 / p + 4 * p + 4 * r + 2 * r / p + 2 * p * r + 8 * z.real();
    return m / n;
}

Mat build_npt3x3(double a) {
    Mat m = Mat::Zero(9, 9);
    m(0, 0) = (1 - a) / 2;
    m(0, 8) = m(8, 0) = -11.0 / 50.0;
    m(4, 4) = 0.5 - a;
    m(4, 5) = m(5, 4) = -11.0 / 50.0;
    m(5, 5) = a;
    m(8, 8) = a / 2;
    return m;
}

Mat build_two_param_2xn(int n, double alpha, double gamma) {
    double beta = (1 - 2 * (n - 2) * alpha - gamma) / 3.0;
    auto ket = [n](int a, int b) {
        Vec v = Vec::Zero(2 * n);
        v(n * a + b) = 1.0;
        return v;
    };
    double r2 = 1.0 / std::sqrt(2.0);
    Vec phip = r2 * (ket(0, 0) + ket(1, 1));
    Vec phim = r2 * (ket(0, 0) - ket(1, 1));
    Vec psip = r2 * (ket(0, 1) + ket(1, 0));
    Vec psim = r2 * (ket(0, 1) - ket(1, 0));
    Mat m = Mat::Zero(2 * n, 2 * n);
    for (int i = 0; i <= 1; ++i)
        for (int j = 2; j < n; ++j) m += alpha * projector(ket(i, j));
    m += beta * (projector(phip) + projector(phim) + projector(psip));
    m += gamma * projector(psim);
    return m;
}

Mat build_rudolph(double s, double t) {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = 5.0 / 8.0;
    m(0, 3) = m(3, 0) = t / 2;
    m(2, 2) = 0.5 * (s - 0.25);
    m(3, 3) = (1 - s) / 2;
    return m;
}

Mat build_rho_t(double t) {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = 5.0 / 8.0;
    m(0, 3) = m(3, 0) = t / 2;
    m(2, 2) = 1.0 / 8.0;
    m(3, 3) = 1.0 / 4.0;
    return m;
}

Mat build_qutrit_mu(double mu) {
    auto ket = [](int a, int b) {
        Vec v = Vec::Zero(9);
        v(3 * a + b) = 1.0;
        return v;
    };
    Vec psi1 = ket(0, 1) - mu * ket(1, 0);
    Vec psi2 = ket(0, 2) - mu * ket(2, 0);
    Vec psi3 = ket(0, 0) + ket(1, 1) + ket(2, 2);
    Mat m = projector(psi1) + projector(psi2) + projector(psi3);
    return m / (5 + 2 * mu * mu);
}

Mat build_mixed_marginals(double t1, double t2, double t3) {
    Mat m = Mat::Identity(4, 4);
    double t[3] = {t1, t2, t3};
    for (int j = 1; j <= 3; ++j) m += t[j - 1] * matkit::kron(pauli(j), pauli(j));
    return m / 4.0;
}

Mat build_eps3x3(double eps) {
    double e2 = eps * eps;
    double ie2 = 1.0 / e2;
    Mat m = Mat::Zero(9, 9);
    for (int i : {0, 4, 8})
        for (int j : {0, 4, 8}) m(i, j) = 1.0;
    m(1, 1) = ie2;
    m(1, 3) = m(3, 1) = 1.0;
    m(2, 2) = e2;
    m(2, 6) = m(6, 2) = 1.0;
    m(3, 3) = e2;
    m(5, 5) = ie2;
    m(5, 7) = m(7, 5) = 1.0;
    m(6, 6) = ie2;
    m(7, 7) = e2;
    return m / (3 * (1 + e2 + ie2));
}

Mat build_bihalan() {
    double s5 = std::sqrt(5.0);
    double den = 3 + 9 * s5;
    double a = (1 + s5) / den, b = -2 / den, c = (-1 + s5) / den;
    Mat m = Mat::Zero(9, 9);
    m(0, 0) = a;
    m(0, 4) = m(4, 0) = b;
    m(0, 8) = m(8, 0) = b;
    m(1, 1) = c;
    m(2, 2) = a;
    m(3, 3) = a;
    m(4, 4) = a;
    m(5, 5) = c;
    m(5, 7) = m(7, 5) = b;
    m(6, 6) = c;
    m(7, 7) = a;
    m(8, 8) = a;
    return m;
}

Mat build_acin(double a, double b, double c) {
    double n = 2 + a + b + c + 1 / a + 1 / b + 1 / c;
    Mat m = Mat::Zero(8, 8);
    m.diagonal() << 1, a, b, c, 1 / c, 1 / b, 1 / a, 1;
    m(0, 7) = m(7, 0) = 1;
    return m / n;
}

Mat build_mub3(double p1, double p3) {
    double p2 = 1 - p1 - 3 * p3;
    double r123 = p1 + p2 - p3;
    double r4 = p1 - p2 + 3 * p3;
    double r567 = -p1 + p2 + p3;
    Mat id = Mat::Identity(2, 2);
    auto kron3 = [](const Mat& a, const Mat& b, const Mat& c) {
        return matkit::kron(matkit::kron(a, b), c);
    };
    Mat m = kron3(id, id, id);
    m += r123 * kron3(pauli(3), pauli(3), id);
    m += r123 * kron3(pauli(3), id, pauli(3));
    m += r123 * kron3(id, pauli(3), pauli(3));
    m += r4 * kron3(pauli(1), pauli(1), pauli(1));
    m += r567 * kron3(pauli(1), pauli(2), pauli(2));
    m += r567 * kron3(pauli(2), pauli(1), pauli(2));
    m += r567 * kron3(pauli(2), pauli(2), pauli(1));
    return m / 8.0;
}

Mat build_rho12() {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = m(3, 3) = 13.0 / 30.0;
    m(0, 3) = m(3, 0) = 11.0 / 30.0;
    m(1, 1) = m(2, 2) = 1.0 / 15.0;
    return m;
}

Mat build_varrho12() {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = m(3, 3) = 11.0 / 30.0;
    m(0, 3) = m(3, 0) = 7.0 / 30.0;
    m(1, 1) = m(2, 2) = 2.0 / 15.0;
    return m;
}

}  // namespace

Vec bell_vector(int which) {
    if (which < 0 || which > 3) throw DomainError("bell_vector: which must be 0..3");
    Vec k0 = basis_ket(2, 0), k1 = basis_ket(2, 1);
    double r2 = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 0: return r2 * (matkit::kron(k0, k0) + matkit::kron(k1, k1));
        case 1: return r2 * (matkit::kron(k0, k0) - matkit::kron(k1, k1));
        case 2: return r2 * (matkit::kron(k1, k0) + matkit::kron(k0, k1));
        default: return r2 * (matkit::kron(k0, k1) - matkit::kron(k1, k0));
    }
}

const std::vector<StateFamily>& catalog() {
    static const std::vector<StateFamily> cat = {
        {"bell", {{"which", 0, 3, 0}}, {2, 2}, "Bell states phi+/phi-/psi+/psi-"},
        {"iso2", {{"f", 0, 1, 0.5}}, {2, 2}, "two-qubit isotropic state"},
        {"iso3", {{"f", 0, 1, 0.5}}, {3, 3}, "two-qutrit isotropic state (fidelity form)"},
        {"iso3_beta", {{"beta", -0.125, 1, 0.5}}, {3, 3}, "two-qutrit isotropic state (mixing form)"},
        {"horodecki_a", {{"a", 0, 1, 0.5}}, {3, 3}, "3x3 bound entangled family"},
        {"horodecki_alpha", {{"alpha", 2, 5, 3.5}}, {3, 3}, "3x3 alpha family (sep/PPTES/NPTES)"},
        {"upb_tiles", {}, {3, 3}, "tiles-UPB bound entangled state"},
        {"upb_mixture", {{"i", 1, 5, 1}, {"gamma", 0, 1, 0.1}}, {3, 3}, "UPB state mixed with a tile vector"},
        {"bes4x4", {{"p", 0, 0.25, bes_p0()}, {"q", 0, 0.5, bes_q0()}}, {4, 4},
         "4x4 family, PPT at p = q/sqrt(2); requires 4p + 2q = 1"},
        {"bes4x4_noisy", {{"lambda", 0, 1, 0.5}}, {4, 4}, "bes4x4(p0,q0) with white noise"},
        {"kye", {{"r", 0, 1, 0.5}}, {4, 4}, "rho_{1,1,r} PPTES slice (0 < r < 1)"},
        {"npt3x3", {{"a", 0.262513, 0.368743, 0.3}}, {3, 3}, "3x3 NPT family"},
        {"two_param_2xn", {{"n", 3, 6, 3}, {"alpha", 0, 0.25, 0.1}, {"gamma", 0, 1, 0.6}}, {2, 3},
         "two-parameter 2xn family (dims follow n)"},
        {"rudolph_st", {{"s", 0.25, 1, 0.6}, {"t", -1, 1, 0.15}}, {2, 2},
         "two-parameter two-qubit family (t != 0)"},
        {"rho_t", {{"t", -0.7905694150420949, 0.7905694150420949, 0.4}}, {2, 2},
         "one-parameter two-qubit family"},
        {"qutrit_mu", {{"mu", 0.7071067811865476, 1, 0.8}}, {3, 3}, "two-qutrit NPT family"},
        {"mixed_marginals", {{"t1", -1, 1, 0}, {"t2", -1, 1, 0}, {"t3", -1, 1, -0.5}}, {2, 2},
         "maximally mixed marginals family"},
        {"eps3x3", {{"eps", 1e-6, 10, 0.7}}, {3, 3}, "3x3 PPTES family (eps > 0, eps != 1)"},
        {"bihalan_be", {}, {3, 3}, "fixed 3x3 bound entangled state"},
        {"acin_abc", {{"a", 1e-6, 1e6, 1}, {"b", 1e-6, 1e6, 1}, {"c", 1e-6, 1e6, 1}}, {2, 2, 2},
         "three-qubit a,b,c family"},
        {"mub3", {{"p1", 0, 1, 0.5}, {"p3", 0, 0.3333333333333333, 0.1}}, {2, 2, 2},
         "three-qubit mutually-unbiased-basis family"},
        {"rho12", {}, {2, 2}, "fixed entangled two-qubit state (13/30 corners)"},
        {"varrho12", {}, {2, 2}, "fixed entangled two-qubit state (11/30 corners)"},
    };
    return cat;
}

const StateFamily* find_family(const std::string& id) {
    for (const auto& f : catalog())
        if (f.id == id) return &f;
    return nullptr;
}

DensityMatrix make_state(const std::string& family, const Params& params, bool unchecked) {
    const StateFamily* fam = find_family(family);
    if (!fam) throw DomainError("make_state: unknown family '" + family + "'");

    Params p = params;
    for (const auto& ps : fam->params) {
        double v = get_param(params, ps.name, ps.default_value);
        p[ps.name] = v;
        if (!unchecked && (v < ps.lo - 1e-12 || v > ps.hi + 1e-12))
            throw DomainError("make_state: parameter '" + ps.name + "' out of range for " + family);
    }
    for (const auto& kv : params) {
        bool known = false;
        for (const auto& ps : fam->params) known = known || ps.name == kv.first;
        if (!known) throw DomainError("make_state: unknown parameter '" + kv.first + "' for " + family);
    }

    DensityMatrix out;
    out.dims = DimSpec(fam->dims);

    if (family == "bell") {
        out.matrix = build_bell(int(std::lround(p["which"])));
    } else if (family == "iso2") {
        out.matrix = build_iso2(p["f"]);
    } else if (family == "iso3") {
        out.matrix = build_iso3(p["f"]);
    } else if (family == "iso3_beta") {
        out.matrix = build_iso3_beta(p["beta"]);
    } else if (family == "horodecki_a") {
        out.matrix = build_horodecki_a(p["a"]);
    } else if (family == "horodecki_alpha") {
        out.matrix = build_horodecki_alpha(p["alpha"]);
    } else if (family == "upb_tiles") {
        out.matrix = build_upb_tiles();
    } else if (family == "upb_mixture") {
        out.matrix = build_upb_mixture(int(std::lround(p["i"])), p["gamma"]);
    } else if (family == "bes4x4") {
        if (!unchecked)
            require(std::abs(4 * p["p"] + 2 * p["q"] - 1) <= 1e-9,
                    "bes4x4 requires 4p + 2q = 1");
        out.matrix = build_bes4x4(p["p"], p["q"]);
    } else if (family == "bes4x4_noisy") {
        out.matrix = build_bes4x4_noisy(p["lambda"]);
    } else if (family == "kye") {
        if (!unchecked) require(p["r"] > 0 && p["r"] < 1, "kye requires 0 < r < 1");
        out.matrix = build_kye_general(1.0, 1.0, p["r"]);
    } else if (family == "npt3x3") {
        out.matrix = build_npt3x3(p["a"]);
    } else if (family == "two_param_2xn") {
        int n = int(std::lround(p["n"]));
        if (!unchecked) require(p["alpha"] <= 1.0 / (2 * (n - 1)) + 1e-12,
                                "two_param_2xn requires alpha <= 1/(2(n-1))");
        out.dims = DimSpec({2, n});
        out.matrix = build_two_param_2xn(n, p["alpha"], p["gamma"]);
    } else if (family == "rudolph_st") {
        if (!unchecked) require(p["t"] != 0.0 && p["s"] > 0.25, "rudolph_st requires t != 0, s > 1/4");
        out.matrix = build_rudolph(p["s"], p["t"]);
    } else if (family == "rho_t") {
        out.matrix = build_rho_t(p["t"]);
    } else if (family == "qutrit_mu") {
        out.matrix = build_qutrit_mu(p["mu"]);
    } else if (family == "mixed_marginals") {
        double t1 = p["t1"], t2 = p["t2"], t3 = p["t3"];
        if (!unchecked)
            require((1 - t3) * (1 - t3) >= (t1 + t2) * (t1 + t2) - 1e-12 &&
                        (1 + t3) * (1 + t3) >= (t1 - t2) * (t1 - t2) - 1e-12,
                    "mixed_marginals parameters give a non-PSD matrix");
        out.matrix = build_mixed_marginals(t1, t2, t3);
    } else if (family == "eps3x3") {
        if (!unchecked) require(p["eps"] > 0 && p["eps"] != 1.0, "eps3x3 requires eps > 0, eps != 1");
        out.matrix = build_eps3x3(p["eps"]);
    } else if (family == "bihalan_be") {
        out.matrix = build_bihalan();
    } else if (family == "acin_abc") {
        if (!unchecked) require(p["a"] > 0 && p["b"] > 0 && p["c"] > 0, "acin_abc requires a,b,c > 0");
        out.matrix = build_acin(p["a"], p["b"], p["c"]);
    } else if (family == "mub3") {
        double p2 = 1 - p["p1"] - 3 * p["p3"];
        if (!unchecked) require(p2 >= -1e-12 && p2 <= 1 + 1e-12, "mub3 requires p2 = 1 - p1 - 3*p3 in [0,1]");
        out.matrix = build_mub3(p["p1"], p["p3"]);
    } else if (family == "rho12") {
        out.matrix = build_rho12();
    } else if (family == "varrho12") {
        out.matrix = build_varrho12();
    } else {
        throw DomainError("make_state: unhandled family '" + family + "'");
    }

    std::ostringstream label;
    label << family;
    for (const auto& ps : fam->params) label << " " << ps.name << "=" << p[ps.name];
    out.label = label.str();

    if (!unchecked) {
        auto report = validate(out);
        if (!report.pass())
            throw DomainError("make_state: construction of '" + family +
                              "' failed density-matrix validation");
    }
    return out;
}

ValidationReport validate(const DensityMatrix& rho) {
    ValidationReport r;
    if (rho.matrix.rows() != rho.matrix.cols() || rho.matrix.rows() != rho.dims.total()) {
        r.hermiticity_defect = std::numeric_limits<double>::infinity();
        r.trace_defect = std::numeric_limits<double>::infinity();
        return r;
    }
    r.hermiticity_defect = matkit::hermiticity_defect(rho.matrix);
    double scale = std::max(1.0, rho.matrix.cwiseAbs().maxCoeff());
    r.hermitian_ok = r.hermiticity_defect <= matkit::kHermTol * scale;
    r.trace_defect = std::abs(rho.matrix.trace() - Complex(1.0, 0.0));
    r.trace_ok = r.trace_defect <= kTraceTol;
    auto eig = matkit::eig_hermitian(rho.matrix, /*symmetrize=*/true);
    r.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.back();
    r.psd_ok = r.min_eigenvalue >= -kPsdTol;
    return r;
}

// ---- random generators ------------------------------------------------------

namespace {

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * (1.0 / 9007199254740992.0);
}

double gauss(std::mt19937_64& rng) {
    // Box-Muller; keeps the generator stream portable across standard libraries.
    double u1 = uniform01(rng), u2 = uniform01(rng);
    u1 = std::max(u1, 1e-300);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> random_weights(int terms, std::mt19937_64& rng) {
    std::vector<double> w(terms);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(std::max(uniform01(rng), 1e-300));
        sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
}

}  // namespace

Vec random_pure(int dim, std::mt19937_64& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

DensityMatrix random_density(const DimSpec& dims, int rank, std::mt19937_64& rng) {
    int n = dims.total();
    rank = std::max(1, std::min(rank, n));
    auto w = random_weights(rank, rng);
    Mat m = Mat::Zero(n, n);
    for (int i = 0; i < rank; ++i) m += w[i] * projector(random_pure(n, rng));
    return {m, dims, "random_density"};
}

DensityMatrix random_separable(int d1, int d2, int terms, std::mt19937_64& rng) {
    auto w = random_weights(terms, rng);
    Mat m = Mat::Zero(d1 * d2, d1 * d2);
    for (int i = 0; i < terms; ++i) {
        Vec a = random_pure(d1, rng), b = random_pure(d2, rng);
        m += w[i] * projector(matkit::kron(a, b));
    }
    return {m, DimSpec({d1, d2}), "random_separable"};
}

DensityMatrix random_product_pure(int d1, int d2, std::mt19937_64& rng) {
    Vec a = random_pure(d1, rng), b = random_pure(d2, rng);
    return {projector(matkit::kron(a, b)), DimSpec({d1, d2}), "random_product_pure"};
}

DensityMatrix random_fully_separable_3q(int terms, std::mt19937_64& rng) {
    auto w = random_weights(terms, rng);
    Mat m = Mat::Zero(8, 8);
    for (int i = 0; i < terms; ++i) {
        Vec a = random_pure(2, rng), b = random_pure(2, rng), c = random_pure(2, rng);
        m += w[i] * projector(matkit::kron(matkit::kron(a, b), c));
    }
    return {m, DimSpec({2, 2, 2}), "random_fully_separable_3q"};
}

}  // namespace entkit::statebank
