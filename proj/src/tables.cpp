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

#include "entkit/tables.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "entkit/criteria.hpp"
#include "entkit/io.hpp"
#include "entkit/moments.hpp"
#include "entkit/qmaps.hpp"
#include "entkit/statebank.hpp"
#include "entkit/witness.hpp"

namespace entkit::tables {

namespace {

using statebank::DensityMatrix;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int iter = 0; iter < 60 && hi - lo > 1e-9; ++iter) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

/// Scan [lo,hi] on `scan` points and refine the first sign change found.
double find_root(const std::function<double(double)>& f, double lo, double hi, int scan) {
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= scan; ++i) {
        double x = lo + (hi - lo) * i / scan;
        double fx = f(x);
        if (prev_f == 0.0) return prev_x;
        if (prev_f * fx < 0.0) return bisect(f, prev_x, x);
        prev_x = x;
        prev_f = fx;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double wn_expectation(const std::string& family, const std::string& pname, double value, int n) {
    auto rho = statebank::make_state(family, {{pname, value}});
    auto w = witness::wn_witness(n, rho);
    return witness::witness_expectation(w, rho);
}

double choi11_expectation(const DensityMatrix& rho) {
    auto w = witness::choi_witness(1.0, 1.0, rho);
    return witness::witness_expectation(w, rho);
}

std::string fmt(double x) { return io::format_double(x); }

TableArtifact compute_bennet() {
    TableArtifact t;
    t.id = "Bennet_table";
    t.columns = {"n", "Phi_Wn", "C_min"};
    auto rho = statebank::make_state("upb_tiles");
    auto bounds = witness::concurrence_bounds(rho, {1, 2, 3, 4, 5});
    for (auto [n, phi] : bounds.phi_wn) {
        t.rows.push_back({std::to_string(n), fmt(phi), fmt(bounds.c_min)});
        t.numeric["phi_n" + std::to_string(n)] = phi;
    }
    t.numeric["c_min"] = bounds.c_min;
    return t;
}

TableArtifact compute_4by4() {
    TableArtifact t;
    t.id = "4by4_table";
    t.columns = {"n", "Phi_Wn", "C_min"};
    auto rho = statebank::make_state("bes4x4");
    auto bounds = witness::concurrence_bounds(rho, {1, 2, 3, 4, 5});
    for (auto [n, phi] : bounds.phi_wn) {
        t.rows.push_back({std::to_string(n), fmt(phi), fmt(bounds.c_min)});
        t.numeric["phi_n" + std::to_string(n)] = phi;
    }
    t.numeric["c_min"] = bounds.c_min;
    return t;
}

TableArtifact compute_table_iso() {
    TableArtifact t;
    t.id = "table_iso";
    t.columns = {"n", "f_lower"};
    for (int n = 1; n <= 5; ++n) {
        double f = find_root([n](double x) { return wn_expectation("iso3", "f", x, n); },
                             0.30, 0.60, 60);
        t.rows.push_back({std::to_string(n), fmt(f)});
        t.numeric["f_n" + std::to_string(n)] = f;
    }
    return t;
}

TableArtifact compute_table31() {
    TableArtifact t;
    t.id = "table3.1";
    t.columns = {"a", "p_max"};
    for (int i = 1; i <= 9; ++i) {
        double a = i / 10.0;
        auto rho = statebank::make_state("horodecki_a", {{"a", a}});
        double m1 = moments::realign_moments(rho, 1)[1];
        auto stat = [&](double p) {
            return matkit::trace_norm(qmaps::spa_realign(rho, p)) - (p * (m1 - 1) + 1) / m1;
        };
        double pmax = find_root(stat, 0.0, 0.2, 200);
        std::ostringstream key;
        key << "pmax_a0." << i;
        t.rows.push_back({fmt(a), fmt(pmax)});
        t.numeric[key.str()] = pmax;
    }
    return t;
}

TableArtifact compute_alphatable() {
    TableArtifact t;
    t.id = "alphatable";
    t.columns = {"n", "alpha_lower"};
    for (int n = 1; n <= 5; ++n) {
        double a = find_root(
            [n](double x) { return wn_expectation("horodecki_alpha", "alpha", x, n); },
            3.0 + 1e-6, 4.0, 200);
        t.rows.push_back({std::to_string(n), fmt(a)});
        t.numeric["alpha_n" + std::to_string(n)] = a;
    }
    return t;
}

TableArtifact compute_atable() {
    TableArtifact t;
    t.id = "atable";
    t.columns = {"n", "a_upper"};
    for (int n = 1; n <= 8; ++n) {
        double a = find_root([n](double x) { return wn_expectation("horodecki_a", "a", x, n); },
                             1e-4, 1.0 - 1e-6, 2000);
        t.rows.push_back({std::to_string(n), std::isnan(a) ? "none" : fmt(a)});
        if (n == 1) {
            t.numeric["n1_detects"] = std::isnan(a) ? 0.0 : 1.0;
        } else {
            t.numeric["a_n" + std::to_string(n)] = a;
        }
    }
    return t;
}

TableArtifact compute_rtable() {
    TableArtifact t;
    t.id = "rtable";
    t.columns = {"r", "ccnr_stat", "ct_stat", "dv_stat", "W11_expectation"};
    criteria::Options opt;
    double max_other = -std::numeric_limits<double>::infinity();
    double min_neg_w = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 9; ++i) {
        double r = i / 10.0;
        auto rho = statebank::make_state("kye", {{"r", r}});
        double c = criteria::ccnr(rho, opt).statistic - 1.0;
        double ct = criteria::correlation_tensor_best(rho, opt).statistic;
        double dvs = criteria::dv(rho, opt).statistic;
        double w = choi11_expectation(rho);
        t.rows.push_back({fmt(r), fmt(c), fmt(ct), fmt(dvs), fmt(w)});
        max_other = std::max({max_other, c, ct, dvs});
        min_neg_w = std::min(min_neg_w, -w);
        if (i == 5) {
            t.numeric["ccnr_r0.5"] = c;
            t.numeric["ct11_r0.5"] = criteria::correlation_tensor(rho, 1, 1, opt).statistic;
            t.numeric["w11_r0.5"] = w;
        }
    }
    t.numeric["others_never_detect"] = max_other <= 0 ? 1.0 : 0.0;
    t.numeric["witness_detects_all"] = min_neg_w > 0 ? 1.0 : 0.0;
    return t;
}

TableArtifact compute_tab4by4() {
    TableArtifact t;
    t.id = "tab-4by4";
    t.columns = {"criterion", "lambda_boundary"};
    criteria::Options opt;
    auto state_at = [](double lam) {
        return statebank::make_state("bes4x4_noisy", {{"lambda", lam}});
    };
    auto ccnr_stat = [&](double lam) {
        return criteria::ccnr(state_at(lam), opt).statistic - 1.0;
    };
    auto ct_diag_stat = [&](double lam) {
        return criteria::correlation_tensor(state_at(lam), 0.5, 0.5, opt).statistic;
    };
    auto dv_stat = [&](double lam) { return criteria::dv(state_at(lam), opt).statistic; };
    auto w_stat = [&](double lam) { return choi11_expectation(state_at(lam)); };
    double b_ccnr = find_root(ccnr_stat, 0.5, 1.0, 50);
    double b_ct = find_root(ct_diag_stat, 0.5, 1.0, 50);
    double b_dv = find_root(dv_stat, 0.5, 1.0, 50);
    double b_w = find_root(w_stat, 0.05, 1.0, 50);
    t.rows.push_back({"ccnr", fmt(b_ccnr)});
    t.rows.push_back({"ct_diag", fmt(b_ct)});
    t.rows.push_back({"dv", fmt(b_dv)});
    t.rows.push_back({"witness_W11", fmt(b_w)});
    t.numeric["ccnr_boundary"] = b_ccnr;
    t.numeric["ct_diag_boundary"] = b_ct;
    t.numeric["dv_boundary"] = b_dv;
    t.numeric["witness_boundary"] = b_w;
    return t;
}

}  // namespace

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {
        "rtable", "tab-4by4", "table_iso", "table3.1",
        "alphatable", "atable", "Bennet_table", "4by4_table"};
    return ids;
}

TableArtifact compute_table(const std::string& id) {
    if (id == "Bennet_table") return compute_bennet();
    if (id == "4by4_table") return compute_4by4();
    if (id == "table_iso") return compute_table_iso();
    if (id == "table3.1") return compute_table31();
    if (id == "alphatable") return compute_alphatable();
    if (id == "atable") return compute_atable();
    if (id == "rtable") return compute_rtable();
    if (id == "tab-4by4") return compute_tab4by4();
    throw matkit::DomainError("compute_table: unknown table id '" + id + "'");
}

const std::vector<FixtureEntry>& fixture(const std::string& id) {
    static const std::map<std::string, std::vector<FixtureEntry>> fixtures = {
        {"Bennet_table",
         {{"phi_n1", 0.00305406, 1e-5, "UPB concurrence table, n=1"},
          {"phi_n2", 0.097443, 1e-5, "UPB concurrence table, n=2"},
          {"phi_n3", 0.106169, 1e-5, "UPB concurrence table, n=3"},
          {"phi_n4", 0.106976, 1e-5, "UPB concurrence table, n=4"},
          {"phi_n5", 0.10705, 1e-5, "UPB concurrence table, n=5"},
          {"c_min", 0.04, 5e-3, "UPB concurrence table, trace-norm bound (2 d.p.)"}}},
        {"4by4_table",
         {{"phi_n1", 0.01757, 1e-2, "4x4 concurrence table, n=1"},
          {"phi_n2", 0.0915681, 1e-2, "4x4 concurrence table, n=2"},
          {"phi_n3", 0.0971719, 1e-2, "4x4 concurrence table, n=3"},
          {"phi_n4", 0.0975963, 1e-2, "4x4 concurrence table, n=4"},
          {"phi_n5", 0.0976284, 1e-2, "4x4 concurrence table, n=5"},
          {"c_min", 0.0285955, 1e-2, "4x4 concurrence table, trace-norm bound"}}},
        {"table_iso",
         {{"f_n1", 0.35, 5e-3, "isotropic detection range, n=1 (printed to 2 d.p.)"},
          {"f_n2", 0.336, 1e-3, "isotropic detection range, n=2"},
          {"f_n3", 0.3338, 1e-3, "isotropic detection range, n=3"},
          {"f_n4", 0.3334, 1e-3, "isotropic detection range, n=4"},
          {"f_n5", 0.33334, 1e-3, "isotropic detection range, n=5"}}},
        {"table3.1",
         {{"pmax_a0.1", 0.019383, 1e-5, "SPA-R p-range, a=0.1"},
          {"pmax_a0.2", 0.022143, 1e-5, "SPA-R p-range, a=0.2"},
          {"pmax_a0.3", 0.021903, 1e-5, "SPA-R p-range, a=0.3"},
          {"pmax_a0.4", 0.020444, 1e-5, "SPA-R p-range, a=0.4"},
          {"pmax_a0.5", 0.018284, 1e-5, "SPA-R p-range, a=0.5"},
          {"pmax_a0.6", 0.015611, 1e-5, "SPA-R p-range, a=0.6"},
          {"pmax_a0.7", 0.012488, 1e-5, "SPA-R p-range, a=0.7"},
          {"pmax_a0.8", 0.008904, 1e-5, "SPA-R p-range, a=0.8"},
          {"pmax_a0.9", 0.004791, 1e-5, "SPA-R p-range, a=0.9"}}},
        {"alphatable",
         {{"alpha_n1", 3.7, 5e-2, "alpha-family detection range, n=1 (printed to 2 s.f.)"},
          {"alpha_n2", 3.11, 1e-2, "alpha-family detection range, n=2"},
          {"alpha_n3", 3.01, 1e-2, "alpha-family detection range, n=3"},
          {"alpha_n4", 3.0025, 1e-2, "alpha-family detection range, n=4"},
          {"alpha_n5", 3.0004, 1e-2, "alpha-family detection range, n=5"}}},
        {"atable",
         {{"n1_detects", 0.0, 0.5, "a-family detection range, n=1 (none)"},
          {"a_n2", 0.016, 1e-2, "a-family detection range, n=2"},
          {"a_n3", 0.62, 1e-2, "a-family detection range, n=3"},
          {"a_n4", 0.951, 1e-2, "a-family detection range, n=4"},
          {"a_n5", 0.9932, 1e-2, "a-family detection range, n=5"},
          {"a_n6", 0.999, 1e-2, "a-family detection range, n=6"},
          {"a_n7", 0.99987, 1e-2, "a-family detection range, n=7"},
          {"a_n8", 0.99998, 1e-2, "a-family detection range, n=8"}}},
        {"rtable",
         {{"ccnr_r0.5", -0.2, 1e-9, "kye family: ||R||_1 - 1 = 2/(2+r) - 1 at r=1/2"},
          {"ct11_r0.5", -0.2, 1e-9, "kye family: CT statistic at (1,1) equals the CCNR gap"},
          {"w11_r0.5", -0.36227766016837935, 1e-6,
           "kye family: closed-form witness expectation at alpha=beta=1, r=1/2"},
          {"others_never_detect", 1.0, 0.5, "kye family: dV/CCNR/CT never detect"},
          {"witness_detects_all", 1.0, 0.5, "kye family: witness detects the whole range"}}},
        {"tab-4by4",
         {{"ccnr_boundary", 0.897358, 1e-5, "noisy 4x4 family: CCNR boundary"},
          {"ct_diag_boundary", 0.897358, 1e-5, "noisy 4x4 family: CT x=y boundary"},
          {"dv_boundary", 0.897358, 1e-5, "noisy 4x4 family: dV boundary"},
          {"witness_boundary", 0.318255, 1e-5, "noisy 4x4 family: witness boundary"}}},
    };
    auto it = fixtures.find(id);
    if (it == fixtures.end())
        throw matkit::DomainError("fixture: unknown table id '" + id + "'");
    return it->second;
}

TableDiff diff_against_fixture(const TableArtifact& artifact) {
    TableDiff diff;
    for (const auto& fe : fixture(artifact.id)) {
        DiffEntry e;
        e.key = fe.key;
        e.expected = fe.expected;
        e.tol = fe.tol;
        auto it = artifact.numeric.find(fe.key);
        e.computed = it == artifact.numeric.end() ? std::numeric_limits<double>::quiet_NaN()
                                                  : it->second;
        e.ok = std::isfinite(e.computed) && std::abs(e.computed - e.expected) <= e.tol;
        diff.entries.push_back(e);
        diff.ok = diff.ok && e.ok;
    }
    return diff;
}

std::string to_csv(const TableArtifact& artifact) {
    std::string out = io::csv_row(artifact.columns);
    for (const auto& row : artifact.rows) out += io::csv_row(row);
    return out;
}

std::string diff_to_string(const TableDiff& diff) {
    std::ostringstream os;
    for (const auto& e : diff.entries) {
        os << (e.ok ? "  ok  " : " FAIL ") << e.key << ": computed " << e.computed
           << ", expected " << e.expected << " (tol " << e.tol << ")\n";
    }
    return os.str();
}

}  // namespace entkit::tables
