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

#include "entkit/sweep.hpp"

#include <cmath>

#include "entkit/io.hpp"

namespace entkit::sweep {

using criteria::CriterionVerdict;
using criteria::Verdict;

std::vector<double> make_grid(const SweepSpec& spec) {
    if (!spec.explicit_list.empty()) return spec.explicit_list;
    if (spec.steps < 1) throw matkit::DomainError("sweep: steps must be >= 1");
    std::vector<double> g(spec.steps);
    if (spec.steps == 1) {
        g[0] = spec.start;
        return g;
    }
    double h = (spec.stop - spec.start) / (spec.steps - 1);
    for (int i = 0; i < spec.steps; ++i) g[i] = spec.start + h * i;
    g.back() = spec.stop;
    return g;
}

namespace {

std::vector<CriterionVerdict> evaluate_point(const SweepSpec& spec, double value,
                                             const criteria::Options& opt) {
    statebank::Params params = spec.fixed;
    params[spec.param] = value;
    try {
        auto rho = statebank::make_state(spec.family, params, spec.unchecked);
        return criteria::run_battery(rho, spec.criteria, opt);
    } catch (const std::exception& e) {
        std::vector<CriterionVerdict> row;
        for (const auto& name : spec.criteria) {
            CriterionVerdict v;
            v.criterion = name;
            v.verdict = Verdict::Error;
            v.notes = e.what();
            row.push_back(v);
        }
        return row;
    }
}

SweepResult run_impl(const SweepSpec& spec, const criteria::Options& opt, bool parallel) {
    SweepResult out;
    out.grid = make_grid(spec);
    int n = static_cast<int>(out.grid.size());
    out.rows.resize(n);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) out.rows[i] = evaluate_point(spec, out.grid[i], opt);
    } else {
        for (int i = 0; i < n; ++i) out.rows[i] = evaluate_point(spec, out.grid[i], opt);
    }
    if (!out.rows.empty())
        for (const auto& v : out.rows.front()) out.columns.push_back(v.criterion);
    return out;
}

}  // namespace

SweepResult run(const SweepSpec& spec, const criteria::Options& opt) {
    return run_impl(spec, opt, /*parallel=*/true);
}

SweepResult run_serial(const SweepSpec& spec, const criteria::Options& opt) {
    return run_impl(spec, opt, /*parallel=*/false);
}

std::string to_csv(const SweepSpec& spec, const SweepResult& result) {
    std::vector<std::string> header{spec.param};
    for (const auto& c : result.columns) {
        header.push_back(c);
        header.push_back(c + "_verdict");
    }
    std::string out = io::csv_row(header);
    for (size_t i = 0; i < result.grid.size(); ++i) {
        std::vector<std::string> row{io::format_double(result.grid[i])};
        for (const auto& v : result.rows[i]) {
            row.push_back(io::format_double(v.statistic));
            row.push_back(criteria::verdict_name(v.verdict));
        }
        out += io::csv_row(row);
    }
    return out;
}

std::vector<Boundary> find_boundaries(const SweepSpec& spec, const SweepResult& result,
                                      const criteria::Options& opt) {
    std::vector<Boundary> out;
    size_t ncols = result.columns.size();
    for (size_t c = 0; c < ncols; ++c) {
        for (size_t i = 0; i + 1 < result.grid.size(); ++i) {
            const auto& a = result.rows[i][c];
            const auto& b = result.rows[i + 1][c];
            if (a.verdict == Verdict::Error || b.verdict == Verdict::Error ||
                a.verdict == Verdict::NotApplicable || b.verdict == Verdict::NotApplicable)
                continue;
            double fa = a.statistic - a.threshold;
            double fb = b.statistic - b.threshold;
            if (fa == 0.0 || fa * fb >= 0.0) continue;
            double lo = result.grid[i], hi = result.grid[i + 1];
            double flo = fa;
            for (int iter = 0; iter < 50 && hi - lo > 1e-6; ++iter) {
                double mid = 0.5 * (lo + hi);
                auto row = evaluate_point(spec, mid, opt);
                double fm = row[c].statistic - row[c].threshold;
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.push_back({result.columns[c], 0.5 * (lo + hi)});
        }
    }
    return out;
}

std::string boundaries_to_csv(const std::vector<Boundary>& bs) {
    std::string out = io::csv_row({"criterion", "boundary"});
    for (const auto& b : bs) out += io::csv_row({b.criterion, io::format_double(b.location)});
    return out;
}

}  // namespace entkit::sweep
