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

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entkit/criteria.hpp"
#include "entkit/io.hpp"
#include "entkit/moments.hpp"
#include "entkit/qmaps.hpp"
#include "entkit/statebank.hpp"
#include "entkit/sweep.hpp"
#include "entkit/tables.hpp"
#include "entkit/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitFixture = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

entkit::statebank::Params parse_params(const std::vector<std::string>& kvs) {
    entkit::statebank::Params out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("bad --params entry '" + kv + "', want name=value");
        try {
            out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("bad numeric value in --params entry '" + kv + "'");
        }
    }
    return out;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

entkit::statebank::DensityMatrix load_state(const std::string& family, const std::string& file,
                                            const std::vector<std::string>& params,
                                            bool unchecked) {
    if (!file.empty()) {
        auto j = entkit::io::json::parse(entkit::io::read_file(file));
        auto rho = entkit::io::state_from_json(j);
        if (!unchecked) {
            auto rep = entkit::statebank::validate(rho);
            if (!rep.pass())
                throw entkit::matkit::DomainError("state in '" + file +
                                                  "' fails density-matrix validation");
        }
        return rho;
    }
    if (family.empty()) throw InputError("need --state or --file");
    return entkit::statebank::make_state(family, parse_params(params), unchecked);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
    } else {
        entkit::io::write_file(out_path, content);
    }
}

double env_rank_tol() {
    const char* env = std::getenv("ENTKIT_DEFAULT_TOL");
    if (!env) return entkit::matkit::kDefaultRankTol;
    try {
        return std::stod(env);
    } catch (const std::exception&) {
        throw InputError("ENTKIT_DEFAULT_TOL is not a number");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entkit: entanglement detection toolkit"};
    app.require_subcommand(1);

    std::string family, file, out_path, criteria_csv = "all", param_name, grid_spec, table_id;
    std::vector<std::string> params;
    double margin = 1e-9;
    double rank_tol = entkit::matkit::kDefaultRankTol;
    double spa_p = -1.0;
    std::uint64_t seed = 0;
    bool unchecked = false;
    int wn_n = 3;
    std::string witness_family = "wn";
    int moments_order = 4;

    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--state", family, "catalog family id");
        cmd->add_option("--file", file, "state JSON file");
        cmd->add_option("--params", params, "family parameters as name=value");
        cmd->add_flag("--unchecked", unchecked, "skip parameter range validation");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path ('-' for stdout)");
        cmd->add_option("--margin", margin, "decision margin on statistics");
        cmd->add_option("--tol-rank", rank_tol, "relative rank tolerance");
        cmd->add_option("--seed", seed, "random seed");
    };

    auto* detect = app.add_subcommand("detect", "evaluate criteria on one state");
    add_state_opts(detect);
    add_common(detect);
    detect->add_option("--criteria", criteria_csv, "comma list of criteria or 'all'");
    detect->add_option("--spa-p", spa_p, "mixing probability for SPA criteria");

    auto* sweep = app.add_subcommand("sweep", "sweep a family parameter");
    add_state_opts(sweep);
    add_common(sweep);
    sweep->add_option("--criteria", criteria_csv, "comma list of criteria");
    sweep->add_option("--param", param_name, "parameter to sweep")->required();
    sweep->add_option("--grid", grid_spec, "start:stop:steps")->required();
    std::string boundary_out;
    sweep->add_option("--boundaries-out", boundary_out, "where to write the boundary report");
    bool serial = false;
    sweep->add_flag("--serial", serial, "use the serial reference engine");

    auto* table = app.add_subcommand("table", "reproduce a published table");
    add_common(table);
    table->add_option("id", table_id, "table id")->required();

    auto* witness_cmd = app.add_subcommand("witness", "construct and export a witness");
    add_state_opts(witness_cmd);
    add_common(witness_cmd);
    witness_cmd->add_option("--family", witness_family, "choi | det | wo | wn");
    witness_cmd->add_option("--n", wn_n, "index for the wn family");
    double w_alpha = 1.0, w_beta = 1.0;
    witness_cmd->add_option("--alpha", w_alpha, "choi witness alpha");
    witness_cmd->add_option("--beta", w_beta, "choi witness beta");

    auto* moments_cmd = app.add_subcommand("moments", "dump moment vectors as CSV");
    add_state_opts(moments_cmd);
    add_common(moments_cmd);
    moments_cmd->add_option("--order", moments_order, "highest moment order");

    auto* validate_cmd = app.add_subcommand("validate", "check density-matrix invariants");
    add_state_opts(validate_cmd);
    add_common(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        rank_tol = rank_tol == entkit::matkit::kDefaultRankTol ? env_rank_tol() : rank_tol;
        entkit::criteria::Options opt;
        opt.margin = margin;
        opt.rank_tol = rank_tol;
        if (spa_p >= 0) opt.spa_p = spa_p;

        if (detect->parsed()) {
            auto rho = load_state(family, file, params, unchecked);
            auto verdicts = entkit::criteria::run_battery(rho, split_list(criteria_csv), opt);
            entkit::io::json j;
            j["state"] = rho.label;
            j["dims"] = rho.dims.dims;
            j["verdicts"] = entkit::io::json::array();
            for (const auto& v : verdicts) j["verdicts"].push_back(entkit::io::verdict_to_json(v));
            emit(out_path, j.dump(2) + "\n");
        } else if (sweep->parsed()) {
            entkit::sweep::SweepSpec spec;
            spec.family = family;
            spec.param = param_name;
            spec.fixed = parse_params(params);
            spec.criteria = split_list(criteria_csv);
            spec.seed = seed;
            spec.unchecked = unchecked;
            std::stringstream gs(grid_spec);
            std::string a, b, c;
            if (!std::getline(gs, a, ':') || !std::getline(gs, b, ':') || !std::getline(gs, c))
                throw InputError("bad --grid, want start:stop:steps");
            spec.start = std::stod(a);
            spec.stop = std::stod(b);
            spec.steps = std::stoi(c);
            auto result = serial ? entkit::sweep::run_serial(spec, opt)
                                 : entkit::sweep::run(spec, opt);
            emit(out_path, entkit::sweep::to_csv(spec, result));
            auto bs = entkit::sweep::find_boundaries(spec, result, opt);
            std::string report = entkit::sweep::boundaries_to_csv(bs);
            if (!boundary_out.empty()) {
                emit(boundary_out, report);
            } else {
                std::cerr << report;
            }
        } else if (table->parsed()) {
            auto artifact = entkit::tables::compute_table(table_id);
            auto diff = entkit::tables::diff_against_fixture(artifact);
            emit(out_path, entkit::tables::to_csv(artifact));
            std::cerr << entkit::tables::diff_to_string(diff);
            if (!diff.ok) return kExitFixture;
        } else if (witness_cmd->parsed()) {
            auto rho = load_state(family, file, params, unchecked);
            entkit::witness::WitnessOperator w;
            if (witness_family == "choi") {
                w = entkit::witness::choi_witness(w_alpha, w_beta, rho);
            } else if (witness_family == "det") {
                w = entkit::witness::det_witness(rho);
            } else if (witness_family == "wo") {
                w = entkit::witness::wo_witness(rho);
            } else if (witness_family == "wn") {
                w = entkit::witness::wn_witness(wn_n, rho);
            } else {
                throw InputError("unknown witness family '" + witness_family + "'");
            }
            auto j = entkit::io::witness_to_json(w);
            j["expectation_on_target"] = entkit::witness::witness_expectation(w, rho);
            emit(out_path, j.dump(2) + "\n");
        } else if (moments_cmd->parsed()) {
            auto rho = load_state(family, file, params, unchecked);
            std::vector<entkit::moments::MomentVector> mvs;
            mvs.push_back(entkit::moments::pt_moments(rho, moments_order));
            mvs.push_back(entkit::moments::gram_moments(rho, moments_order));
            mvs.push_back(entkit::moments::zhang_moments(rho, moments_order));
            if (rho.dims.square_bipartite())
                mvs.push_back(entkit::moments::realign_moments(rho, moments_order));
            emit(out_path, entkit::io::moments_to_csv(mvs));
        } else if (validate_cmd->parsed()) {
            auto rho = load_state(family, file, params, /*unchecked=*/true);
            auto rep = entkit::statebank::validate(rho);
            entkit::io::json j{{"label", rho.label},
                               {"hermiticity_defect", rep.hermiticity_defect},
                               {"trace_defect", rep.trace_defect},
                               {"min_eigenvalue", rep.min_eigenvalue},
                               {"hermitian_ok", rep.hermitian_ok},
                               {"trace_ok", rep.trace_ok},
                               {"psd_ok", rep.psd_ok},
                               {"pass", rep.pass()}};
            emit(out_path, j.dump(2) + "\n");
            if (!rep.pass()) return kExitDomain;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const entkit::io::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const entkit::matkit::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const entkit::matkit::DimensionError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
