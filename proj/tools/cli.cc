// Copyright 2026 The QCA Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "formats.h"
#include "json.hpp"
#include "qca/compiler.h"
#include "qca/dense.h"
#include "qca/errors.h"
#include "qca/factored.h"
#include "qca/verify.h"

namespace qca::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << text;
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CompileError &e) {
        err << "compile error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const ResourceError &e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitSemantic;
    }
}

struct LoadedProgram {
    LatticeSpec spec;
    ColumnAssignment assign;
};

LoadedProgram load_program(const std::string &path, Topology topology) {
    ProgramFile file = parse_program(read_file(path));
    LatticeSpec spec(file.s, file.r, topology);
    if (file.columns.size() != static_cast<size_t>(file.r)) {
        throw ContractError(
            "program file lists " + std::to_string(file.columns.size()) + " columns for r = " +
            std::to_string(file.r));
    }
    if (file.data.size() > static_cast<size_t>(file.r)) {
        throw ContractError("program file has more data registers than r");
    }
    auto assign = ColumnAssignment::zeros(spec, std::move(file.columns));
    for (size_t i = 0; i < file.data.size(); i++) {
        assign.data[i] = std::move(file.data[i]);
    }
    assign.validate(spec);
    return {spec, std::move(assign)};
}

json samples_to_json(const std::vector<MeasureResult> &samples) {
    json out = json::array();
    for (const auto &m : samples) {
        out.push_back(m.bits);
    }
    return out;
}

json record(const std::string &check, json params, json value, double tolerance, bool pass) {
    return {{"check", check}, {"params", std::move(params)}, {"value", std::move(value)},
            {"tolerance", tolerance}, {"pass", pass}};
}

}  // namespace

int cmd_compile(const std::string &circuit_path, const std::string &out_path, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Circuit circuit = parse_circuit(read_file(circuit_path));
        if (circuit.width < 2 || circuit.width % 2 != 0) {
            throw CompileError("circuit rows must be a positive even number, got " + std::to_string(circuit.width));
        }
        int s = circuit.width / 2;
        CompiledProgram compiled = compile(circuit, s);
        ProgramFile file;
        file.s = s;
        file.r = compiled.r;
        file.columns = layers_to_program(compiled.layers);
        write_text(out_path, program_to_json(file).dump(2) + "\n", out);
        return int{kExitOk};
    });
}

int cmd_run(const std::string &program_path, const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (config.backend != "dense" && config.backend != "factored") {
            throw ContractError("unknown backend '" + config.backend + "'");
        }
        auto [spec, assign] = load_program(program_path, config.topology);
        uint64_t steps = config.steps.value_or(static_cast<uint64_t>(spec.r()));
        std::vector<Complex> reg;
        int column = 0;
        std::vector<MeasureResult> samples;
        json meta = {{"backend", config.backend},
                     {"topology", std::string(topology_name(spec.topology()))},
                     {"s", spec.s()},
                     {"r", spec.r()},
                     {"t", steps},
                     {"seed", config.seed},
                     {"sampler", kSamplerName}};

        if (config.backend == "factored") {
            FactoredState state(spec, std::move(assign));
            state.run(steps);
            column = state.data_column(0);
            reg = output_register(state, config.steps.has_value());
            canonicalize_phase(reg);
            if (config.samples > 0) {
                samples = sample_register(reg, config.seed, config.samples);
            }
            if (!config.dump_state.empty()) {
                std::ostringstream dump;
                write_register_dump(dump, state);
                write_text(config.dump_state, dump.str(), out);
            }
        } else {
            check_dense_budget(spec);
            StateVector state = init_state(assign, spec);
            state.run(steps);
            auto cols = static_cast<uint64_t>(spec.columns());
            if (spec.topology() == Topology::planar && steps >= cols) {
                throw ContractError("on a planar sheet register 0 can only be located for t < 2r");
            }
            column = static_cast<int>(steps % cols);
            DensityMatrix rho = column_marginal(state, column);
            reg = rho.leading_eigenvector();
            canonicalize_phase(reg);
            meta["purity"] = rho.purity();
            if (config.samples > 0) {
                samples = sample_column(state, column, config.seed, config.samples);
            }
            if (!config.dump_state.empty()) {
                std::ostringstream dump;
                write_state_dump(dump, state);
                write_text(config.dump_state, dump.str(), out);
            }
        }
        meta["column"] = column;
        meta["register"] = amplitudes_to_json(reg);
        if (config.samples > 0) {
            meta["samples"] = samples_to_json(samples);
        }
        write_text(config.out, meta.dump(2) + "\n", out);
        return int{kExitOk};
    });
}

int cmd_verify(const std::string &program_path, const VerifyConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto [spec, assign] = load_program(program_path, config.topology);
        check_dense_budget(spec);
        json report = json::array();
        json params = {{"s", spec.s()}, {"r", spec.r()}, {"topology", std::string(topology_name(spec.topology()))}};
        StateVector dense = init_state(assign, spec);
        if (config.inject_fault) {
            dense.flip_site(site_index(*config.inject_fault, 0, spec));
            params["inject_fault"] = *config.inject_fault;
        }
        std::vector<std::string> failures;

        if (spec.topology() == Topology::torus) {
            FactoredState factored(spec, assign);
            uint64_t horizon = 2 * static_cast<uint64_t>(spec.r());
            size_t occupancy_failures = 0;
            double min_fidelity = 1;
            size_t max_rank = 1;
            for (uint64_t t = 0; t <= horizon; t++) {
                auto occ = check_occupancy(dense, assign.programs);
                if (!occ.pass) {
                    if (occupancy_failures == 0) {
                        failures.push_back("occupancy at t=" + std::to_string(t) + ": " + occ.failure);
                    }
                    occupancy_failures++;
                }
                auto expected = to_dense(factored);
                min_fidelity =
                    std::min(min_fidelity, fidelity_up_to_phase(dense.amplitudes(), expected.amplitudes()).fidelity);
                for (int c = 0; c + 1 < spec.columns(); c++) {
                    max_rank = std::max(max_rank, schmidt_rank_at_cut(dense, c).rank);
                }
                if (t < horizon) {
                    dense.step();
                    factored.step();
                }
            }
            json p = params;
            p["steps"] = horizon;
            report.push_back(record("occupancy", p, occupancy_failures, kEvolutionTolerance, occupancy_failures == 0));
            report.push_back(
                record("cross_backend", p, min_fidelity, kEvolutionTolerance, min_fidelity >= 1 - kEvolutionTolerance));
            report.push_back(record("schmidt_rank", p, max_rank, kSchmidtThreshold, max_rank == 1));
        } else {
            auto r = static_cast<uint64_t>(spec.r());
            size_t front_rank = 1;
            size_t decreases = 0;
            for (uint64_t t = 0; t <= r; t++) {
                auto profile = wavefront_profile(dense);
                auto front = static_cast<int64_t>(spec.columns()) - 1 - static_cast<int64_t>(t);
                for (size_t c = 0; c < profile.size(); c++) {
                    // The cut after column c lies strictly left of column `front` when c < front.
                    if (static_cast<int64_t>(c) < front) {
                        front_rank = std::max(front_rank, profile[c]);
                    }
                    if (c > 0 && profile[c] < profile[c - 1]) {
                        decreases++;
                    }
                }
                if (t < r) {
                    dense.step();
                }
            }
            auto rho = column_marginal(dense, spec.r());
            double purity = rho.purity();
            auto predicted = open_boundary_register(assign.data.front(), assign.programs, spec.s(), r);
            double network_fidelity = state_fidelity(rho, predicted);
            json p = params;
            p["steps"] = r;
            report.push_back(record("wavefront", p, front_rank, kSchmidtThreshold, front_rank == 1));
            report.push_back(record("wavefront_monotone", p, decreases, 0.0, decreases == 0));
            report.push_back(record("d0_purity", p, purity, 1e-9, purity >= 1 - 1e-9));
            report.push_back(record("d0_open_network", p, network_fidelity, 1e-9, network_fidelity >= 1 - 1e-9));
        }

        bool all = true;
        for (const auto &rec : report) {
            if (!rec.at("pass").get<bool>()) {
                all = false;
                err << "check failed: " << rec.at("check").get<std::string>() << '\n';
            }
        }
        for (const auto &f : failures) {
            err << "  " << f << '\n';
        }
        write_text(config.out, report.dump(2) + "\n", out);
        return all ? int{kExitOk} : int{kExitVerificationFailed};
    });
}

int cmd_tau(bool dump, std::ostream &out) {
    const SmallUnitary &u = tau();
    if (dump) {
        out << format_matrix(u);
        return kExitOk;
    }
    double err = SmallUnitary::distance(u.adjoint() * u, SmallUnitary::identity(16));
    auto report = tau_consistency_check(u);
    out << "tau: 16x16, max |tau^dag tau - I| = " << err << ", program-step consistency "
        << (report.ok ? "ok" : report.detail) << '\n';
    return report.ok ? kExitOk : kExitVerificationFailed;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Margolus-partitioned quantum cellular automaton: compiler, simulators, checks", "qca"};
    app.require_subcommand(1);

    std::string circuit_path;
    std::string compile_out;
    auto *compile_cmd = app.add_subcommand("compile", "Compile a circuit file into a program file");
    compile_cmd->add_option("circuit", circuit_path, "Circuit JSON")->required();
    compile_cmd->add_option("--out", compile_out, "Output path (default stdout)");

    std::string run_program;
    RunConfig run_config;
    std::string run_topology = "torus";
    std::string run_steps = "auto";
    auto *run_cmd = app.add_subcommand("run", "Run a program and read out register 0");
    run_cmd->add_option("program", run_program, "Program JSON")->required();
    run_cmd->add_option("--backend", run_config.backend, "dense | factored")->capture_default_str();
    run_cmd->add_option("--topology", run_topology, "torus | planar")->capture_default_str();
    run_cmd->add_option("--steps", run_steps, "Number of steps or 'auto' (= r)")->capture_default_str();
    run_cmd->add_option("--seed", run_config.seed, "Sampler seed")->capture_default_str();
    run_cmd->add_option("--samples", run_config.samples, "Number of computational-basis samples");
    run_cmd->add_option("--out", run_config.out, "Output path (default stdout)");
    run_cmd->add_option("--dump-state", run_config.dump_state, "Write the amplitude dump here");

    std::string verify_program;
    VerifyConfig verify_config;
    std::string verify_topology = "torus";
    int fault_column = -1;
    auto *verify_cmd = app.add_subcommand("verify", "Run the structural checks on a program");
    verify_cmd->add_option("program", verify_program, "Program JSON")->required();
    verify_cmd->add_option("--topology", verify_topology, "torus | planar")->capture_default_str();
    verify_cmd->add_option("--out", verify_config.out, "Report path (default stdout)");
    auto *fault_opt =
        verify_cmd->add_option("--inject-fault", fault_column, "Flip row 0 of this column in the dense run");

    bool tau_dump = false;
    auto *tau_cmd = app.add_subcommand("tau", "Print the cell transition unitary");
    tau_cmd->add_flag("--dump", tau_dump, "Print the 16x16 matrix");

    std::vector<const char *> argv{"qca"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitParse;
    }

    if (compile_cmd->parsed()) {
        return cmd_compile(circuit_path, compile_out, out, err);
    }
    if (tau_cmd->parsed()) {
        return cmd_tau(tau_dump, out);
    }
    if (run_cmd->parsed()) {
        return guarded(err, [&] {
            run_config.topology = parse_topology(run_topology);
            if (run_steps != "auto") {
                size_t used = 0;
                unsigned long long n = 0;
                try {
                    n = std::stoull(run_steps, &used);
                } catch (const std::exception &) {
                    used = 0;
                }
                if (used != run_steps.size() || run_steps.empty() || run_steps[0] == '-') {
                    throw ParseError("--steps expects a count or 'auto'");
                }
                run_config.steps = n;
            }
            return cmd_run(run_program, run_config, out, err);
        });
    }
    return guarded(err, [&] {
        verify_config.topology = parse_topology(verify_topology);
        if (fault_opt->count() > 0) {
            verify_config.inject_fault = fault_column;
        }
        return cmd_verify(verify_program, verify_config, out, err);
    });
}

}  // namespace qca::cli
