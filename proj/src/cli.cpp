// Copyright 2026 The magnon-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magnon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "magnon/amplitudes.hpp"
#include "magnon/constraints.hpp"
#include "magnon/dense.hpp"
#include "magnon/errors.hpp"
#include "magnon/heisenberg.hpp"
#include "magnon/qis.hpp"
#include "magnon/teleport.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

namespace {

using nlohmann::json;

// Input problems that are the caller's fault; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string output_path;
    bool reproducible = false;
    double tolerance = kDefaultTolerance;
    double fidelity_tolerance = kFidelityTolerance;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string interpretation = "equal-only";
    std::string amplitudes_spec;
    bool sample = false;
    bool require_nondegenerate = false;
    std::string family;
    bool redistributed = false;
    std::string convention = "one-based";
    std::string circuit;
    std::vector<int> alice_qubits = {1, 3};
    double j = 1.0;
    double delta = 1.0;
    double time = 0.0;
    bool time_given = false;
    int seed_count = 8;
    std::uint64_t base_seed = 1000;
};

QisInterpretation parse_interpretation(const std::string& name) {
    if (name == "both-zero") {
        return QisInterpretation::kBothZero;
    }
    if (name == "equal-only") {
        return QisInterpretation::kEqualOnly;
    }
    throw UsageError("unknown interpretation: " + name);
}

FamilyTag parse_family(const std::string& name) {
    if (name == "teleport") {
        return FamilyTag::kTeleport;
    }
    if (name == "dense" || name == "dense-coding") {
        return FamilyTag::kDenseCoding;
    }
    if (name == "qis") {
        return FamilyTag::kQis;
    }
    throw UsageError("unknown constraint family: " + name);
}

// Exactly one amplitude source: --sample or --amplitudes.
MagnonAmplitudes resolve_channel(const Options& opts, FamilyTag family) {
    const bool has_inline = !opts.amplitudes_spec.empty();
    if (opts.sample == has_inline) {
        throw UsageError(
            "provide exactly one amplitude source: --sample or --amplitudes "
            "<inline JSON | uniform | @file | @->");
    }
    if (opts.sample) {
        const ConstraintFamily constraint{family,
                                          parse_interpretation(opts.interpretation)};
        return sample_amplitudes(constraint, opts.seed, opts.require_nondegenerate);
    }
    if (opts.amplitudes_spec == "uniform") {
        return MagnonAmplitudes::uniform();
    }
    std::string text = opts.amplitudes_spec;
    if (!text.empty() && text[0] == '@') {
        const std::string source = text.substr(1);
        std::ostringstream content;
        if (source == "-") {
            content << std::cin.rdbuf();
        } else {
            std::ifstream file(source);
            if (!file) {
                throw UsageError("cannot read amplitude file: " + source);
            }
            content << file.rdbuf();
        }
        text = content.str();
    }
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& error) {
        throw UsageError(std::string("malformed amplitude JSON: ") + error.what());
    }
    try {
        return amplitudes_from_json(parsed);
    } catch (const Error& error) {
        throw UsageError(std::string("invalid amplitudes: ") + error.what());
    }
}

std::string timestamp_utc() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ",
                  std::gmtime(&now));
    return buffer;
}

json make_envelope(const Options& opts,
                   const std::string& subcommand,
                   bool pass,
                   const json& payload) {
    json j{
        {"schema_version", 1},
        {"subcommand", subcommand},
        {"interpretation", opts.interpretation},
        {"tolerance", opts.tolerance},
        {"fidelity_tolerance", opts.fidelity_tolerance},
        {"pass", pass},
        {"config",
         json{{"seed", opts.seed},
              {"trials", opts.trials},
              {"format", opts.format},
              {"amplitude_source",
               opts.sample ? std::string("sampled") : opts.amplitudes_spec}}},
    };
    if (!opts.reproducible) {
        j["generated_at"] = timestamp_utc();
    }
    j.update(payload);
    // Subcommand payloads may carry their own constraint-level "pass"; the
    // envelope's overall verdict wins.
    j["pass"] = pass;
    return j;
}

void render_residuals(const json& report, std::ostream& out) {
    if (!report.contains("residuals") || !report["residuals"].is_object()) {
        return;
    }
    const double tolerance = report.value("tolerance", kDefaultTolerance);
    for (const auto& [name, value] : report["residuals"].items()) {
        const double v = value.get<double>();
        out << "  residual " << name << " = " << v
            << (v > tolerance ? "  [FAIL]" : "  [ok]") << "\n";
    }
    if (report.contains("failing") && report["failing"].is_array() &&
        !report["failing"].empty()) {
        out << "  failing relations:";
        for (const auto& name : report["failing"]) {
            out << " " << name.get<std::string>();
        }
        out << "\n";
    }
}

void render_text(const json& report, std::ostream& out) {
    out << "subcommand: " << report["subcommand"].get<std::string>() << "\n";
    out << "interpretation: " << report["interpretation"].get<std::string>()
        << "\n";
    render_residuals(report, out);
    static const char* scalar_keys[] = {
        "family",          "min_fidelity",     "max_probability_defect",
        "total_probability", "distinguishability", "holevo_capacity",
        "vacuous_count",   "any_table_discrepancy", "trials",
        "verdict",         "one_magnon_weight", "condition_residual",
        "t_star",          "error",            "discrepancy",
        "discrepancy_detail", "ancilla_zero_probability",
    };
    for (const char* key : scalar_keys) {
        if (report.contains(key)) {
            out << key << ": " << report[key].dump() << "\n";
        }
    }
    if (report.contains("branches") && report["branches"].is_array()) {
        out << "branches: " << report["branches"].size()
            << " (use --format json for detail)\n";
    }
    out << "pass: " << (report["pass"].get<bool>() ? "true" : "false") << "\n";
}

int emit(const json& report, const Options& opts, std::ostream& out) {
    std::ostringstream rendered;
    if (opts.format == "text") {
        render_text(report, rendered);
    } else {
        rendered << report.dump(2) << "\n";
    }
    if (!opts.output_path.empty()) {
        std::ofstream file(opts.output_path);
        if (!file) {
            throw UsageError("cannot write output file: " + opts.output_path);
        }
        file << rendered.str();
    } else {
        out << rendered.str();
    }
    return report["pass"].get<bool>() ? 0 : 1;
}

// --- subcommand payload builders ------------------------------------------

json run_check(const Options& opts, bool& pass) {
    const FamilyTag family = parse_family(opts.family);
    const ConstraintFamily constraint{family,
                                      parse_interpretation(opts.interpretation)};
    const MagnonAmplitudes w = resolve_channel(opts, family);
    const ConstraintReport report =
        check_constraints(w, constraint, opts.tolerance);
    pass = report.pass;
    json payload = report.to_json();
    payload["family"] = family_name(family);
    payload["amplitudes"] = amplitudes_to_json(w);
    return payload;
}

json run_sample(const Options& opts, bool& pass) {
    const FamilyTag family = parse_family(opts.family);
    const ConstraintFamily constraint{family,
                                      parse_interpretation(opts.interpretation)};
    const MagnonAmplitudes w =
        sample_amplitudes(constraint, opts.seed, opts.require_nondegenerate);
    const ConstraintReport report =
        check_constraints(w, constraint, opts.tolerance);
    pass = report.pass;
    json payload = report.to_json();
    payload["family"] = family_name(family);
    payload["amplitudes"] = amplitudes_to_json(w);
    return payload;
}

json run_teleport_cli(const Options& opts, bool& pass) {
    const MagnonAmplitudes w = resolve_channel(opts, FamilyTag::kTeleport);
    const WrapConvention convention = (opts.convention == "literal")
                                          ? WrapConvention::kLiteral
                                          : WrapConvention::kOneBased;
    double min_fidelity = 1.0;
    double max_defect = 0.0;
    json first_branches;
    for (int t = 0; t < opts.trials; ++t) {
        const TwoQubitSecret secret =
            TwoQubitSecret::random(opts.seed + 10000 + static_cast<std::uint64_t>(t));
        const TeleportReport report =
            opts.redistributed ? run_teleport_redistributed(secret, w)
                               : run_teleport(secret, w, convention);
        min_fidelity = std::min(min_fidelity, report.min_fidelity);
        max_defect = std::max(max_defect, report.max_probability_defect);
        if (t == 0) {
            first_branches = report.to_json()["branches"];
        }
    }
    pass = min_fidelity >= 1.0 - opts.fidelity_tolerance &&
           max_defect <= opts.fidelity_tolerance;
    return json{
        {"family", "teleport"},
        {"amplitudes", amplitudes_to_json(w)},
        {"trials", opts.trials},
        {"redistributed", opts.redistributed},
        {"convention", opts.convention},
        {"min_fidelity", min_fidelity},
        {"max_probability_defect", max_defect},
        {"branches", first_branches},
    };
}

json run_dense_cli(const Options& opts, bool& pass) {
    const MagnonAmplitudes w = resolve_channel(opts, FamilyTag::kDenseCoding);
    const ConstraintFamily constraint{FamilyTag::kDenseCoding,
                                      parse_interpretation(opts.interpretation)};
    const ConstraintReport report =
        check_constraints(w, constraint, opts.tolerance);
    const double separation = distinguishability(w);
    const double capacity = holevo_capacity(w, opts.alice_qubits);
    pass = report.pass && separation <= opts.tolerance;
    json payload = report.to_json();
    payload["family"] = family_name(FamilyTag::kDenseCoding);
    payload["amplitudes"] = amplitudes_to_json(w);
    payload["distinguishability"] = separation;
    payload["holevo_capacity"] = capacity;
    payload["alice_qubits"] = opts.alice_qubits;
    if (!opts.circuit.empty()) {
        const GateList ops = (opts.circuit == "corrected")
                                 ? generation_circuit_corrected()
                                 : generation_circuit();
        const GenerationResult result = run_generation_circuit(ops);
        json circuit_json = result.to_json();
        circuit_json["variant"] = opts.circuit;
        circuit_json["gates"] = gate_list_to_json(ops);
        payload["circuit"] = circuit_json;
        pass = pass && !result.discrepancy;
        payload["discrepancy"] = result.discrepancy;
        if (result.discrepancy) {
            payload["discrepancy_detail"] = result.discrepancy_detail;
        }
    }
    return payload;
}

json run_qis_cli(const Options& opts, bool& pass) {
    const MagnonAmplitudes w = resolve_channel(opts, FamilyTag::kQis);
    const QisInterpretation interpretation =
        parse_interpretation(opts.interpretation);
    double min_fidelity = 1.0;
    double worst_total = 1.0;
    bool any_discrepancy = false;
    int vacuous_count = 0;
    json first_branches;
    for (int t = 0; t < opts.trials; ++t) {
        const EntangledSecret secret = EntangledSecret::random(
            opts.seed + 20000 + static_cast<std::uint64_t>(t));
        const QisReport report = run_qis(secret, w, interpretation);
        min_fidelity = std::min(min_fidelity, report.min_fidelity);
        if (std::abs(report.total_probability - 1.0) >
            std::abs(worst_total - 1.0)) {
            worst_total = report.total_probability;
        }
        any_discrepancy = any_discrepancy || report.any_table_discrepancy;
        if (t == 0) {
            vacuous_count = report.vacuous_count;
            first_branches = report.to_json()["branches"];
        }
    }
    pass = min_fidelity >= 1.0 - opts.fidelity_tolerance &&
           std::abs(worst_total - 1.0) <= opts.fidelity_tolerance;
    return json{
        {"family", "qis"},
        {"amplitudes", amplitudes_to_json(w)},
        {"trials", opts.trials},
        {"min_fidelity", min_fidelity},
        {"total_probability", worst_total},
        {"vacuous_count", vacuous_count},
        {"any_table_discrepancy", any_discrepancy},
        {"branches", first_branches},
    };
}

json run_evolve_cli(const Options& opts, bool& pass) {
    if (opts.time_given) {
        HeisenbergParams params{opts.j, opts.delta, opts.time};
        const StateVector start = StateVector::computational_basis(3, 0b100);
        const StateVector evolved = evolve(start, params);
        json amps = json::array();
        for (int idx = 0; idx < 8; ++idx) {
            const std::complex<double> amp = evolved.amplitude(idx);
            amps.push_back({amp.real(), amp.imag()});
        }
        pass = std::abs(evolved.norm_squared() - 1.0) <= opts.tolerance;
        return json{{"j", opts.j},
                    {"delta", opts.delta},
                    {"time", opts.time},
                    {"initial_state", "100"},
                    {"amplitudes", amps},
                    {"norm_squared", evolved.norm_squared()}};
    }
    const WGenerationReport report = w_generation_check(opts.j);
    pass = std::abs(report.one_magnon_weight - 1.0) <= opts.tolerance;
    json payload = report.to_json();
    payload["j"] = opts.j;
    return payload;
}

json run_resolve_cli(const Options& opts, bool& pass) {
    const InterpretationResolution resolution =
        resolve_interpretation(opts.seed_count, opts.base_seed);
    pass = true;
    json payload = resolution.to_json();
    payload["seed_count"] = opts.seed_count;
    payload["base_seed"] = opts.base_seed;
    return payload;
}

void add_common_options(CLI::App* sub, Options& opts) {
    sub->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", opts.output_path, "Write the report to a file");
    sub->add_flag("--reproducible", opts.reproducible,
                  "Omit the generated_at timestamp");
    sub->add_option("--tolerance", opts.tolerance,
                    "Constraint/orthogonality tolerance");
    sub->add_option("--fidelity-tolerance", opts.fidelity_tolerance,
                    "Fidelity and probability tolerance");
    sub->add_option("--seed", opts.seed, "Random seed");
    sub->add_option("--interpretation", opts.interpretation,
                    "Splitting-family reading")
        ->check(CLI::IsMember({"equal-only", "both-zero"}));
}

void add_channel_options(CLI::App* sub, Options& opts) {
    sub->add_option("--amplitudes", opts.amplitudes_spec,
                    "Channel amplitudes: inline JSON, 'uniform', @file, or @-");
    sub->add_flag("--sample", opts.sample,
                  "Sample channel amplitudes from the family manifold");
}

}  // namespace

int run_cli(const std::vector<std::string>& args,
            std::ostream& out,
            std::ostream& err) {
    Options opts;
    CLI::App app{"Exact simulator for a four-qubit two-magnon communication channel"};
    app.require_subcommand(1);

    CLI::App* check_cmd =
        app.add_subcommand("check", "Evaluate a constraint family on amplitudes");
    add_common_options(check_cmd, opts);
    add_channel_options(check_cmd, opts);
    check_cmd->add_option("--family", opts.family, "Constraint family")
        ->required()
        ->check(CLI::IsMember({"teleport", "dense", "dense-coding", "qis"}));

    CLI::App* sample_cmd =
        app.add_subcommand("sample", "Draw amplitudes from a family manifold");
    add_common_options(sample_cmd, opts);
    sample_cmd->add_option("--family", opts.family, "Constraint family")
        ->required()
        ->check(CLI::IsMember({"teleport", "dense", "dense-coding", "qis"}));
    sample_cmd->add_flag("--require-nondegenerate", opts.require_nondegenerate,
                         "Fail if only degenerate channels exist");

    CLI::App* teleport_cmd =
        app.add_subcommand("teleport", "Run the two-qubit teleportation protocol");
    add_common_options(teleport_cmd, opts);
    add_channel_options(teleport_cmd, opts);
    teleport_cmd->add_option("--trials", opts.trials, "Random secrets to test");
    teleport_cmd->add_flag("--redistributed", opts.redistributed,
                           "Use the redistributed qubit split");
    teleport_cmd->add_option("--convention", opts.convention,
                             "Correction-table wrap convention")
        ->check(CLI::IsMember({"one-based", "literal"}));

    CLI::App* dense_cmd =
        app.add_subcommand("dense", "Analyze the sixteen-message dense coding");
    add_common_options(dense_cmd, opts);
    add_channel_options(dense_cmd, opts);
    dense_cmd->add_option("--alice-qubits", opts.alice_qubits,
                          "Sender's channel qubits (1-based)")
        ->delimiter(',');
    dense_cmd->add_option("--circuit", opts.circuit,
                          "Also run the generation circuit")
        ->check(CLI::IsMember({"as-drawn", "corrected"}));

    CLI::App* qis_cmd =
        app.add_subcommand("qis", "Run the information-splitting protocol");
    add_common_options(qis_cmd, opts);
    add_channel_options(qis_cmd, opts);
    qis_cmd->add_option("--trials", opts.trials, "Random secrets to test");

    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "Evolve |100> under the three-spin exchange ring");
    add_common_options(evolve_cmd, opts);
    evolve_cmd->add_option("--j", opts.j, "Exchange coupling");
    evolve_cmd->add_option("--delta", opts.delta, "Third-bond anisotropy");
    CLI::Option* time_option =
        evolve_cmd->add_option("--time", opts.time, "Evolution time");

    CLI::App* resolve_cmd = app.add_subcommand(
        "resolve-eq13", "Empirically resolve the splitting-family reading");
    add_common_options(resolve_cmd, opts);
    resolve_cmd->add_option("--seed-count", opts.seed_count,
                            "Channels per reading");
    resolve_cmd->add_option("--base-seed", opts.base_seed, "First seed");

    std::vector<const char*> argv;
    argv.push_back("magnon");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "usage error: " << error.what() << "\n";
        return 2;
    }
    opts.time_given = time_option->count() > 0;

    std::string subcommand;
    json payload;
    bool pass = false;
    try {
        if (check_cmd->parsed()) {
            subcommand = "check";
            payload = run_check(opts, pass);
        } else if (sample_cmd->parsed()) {
            subcommand = "sample";
            payload = run_sample(opts, pass);
        } else if (teleport_cmd->parsed()) {
            subcommand = "teleport";
            payload = run_teleport_cli(opts, pass);
        } else if (dense_cmd->parsed()) {
            subcommand = "dense";
            payload = run_dense_cli(opts, pass);
        } else if (qis_cmd->parsed()) {
            subcommand = "qis";
            payload = run_qis_cli(opts, pass);
        } else if (evolve_cmd->parsed()) {
            subcommand = "evolve";
            payload = run_evolve_cli(opts, pass);
        } else if (resolve_cmd->parsed()) {
            subcommand = "resolve-eq13";
            payload = run_resolve_cli(opts, pass);
        } else {
            err << "usage error: no subcommand\n";
            return 2;
        }
    } catch (const UsageError& error) {
        err << "usage error: " << error.what() << "\n";
        return 2;
    } catch (const ArgumentError& error) {
        err << "input error: " << error.what() << "\n";
        return 2;
    } catch (const NormalizationError& error) {
        err << "input error: " << error.what() << "\n";
        return 2;
    } catch (const ChannelError& error) {
        json failure = error.report().to_json();
        failure["error"] = error.what();
        const json report = make_envelope(opts, subcommand, false, failure);
        emit(report, opts, out);
        return 1;
    } catch (const Error& error) {
        json failure{{"error", error.what()}};
        const json report = make_envelope(opts, subcommand, false, failure);
        emit(report, opts, out);
        return 1;
    }
    const json report = make_envelope(opts, subcommand, pass, payload);
    return emit(report, opts, out);
}

}  // namespace magnon
