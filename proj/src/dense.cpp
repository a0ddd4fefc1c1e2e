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

#include "magnon/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <utility>

#include "magnon/density_matrix.hpp"
#include "magnon/errors.hpp"
#include "magnon/teleport.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

namespace {

using std::complex;

// Operator set (sigma0, sigma1, i*sigma2, sigma3): the antisymmetric member
// carries a global phase i, which cannot affect distinguishability.
Eigen::Matrix2cd encoding_operator(const PauliLabel& label) {
    Eigen::Matrix2cd m = label.matrix();
    if (label.index() == 2) {
        m *= complex<double>(0.0, 1.0);
    }
    return m;
}

StateVector raw_encode(int i, const StateVector& channel) {
    const PauliPair& pair = pauli_pair_table()[i - 1];
    StateVector encoded = apply_gate(channel, encoding_operator(pair.m), {0});
    return apply_gate(encoded, encoding_operator(pair.n), {2});
}

}  // namespace

StateVector encode(int i, const MagnonAmplitudes& w) {
    if (i < 1 || i > 16) {
        throw IndexError("encoding index must lie in 1..16");
    }
    const ConstraintFamily family{FamilyTag::kDenseCoding,
                                  QisInterpretation::kEqualOnly};
    const ConstraintReport check = check_constraints(w, family);
    if (!check.pass) {
        throw ChannelError(
            "channel amplitudes fail the dense-coding constraint family", check);
    }
    return raw_encode(i, build_4_2(w));
}

double distinguishability(const MagnonAmplitudes& w) {
    const StateVector channel = build_4_2(w);
    std::vector<StateVector> encodings;
    encodings.reserve(16);
    for (int i = 1; i <= 16; ++i) {
        encodings.push_back(raw_encode(i, channel));
    }
    double worst = 0.0;
    for (int a = 0; a < 16; ++a) {
        for (int b = a + 1; b < 16; ++b) {
            worst = std::max(worst,
                             std::abs(inner_product(encodings[a], encodings[b])));
        }
    }
    return worst;
}

double holevo_capacity(const MagnonAmplitudes& w,
                       const std::vector<int>& alice_qubits) {
    if (alice_qubits.empty()) {
        throw ArgumentError("the sender must hold at least one channel qubit");
    }
    std::vector<bool> is_alice(4, false);
    for (int q : alice_qubits) {
        if (q < 1 || q > 4) {
            throw ArgumentError("channel qubit labels are 1..4");
        }
        if (is_alice[q - 1]) {
            throw ArgumentError("duplicate channel qubit label");
        }
        is_alice[q - 1] = true;
    }
    std::vector<int> bob_keep;  // zero-based register indices
    for (int q = 0; q < 4; ++q) {
        if (!is_alice[q]) {
            bob_keep.push_back(q);
        }
    }
    if (bob_keep.empty()) {
        throw ArgumentError(
            "the sender cannot hold every channel qubit; the receiver's share "
            "would be empty");
    }
    const DensityMatrix full = DensityMatrix::from_state(build_4_2(w));
    const DensityMatrix receiver = partial_trace(full, bob_keep);
    const double log_d_alice = static_cast<double>(alice_qubits.size());
    return log_d_alice + von_neumann_entropy(receiver) -
           von_neumann_entropy(full);
}

GateList generation_circuit() {
    return GateList{
        {"h", {2}, {}},      {"h", {3}, {}},      {"cx", {4}, {3}},
        {"cx", {4}, {2}},    {"cx", {1}, {4}},    {"cx", {0}, {4}},
        {"ccx", {0}, {3, 4}}, {"ccx", {1}, {2, 4}}, {"cx", {4}, {0}},
        {"cx", {4}, {1}},    {"x", {4}, {}},      {"cx", {4}, {2}},
        {"cx", {4}, {1}},    {"cx", {3}, {4}},    {"cx", {0}, {4}},
        {"ch", {3}, {4}},    {"cx", {1}, {4}},    {"ccx", {1}, {3, 4}},
        {"cx", {4}, {2}},    {"cx", {4}, {0}},
    };
}

GateList generation_circuit_corrected() {
    GateList ops = generation_circuit();
    ops.push_back({"ccx", {4}, {2, 3}});
    return ops;
}

nlohmann::json GenerationResult::to_json() const {
    nlohmann::json amplitude_array = nlohmann::json::array();
    for (std::size_t idx = 0; idx < register_state.dim(); ++idx) {
        const complex<double> amp = register_state.amplitude(idx);
        amplitude_array.push_back({amp.real(), amp.imag()});
    }
    nlohmann::json j{
        {"register_amplitudes", amplitude_array},
        {"ancilla_zero_probability", ancilla_zero_probability},
        {"ancilla_ok", ancilla_ok},
        {"two_magnon_ok", two_magnon_ok},
        {"discrepancy", discrepancy},
        {"discrepancy_detail", discrepancy_detail},
    };
    if (amplitudes.has_value()) {
        j["amplitudes"] = amplitudes_to_json(*amplitudes);
    }
    if (constraint_check.has_value()) {
        j["constraint_check"] = constraint_check->to_json();
    }
    return j;
}

GenerationResult run_generation_circuit(const GateList& ops) {
    const StateVector initial = StateVector::computational_basis(5, 0);
    const StateVector final_state = run_gate_list(initial, ops);

    GenerationResult result;
    // Qubit 4 (the ancilla) is the least significant index bit.
    std::vector<complex<double>> register_amps(16, complex<double>(0.0, 0.0));
    double p_zero = 0.0;
    for (int r = 0; r < 16; ++r) {
        const complex<double> amp = final_state.amplitude(2 * r);
        register_amps[r] = amp;
        p_zero += std::norm(amp);
    }
    result.ancilla_zero_probability = p_zero;
    result.ancilla_ok = std::abs(p_zero - 1.0) <= kDefaultTolerance;

    std::vector<std::string> problems;
    if (!result.ancilla_ok) {
        problems.push_back(
            "ancilla stays entangled with the register: P(ancilla=0) = " +
            std::to_string(p_zero));
    }
    if (p_zero > 1e-15) {
        const double scale = 1.0 / std::sqrt(p_zero);
        for (auto& amp : register_amps) {
            amp *= scale;
        }
        result.register_state = StateVector(4, register_amps);

        double leak = 0.0;
        for (int r = 0; r < 16; ++r) {
            if (std::popcount(static_cast<unsigned>(r)) != 2) {
                leak = std::max(leak, std::abs(register_amps[r]));
            }
        }
        result.two_magnon_ok = leak <= kDefaultTolerance;
        if (!result.two_magnon_ok) {
            problems.push_back(
                "register weight leaks outside the two-excitation sector");
        } else {
            MagnonAmplitudes amps;
            amps.w001 = register_amps[kIndexW001];
            amps.w010 = register_amps[kIndexW010];
            amps.w100 = register_amps[kIndexW100];
            amps.w110 = register_amps[kIndexW110];
            amps.w101 = register_amps[kIndexW101];
            amps.w011 = register_amps[kIndexW011];
            result.amplitudes = amps;
            const ConstraintFamily family{FamilyTag::kDenseCoding,
                                          QisInterpretation::kEqualOnly};
            result.constraint_check = check_constraints(amps, family);
            if (!result.constraint_check->pass) {
                std::string names;
                for (const auto& name : result.constraint_check->failing_names()) {
                    if (!names.empty()) {
                        names += ", ";
                    }
                    names += name;
                }
                problems.push_back(
                    "projected amplitudes fail the dense-coding family: " + names);
            }
        }
    } else {
        problems.push_back("ancilla never returns to |0>; nothing to project");
    }

    result.discrepancy = !problems.empty();
    for (std::size_t k = 0; k < problems.size(); ++k) {
        if (k > 0) {
            result.discrepancy_detail += "; ";
        }
        result.discrepancy_detail += problems[k];
    }
    return result;
}

}  // namespace magnon
