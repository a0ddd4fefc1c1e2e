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

#ifndef MAGNON_DENSE_HPP
#define MAGNON_DENSE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnon/amplitudes.hpp"
#include "magnon/constraints.hpp"
#include "magnon/gates.hpp"
#include "magnon/state_vector.hpp"

namespace magnon {

// Sender-side encoding i in 1..16: applies M_i to channel qubit 1 and N_i to
// channel qubit 3 (code qubits 0 and 2), drawn from the operator set
// (sigma0, sigma1, i*sigma2, sigma3). Throws IndexError for i outside 1..16
// and ChannelError when w fails the dense-coding family.
StateVector encode(int i, const MagnonAmplitudes& w);

// Max absolute off-diagonal Gram entry over all sixteen encodings. No
// constraint gate: this is the diagnostic the constraint family is supposed
// to guarantee is zero.
double distinguishability(const MagnonAmplitudes& w);

// Holevo quantity log2(d_A) + S(rho_B) - S(rho_AB) in bits for the pure
// channel state, with the sender holding the listed channel qubits (1-based,
// default {1, 3}). Throws ArgumentError if the partition is empty, covers
// every qubit, or repeats/overflows indices.
double holevo_capacity(const MagnonAmplitudes& w,
                       const std::vector<int>& alice_qubits = {1, 3});

// Five-qubit generation circuit transcribed from the published diagram:
// register qubits 0..3 plus ancilla qubit 4, all starting in |0>.
GateList generation_circuit();

// Same circuit with one extra doubly-controlled X appended, which returns
// the ancilla to |0> on every branch. Kept separate so the transcription
// can be validated as drawn and the discrepancy reported rather than
// silently patched.
GateList generation_circuit_corrected();

struct GenerationResult {
    // Register state after projecting the ancilla onto |0> (renormalized).
    StateVector register_state = StateVector::computational_basis(4, 0);
    double ancilla_zero_probability = 0.0;
    bool ancilla_ok = false;     // ancilla returned to |0> on every branch
    bool two_magnon_ok = false;  // register weight lives on two-excitation states
    // Extracted two-excitation amplitudes, present when two_magnon_ok.
    std::optional<MagnonAmplitudes> amplitudes;
    // Dense-family check of those amplitudes, present when two_magnon_ok.
    std::optional<ConstraintReport> constraint_check;
    bool discrepancy = false;
    std::string discrepancy_detail;

    nlohmann::json to_json() const;
};

// Runs a generation circuit from |00000>, projects the ancilla, and checks
// the advertised properties of the output. Any mismatch (entangled ancilla,
// weight outside the two-excitation sector, or a failed dense-family check)
// sets `discrepancy` with a detail string; nothing is silently corrected.
GenerationResult run_generation_circuit(const GateList& ops);

}  // namespace magnon

#endif  // MAGNON_DENSE_HPP
