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

#ifndef MAGNON_TELEPORT_HPP
#define MAGNON_TELEPORT_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "magnon/amplitudes.hpp"
#include "magnon/constraints.hpp"
#include "magnon/gates.hpp"
#include "magnon/state_vector.hpp"

namespace magnon {

// Arbitrary normalized two-qubit secret a00|00> + a01|01> + a10|10> + a11|11>.
struct TwoQubitSecret {
    std::complex<double> a00{1.0, 0.0};
    std::complex<double> a01{0.0, 0.0};
    std::complex<double> a10{0.0, 0.0};
    std::complex<double> a11{0.0, 0.0};

    // Throws NormalizationError if the amplitudes are not unit-norm.
    StateVector state() const;

    // Haar-like random secret (normalized complex Gaussian), deterministic
    // per seed.
    static TwoQubitSecret random(std::uint64_t seed);
};

struct PauliPair {
    PauliLabel m;
    PauliLabel n;
};

// The sixteen (M_i, N_i) operator pairs that generate the sender's
// measurement basis, indexed 1..16 (element i lives at position i-1).
const std::array<PauliPair, 16>& pauli_pair_table();

// The published correction rule indexes the operator table at i + 8 modulo
// sixteen. Taken literally that maps i = 8 to row 0, which does not exist in
// a one-based table; the one-based wrap sends it to row 16 instead.
enum class WrapConvention {
    kOneBased,  // j = ((i + 8 - 1) mod 16) + 1
    kLiteral,   // j = (i + 8) mod 16; i = 8 yields j = 0 -> IndexError
};

// Receiver-side correction for branch i: the inverse of N_i (x) M_j with
// j = wrap(i + 8). Pauli operators are their own inverses, so the returned
// matrix is exactly N_i (x) M_j. Throws IndexError if i is outside 1..16 or
// the literal convention maps a branch to row 0.
Eigen::Matrix4cd bob_correction(int i, WrapConvention convention = WrapConvention::kOneBased);

// Sender's sixteen measurement-basis states: (M_i (x) N_i (x) I (x) I)
// applied to the swapped-corner channel state, on the sender's qubit order.
// Throws ChannelError when the amplitudes fail the teleport family.
std::vector<StateVector> alice_basis(const MagnonAmplitudes& w);

// Max |G - I| entry over the 16x16 Gram matrix of the basis above, without
// any constraint gate. Zero exactly when the basis is orthonormal; used to
// probe channels that satisfy the printed relations but are still unusable.
double alice_basis_gram_defect(const MagnonAmplitudes& w);

struct TeleportBranch {
    int index = 0;  // 1..16
    double probability = 0.0;
    double fidelity = 0.0;
    std::string correction;
    bool used_table_rule = false;
};

struct TeleportReport {
    std::vector<TeleportBranch> branches;
    double min_fidelity = 0.0;
    double max_probability_defect = 0.0;  // max |p_i - 1/16|
    double total_probability = 0.0;
    bool probability_uniform = false;
    bool pass = false;
    bool redistributed = false;
    WrapConvention convention = WrapConvention::kOneBased;

    nlohmann::json to_json() const;
};

// Full deterministic run: joint state secret (x) channel with the sender
// holding (p, q, 1, 3) and the receiver (2, 4). Every branch first tries the
// published correction rule; when that misses, all sixteen Pauli pairs are
// searched and the first exact corrector is recorded.
TeleportReport run_teleport(const TwoQubitSecret& secret,
                            const MagnonAmplitudes& w,
                            WrapConvention convention = WrapConvention::kOneBased);

// Redistributed variant: the sender holds (p, q, 1, 2) and the receiver
// (3, 4). Corrections are found purely by search.
TeleportReport run_teleport_redistributed(const TwoQubitSecret& secret,
                                          const MagnonAmplitudes& w);

}  // namespace magnon

#endif  // MAGNON_TELEPORT_HPP
