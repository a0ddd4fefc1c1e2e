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

#ifndef MAGNON_QIS_HPP
#define MAGNON_QIS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnon/amplitudes.hpp"
#include "magnon/constraints.hpp"
#include "magnon/density_matrix.hpp"
#include "magnon/gates.hpp"
#include "magnon/state_vector.hpp"

namespace magnon {

// Entangled secret a|00> + b|11> shared out through the channel.
struct EntangledSecret {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};

    // Throws NormalizationError unless |a|^2 + |b|^2 = 1.
    StateVector state() const;

    // Random secret with |a|^2 uniform in (0.1, 0.9) and a random relative
    // phase; bounded away from product secrets so no protocol branch
    // degenerates. Deterministic per seed.
    static EntangledSecret random(std::uint64_t seed);
};

// The sender's four three-qubit measurement states, in order:
// (|001>+|110>)/sqrt2, (|001>-|110>)/sqrt2, (|111>+|000>)/sqrt2,
// (|111>-|000>)/sqrt2.
std::vector<StateVector> ghz_basis();

// The third party's conditional two-qubit ancilla measurement vectors for
// the given middle-party outcome (0 or 1), normalized. The two vectors are
// orthogonal exactly when the splitting-family balance relation for that
// outcome holds. Throws ArgumentError for outcomes outside {0, 1} and
// BasisError when a vector degenerates to zero or orthogonality fails.
std::vector<StateVector> charlie_basis(int bob_outcome, const MagnonAmplitudes& w);

// Four-CNOT disentangling network on (ancilla1, C1, C2, ancilla2).
GateList disentangling_circuit();

struct CharlieOutcome {
    int outcome = 0;
    double probability = 0.0;
    // Raw post-measurement state on (C1, C2); the closing Pauli correction
    // is found separately by the protocol driver. Absent for zero-probability
    // outcomes.
    std::optional<StateVector> final_state;
};

// Attaches the outcome-dependent ancilla pair (|1> pair when the middle
// party saw 0, |0> pair when it saw 1), runs the disentangling network, and
// measures the ancillae in charlie_basis. `charlie_state` is the two-qubit
// state held after the first two measurements.
std::vector<CharlieOutcome> charlie_disentangle(const StateVector& charlie_state,
                                                int bob_outcome,
                                                const MagnonAmplitudes& w);

struct QisBranch {
    int alice = 0;    // 0..3 (sender's measurement outcome)
    int bob = 0;      // 0..1, or -1 when the sender's branch itself is vacuous
    int charlie = 0;  // 0..1, or -1 when truncated before the third measurement
    double probability = 0.0;
    bool vacuous = false;
    std::optional<double> fidelity;  // after correction; absent when vacuous
    std::string correction;
    // Which published intermediate-state form the simulated branch matched:
    // "printed", "alternate" (for the rows whose printed sign pattern is
    // internally inconsistent), or "none".
    std::string matched_form;
    bool table_discrepancy = false;
};

struct QisReport {
    std::vector<QisBranch> branches;
    double total_probability = 0.0;
    double min_fidelity = 0.0;  // over non-vacuous branches
    bool pass = false;
    QisInterpretation interpretation = QisInterpretation::kEqualOnly;
    int vacuous_count = 0;
    bool any_table_discrepancy = false;

    nlohmann::json to_json() const;
};

// Full protocol: joint state secret (x) channel on qubits
// (s1, s2, 1, 2, 3, 4); the sender measures (s1, s2, 1) in ghz_basis, the
// middle party measures qubit 2 in the computational basis, and the third
// party disentangles qubits (3, 4) with the ancilla circuit. Closing Pauli
// corrections are found by search per branch. Throws ChannelError when w
// fails the splitting family under the given interpretation.
QisReport run_qis(const EntangledSecret& secret,
                  const MagnonAmplitudes& w,
                  QisInterpretation interpretation = QisInterpretation::kEqualOnly);

// Best fidelity any single party can reach toward the secret using only its
// one-qubit reduced state rho plus any locally prepared partner qubit:
// max over states sigma of <s|(rho (x) sigma)|s>. Equals the largest
// eigenvalue of diag(conj(a), conj(b)) * rho * diag(a, b). Throws
// ArgumentError unless rho is a single-qubit density matrix.
double lock_score(const DensityMatrix& rho, const EntangledSecret& secret);

// Raised when the empirical resolution below cannot single out one reading.
class UnresolvedConstraintError : public Error {
  public:
    using Error::Error;
};

struct InterpretationEvidence {
    QisInterpretation interpretation = QisInterpretation::kEqualOnly;
    bool sampling_feasible = false;
    bool nondegenerate_family_exists = false;
    std::string degeneracy_analysis;
    bool protocol_pass = false;
    double min_fidelity = 0.0;
    int total_vacuous_branches = 0;

    nlohmann::json to_json() const;
};

struct InterpretationResolution {
    QisInterpretation verdict = QisInterpretation::kEqualOnly;
    std::vector<InterpretationEvidence> evidence;

    nlohmann::json to_json() const;
};

// Resolves which reading of the splitting family's bilinear relation the
// protocol actually needs, empirically: for each reading, sample channels,
// run the full protocol against random secrets, and test whether a
// non-degenerate channel family exists. The verdict is the unique reading
// that both succeeds end-to-end and admits non-degenerate channels; if no
// unique reading qualifies, throws UnresolvedConstraintError with the
// evidence attached.
InterpretationResolution resolve_interpretation(int seed_count = 8,
                                                std::uint64_t base_seed = 1000);

// Library-wide default, pinned to the resolve_interpretation verdict by a
// unit test rather than trusted blindly.
inline constexpr QisInterpretation kDefaultInterpretation =
    QisInterpretation::kEqualOnly;

}  // namespace magnon

#endif  // MAGNON_QIS_HPP
