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

#include "magnon/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "magnon/errors.hpp"
#include "magnon/measurement.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

namespace {

using std::complex;

std::string pair_label(const std::string& kind, int first, int second) {
    return kind + ":sigma" + std::to_string(first) + " x sigma" +
           std::to_string(second);
}

Eigen::Matrix4cd pauli_kron(int first, int second) {
    const Eigen::MatrixXcd k =
        kron(PauliLabel(first).matrix(), PauliLabel(second).matrix());
    return Eigen::Matrix4cd(k);
}

struct BranchCorrection {
    double fidelity = 0.0;
    std::string label = "none";
    bool used_table_rule = false;
};

// Applies the published rule first; when it misses, scans all sixteen Pauli
// products in fixed row-major order and keeps the first exact corrector.
BranchCorrection correct_branch(const StateVector& post,
                                const StateVector& target,
                                int branch_index,
                                WrapConvention convention,
                                bool allow_table_rule) {
    BranchCorrection result;
    if (allow_table_rule) {
        try {
            const Eigen::Matrix4cd rule = bob_correction(branch_index, convention);
            const StateVector corrected = apply_gate(post, rule, {0, 1});
            const double fid = fidelity(corrected, target);
            if (fid >= 1.0 - kFidelityTolerance) {
                const auto& row = pauli_pair_table()[branch_index - 1];
                int j = branch_index + 8;
                if (convention == WrapConvention::kOneBased) {
                    j = ((j - 1) % 16) + 1;
                } else {
                    j = j % 16;
                }
                const auto& partner = pauli_pair_table()[j - 1];
                result.fidelity = fid;
                result.label =
                    pair_label("table", row.n.index(), partner.m.index());
                result.used_table_rule = true;
                return result;
            }
        } catch (const IndexError&) {
            // The literal convention has no rule for this branch; search.
        }
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const StateVector corrected =
                apply_gate(post, pauli_kron(a, b), {0, 1});
            const double fid = fidelity(corrected, target);
            if (fid >= 1.0 - kFidelityTolerance) {
                result.fidelity = fid;
                result.label = pair_label("search", a, b);
                return result;
            }
            result.fidelity = std::max(result.fidelity, fid);
        }
    }
    return result;  // label stays "none"; fidelity is the best found
}

TeleportReport run_branches(const TwoQubitSecret& secret,
                            const MagnonAmplitudes& w,
                            const std::vector<int>& alice_qubits,
                            WrapConvention convention,
                            bool allow_table_rule,
                            bool redistributed) {
    const ConstraintFamily family{FamilyTag::kTeleport,
                                  QisInterpretation::kEqualOnly};
    const ConstraintReport check = check_constraints(w, family);
    if (!check.pass) {
        throw ChannelError("channel amplitudes fail the teleport constraint family",
                           check);
    }

    const StateVector secret_state = secret.state();
    const StateVector joint = tensor(secret_state, build_4_2(w));
    const std::vector<StateVector> basis = alice_basis(w);
    const std::vector<MeasurementRecord> records =
        project_measure(joint, basis, alice_qubits);

    TeleportReport report;
    report.convention = convention;
    report.redistributed = redistributed;
    report.min_fidelity = 1.0;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const MeasurementRecord& record = records[k];
        TeleportBranch branch;
        branch.index = static_cast<int>(k) + 1;
        branch.probability = record.probability;
        if (record.post_state.has_value()) {
            const BranchCorrection fix =
                correct_branch(*record.post_state, secret_state, branch.index,
                               convention, allow_table_rule);
            branch.fidelity = fix.fidelity;
            branch.correction = fix.label;
            branch.used_table_rule = fix.used_table_rule;
        } else {
            branch.correction = "none";
        }
        report.total_probability += branch.probability;
        report.max_probability_defect =
            std::max(report.max_probability_defect,
                     std::abs(branch.probability - 1.0 / 16.0));
        report.min_fidelity = std::min(report.min_fidelity, branch.fidelity);
        report.branches.push_back(std::move(branch));
    }
    report.probability_uniform = report.max_probability_defect <= kFidelityTolerance;
    report.pass = report.probability_uniform &&
                  report.min_fidelity >= 1.0 - kFidelityTolerance;
    return report;
}

}  // namespace

StateVector TwoQubitSecret::state() const {
    return StateVector(2, {a00, a01, a10, a11});
}

TwoQubitSecret TwoQubitSecret::random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<complex<double>, 4> raw;
    double total = 0.0;
    for (auto& amp : raw) {
        amp = complex<double>(gauss(rng), gauss(rng));
        total += std::norm(amp);
    }
    const double scale = 1.0 / std::sqrt(total);
    TwoQubitSecret secret;
    secret.a00 = raw[0] * scale;
    secret.a01 = raw[1] * scale;
    secret.a10 = raw[2] * scale;
    secret.a11 = raw[3] * scale;
    return secret;
}

const std::array<PauliPair, 16>& pauli_pair_table() {
    static const std::array<PauliPair, 16> table = {{
        {PauliLabel(0), PauliLabel(0)},
        {PauliLabel(0), PauliLabel(3)},
        {PauliLabel(3), PauliLabel(0)},
        {PauliLabel(3), PauliLabel(3)},
        {PauliLabel(1), PauliLabel(0)},
        {PauliLabel(1), PauliLabel(3)},
        {PauliLabel(2), PauliLabel(3)},
        {PauliLabel(2), PauliLabel(0)},
        {PauliLabel(0), PauliLabel(1)},
        {PauliLabel(0), PauliLabel(2)},
        {PauliLabel(3), PauliLabel(1)},
        {PauliLabel(3), PauliLabel(2)},
        {PauliLabel(1), PauliLabel(1)},
        {PauliLabel(2), PauliLabel(1)},
        {PauliLabel(1), PauliLabel(2)},
        {PauliLabel(2), PauliLabel(2)},
    }};
    return table;
}

Eigen::Matrix4cd bob_correction(int i, WrapConvention convention) {
    if (i < 1 || i > 16) {
        throw IndexError("branch index must lie in 1..16");
    }
    int j = i + 8;
    if (convention == WrapConvention::kOneBased) {
        j = ((j - 1) % 16) + 1;
    } else {
        j = j % 16;
        if (j == 0) {
            throw IndexError(
                "literal (i+8) mod 16 wrap maps branch 8 to row 0, which is "
                "outside the one-based operator table");
        }
    }
    const PauliPair& row_i = pauli_pair_table()[i - 1];
    const PauliPair& row_j = pauli_pair_table()[j - 1];
    // (N_i (x) M_j)^{-1}; Pauli operators are involutions, so the inverse is
    // the operator itself.
    return pauli_kron(row_i.n.index(), row_j.m.index());
}

std::vector<StateVector> alice_basis(const MagnonAmplitudes& w) {
    const ConstraintFamily family{FamilyTag::kTeleport,
                                  QisInterpretation::kEqualOnly};
    const ConstraintReport check = check_constraints(w, family);
    if (!check.pass) {
        throw ChannelError("channel amplitudes fail the teleport constraint family",
                           check);
    }
    const StateVector prime = build_4_2_prime(w);
    std::vector<StateVector> basis;
    basis.reserve(16);
    for (const PauliPair& pair : pauli_pair_table()) {
        StateVector element = apply_gate(prime, pair.m.matrix(), {0});
        element = apply_gate(element, pair.n.matrix(), {1});
        basis.push_back(std::move(element));
    }
    return basis;
}

double alice_basis_gram_defect(const MagnonAmplitudes& w) {
    const StateVector prime = build_4_2_prime(w);
    std::vector<StateVector> basis;
    basis.reserve(16);
    for (const PauliPair& pair : pauli_pair_table()) {
        StateVector element = apply_gate(prime, pair.m.matrix(), {0});
        element = apply_gate(element, pair.n.matrix(), {1});
        basis.push_back(std::move(element));
    }
    double defect = 0.0;
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            const complex<double> overlap = inner_product(basis[a], basis[b]);
            const double expected = (a == b) ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(overlap - expected));
        }
    }
    return defect;
}

nlohmann::json TeleportReport::to_json() const {
    nlohmann::json branch_array = nlohmann::json::array();
    for (const auto& branch : branches) {
        branch_array.push_back(nlohmann::json{
            {"index", branch.index},
            {"probability", branch.probability},
            {"fidelity", branch.fidelity},
            {"correction", branch.correction},
            {"used_table_rule", branch.used_table_rule},
        });
    }
    return nlohmann::json{
        {"branches", branch_array},
        {"min_fidelity", min_fidelity},
        {"max_probability_defect", max_probability_defect},
        {"total_probability", total_probability},
        {"probability_uniform", probability_uniform},
        {"pass", pass},
        {"redistributed", redistributed},
        {"convention",
         convention == WrapConvention::kOneBased ? "one-based" : "literal"},
    };
}

TeleportReport run_teleport(const TwoQubitSecret& secret,
                            const MagnonAmplitudes& w,
                            WrapConvention convention) {
    // Sender holds (p, q, 1, 3) = joint qubits {0, 1, 2, 4}; the receiver's
    // post-measurement register is (2, 4) = joint qubits {3, 5}.
    return run_branches(secret, w, {0, 1, 2, 4}, convention,
                        /*allow_table_rule=*/true, /*redistributed=*/false);
}

TeleportReport run_teleport_redistributed(const TwoQubitSecret& secret,
                                          const MagnonAmplitudes& w) {
    // Sender holds (p, q, 1, 2) = joint qubits {0, 1, 2, 3}; the receiver's
    // register is (3, 4) = joint qubits {4, 5}.
    return run_branches(secret, w, {0, 1, 2, 3}, WrapConvention::kOneBased,
                        /*allow_table_rule=*/false, /*redistributed=*/true);
}

}  // namespace magnon
