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

#ifndef MAGNON_GATES_HPP
#define MAGNON_GATES_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "magnon/state_vector.hpp"

namespace magnon {

// One of the four Pauli operators sigma0 (identity), sigma1, sigma2, sigma3,
// with the convention sigma2 = [[0, -i], [i, 0]].
class PauliLabel {
  public:
    explicit PauliLabel(int index);

    int index() const { return index_; }
    Eigen::Matrix2cd matrix() const;
    std::string name() const;  // "sigma0" .. "sigma3"

    friend bool operator==(const PauliLabel& a, const PauliLabel& b) {
        return a.index_ == b.index_;
    }

  private:
    int index_;
};

Eigen::Matrix2cd hadamard();

// Kronecker product with a's indices more significant.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Controlled-U with the given number of control qubits; controls occupy the
// more significant positions of the resulting operator.
Eigen::MatrixXcd controlled(const Eigen::MatrixXcd& u, int num_controls = 1);

bool is_unitary(const Eigen::MatrixXcd& u, double tolerance);

// Applies a 2^k x 2^k unitary to the listed qubits (identity elsewhere).
// targets[0] addresses the most significant qubit of the operator. Throws
// UnitarityError for non-unitary matrices and IndexError for repeated or
// out-of-range targets.
StateVector apply_gate(const StateVector& s,
                       const Eigen::MatrixXcd& matrix,
                       const std::vector<int>& targets);

// A circuit stored as data: named parameter-free gates with target and
// control qubit indices. Supported names: "h", "x", "cx", "ccx", "ch".
struct GateOp {
    std::string gate;
    std::vector<int> targets;
    std::vector<int> controls;
};

using GateList = std::vector<GateOp>;

// Executes a gate list; controls sit above targets inside each operator.
// Throws ArgumentError for unknown gate names.
StateVector run_gate_list(const StateVector& initial, const GateList& ops);

nlohmann::json gate_list_to_json(const GateList& ops);
GateList gate_list_from_json(const nlohmann::json& j);

}  // namespace magnon

#endif  // MAGNON_GATES_HPP
