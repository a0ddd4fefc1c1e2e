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

#include "magnon/gates.hpp"

#include <cmath>
#include <set>

#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

PauliLabel::PauliLabel(int index) : index_(index) {
    if (index < 0 || index > 3) {
        throw ArgumentError("Pauli index must be in 0..3, got " + std::to_string(index));
    }
}

Eigen::Matrix2cd PauliLabel::matrix() const {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    switch (index_) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -1i, 1i, 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

std::string PauliLabel::name() const {
    return "sigma" + std::to_string(index_);
}

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd controlled(const Eigen::MatrixXcd& u, int num_controls) {
    if (num_controls < 1) {
        throw ArgumentError("controlled() needs at least one control");
    }
    Eigen::MatrixXcd m = u;
    for (int c = 0; c < num_controls; ++c) {
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Identity(2 * m.rows(), 2 * m.cols());
        next.bottomRightCorner(m.rows(), m.cols()) = m;
        m = next;
    }
    return m;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tolerance) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const Eigen::MatrixXcd defect =
        u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return defect.cwiseAbs().maxCoeff() <= tolerance;
}

StateVector apply_gate(const StateVector& s,
                       const Eigen::MatrixXcd& matrix,
                       const std::vector<int>& targets) {
    const int n = s.num_qubits();
    const int k = static_cast<int>(targets.size());
    if (k < 1 || k > n) {
        throw ArgumentError("gate must address between 1 and " + std::to_string(n) + " qubits");
    }
    const Eigen::Index dim_k = Eigen::Index{1} << k;
    if (matrix.rows() != dim_k || matrix.cols() != dim_k) {
        throw ArgumentError("matrix dimension " + std::to_string(matrix.rows()) +
                            " does not match " + std::to_string(k) + " target qubits");
    }
    std::set<int> seen;
    for (int t : targets) {
        if (t < 0 || t >= n) {
            throw IndexError("target qubit " + std::to_string(t) + " out of range for " +
                             std::to_string(n) + " qubits");
        }
        if (!seen.insert(t).second) {
            throw IndexError("repeated target qubit " + std::to_string(t));
        }
    }
    if (!is_unitary(matrix, kDefaultTolerance)) {
        throw UnitarityError("gate matrix is not unitary within tolerance");
    }

    // Bit offset of sub-index j inside a full amplitude index: bit (k-1-m) of
    // j corresponds to targets[m], so targets[0] is the most significant.
    std::size_t target_mask = 0;
    std::vector<std::size_t> offsets(static_cast<std::size_t>(dim_k), 0);
    for (int m = 0; m < k; ++m) {
        const std::size_t bit = std::size_t{1} << (n - 1 - targets[m]);
        target_mask |= bit;
        for (std::size_t j = 0; j < offsets.size(); ++j) {
            if ((j >> (k - 1 - m)) & 1) {
                offsets[j] |= bit;
            }
        }
    }

    std::vector<std::complex<double>> out(s.dim());
    Eigen::VectorXcd sub(dim_k);
    for (std::size_t base = 0; base < s.dim(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (Eigen::Index j = 0; j < dim_k; ++j) {
            sub(j) = s.amplitudes()[base | offsets[static_cast<std::size_t>(j)]];
        }
        const Eigen::VectorXcd res = matrix * sub;
        for (Eigen::Index j = 0; j < dim_k; ++j) {
            out[base | offsets[static_cast<std::size_t>(j)]] = res(j);
        }
    }
    return StateVector(n, std::move(out));
}

StateVector run_gate_list(const StateVector& initial, const GateList& ops) {
    StateVector s = initial;
    for (const GateOp& op : ops) {
        Eigen::MatrixXcd base;
        if (op.gate == "h") {
            base = hadamard();
        } else if (op.gate == "x") {
            base = PauliLabel(1).matrix();
        } else if (op.gate == "cx" || op.gate == "ccx" || op.gate == "ch") {
            base = op.gate == "ch" ? Eigen::MatrixXcd(hadamard())
                                   : Eigen::MatrixXcd(PauliLabel(1).matrix());
        } else {
            throw ArgumentError("unknown gate name '" + op.gate + "'");
        }
        if (op.targets.size() != 1) {
            throw ArgumentError("gate '" + op.gate + "' takes exactly one target");
        }
        const int expected_controls = op.gate == "ccx" ? 2 : (op.gate == "h" || op.gate == "x") ? 0 : 1;
        if (static_cast<int>(op.controls.size()) != expected_controls) {
            throw ArgumentError("gate '" + op.gate + "' takes " +
                                std::to_string(expected_controls) + " control(s)");
        }
        std::vector<int> qubits = op.controls;
        qubits.insert(qubits.end(), op.targets.begin(), op.targets.end());
        const Eigen::MatrixXcd matrix =
            op.controls.empty() ? base : controlled(base, static_cast<int>(op.controls.size()));
        s = apply_gate(s, matrix, qubits);
    }
    return s;
}

nlohmann::json gate_list_to_json(const GateList& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GateOp& op : ops) {
        arr.push_back({{"gate", op.gate}, {"targets", op.targets}, {"controls", op.controls}});
    }
    return arr;
}

GateList gate_list_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ArgumentError("gate list JSON must be an array");
    }
    GateList ops;
    for (const auto& entry : j) {
        GateOp op;
        op.gate = entry.at("gate").get<std::string>();
        op.targets = entry.at("targets").get<std::vector<int>>();
        op.controls = entry.at("controls").get<std::vector<int>>();
        ops.push_back(std::move(op));
    }
    return ops;
}

}  // namespace magnon
