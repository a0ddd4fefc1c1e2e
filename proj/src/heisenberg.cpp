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

#include "magnon/heisenberg.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "magnon/errors.hpp"
#include "magnon/gates.hpp"

namespace magnon {

namespace {

using Eigen::MatrixXcd;
using std::complex;

// sigma_a sigma_a on qubits (p, q) of three, summed over a = x, y, z.
MatrixXcd pair_coupling(int p, int q) {
    MatrixXcd total = MatrixXcd::Zero(8, 8);
    for (int a = 1; a <= 3; ++a) {
        const Eigen::Matrix2cd sigma = PauliLabel(a).matrix();
        std::vector<MatrixXcd> factors(3, MatrixXcd::Identity(2, 2));
        factors[p] = sigma;
        factors[q] = sigma;
        total += kron(kron(factors[0], factors[1]), factors[2]);
    }
    return total;
}

}  // namespace

Eigen::MatrixXcd build_hamiltonian(const HeisenbergParams& params) {
    // S.S = (sigma.sigma) / 4.
    const MatrixXcd coupling = pair_coupling(0, 1) + pair_coupling(1, 2) +
                               params.delta * pair_coupling(0, 2);
    return (params.j / 4.0) * coupling;
}

Eigen::MatrixXcd evolution_operator(const HeisenbergParams& params) {
    if (params.j == 0.0) {
        throw ArgumentError("coupling strength j must be nonzero");
    }
    const MatrixXcd h = build_hamiltonian(params);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw MatrixError("eigendecomposition of the Hamiltonian failed");
    }
    const Eigen::VectorXd eigenvalues = solver.eigenvalues();
    const MatrixXcd vectors = solver.eigenvectors();
    Eigen::VectorXcd phases(eigenvalues.size());
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        phases(k) = std::exp(complex<double>(0.0, -eigenvalues(k) * params.t));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

StateVector evolve(const StateVector& state, const HeisenbergParams& params) {
    if (state.num_qubits() != 3) {
        throw ArgumentError("the Heisenberg ring acts on exactly three qubits");
    }
    const MatrixXcd u = evolution_operator(params);
    Eigen::VectorXcd in(8);
    for (int i = 0; i < 8; ++i) {
        in(i) = state.amplitude(i);
    }
    const Eigen::VectorXcd out = u * in;
    std::vector<complex<double>> amplitudes(8);
    for (int i = 0; i < 8; ++i) {
        amplitudes[i] = out(i);
    }
    return StateVector(3, std::move(amplitudes));
}

double t_star(double j) {
    if (j == 0.0) {
        throw ArgumentError("coupling strength j must be nonzero");
    }
    return (2.0 / (3.0 * j)) * std::acos(0.125);
}

nlohmann::json WGenerationReport::to_json() const {
    return nlohmann::json{
        {"alpha", {alpha.real(), alpha.imag()}},
        {"beta", {beta.real(), beta.imag()}},
        {"gamma", {gamma.real(), gamma.imag()}},
        {"condition_residual", condition_residual},
        {"one_magnon_weight", one_magnon_weight},
        {"t_star", t_star},
        {"initial_state", initial_state},
    };
}

WGenerationReport w_generation_check(double j) {
    HeisenbergParams params;
    params.j = j;
    params.delta = 1.0;
    params.t = t_star(j);

    const StateVector initial = StateVector::computational_basis(3, 0b100);
    const StateVector evolved = evolve(initial, params);

    WGenerationReport report;
    report.t_star = params.t;
    report.alpha = evolved.amplitude(0b100);
    report.beta = evolved.amplitude(0b010);
    report.gamma = evolved.amplitude(0b001);
    report.one_magnon_weight = std::norm(report.alpha) +
                               std::norm(report.beta) +
                               std::norm(report.gamma);
    report.condition_residual = std::abs(std::norm(report.alpha) +
                                         std::norm(report.beta) -
                                         std::norm(report.gamma));
    return report;
}

}  // namespace magnon
