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

#include "magnon/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits_ < 1) {
        throw ArgumentError("density matrix must cover at least one qubit");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw ArgumentError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                            " matrix for " + std::to_string(num_qubits_) + " qubits");
    }
    const double herm_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > kDefaultTolerance) {
        throw MatrixError("density matrix is not Hermitian; defect " +
                          std::to_string(herm_defect));
    }
    const double trace_defect = std::abs(entries_.trace() - std::complex<double>(1.0, 0.0));
    if (trace_defect > kDefaultTolerance) {
        throw MatrixError("density matrix trace deviates from 1 by " +
                          std::to_string(trace_defect));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                           Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kDefaultTolerance) {
        throw MatrixError("density matrix has eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()) +
                          " below the positivity floor");
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
    const Eigen::Index dim = static_cast<Eigen::Index>(s.dim());
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = s.amplitudes()[static_cast<std::size_t>(i)];
    }
    return DensityMatrix(s.num_qubits(), v * v.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.num_qubits();
    if (keep.empty()) {
        throw ArgumentError("partial trace requires a nonempty keep set");
    }
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw ArgumentError("keep set contains a repeated qubit index");
    }
    for (int q : kept) {
        if (q < 0 || q >= n) {
            throw ArgumentError("keep index " + std::to_string(q) + " out of range for " +
                                std::to_string(n) + " qubits");
        }
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    const int k = static_cast<int>(kept.size());
    const int m = static_cast<int>(traced.size());
    const std::size_t dim_k = std::size_t{1} << k;
    const std::size_t dim_m = std::size_t{1} << m;

    auto expand = [n](const std::vector<int>& qubits, std::size_t bits) {
        std::size_t idx = 0;
        const int count = static_cast<int>(qubits.size());
        for (int pos = 0; pos < count; ++pos) {
            if ((bits >> (count - 1 - pos)) & 1) {
                idx |= std::size_t{1} << (n - 1 - qubits[static_cast<std::size_t>(pos)]);
            }
        }
        return idx;
    };

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim_k),
                                                  static_cast<Eigen::Index>(dim_k));
    for (std::size_t r = 0; r < dim_k; ++r) {
        const std::size_t row_kept = expand(kept, r);
        for (std::size_t c = 0; c < dim_k; ++c) {
            const std::size_t col_kept = expand(kept, c);
            std::complex<double> sum = 0.0;
            for (std::size_t t = 0; t < dim_m; ++t) {
                const std::size_t t_bits = expand(traced, t);
                sum += rho.entries()(static_cast<Eigen::Index>(row_kept | t_bits),
                                     static_cast<Eigen::Index>(col_kept | t_bits));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
        }
    }
    return DensityMatrix(k, std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries(),
                                                           Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > kEntropyCutoff) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return entropy;
}

}  // namespace magnon
