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

#include "magnon/measurement.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

std::vector<MeasurementRecord> project_measure(const StateVector& s,
                                               const std::vector<StateVector>& basis,
                                               const std::vector<int>& subset,
                                               bool allow_incomplete) {
    const int n = s.num_qubits();
    const int k = static_cast<int>(subset.size());
    if (k < 1 || k > n) {
        throw IndexError("measurement subset must list between 1 and " + std::to_string(n) +
                         " qubits");
    }
    std::set<int> seen;
    for (int q : subset) {
        if (q < 0 || q >= n) {
            throw IndexError("subset qubit " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            throw IndexError("repeated subset qubit " + std::to_string(q));
        }
    }
    const std::size_t dim_k = std::size_t{1} << k;
    if (basis.empty()) {
        throw BasisError("measurement basis is empty");
    }
    if (basis.size() > dim_k) {
        throw BasisError("basis has more vectors than the subset dimension");
    }
    if (!allow_incomplete && basis.size() != dim_k) {
        throw BasisError("basis has " + std::to_string(basis.size()) + " vectors but " +
                         std::to_string(dim_k) + " are required for a complete measurement");
    }
    for (const StateVector& b : basis) {
        if (b.num_qubits() != k) {
            throw BasisError("basis vector qubit count does not match the subset size");
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const std::complex<double> ip = inner_product(basis[i], basis[j]);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(ip - expected) > kDefaultTolerance) {
                throw BasisError("basis vectors " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not orthonormal; |<i|j>| defect " +
                                 std::to_string(std::abs(ip - expected)));
            }
        }
    }

    std::vector<int> complement;
    for (int q = 0; q < n; ++q) {
        if (seen.find(q) == seen.end()) {
            complement.push_back(q);
        }
    }
    const int m = static_cast<int>(complement.size());
    const std::size_t dim_m = m > 0 ? (std::size_t{1} << m) : 1;

    // Decompose each full index into (subset bits in the order given, complement
    // bits ascending).
    std::vector<MeasurementRecord> records;
    double total = 0.0;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        std::vector<std::complex<double>> branch(dim_m, 0.0);
        for (std::size_t idx = 0; idx < s.dim(); ++idx) {
            std::size_t x = 0;
            for (int pos = 0; pos < k; ++pos) {
                if ((idx >> (n - 1 - subset[static_cast<std::size_t>(pos)])) & 1) {
                    x |= std::size_t{1} << (k - 1 - pos);
                }
            }
            std::size_t c = 0;
            for (int pos = 0; pos < m; ++pos) {
                if ((idx >> (n - 1 - complement[static_cast<std::size_t>(pos)])) & 1) {
                    c |= std::size_t{1} << (m - 1 - pos);
                }
            }
            branch[c] += std::conj(basis[bi].amplitudes()[x]) * s.amplitudes()[idx];
        }
        double p = 0.0;
        for (const auto& a : branch) {
            p += std::norm(a);
        }
        MeasurementRecord rec;
        rec.outcome_index = static_cast<int>(bi);
        rec.probability = p;
        if (m > 0 && p > 1e-15) {
            const double scale = 1.0 / std::sqrt(p);
            for (auto& a : branch) {
                a *= scale;
            }
            rec.post_state = StateVector(m, std::move(branch));
        }
        total += p;
        records.push_back(std::move(rec));
    }

    if (allow_incomplete && basis.size() < dim_k) {
        MeasurementRecord residual;
        residual.outcome_index = -1;
        residual.probability = std::max(0.0, 1.0 - total);
        records.push_back(std::move(residual));
    }
    return records;
}

}  // namespace magnon
