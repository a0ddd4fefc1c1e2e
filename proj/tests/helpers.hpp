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

#ifndef MAGNON_TESTS_HELPERS_HPP
#define MAGNON_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "magnon/amplitudes.hpp"
#include "magnon/state_vector.hpp"

namespace testhelp {

// Generic normalized amplitude draw with no constraint structure; lands on
// any constraint manifold with probability zero.
inline magnon::MagnonAmplitudes random_amplitudes(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<std::complex<double>, 6> raw;
    double total = 0.0;
    for (auto& value : raw) {
        value = std::complex<double>(gauss(rng), gauss(rng));
        total += std::norm(value);
    }
    const double scale = 1.0 / std::sqrt(total);
    magnon::MagnonAmplitudes w;
    w.w001 = raw[0] * scale;
    w.w010 = raw[1] * scale;
    w.w100 = raw[2] * scale;
    w.w110 = raw[3] * scale;
    w.w101 = raw[4] * scale;
    w.w011 = raw[5] * scale;
    return w;
}

inline bool same_up_to_phase(const magnon::StateVector& a,
                             const magnon::StateVector& b,
                             double tolerance = 1e-10) {
    return std::abs(magnon::fidelity(a, b) - 1.0) <= tolerance;
}

}  // namespace testhelp

#endif  // MAGNON_TESTS_HELPERS_HPP
