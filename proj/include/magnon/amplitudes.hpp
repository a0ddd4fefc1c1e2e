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

#ifndef MAGNON_AMPLITUDES_HPP
#define MAGNON_AMPLITUDES_HPP

#include <array>
#include <complex>

#include <json.hpp>

#include "magnon/state_vector.hpp"

namespace magnon {

// The six coefficients of the four-qubit two-magnon channel state. Each
// subscript names the basis ket the coefficient multiplies; the fixed
// correspondence (pinned by unit test) is:
//   w001 -> |0011>,  w010 -> |0101>,  w100 -> |0110>,
//   w110 -> |1100>,  w101 -> |1010>,  w011 -> |1001>.
struct MagnonAmplitudes {
    std::complex<double> w001;
    std::complex<double> w010;
    std::complex<double> w100;
    std::complex<double> w110;
    std::complex<double> w101;
    std::complex<double> w011;

    double norm_squared() const;

    // Fixed iteration order: w001, w010, w100, w110, w101, w011.
    std::array<std::complex<double>, 6> as_array() const;

    // All six coefficients equal to 1/sqrt(6).
    static MagnonAmplitudes uniform();
};

// Amplitude-index constants for the two-magnon basis kets.
inline constexpr std::size_t kIndexW001 = 0b0011;
inline constexpr std::size_t kIndexW010 = 0b0101;
inline constexpr std::size_t kIndexW100 = 0b0110;
inline constexpr std::size_t kIndexW110 = 0b1100;
inline constexpr std::size_t kIndexW101 = 0b1010;
inline constexpr std::size_t kIndexW011 = 0b1001;

struct NormalizedAmplitudes {
    MagnonAmplitudes amplitudes;
    bool rescaled = false;
};

// Accepts amplitudes whose squared norm is within kDefaultTolerance of 1 as
// they are; rescales (setting the flag) when the deviation is within
// kRescaleWindow; otherwise throws NormalizationError.
NormalizedAmplitudes normalize_amplitudes(const MagnonAmplitudes& w);

// JSON object with keys "w001".."w011", each a two-element [re, im] array.
MagnonAmplitudes amplitudes_from_json(const nlohmann::json& j);
nlohmann::json amplitudes_to_json(const MagnonAmplitudes& w);

// Four-qubit two-magnon channel state: the six coefficients placed on the
// weight-2 kets listed above, zero elsewhere.
StateVector build_4_2(const MagnonAmplitudes& w);

// Companion channel state used to generate the measurement basis: identical
// to build_4_2 except that w001 and w110 trade places (w110 multiplies
// |0011> and w001 multiplies |1100>).
StateVector build_4_2_prime(const MagnonAmplitudes& w);

// Three-qubit one-magnon state alpha|100> + beta|010> + gamma|001>.
StateVector build_w_prime(std::complex<double> alpha,
                          std::complex<double> beta,
                          std::complex<double> gamma);

}  // namespace magnon

#endif  // MAGNON_AMPLITUDES_HPP
