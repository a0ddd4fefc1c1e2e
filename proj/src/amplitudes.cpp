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

#include "magnon/amplitudes.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

double MagnonAmplitudes::norm_squared() const {
    double sum = 0.0;
    for (const auto& w : as_array()) {
        sum += std::norm(w);
    }
    return sum;
}

std::array<std::complex<double>, 6> MagnonAmplitudes::as_array() const {
    return {w001, w010, w100, w110, w101, w011};
}

MagnonAmplitudes MagnonAmplitudes::uniform() {
    const double v = 1.0 / std::sqrt(6.0);
    return MagnonAmplitudes{v, v, v, v, v, v};
}

NormalizedAmplitudes normalize_amplitudes(const MagnonAmplitudes& w) {
    const double n2 = w.norm_squared();
    const double defect = std::abs(n2 - 1.0);
    if (defect <= kDefaultTolerance) {
        return {w, false};
    }
    if (defect <= kRescaleWindow) {
        const double scale = 1.0 / std::sqrt(n2);
        MagnonAmplitudes out = w;
        out.w001 *= scale;
        out.w010 *= scale;
        out.w100 *= scale;
        out.w110 *= scale;
        out.w101 *= scale;
        out.w011 *= scale;
        return {out, true};
    }
    throw NormalizationError("amplitude norm^2 deviates from 1 by " + std::to_string(defect) +
                             ", beyond the rescale window");
}

namespace {

std::complex<double> complex_from_json(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ArgumentError("amplitude field '" + key +
                            "' must be a two-element [re, im] number array");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

MagnonAmplitudes amplitudes_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ArgumentError("amplitude JSON must be an object with keys w001..w011");
    }
    const std::vector<std::string> keys = {"w001", "w010", "w100", "w110", "w101", "w011"};
    for (const auto& key : keys) {
        if (!j.contains(key)) {
            throw ArgumentError("amplitude JSON is missing key '" + key + "'");
        }
    }
    MagnonAmplitudes w;
    w.w001 = complex_from_json(j.at("w001"), "w001");
    w.w010 = complex_from_json(j.at("w010"), "w010");
    w.w100 = complex_from_json(j.at("w100"), "w100");
    w.w110 = complex_from_json(j.at("w110"), "w110");
    w.w101 = complex_from_json(j.at("w101"), "w101");
    w.w011 = complex_from_json(j.at("w011"), "w011");
    return w;
}

nlohmann::json amplitudes_to_json(const MagnonAmplitudes& w) {
    auto pair = [](const std::complex<double>& z) {
        return nlohmann::json::array({z.real(), z.imag()});
    };
    return {{"w001", pair(w.w001)}, {"w010", pair(w.w010)}, {"w100", pair(w.w100)},
            {"w110", pair(w.w110)}, {"w101", pair(w.w101)}, {"w011", pair(w.w011)}};
}

StateVector build_4_2(const MagnonAmplitudes& w) {
    const MagnonAmplitudes v = normalize_amplitudes(w).amplitudes;
    std::vector<std::complex<double>> amps(16, 0.0);
    amps[kIndexW001] = v.w001;
    amps[kIndexW010] = v.w010;
    amps[kIndexW100] = v.w100;
    amps[kIndexW110] = v.w110;
    amps[kIndexW101] = v.w101;
    amps[kIndexW011] = v.w011;
    return StateVector(4, std::move(amps));
}

StateVector build_4_2_prime(const MagnonAmplitudes& w) {
    MagnonAmplitudes swapped = w;
    std::swap(swapped.w001, swapped.w110);
    return build_4_2(swapped);
}

StateVector build_w_prime(std::complex<double> alpha,
                          std::complex<double> beta,
                          std::complex<double> gamma) {
    const double n2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
    const double defect = std::abs(n2 - 1.0);
    if (defect > kRescaleWindow) {
        throw NormalizationError("one-magnon coefficients norm^2 deviates from 1 by " +
                                 std::to_string(defect));
    }
    if (defect > kDefaultTolerance) {
        const double scale = 1.0 / std::sqrt(n2);
        alpha *= scale;
        beta *= scale;
        gamma *= scale;
    }
    std::vector<std::complex<double>> amps(8, 0.0);
    amps[0b100] = alpha;
    amps[0b010] = beta;
    amps[0b001] = gamma;
    return StateVector(3, std::move(amps));
}

}  // namespace magnon
