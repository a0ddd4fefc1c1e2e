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

#include "magnon/constraints.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <utility>

namespace magnon {

namespace {

using std::abs;
using std::complex;
using std::conj;
using std::norm;

constexpr double kPi = 3.14159265358979323846;

complex<double> phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

void append(std::vector<Residual>& out, const std::string& name, double value) {
    out.push_back(Residual{name, value});
}

std::vector<Residual> teleport_residuals(const MagnonAmplitudes& w) {
    std::vector<Residual> r;
    append(r, "cross_bilinear", abs(w.w011 * conj(w.w110) + w.w001 * conj(w.w100)));
    append(r, "pair_balance_101_001", abs(norm(w.w101) - norm(w.w001)));
    append(r, "sum_balance_110_100", abs(norm(w.w110) + norm(w.w100) - norm(w.w001)));
    append(r, "sum_balance_011_010", abs(norm(w.w011) + norm(w.w010) - norm(w.w001)));
    return r;
}

std::vector<Residual> dense_residuals(const MagnonAmplitudes& w) {
    std::vector<Residual> r;
    append(r, "pair_balance_101_001", abs(norm(w.w101) - norm(w.w001)));
    append(r, "pair_balance_010_001", abs(norm(w.w010) - norm(w.w001)));
    append(r, "sum_balance_110_011", abs(norm(w.w110) + norm(w.w011) - norm(w.w001)));
    append(r, "w100_zero", abs(w.w100));
    return r;
}

std::vector<Residual> qis_residuals(const MagnonAmplitudes& w,
                                    QisInterpretation interpretation) {
    std::vector<Residual> r;
    append(r, "bob_one_balance", abs(norm(w.w110) - norm(w.w100) - norm(w.w010)));
    append(r, "bob_zero_balance", abs(norm(w.w001) - norm(w.w101) - norm(w.w011)));
    const complex<double> corner = w.w110 * conj(w.w001);
    const complex<double> cross = w.w100 * conj(w.w011) + w.w010 * conj(w.w101);
    if (interpretation == QisInterpretation::kBothZero) {
        append(r, "corner_product_zero", abs(corner));
        append(r, "cross_sum_zero", abs(cross));
    } else {
        append(r, "bilinear_match", abs(corner - cross));
    }
    return r;
}

}  // namespace

std::vector<std::string> ConstraintReport::failing_names() const {
    std::vector<std::string> names;
    for (const auto& residual : residuals) {
        if (residual.value > tolerance) {
            names.push_back(residual.name);
        }
    }
    return names;
}

nlohmann::json ConstraintReport::to_json() const {
    nlohmann::json residual_json = nlohmann::json::object();
    for (const auto& residual : residuals) {
        residual_json[residual.name] = residual.value;
    }
    return nlohmann::json{{"residuals", residual_json},
                          {"pass", pass},
                          {"tolerance", tolerance},
                          {"failing", failing_names()}};
}

ChannelError::ChannelError(const std::string& message, ConstraintReport report)
    : Error(message), report_(std::move(report)) {}

ConstraintReport check_constraints(const MagnonAmplitudes& w,
                                   const ConstraintFamily& family,
                                   double tolerance) {
    const MagnonAmplitudes normalized = normalize_amplitudes(w).amplitudes;
    ConstraintReport report;
    report.tolerance = tolerance;
    switch (family.tag) {
        case FamilyTag::kTeleport:
            report.residuals = teleport_residuals(normalized);
            break;
        case FamilyTag::kDenseCoding:
            report.residuals = dense_residuals(normalized);
            break;
        case FamilyTag::kQis:
            report.residuals = qis_residuals(normalized, family.interpretation);
            break;
    }
    report.pass = true;
    for (const auto& residual : report.residuals) {
        if (residual.value > tolerance) {
            report.pass = false;
        }
    }
    return report;
}

namespace {

// Teleport-family manifold: equal moduli 1/2 on w001, w010, w101, w110 with
// w100 = w011 = 0 satisfies every printed relation and makes the sixteen
// two-qubit measurement-basis states orthonormal for arbitrary phases. A
// product Pauli correction exists on every branch only when the relative
// phases sit on a quarter-turn lattice, so the sampler draws two free phases
// and the lattice offsets rather than four free phases.
MagnonAmplitudes sample_teleport(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> quarter(0, 3);
    std::uniform_int_distribution<int> half(0, 1);

    const double phi1 = angle(rng);
    const double phi3 = angle(rng);
    const double delta1 = quarter(rng) * (kPi / 2.0);
    const double delta2 = delta1 + half(rng) * kPi;

    MagnonAmplitudes w;
    w.w001 = 0.5 * phase(phi1);
    w.w010 = 0.5 * phase(phi1 - delta2);
    w.w101 = 0.5 * phase(phi3);
    w.w110 = 0.5 * phase(phi3 - delta1);
    w.w100 = 0.0;
    w.w011 = 0.0;
    return w;
}

// Dense-coding manifold: equal moduli 1/2 on w001, w010, w101, w110 with
// w100 = w011 = 0. All four phases are free; the sixteen encodings stay
// mutually orthogonal for every choice.
MagnonAmplitudes sample_dense(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    MagnonAmplitudes w;
    w.w001 = 0.5 * phase(angle(rng));
    w.w010 = 0.5 * phase(angle(rng));
    w.w101 = 0.5 * phase(angle(rng));
    w.w110 = 0.5 * phase(angle(rng));
    w.w100 = 0.0;
    w.w011 = 0.0;
    return w;
}

// Splitting family, agreeing-bilinear reading: write the Bob=1 triple as
// r*(1, cos t, sin t) and the Bob=0 triple as s*(1, cos t, sin t) with
// matched directions, a common phase offset Delta between the triples, and
// 2r^2 + 2s^2 = 1. Both balance relations hold by construction and the two
// bilinears both equal r*s*e^{i Delta}.
MagnonAmplitudes sample_qis_equal(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    // Keep both measurement outcomes comfortably probable.
    std::uniform_real_distribution<double> mix(0.15, kPi / 2.0 - 0.15);

    const double chi = mix(rng);
    const double r = std::cos(chi) / std::sqrt(2.0);
    const double s = std::sin(chi) / std::sqrt(2.0);
    const double theta = angle(rng);
    const double phi001 = angle(rng);
    const double phi011 = angle(rng);
    const double phi101 = angle(rng);
    const double delta = angle(rng);

    MagnonAmplitudes w;
    w.w110 = r * phase(phi001 + delta);
    w.w001 = s * phase(phi001);
    w.w100 = r * std::cos(theta) * phase(phi011 + delta);
    w.w011 = s * std::cos(theta) * phase(phi011);
    w.w010 = r * std::sin(theta) * phase(phi101 + delta);
    w.w101 = s * std::sin(theta) * phase(phi101);
    return w;
}

// Splitting family, vanishing-bilinear reading: the corner product being
// zero forces w110 = 0 or w001 = 0, and the balance relations then zero out
// the whole corresponding triple, which pins one measurement outcome.
MagnonAmplitudes sample_qis_both_zero(std::mt19937_64& rng,
                                      bool require_nondegenerate) {
    if (require_nondegenerate) {
        throw InfeasibleError(
            "the vanishing-bilinear reading admits only degenerate channels: "
            "corner_product_zero forces w110 = 0 or w001 = 0, and the balance "
            "relations then zero the rest of that triple, pinning one "
            "measurement outcome");
    }
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> side(0, 1);
    std::uniform_real_distribution<double> mix(0.15, kPi / 2.0 - 0.15);

    const double psi = mix(rng);
    const double phi_a = angle(rng);
    const double phi_b = angle(rng);
    const double phi_c = angle(rng);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    MagnonAmplitudes w;
    if (side(rng) == 0) {
        // w110 triple vanishes; the w001 triple carries the weight.
        w.w110 = 0.0;
        w.w100 = 0.0;
        w.w010 = 0.0;
        w.w001 = inv_sqrt2 * phase(phi_a);
        w.w101 = inv_sqrt2 * std::cos(psi) * phase(phi_b);
        w.w011 = inv_sqrt2 * std::sin(psi) * phase(phi_c);
    } else {
        // Mirrored: the w001 triple vanishes instead.
        w.w001 = 0.0;
        w.w101 = 0.0;
        w.w011 = 0.0;
        w.w110 = inv_sqrt2 * phase(phi_a);
        w.w100 = inv_sqrt2 * std::cos(psi) * phase(phi_b);
        w.w010 = inv_sqrt2 * std::sin(psi) * phase(phi_c);
    }
    return w;
}

}  // namespace

MagnonAmplitudes sample_amplitudes(const ConstraintFamily& family,
                                   std::uint64_t seed,
                                   bool require_nondegenerate) {
    std::mt19937_64 rng(seed);
    MagnonAmplitudes w;
    switch (family.tag) {
        case FamilyTag::kTeleport:
            w = sample_teleport(rng);
            break;
        case FamilyTag::kDenseCoding:
            w = sample_dense(rng);
            break;
        case FamilyTag::kQis:
            w = (family.interpretation == QisInterpretation::kEqualOnly)
                    ? sample_qis_equal(rng)
                    : sample_qis_both_zero(rng, require_nondegenerate);
            break;
    }
    const ConstraintReport report =
        check_constraints(w, family, kSamplerResidualBound);
    if (!report.pass) {
        throw Error("sampled amplitudes violate their own family constraints");
    }
    return w;
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::kTeleport:
            return "teleport";
        case FamilyTag::kDenseCoding:
            return "dense-coding";
        case FamilyTag::kQis:
            return "qis";
    }
    return "unknown";
}

std::string interpretation_name(QisInterpretation interpretation) {
    return interpretation == QisInterpretation::kBothZero ? "both-zero"
                                                          : "equal-only";
}

}  // namespace magnon
