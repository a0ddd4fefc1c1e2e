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

#ifndef MAGNON_CONSTRAINTS_HPP
#define MAGNON_CONSTRAINTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnon/amplitudes.hpp"
#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

// Which amplitude-constraint family a channel is checked against.
enum class FamilyTag {
    kTeleport,     // deterministic two-qubit teleportation
    kDenseCoding,  // sixteen-message superdense coding
    kQis,          // information splitting of an entangled pair
};

// The splitting family's bilinear relation admits two readings; see
// resolve_interpretation() in qis.hpp for the empirical resolution.
enum class QisInterpretation {
    kBothZero,   // corner and cross bilinears each vanish
    kEqualOnly,  // corner and cross bilinears agree, neither forced to zero
};

struct ConstraintFamily {
    FamilyTag tag = FamilyTag::kTeleport;
    QisInterpretation interpretation = QisInterpretation::kEqualOnly;
};

struct Residual {
    std::string name;
    double value = 0.0;
};

struct ConstraintReport {
    std::vector<Residual> residuals;
    bool pass = false;
    double tolerance = kDefaultTolerance;

    std::vector<std::string> failing_names() const;
    nlohmann::json to_json() const;
};

// Raised when a protocol is asked to run over a channel that fails its
// constraint family; carries the failing report.
class ChannelError : public Error {
  public:
    ChannelError(const std::string& message, ConstraintReport report);
    const ConstraintReport& report() const { return report_; }

  private:
    ConstraintReport report_;
};

// Raised by sample_amplitudes when the requested family/interpretation
// admits no (non-degenerate) solution.
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

// Evaluates each printed relation of the family, rearranged to zero, and
// reports the absolute residuals individually by name. Invariant under a
// global phase on all six amplitudes.
ConstraintReport check_constraints(const MagnonAmplitudes& w,
                                   const ConstraintFamily& family,
                                   double tolerance = kDefaultTolerance);

// Draws a channel from the family's solution manifold (analytic
// parameterization with randomized free parameters; residuals below
// kSamplerResidualBound). Deterministic per seed. Teleport-family samples
// additionally restrict the free phases so that every measurement branch is
// correctable by a product of two Pauli operators; generic phases satisfy
// the printed relations and give an orthonormal basis but admit no such
// product correction. With require_nondegenerate, families whose only
// solutions pin a measurement outcome raise InfeasibleError.
MagnonAmplitudes sample_amplitudes(const ConstraintFamily& family,
                                   std::uint64_t seed,
                                   bool require_nondegenerate = false);

std::string family_name(FamilyTag tag);
std::string interpretation_name(QisInterpretation interpretation);

}  // namespace magnon

#endif  // MAGNON_CONSTRAINTS_HPP
