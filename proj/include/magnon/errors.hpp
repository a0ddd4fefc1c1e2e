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

#ifndef MAGNON_ERRORS_HPP
#define MAGNON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magnon {

// Base class of all library exceptions.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Invalid argument values: dimension mismatches, empty index sets, bad ranges.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

// Qubit or table index out of range, or repeated where distinct indices are required.
class IndexError : public Error {
  public:
    using Error::Error;
};

// A matrix that must be unitary is not, beyond tolerance.
class UnitarityError : public Error {
  public:
    using Error::Error;
};

// Amplitudes whose squared magnitudes do not sum to one, beyond the rescale window.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

// A density matrix failing hermiticity, unit trace, or positivity.
class MatrixError : public Error {
  public:
    using Error::Error;
};

// A measurement basis that is not orthonormal, is degenerate, or has the wrong size.
class BasisError : public Error {
  public:
    using Error::Error;
};

}  // namespace magnon

#endif  // MAGNON_ERRORS_HPP
