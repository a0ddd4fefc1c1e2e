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

#ifndef MAGNON_CLI_HPP
#define MAGNON_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace magnon {

// Command-line front end. `args` excludes the program name. Returns the
// process exit code: 0 when the requested run passes, 1 when a protocol or
// constraint check fails (including infeasible sampling), 2 on usage or
// input errors. Reports go to `out`; diagnostics for usage errors go to
// `err`.
//
// Subcommands: check, sample, teleport, dense, qis, evolve, resolve-eq13.
// Every subcommand accepts --format json|text, --output FILE,
// --reproducible (suppresses the generated_at timestamp), --tolerance,
// --fidelity-tolerance, --seed, and --interpretation equal-only|both-zero;
// channel-consuming subcommands take exactly one amplitude source out of
// --amplitudes <inline JSON | uniform | @file | @-> and --sample.
int run_cli(const std::vector<std::string>& args,
            std::ostream& out,
            std::ostream& err);

}  // namespace magnon

#endif  // MAGNON_CLI_HPP
