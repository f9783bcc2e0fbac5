// Copyright 2026 The fastlocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fastlocc/constructions.hpp"

namespace fastlocc {

enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
};

/// Serialises a fixture to the JSON fixture format. Matrix entries keep full
/// double precision so that parsing the result reproduces the fixture exactly.
std::string fixture_to_json(const ExampleFixture& fixture);

/// Parses and validates a JSON fixture. Syntax errors report line and column,
/// schema errors the offending field path (e.g. $.v[2][0][1]); both throw
/// Error(parse_error). Spec validation failures propagate from the
/// constructing module.
ExampleFixture fixture_from_json(std::string_view text, const std::string& source = "<fixture>",
                                 double tol = kDefaultTol);

/// A path to an existing file (or anything ending in .json) is read as a
/// fixture file; otherwise `ref` names a builtin example.
ExampleFixture load_fixture(const std::string& ref, const FixtureParams& params = {},
                            double tol = kDefaultTol);

/// Entry point shared by the fastlocc executable and the tests. `args`
/// excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fastlocc
