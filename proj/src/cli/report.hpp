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
#include <vector>

#include <json.hpp>

#include "fastlocc/matrix.hpp"

namespace fastlocc::detail {

using Report = nlohmann::ordered_json;

/// Rounds to 12 significant digits so report text is stable across
/// platforms; -0 prints as 0.
double report_number(double x);
Report report_complex(cplx z);
Report report_complex_list(const std::vector<cplx>& zs);

void write_json(std::ostream& out, const Report& report);
/// Indented key: value rendering of a report for terminals.
void write_text(std::ostream& out, const Report& report);

}  // namespace fastlocc::detail
