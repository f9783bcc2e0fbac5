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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace fastlocc::detail {
namespace {

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Report& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (!is_flat(x)) return false;
  return true;
}

std::string flat_text(const Report& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += flat_text(v[i]);
  }
  return s + "]";
}

void render(std::ostream& out, const Report& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (is_flat(x)) {
        out << pad << k << ": " << flat_text(x) << "\n";
      } else if (x.empty()) {
        out << pad << k << ": " << (x.is_array() ? "[]" : "{}") << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, x, indent + 1);
      }
    }
    return;
  }
  // array of structured items
  for (const auto& x : v) {
    if (is_flat(x)) {
      out << pad << "- " << flat_text(x) << "\n";
    } else {
      out << pad << "-\n";
      render(out, x, indent + 1);
    }
  }
}

}  // namespace

double report_number(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Report report_complex(cplx z) {
  return Report::array({report_number(z.real()), report_number(z.imag())});
}

Report report_complex_list(const std::vector<cplx>& zs) {
  Report out = Report::array();
  for (cplx z : zs) out.push_back(report_complex(z));
  return out;
}

void write_json(std::ostream& out, const Report& report) { out << report.dump(2) << "\n"; }

void write_text(std::ostream& out, const Report& report) { render(out, report, 0); }

}  // namespace fastlocc::detail
