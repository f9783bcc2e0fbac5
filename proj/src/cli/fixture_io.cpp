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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fastlocc/cli.hpp"
#include "fastlocc/error.hpp"

namespace fastlocc {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& source, const std::string& path,
                              const std::string& what) {
  throw Error(Errc::parse_error, source + ": field " + path + ": " + what);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrices_json(const std::vector<ComplexMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

json group_json(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupDescriptor::Kind::abelian:
      return {{"abelian", g.cycles}};
    case GroupDescriptor::Kind::dihedral:
      return {{"dihedral", g.n}};
    case GroupDescriptor::Kind::table:
      return {{"table", g.table}};
  }
  return {};
}

// Schema reader that carries the JSON path of the value it wraps.
class Reader {
 public:
  Reader(const json& value, std::string path, const std::string& source)
      : value_(value), path_(std::move(path)), source_(source) {}

  const std::string& path() const { return path_; }
  const json& value() const { return value_; }

  [[noreturn]] void fail(const std::string& what) const { field_error(source_, path_, what); }

  Reader at(const std::string& key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) field_error(source_, path_ + "." + key, "missing");
    return Reader(*it, path_ + "." + key, source_);
  }
  bool has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

  Reader at(std::size_t i) const {
    return Reader(value_.at(i), path_ + "[" + std::to_string(i) + "]", source_);
  }

  std::size_t array_size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  void only_keys(std::initializer_list<std::string_view> keys) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [k, _] : value_.items()) {
      bool known = false;
      for (auto allowed : keys) known = known || k == allowed;
      if (!known) field_error(source_, path_ + "." + k, "unknown field");
    }
  }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  std::size_t index() const {
    if (!value_.is_number_integer() || value_.get<long long>() < 0)
      fail("expected a non-negative integer");
    return value_.get<std::size_t>();
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out(array_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).index();
    return out;
  }

  double real() const {
    if (!value_.is_number()) fail("expected a number");
    return value_.get<double>();
  }

  // [re, im]; a bare number is read as a real value
  cplx complex() const {
    if (value_.is_number()) return {real(), 0.0};
    if (!value_.is_array()) fail("expected a number or [re, im]");
    if (array_size() != 2) fail("expected [re, im]");
    return {at(0).real(), at(1).real()};
  }

  std::vector<cplx> complex_list() const {
    std::vector<cplx> out(array_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).complex();
    return out;
  }

  ComplexMatrix matrix() const {
    const std::size_t rows = array_size();
    if (rows == 0) fail("empty matrix");
    const std::size_t cols = at(0).array_size();
    if (cols == 0) fail("empty matrix row");
    std::vector<cplx> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Reader row = at(r);
      if (row.array_size() != cols) row.fail("ragged matrix: expected " + std::to_string(cols) + " columns");
      for (std::size_t c = 0; c < cols; ++c) entries.push_back(row.at(c).complex());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
  }

  std::vector<ComplexMatrix> matrices() const {
    std::vector<ComplexMatrix> out;
    const std::size_t n = array_size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i).matrix());
    return out;
  }

 private:
  const json& value_;
  std::string path_;
  const std::string& source_;
};

GroupDescriptor read_group(const Reader& r) {
  if (!r.value().is_object() || r.value().size() != 1)
    r.fail(R"(expected exactly one of {"abelian": [...]}, {"dihedral": n}, {"table": [[...]]})");
  if (r.has("abelian")) {
    auto cycles = r.at("abelian").indices();
    if (cycles.empty()) r.at("abelian").fail("no cycles");
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (cycles[i] == 0) r.at("abelian").at(i).fail("cycle length must be positive");
    return GroupDescriptor::abelian(std::move(cycles));
  }
  if (r.has("dihedral")) {
    const std::size_t n = r.at("dihedral").index();
    if (n < 2) r.at("dihedral").fail("dihedral n must be at least 2");
    return GroupDescriptor::dihedral(n);
  }
  if (r.has("table")) {
    const Reader t = r.at("table");
    std::vector<std::vector<std::size_t>> rows(t.array_size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = t.at(i).indices();
    return GroupDescriptor::explicit_table(std::move(rows));
  }
  r.fail("unknown group kind");
}

FiniteGroupTable build_group(const GroupDescriptor& g, const Reader& r) {
  try {
    return g.build();
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

void expect_count(const Reader& r, std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    r.fail("expected " + std::to_string(want) + " " + what + ", got " + std::to_string(got));
}

}  // namespace

std::string fixture_to_json(const ExampleFixture& fixture) {
  json j;
  j["name"] = fixture.name;
  std::visit(
      [&](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ControlledUnitarySpec>) {
          j["kind"] = "controlled";
          j["group"] = group_json(fixture.group);
          j["subset"] = spec.subset;
          j["v"] = matrices_json(spec.v);
          if (!spec.projectors.empty()) j["projectors"] = matrices_json(spec.projectors);
        } else if constexpr (std::is_same_v<T, DoubleGroupSpec>) {
          j["kind"] = "double-group";
          j["group"] = group_json(fixture.group);
          j["u"] = matrices_json(spec.u);
          j["v"] = matrices_json(spec.v);
          json c = json::array();
          for (cplx z : spec.c) c.push_back(complex_json(z));
          j["c"] = std::move(c);
        } else {
          j["kind"] = "search";
          j["group"] = group_json(fixture.group);
          j["u"] = matrices_json(spec.u);
          j["v"] = matrices_json(spec.v);
        }
      },
      fixture.spec);
  return j.dump(2) + "\n";
}

ExampleFixture fixture_from_json(std::string_view text, const std::string& source, double tol) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::parse_error, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(col) + ": syntax error: " + e.what());
  }

  const Reader root(doc, "$", source);
  if (!doc.is_object()) root.fail("fixture must be a JSON object");
  const std::string kind = root.at("kind").string();
  ExampleFixture fx;
  fx.name = root.has("name") ? root.at("name").string() : std::filesystem::path(source).stem().string();
  fx.group = read_group(root.at("group"));
  const FiniteGroupTable table = build_group(fx.group, root.at("group"));
  const std::size_t n = table.order();

  if (kind == "controlled") {
    root.only_keys({"name", "kind", "group", "subset", "v", "projectors"});
    if (fx.group.kind != GroupDescriptor::Kind::abelian)
      root.at("group").fail("controlled fixtures need an abelian group");
    auto subset = root.at("subset").indices();
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] >= n) root.at("subset").at(i).fail("element out of range");
      if (!seen.insert(subset[i]).second) root.at("subset").at(i).fail("duplicate element");
    }
    if (subset.empty()) root.at("subset").fail("subset must be nonempty");
    auto v = root.at("v").matrices();
    if (v.size() != n && v.size() != subset.size())
      root.at("v").fail("expected " + std::to_string(n) + " or " + std::to_string(subset.size()) +
                        " matrices, got " + std::to_string(v.size()));
    std::vector<ComplexMatrix> projectors;
    if (root.has("projectors")) {
      projectors = root.at("projectors").matrices();
      expect_count(root.at("projectors"), projectors.size(), subset.size(), "projectors");
    }
    fx.spec = make_controlled_spec(AbelianCycleStructure(fx.group.cycles), std::move(subset),
                                   std::move(v), std::move(projectors), tol);
  } else if (kind == "double-group" || kind == "search") {
    if (kind == "search")
      root.only_keys({"name", "kind", "group", "u", "v"});
    else
      root.only_keys({"name", "kind", "group", "u", "v", "c"});
    auto u = root.at("u").matrices();
    auto v = root.at("v").matrices();
    expect_count(root.at("u"), u.size(), n, "matrices");
    expect_count(root.at("v"), v.size(), n, "matrices");
    if (kind == "search") {
      fx.spec = make_search_problem(table, std::move(u), std::move(v), tol);
    } else {
      auto c = root.at("c").complex_list();
      expect_count(root.at("c"), c.size(), n, "coefficients");
      fx.spec = make_double_spec(table, std::move(u), std::move(v), std::move(c), tol);
    }
  } else {
    root.at("kind").fail("expected \"controlled\", \"double-group\" or \"search\", got \"" + kind + "\"");
  }
  return fx;
}

ExampleFixture load_fixture(const std::string& ref, const FixtureParams& params, double tol) {
  const std::filesystem::path path(ref);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec) || path.extension() == ".json") {
    if (!params.empty())
      throw Error(Errc::invalid_input, "key=value parameters only apply to builtin examples");
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot read fixture file " + ref);
    std::stringstream buf;
    buf << in.rdbuf();
    return fixture_from_json(buf.str(), ref, tol);
  }
  return example_fixture(ref, params);
}

}  // namespace fastlocc
