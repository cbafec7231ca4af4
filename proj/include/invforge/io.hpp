#pragma once

// JSON file formats for matrix groups and finite actions.
//
// Group file:
//   {"name": "...", "field": "cyclotomic(20)", "dim": 2, "cap": 20000,
//    "generators": [[["a", "b"], ["c", "d"]], ...]}
// Entries use the element grammar of the declared field.
//
// Action file:
//   {"name": "...", "gamma": <group>, "module": <group>,
//    "gamma_generators": [1], "images": [[0, 3, 2, 1]] | "trivial": true
//    | "automorphisms": [k, ...]}
// where <group> is {"cyclic": n}, {"symmetric": n}, {"table": [[...]]} or
// {"matrix_group": "file.json"} (path relative to the action file), and
// "automorphisms" indexes the sorted automorphism list of the module.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invforge/cohomology.hpp"
#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/matrix.hpp"
#include "invforge/parse.hpp"

namespace invforge {

using json = nlohmann::json;

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, path.string() + ": " + e.what());
  }
}

struct GroupSpec {
  std::string name;
  std::string field;
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<std::string>>> generators;
  std::size_t cap = 20000;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline GroupSpec group_spec_from_json(const json& j) {
  GroupSpec s;
  try {
    s.name = j.value("name", "");
    s.field = j.at("field").get<std::string>();
    s.dim = j.at("dim").get<std::size_t>();
    s.cap = j.value("cap", std::size_t{20000});
    s.generators = j.at("generators").get<std::vector<std::vector<std::vector<std::string>>>>();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("group file: ") + e.what());
  }
  return s;
}

inline json to_json(const GroupSpec& s) {
  return json{{"name", s.name}, {"field", s.field}, {"dim", s.dim}, {"cap", s.cap}, {"generators", s.generators}};
}

inline GroupSpec load_group_spec(const std::filesystem::path& path) { return group_spec_from_json(read_json_file(path)); }

inline std::vector<Matrix> generator_matrices(const GroupSpec& s) {
  const Field f = parse_field(s.field);
  std::vector<Matrix> out;
  for (const auto& rows : s.generators) {
    if (rows.size() != s.dim) throw DomainError("generator of " + s.name + " has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(s.dim));
    std::vector<Vector> vs;
    for (const auto& row : rows) {
      if (row.size() != s.dim) throw DomainError("generator row of " + s.name + " has the wrong length");
      Vector v;
      for (const auto& e : row) v.push_back(parse_element(e, f));
      vs.push_back(std::move(v));
    }
    out.push_back(Matrix::from_rows(f, vs));
  }
  return out;
}

inline FiniteMatrixGroup build_group(const GroupSpec& s) {
  return FiniteMatrixGroup::close(parse_field(s.field), s.dim, generator_matrices(s), s.cap);
}

inline FiniteMatrixGroup load_group(const std::filesystem::path& path) { return build_group(load_group_spec(path)); }

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

namespace detail {

inline AbstractGroup abstract_group_from_json(const json& j, const std::filesystem::path& base) {
  if (j.contains("cyclic")) return AbstractGroup::cyclic(j.at("cyclic").get<std::size_t>());
  if (j.contains("symmetric")) return AbstractGroup::symmetric(j.at("symmetric").get<std::size_t>());
  if (j.contains("table")) return AbstractGroup::from_table(j.at("table").get<std::vector<std::vector<AbstractGroup::Index>>>());
  if (j.contains("matrix_group")) return load_group(base / j.at("matrix_group").get<std::string>()).abstract();
  throw ParseError(0, "group entry needs one of cyclic, symmetric, table, matrix_group");
}

}  // namespace detail

inline FiniteAction action_from_json(const json& j, const std::filesystem::path& base = {}) {
  try {
    AbstractGroup gamma = detail::abstract_group_from_json(j.at("gamma"), base);
    AbstractGroup m = detail::abstract_group_from_json(j.at("module"), base);
    if (j.value("trivial", false)) return FiniteAction::trivial(std::move(gamma), std::move(m));
    const auto gens = j.at("gamma_generators").get<std::vector<AbstractGroup::Index>>();
    std::vector<FiniteAction::Perm> images;
    if (j.contains("images")) {
      images = j.at("images").get<std::vector<FiniteAction::Perm>>();
    } else {
      const auto aut = automorphism_group(m);
      for (auto k : j.at("automorphisms").get<std::vector<std::size_t>>()) {
        if (k >= aut.order()) throw DomainError("automorphism index " + std::to_string(k) + " out of range");
        images.push_back(aut.automorphisms[k].image);
      }
    }
    return FiniteAction::from_generators(std::move(gamma), std::move(m), gens, images);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("action file: ") + e.what());
  }
}

inline FiniteAction load_action(const std::filesystem::path& path) {
  return action_from_json(read_json_file(path), path.parent_path());
}

}  // namespace invforge
