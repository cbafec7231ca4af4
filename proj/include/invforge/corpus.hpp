#pragma once

// Registry of worked examples: a JSON manifest of cases, each naming an
// optional group file and a list of typed assertions. verify_example runs
// every assertion through the library and compares exactly.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invforge/cohomology.hpp"
#include "invforge/geometry.hpp"
#include "invforge/invariants.hpp"
#include "invforge/io.hpp"
#include "invforge/normalizer.hpp"

namespace invforge {

struct Assertion {
  std::string kind;
  json params = json::object();
  json expected;
  std::string basis;  // literature | derived | definition

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct ExampleCase {
  std::string id;
  std::string description;
  std::string topic;
  std::optional<std::string> group;  // path relative to the corpus directory
  bool stress = false;               // skipped by verify_all unless requested
  std::vector<Assertion> assertions;

  friend bool operator==(const ExampleCase&, const ExampleCase&) = default;
};

struct Manifest {
  std::vector<ExampleCase> cases;

  const ExampleCase& find(const std::string& id) const {
    for (const auto& c : cases)
      if (c.id == id) return c;
    throw Error("unknown example id '" + id + "'");
  }

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

inline json to_json(const Assertion& a) {
  return json{{"kind", a.kind}, {"params", a.params}, {"expected", a.expected}, {"basis", a.basis}};
}

inline json to_json(const ExampleCase& c) {
  json j{{"id", c.id}, {"description", c.description}, {"topic", c.topic}};
  j["group"] = c.group ? json(*c.group) : json(nullptr);
  if (c.stress) j["stress"] = true;
  j["assertions"] = json::array();
  for (const auto& a : c.assertions) j["assertions"].push_back(to_json(a));
  return j;
}

inline json to_json(const Manifest& m) {
  json cases = json::array();
  for (const auto& c : m.cases) cases.push_back(to_json(c));
  return json{{"cases", cases}};
}

inline Manifest manifest_from_json(const json& j) {
  Manifest m;
  try {
    for (const auto& jc : j.at("cases")) {
      ExampleCase c;
      c.id = jc.at("id").get<std::string>();
      c.description = jc.at("description").get<std::string>();
      c.topic = jc.value("topic", "");
      if (jc.contains("group") && !jc.at("group").is_null()) c.group = jc.at("group").get<std::string>();
      c.stress = jc.value("stress", false);
      for (const auto& ja : jc.at("assertions")) {
        Assertion a;
        a.kind = ja.at("kind").get<std::string>();
        a.params = ja.value("params", json::object());
        a.expected = ja.at("expected");
        a.basis = ja.at("basis").get<std::string>();
        c.assertions.push_back(std::move(a));
      }
      m.cases.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
  for (std::size_t i = 0; i < m.cases.size(); ++i)
    for (std::size_t k = i + 1; k < m.cases.size(); ++k)
      if (m.cases[i].id == m.cases[k].id) throw ParseError(0, "manifest: duplicate id '" + m.cases[i].id + "'");
  return m;
}

/// INVFORGE_CORPUS overrides the directory compiled in at build time.
inline std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("INVFORGE_CORPUS"); env && *env) return env;
#ifdef INVFORGE_CORPUS_DIR
  return INVFORGE_CORPUS_DIR;
#else
  return "corpus";
#endif
}

inline Manifest load_manifest(const std::filesystem::path& dir = corpus_dir()) {
  return manifest_from_json(read_json_file(dir / "manifest.json"));
}

struct AssertionResult {
  std::string kind;
  std::string basis;
  json params;
  json expected;
  json computed;
  bool passed = false;
  std::string error;
};

struct ExampleReport {
  std::string id;
  std::string description;
  bool passed = false;
  std::vector<AssertionResult> results;
};

inline json to_json(const AssertionResult& r) {
  json j{{"kind", r.kind}, {"basis", r.basis}, {"params", r.params}, {"expected", r.expected}, {"computed", r.computed}, {"passed", r.passed}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline json to_json(const ExampleReport& r) {
  json results = json::array();
  for (const auto& a : r.results) results.push_back(to_json(a));
  return json{{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"assertions", results}};
}

namespace detail {

/// Objects match when every expected key matches; everything else exactly.
inline bool json_matches(const json& expected, const json& computed) {
  if (expected.is_object()) {
    if (!computed.is_object()) return false;
    for (const auto& [k, v] : expected.items())
      if (!computed.contains(k) || !json_matches(v, computed.at(k))) return false;
    return true;
  }
  return expected == computed;
}

inline std::vector<std::vector<std::uint32_t>> sorted_support(const Polynomial& p) {
  std::vector<std::vector<std::uint32_t>> s;
  for (const auto& [m, c] : p.terms()) s.push_back(m);
  std::sort(s.begin(), s.end());
  return s;
}

/// Lazily computed per-case data shared by the assertions of one case.
class CaseContext {
 public:
  CaseContext(const ExampleCase& c, std::filesystem::path dir) : case_(c), dir_(std::move(dir)) {}

  const FiniteMatrixGroup& group() {
    if (!group_) {
      if (!case_.group) throw DomainError("assertion needs a group but case '" + case_.id + "' has none");
      group_ = load_group(dir_ / *case_.group);
    }
    return *group_;
  }

  const GeneratorSet& generators(std::optional<std::uint32_t> max_degree) {
    auto it = generators_.find(max_degree);
    if (it == generators_.end()) it = generators_.emplace(max_degree, minimal_generators(group(), max_degree)).first;
    return it->second;
  }

  const NormalizerReport& normalizer() {
    if (!normalizer_) normalizer_ = normalizer_report(group());
    return *normalizer_;
  }

  const Matrix& generator(const json& params) { return group().generators().at(params.value("generator", std::size_t{0})); }

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  const ExampleCase& case_;
  std::filesystem::path dir_;
  std::optional<FiniteMatrixGroup> group_;
  std::map<std::optional<std::uint32_t>, GeneratorSet> generators_;
  std::optional<NormalizerReport> normalizer_;
};

inline std::optional<std::uint32_t> optional_degree(const json& params, const char* key) {
  if (!params.contains(key)) return std::nullopt;
  return params.at(key).get<std::uint32_t>();
}

/// Computes the value an assertion is compared against.
inline json compute_assertion(const Assertion& a, CaseContext& ctx) {
  const json& p = a.params;
  const std::string& k = a.kind;
  if (k == "group_order") return ctx.group().order();
  if (k == "generator_degrees") return ctx.generators(optional_degree(p, "max_degree")).degrees;
  if (k == "degree_gcd") return ctx.generators(optional_degree(p, "max_degree")).e;
  if (k == "scaled_exponents") return scaled_torus_exponents(ctx.generators(optional_degree(p, "max_degree")));
  if (k == "relation") {
    const auto& gs = ctx.generators(optional_degree(p, "max_degree"));
    const auto rel = find_relation(gs, p.at("wdeg_max").get<std::uint32_t>());
    if (!rel) return nullptr;
    return json{{"weighted_degree", rel->weighted_degree}, {"support", sorted_support(rel->polynomial)}, {"relation", rel->to_string()}};
  }
  if (k == "molien_equals_hilbert") {
    const auto d = p.at("max_degree").get<std::uint32_t>();
    return molien_series(ctx.group(), d) == hilbert_dims(ctx.group(), d);
  }
  if (k == "commutant_dim") return ctx.normalizer().commutant_dim;
  if (k == "torus_split") return ctx.normalizer().torus_split;
  if (k == "outer_count") return ctx.normalizer().outer_count;
  if (k == "realized_outer_count") return ctx.normalizer().realized_outer.size();
  if (k == "outer_character_products") {
    const auto aut = automorphism_group(ctx.group());
    json out = json::array();
    for (std::size_t c = 1; c < aut.outer_order(); ++c)
      out.push_back(twisted_character_product(ctx.group(), aut.automorphisms[aut.class_representatives[c]]).to_string());
    return out;
  }
  if (k == "fixed_point_count") return projective_fixed_points(ctx.group()).points.size();
  if (k == "is_invariant") {
    const auto names = p.at("names").get<std::vector<std::string>>();
    return is_invariant(ctx.group(), parse_polynomial(p.at("poly").get<std::string>(), ctx.group().field(), names));
  }
  if (k == "polynomial_identity") {
    const auto names = p.at("names").get<std::vector<std::string>>();
    const Field f = ctx.group().field();
    std::vector<std::string> symbols;
    std::vector<Polynomial> images;
    for (const auto& [sym, text] : p.at("substitutions").items()) {
      symbols.push_back(sym);
      images.push_back(parse_polynomial(text.get<std::string>(), f, names));
    }
    const Polynomial expr = parse_polynomial(p.at("expression").get<std::string>(), f, symbols);
    return expr.substitute(images).to_string(names);
  }
  if (k == "char_poly") return char_poly(ctx.generator(p)).to_string({"x"});
  if (k == "matrix_order") {
    const Matrix& m = ctx.generator(p);
    const Matrix id = Matrix::identity(m.field(), m.rows());
    Matrix power = m;
    for (std::size_t e = 1; e <= 100000; ++e) {
      if (power == id) return e;
      power = power * m;
    }
    throw BoundExceeded("matrix order exceeds 100000");
  }
  if (k == "is_identity") {
    const Matrix& m = ctx.generator(p);
    return m == Matrix::identity(m.field(), m.rows());
  }
  if (k == "graded_aut") {
    const Field f = parse_field(p.at("field").get<std::string>());
    const auto r = graded_aut_of_An(parse_element(p.at("d").get<std::string>(), f), p.at("n").get<unsigned>());
    return json{{"split", r.split}, {"samples_ok", r.samples_ok}, {"samples_checked", r.samples_checked}, {"description", r.description}};
  }
  if (k == "claim51") {
    const Field f = parse_field(p.at("field").get<std::string>());
    const auto r = check_claim_51(parse_polynomial(p.at("poly").get<std::string>(), f, p.at("n").get<std::size_t>()));
    return json{{"total", r.total}, {"bound", r.bound.get_str()}, {"verdict", r.verdict}};
  }
  if (k == "parabolic") {
    const Field f = parse_field(p.at("field").get<std::string>());
    const auto n = p.at("n").get<std::size_t>();
    const Polynomial h = p.contains("poly") ? parse_polynomial(p.at("poly").get<std::string>(), f, n) : all_linear_forms_product(f, n);
    const auto r = check_parabolic_claim(h);
    return json{{"degree", r.mult.degree},
                {"max_multiplicity", r.mult.total},
                {"verdict", r.mult.verdict},
                {"lower_dim_degree", r.lower_dim_degree.get_str()},
                {"lower_dim_multiplicity", r.lower_dim_multiplicity.get_str()}};
  }
  if (k == "permmod") {
    const auto family = p.at("family").get<std::string>();
    const auto n = p.at("n").get<std::size_t>();
    const Field q = Field::rational();
    std::vector<Matrix> gens;
    if (family == "alternating") gens = alternating_permutation_generators(q, n);
    else if (family == "symmetric") gens = symmetric_permutation_generators(q, n);
    else if (family == "cyclic") gens = cyclic_permutation_generators(q, n);
    else throw DomainError("unknown permutation family '" + family + "'");
    return perm_module_irreducible(gens, n, p.at("p").get<std::uint64_t>());
  }
  if (k == "h1_count") return h1_classes(load_action(ctx.dir() / p.at("action").get<std::string>())).count();
  if (k == "square_classes") return square_class_forms(p.at("field").get<std::string>()).representatives.size();
  if (k == "rank_obstruction") {
    const auto r = rank_obstruction(ctx.group(), p.at("ell").get<std::size_t>());
    return json{{"projective_order", r.projective_order}, {"rank", r.rank}, {"required", r.required}, {"hypothesis_holds", r.hypothesis_holds}};
  }
  throw DomainError("unknown assertion kind '" + k + "'");
}

/// Claim-51 bounds are big integers; compare them through their decimal form.
inline json normalize_expected(const Assertion& a) {
  json e = a.expected;
  if (a.kind == "claim51" && e.is_object() && e.contains("bound") && e.at("bound").is_number_integer())
    e["bound"] = std::to_string(e.at("bound").get<long long>());
  return e;
}

inline bool assertion_passes(const Assertion& a, const json& computed, CaseContext& ctx) {
  if (a.kind == "char_poly" || a.kind == "polynomial_identity") {
    if (!computed.is_string()) return false;
    const Field f = ctx.group().field();
    const auto names = a.kind == "char_poly" ? std::vector<std::string>{"x"} : a.params.at("names").get<std::vector<std::string>>();
    return parse_polynomial(a.expected.get<std::string>(), f, names) == parse_polynomial(computed.get<std::string>(), f, names);
  }
  if (a.kind == "relation" && a.expected.is_object() && computed.is_object()) {
    auto support = a.expected.at("support").get<std::vector<std::vector<std::uint32_t>>>();
    std::sort(support.begin(), support.end());
    return computed.at("weighted_degree") == a.expected.at("weighted_degree") && json(support) == computed.at("support");
  }
  return json_matches(normalize_expected(a), computed);
}

}  // namespace detail

inline ExampleReport verify_example(const Manifest& m, const std::string& id, const std::filesystem::path& dir = corpus_dir()) {
  const ExampleCase& c = m.find(id);
  ExampleReport report;
  report.id = c.id;
  report.description = c.description;
  report.passed = true;
  detail::CaseContext ctx(c, dir);
  for (const auto& a : c.assertions) {
    AssertionResult r;
    r.kind = a.kind;
    r.basis = a.basis;
    r.params = a.params;
    r.expected = a.expected;
    try {
      r.computed = detail::compute_assertion(a, ctx);
      r.passed = detail::assertion_passes(a, r.computed, ctx);
    } catch (const std::exception& e) {
      r.error = e.what();
      r.passed = false;
    }
    report.passed = report.passed && r.passed;
    report.results.push_back(std::move(r));
  }
  return report;
}

/// Reports ordered by id; stress cases only when requested.
inline std::vector<ExampleReport> verify_all(const Manifest& m, bool include_stress = false, const std::filesystem::path& dir = corpus_dir()) {
  std::vector<std::string> ids;
  for (const auto& c : m.cases)
    if (include_stress || !c.stress) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  std::vector<ExampleReport> out;
  for (const auto& id : ids) out.push_back(verify_example(m, id, dir));
  return out;
}

struct ExampleListing {
  std::string id;
  std::string description;
  std::string topic;
  bool stress = false;
};

inline std::vector<ExampleListing> list_examples(const Manifest& m) {
  std::vector<ExampleListing> out;
  for (const auto& c : m.cases) out.push_back({c.id, c.description, c.topic, c.stress});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace invforge
