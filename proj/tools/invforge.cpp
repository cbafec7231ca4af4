// invforge: command-line front end. One subcommand per operation; --machine
// switches the output to a single JSON document on stdout.
//
// Exit codes: 0 success with every verdict true, 1 computation error or a
// false verdict, 2 usage error (unknown subcommand, bad flags).

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invforge/invforge.hpp"

using namespace invforge;

namespace {

struct CommandResult {
  json inputs = json::object();
  json outputs = json::object();
  bool verdict = true;
  std::vector<std::string> lines;  // human-readable rendering
};

std::string join(const auto& values, const char* sep = ", ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : sep) << v;
    first = false;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// F_q for a prime power q: F_p, or F_p[z]/(m) with the first monic
/// irreducible m of degree k in base-p order of its lower coefficients.
Field field_of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::size_t k = 0;
  for (std::uint64_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw DomainError(std::to_string(q) + " is not a prime power");
    ++k;
  }
  if (k == 1) return Field::finite(p);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::int64_t> m(k + 1, 0);
    m[k] = 1;
    std::uint64_t x = code;
    for (std::size_t i = 0; i < k; ++i, x /= p) m[i] = static_cast<std::int64_t>(x % p);
    if (m[0] == 0) continue;
    Polynomial poly(Field::finite(p), 1);
    for (std::size_t i = 0; i <= k; ++i)
      if (m[i]) poly.add_term({static_cast<std::uint32_t>(i)}, Field::finite(p).from_int(m[i]));
    if (is_irreducible_mod_p(poly)) return Field::finite(p, m);
  }
  throw DomainError("internal: no irreducible polynomial found");
}

json group_summary(const FiniteMatrixGroup& g, const std::string& path) {
  return json{{"file", path}, {"field", g.field()->name()}, {"dim", g.dim()}, {"order", g.order()}};
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void render_mult(CommandResult& r, const MultReport& m, const char* total_label) {
  r.outputs["degree"] = m.degree;
  r.outputs[total_label] = m.total;
  r.outputs["bound"] = m.bound.get_str();
  r.outputs["verdict"] = m.verdict;
  json pts = json::array();
  for (const auto& pm : m.points) {
    std::vector<std::string> coords;
    for (const auto& c : pm.point) coords.push_back(c.to_string());
    pts.push_back(json{{"point", coords}, {"multiplicity", pm.multiplicity}});
  }
  r.outputs["points"] = pts;
  r.verdict = m.verdict;
  r.lines.push_back("polynomial: " + m.polynomial);
  r.lines.push_back("degree: " + std::to_string(m.degree));
  r.lines.push_back(std::string(total_label) + ": " + std::to_string(m.total));
  r.lines.push_back("bound: " + m.bound.get_str());
  r.lines.push_back("points with positive multiplicity: " + std::to_string(m.points.size()));
  r.lines.push_back("verdict: " + std::string(m.verdict ? "true" : "false"));
}

void emit(const std::string& command, const CommandResult& r, int code, bool machine) {
  if (machine) {
    json out{{"command", command}, {"inputs", r.inputs}, {"outputs", r.outputs}, {"exit_code", code}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invforge: invariant rings, normalizers and finite-geometry checks for finite matrix groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "emit one JSON document instead of tables");

  std::string group_file, action_file, poly_text, field_spec, example_id, family;
  std::uint32_t max_degree = 12, wdeg_max = 0;
  std::optional<std::uint32_t> gen_max_degree;
  std::size_t ell = 0, aut_bound = 400, q = 0, n = 0;
  std::uint64_t prime = 0;
  bool verify_all_flag = false, stress = false;

  std::map<std::string, std::function<CommandResult()>> handlers;
  auto need_group = [&](CLI::App* sub) { sub->add_option("--group", group_file, "group file (JSON)")->required()->check(CLI::ExistingFile); };

  auto* info = app.add_subcommand("info", "order, center, pseudo-reflections, irreducibility, diagonalizability");
  need_group(info);
  handlers["info"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    const auto refl = pseudo_reflections(g);
    const bool irr = is_absolutely_irreducible(g);
    const bool diag = is_diagonalizable_over_k(g);
    r.outputs = json{{"order", g.order()},
                     {"center_order", g.center().size()},
                     {"abelian", g.is_abelian()},
                     {"pseudo_reflections", refl.size()},
                     {"reflection_subgroup_order", reflection_subgroup(g).order()},
                     {"absolutely_irreducible", irr},
                     {"diagonalizable_over_field", diag}};
    r.lines = {"order: " + std::to_string(g.order()), "center order: " + std::to_string(g.center().size()),
               "abelian: " + yes_no(g.is_abelian()), "pseudo-reflections: " + std::to_string(refl.size()),
               "reflection subgroup order: " + std::to_string(reflection_subgroup(g).order()),
               "absolutely irreducible: " + yes_no(irr), "diagonalizable over the field: " + yes_no(diag)};
    return r;
  };

  auto* hilbert = app.add_subcommand("hilbert", "dimensions of invariant spaces by linear algebra");
  need_group(hilbert);
  hilbert->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();
  auto* molien = app.add_subcommand("molien", "Molien series coefficients (characteristic 0)");
  need_group(molien);
  molien->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();
  auto series = [&](bool use_molien) {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    r.inputs["max_degree"] = max_degree;
    const auto dims = use_molien ? molien_series(g, max_degree) : hilbert_dims(g, max_degree);
    r.outputs["dims"] = dims;
    r.lines.push_back("degree: dimension");
    for (std::size_t d = 0; d < dims.size(); ++d) r.lines.push_back(std::to_string(d) + ": " + std::to_string(dims[d]));
    return r;
  };
  handlers["hilbert"] = [&] { return series(false); };
  handlers["molien"] = [&] { return series(true); };

  auto* gens = app.add_subcommand("generators", "minimal homogeneous generators of the invariant ring");
  need_group(gens);
  gens->add_option("--max-degree", gen_max_degree, "degree bound (default |G|; required in the modular case)");
  handlers["generators"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    if (gen_max_degree) r.inputs["max_degree"] = *gen_max_degree;
    const auto gs = minimal_generators(g, gen_max_degree);
    const auto scaled = scaled_torus_exponents(gs);
    r.outputs = json{{"degrees", gs.degrees}, {"e", gs.e}, {"scaled_exponents", scaled}, {"degree_bound", gs.degree_bound},
                     {"generators", poly_strings(gs.generators)}};
    r.lines = {"degrees: " + join(gs.degrees), "e: " + std::to_string(gs.e), "scaled exponents: " + join(scaled),
               "degree bound: " + std::to_string(gs.degree_bound)};
    const auto names = gs.symbol_names();
    for (std::size_t i = 0; i < gs.generators.size(); ++i) r.lines.push_back(names[i] + " = " + gs.generators[i].to_string());
    return r;
  };

  auto* relation = app.add_subcommand("relation", "lowest weighted-degree relation among the generators");
  need_group(relation);
  relation->add_option("--wdeg-max", wdeg_max, "largest weighted degree to search")->required();
  relation->add_option("--max-degree", gen_max_degree, "degree bound for the generators");
  handlers["relation"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    r.inputs["wdeg_max"] = wdeg_max;
    const auto gs = minimal_generators(g, gen_max_degree);
    const auto rel = find_relation(gs, wdeg_max);
    r.outputs["degrees"] = gs.degrees;
    if (rel) {
      r.outputs["relation"] = rel->to_string();
      r.outputs["weighted_degree"] = rel->weighted_degree;
      r.lines = {"degrees: " + join(gs.degrees), "weighted degree: " + std::to_string(rel->weighted_degree), "relation: " + rel->to_string() + " = 0"};
    } else {
      r.outputs["relation"] = nullptr;
      r.lines = {"degrees: " + join(gs.degrees), "no relation up to weighted degree " + std::to_string(wdeg_max)};
    }
    return r;
  };

  auto* normalizer = app.add_subcommand("normalizer", "torus part and realized outer automorphisms of N(G, GL_n)/G");
  need_group(normalizer);
  normalizer->add_option("--aut-bound", aut_bound, "largest automorphism group to enumerate")->capture_default_str();
  handlers["normalizer"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    const auto rep = normalizer_report(g, aut_bound);
    json realized = json::array();
    for (const auto& ro : rep.realized_outer)
      realized.push_back(json{{"outer_class", ro.outer_class}, {"intertwiner", matrix_to_json(ro.intertwiner)}});
    r.outputs = json{{"group_order", rep.group_order},
                     {"center_order", rep.center_order},
                     {"commutant_dim", rep.commutant_dim},
                     {"commutant_commutative", rep.commutant_commutative},
                     {"torus_split", rep.torus_split},
                     {"torus_rank", rep.torus_rank},
                     {"automorphism_count", rep.automorphism_count},
                     {"inner_count", rep.inner_count},
                     {"outer_count", rep.outer_count},
                     {"realized_outer", realized},
                     {"realized_outer_order", rep.realized_outer_order},
                     {"notes", rep.notes}};
    r.lines = {"commutant dimension: " + std::to_string(rep.commutant_dim), "torus split: " + yes_no(rep.torus_split),
               "automorphisms: " + std::to_string(rep.automorphism_count) + " (inner " + std::to_string(rep.inner_count) + ")",
               "outer classes: " + std::to_string(rep.outer_count),
               "realized outer classes (incl. trivial): " + std::to_string(rep.realized_outer_order)};
    for (const auto& note : rep.notes) r.lines.push_back("note: " + note);
    return r;
  };

  auto* fixed = app.add_subcommand("fixed-points", "fixed points of the induced action on projective space");
  need_group(fixed);
  handlers["fixed-points"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    const auto fp = projective_fixed_points(g);
    json pts = json::array();
    for (const auto& p : fp.points) {
      std::vector<std::string> coords;
      for (const auto& c : p.coordinates()) coords.push_back(c.to_string());
      pts.push_back(coords);
      r.lines.push_back(p.to_string());
    }
    std::vector<std::size_t> dims;
    for (const auto& s : fp.positive_dimensional) dims.push_back(s.dim());
    r.outputs = json{{"points", pts}, {"fixed_linear_subspace_dims", dims}};
    r.lines.insert(r.lines.begin(), "isolated fixed points: " + std::to_string(fp.points.size()));
    if (!dims.empty()) r.lines.push_back("fixed linear subspaces of dimensions: " + join(dims));
    return r;
  };

  auto* rank = app.add_subcommand("rank", "elementary abelian l-rank of G modulo scalars against n - 1");
  need_group(rank);
  rank->add_option("--ell", ell, "prime l")->required();
  handlers["rank"] = [&] {
    CommandResult r;
    const auto g = load_group(group_file);
    r.inputs = group_summary(g, group_file);
    r.inputs["ell"] = ell;
    const auto rep = rank_obstruction(g, ell);
    r.outputs = json{{"scalar_order", rep.scalar_order}, {"projective_order", rep.projective_order}, {"rank", rep.rank},
                     {"required", rep.required}, {"hypothesis_holds", rep.hypothesis_holds}};
    r.verdict = rep.hypothesis_holds;
    r.lines = {"order modulo scalars: " + std::to_string(rep.projective_order), "rank: " + std::to_string(rep.rank),
               "required (n - 1): " + std::to_string(rep.required), "hypothesis holds: " + yes_no(rep.hypothesis_holds)};
    return r;
  };

  auto* permmod = app.add_subcommand("permmod", "irreducibility of the deleted permutation module over F_p");
  permmod->add_option("--group", group_file, "permutation group file (JSON)")->check(CLI::ExistingFile);
  permmod->add_option("--family", family, "alternating, symmetric or cyclic (instead of --group)");
  permmod->add_option("--n", n, "degree for --family");
  permmod->add_option("--p", prime, "prime p")->required();
  handlers["permmod"] = [&] {
    CommandResult r;
    std::vector<Matrix> mats;
    std::size_t degree = 0;
    if (!group_file.empty()) {
      const auto spec = load_group_spec(group_file);
      mats = generator_matrices(spec);
      degree = spec.dim;
      r.inputs["group"] = group_file;
    } else {
      const Field q = Field::rational();
      if (family == "alternating") mats = alternating_permutation_generators(q, n);
      else if (family == "symmetric") mats = symmetric_permutation_generators(q, n);
      else if (family == "cyclic") mats = cyclic_permutation_generators(q, n);
      else throw DomainError("permmod needs --group or --family {alternating, symmetric, cyclic} with --n");
      degree = n;
      r.inputs["family"] = family;
      r.inputs["n"] = n;
    }
    r.inputs["p"] = prime;
    const bool irr = perm_module_irreducible(mats, degree, prime);
    r.outputs["irreducible"] = irr;
    r.outputs["module"] = degree % prime == 0 ? "quotient by (1,...,1)" : "sum-zero submodule";
    r.verdict = irr;
    r.lines = {"module: " + r.outputs["module"].get<std::string>(), "irreducible: " + yes_no(irr)};
    return r;
  };

  auto finite_field_options = [&](CLI::App* sub) {
    sub->add_option("--q", q, "field order (prime power)");
    sub->add_option("--field", field_spec, "field spec (instead of --q)");
    sub->add_option("--n", n, "number of variables")->required();
  };
  auto chosen_field = [&]() { return field_spec.empty() ? field_of_order(q) : parse_field(field_spec); };

  auto* claim51 = app.add_subcommand("claim51", "sum of multiplicities over F_q^n against q^(n-1) * deg f");
  claim51->add_option("--poly", poly_text, "polynomial")->required();
  finite_field_options(claim51);
  handlers["claim51"] = [&] {
    CommandResult r;
    const Field f = chosen_field();
    r.inputs = json{{"poly", poly_text}, {"field", f->name()}, {"n", n}};
    render_mult(r, check_claim_51(parse_polynomial(poly_text, f, n)), "total");
    return r;
  };

  auto* parabolic = app.add_subcommand("parabolic", "largest multiplicity off (x_1 = 0) for a parabolic-invariant hypersurface");
  parabolic->add_option("--poly", poly_text, "homogeneous polynomial (default: product of all linear forms)");
  finite_field_options(parabolic);
  handlers["parabolic"] = [&] {
    CommandResult r;
    const Field f = chosen_field();
    r.inputs = json{{"poly", poly_text.empty() ? json("all linear forms") : json(poly_text)}, {"field", f->name()}, {"n", n}};
    const Polynomial h = poly_text.empty() ? all_linear_forms_product(f, n) : parse_polynomial(poly_text, f, n);
    const auto rep = check_parabolic_claim(h);
    render_mult(r, rep.mult, "max_multiplicity");
    r.outputs["lower_dim_degree"] = rep.lower_dim_degree.get_str();
    r.outputs["lower_dim_multiplicity"] = rep.lower_dim_multiplicity.get_str();
    r.lines.push_back("all linear forms in n - 1 variables: degree " + rep.lower_dim_degree.get_str() + ", multiplicity " +
                      rep.lower_dim_multiplicity.get_str());
    return r;
  };

  auto* h1 = app.add_subcommand("h1", "nonabelian H^1 of a finite action");
  h1->add_option("--action", action_file, "action file (JSON)")->required()->check(CLI::ExistingFile);
  handlers["h1"] = [&] {
    CommandResult r;
    r.inputs["action"] = action_file;
    const auto a = load_action(action_file);
    const auto cls = h1_classes(a);
    r.outputs = json{{"classes", cls.count()}, {"cocycles", cls.cocycle_count}, {"class_sizes", cls.class_sizes},
                     {"representatives", cls.representatives}, {"note", h1_trivial_for_unipotent_note()}};
    r.lines = {"classes: " + std::to_string(cls.count()), "cocycles: " + std::to_string(cls.cocycle_count)};
    for (const auto& rep : cls.representatives) r.lines.push_back("representative: [" + join(rep) + "]");
    return r;
  };

  auto* squares = app.add_subcommand("square-classes", "representatives of k^x / (k^x)^2 and the forms they index");
  squares->add_option("--field", field_spec, "reals or a finite field spec")->required();
  handlers["square-classes"] = [&] {
    CommandResult r;
    r.inputs["field"] = field_spec;
    const auto sc = square_class_forms(field_spec);
    r.outputs = json{{"representatives", sc.representatives}, {"forms", sc.forms}};
    r.lines = {"classes: " + std::to_string(sc.representatives.size())};
    for (std::size_t i = 0; i < sc.forms.size(); ++i) r.lines.push_back(sc.representatives[i] + ": " + sc.forms[i]);
    return r;
  };

  auto* verify = app.add_subcommand("verify", "run the assertions of a registered example");
  verify->add_option("id", example_id, "example id");
  verify->add_flag("--all", verify_all_flag, "verify every example");
  verify->add_flag("--stress", stress, "with --all, include stress cases");
  handlers["verify"] = [&] {
    CommandResult r;
    const auto m = load_manifest();
    std::vector<ExampleReport> reports;
    if (verify_all_flag) {
      reports = verify_all(m, stress);
    } else if (!example_id.empty()) {
      reports.push_back(verify_example(m, example_id));
    } else {
      throw DomainError("verify needs an example id or --all");
    }
    r.inputs = json{{"id", example_id}, {"all", verify_all_flag}, {"stress", stress}};
    json out = json::array();
    std::size_t passed = 0;
    for (const auto& rep : reports) {
      out.push_back(to_json(rep));
      passed += rep.passed;
      r.lines.push_back(std::string(rep.passed ? "PASS " : "FAIL ") + rep.id + "  " + rep.description);
      for (const auto& a : rep.results)
        r.lines.push_back(std::string("    ") + (a.passed ? "ok   " : "FAIL ") + a.kind + " [" + a.basis + "] expected " + a.expected.dump() +
                          " computed " + a.computed.dump() + (a.error.empty() ? "" : " error: " + a.error));
    }
    r.outputs = json{{"examples", out}, {"passed", passed}, {"total", reports.size()}};
    r.lines.push_back(std::to_string(passed) + "/" + std::to_string(reports.size()) + " examples pass");
    r.verdict = passed == reports.size();
    return r;
  };

  app.add_subcommand("list-examples", "list the registered examples");
  handlers["list-examples"] = [&] {
    CommandResult r;
    json out = json::array();
    for (const auto& e : list_examples(load_manifest())) {
      out.push_back(json{{"id", e.id}, {"description", e.description}, {"topic", e.topic}, {"stress", e.stress}});
      r.lines.push_back(e.id + "  " + e.description + (e.stress ? "  (stress)" : ""));
    }
    r.outputs["examples"] = out;
    return r;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const CommandResult r = handlers.at(command)();
    const int code = r.verdict ? 0 : 1;
    emit(command, r, code, machine);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "invforge " << command << ": " << e.what() << "\n";
    if (machine) std::cout << json{{"command", command}, {"error", e.what()}, {"exit_code", 1}}.dump(2) << "\n";
    return 1;
  }
}
