#pragma once

// Graded invariant rings k[x]^G of finite matrix groups.
//
// A matrix g acts on polynomials by substitution, x_i ↦ Σ_j g_ij x_j. The
// degree-d action ρ_d(g) is written on monomials_of_degree(n, d), i.e. the
// lexicographically descending monomial basis; column k holds the image of
// monomial k. Invariance under every generator is invariance under G, so the
// convention does not affect any invariant space.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/matrix.hpp"
#include "invforge/parallel.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

using GradedDims = std::vector<std::size_t>;

/// Images of the variables under x_i ↦ Σ_j g_ij x_j.
inline std::vector<Polynomial> linear_images(const Matrix& g) {
  const std::size_t n = g.rows();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(g.field(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m(n, 0);
      m[j] = 1;
      p.add_term(m, g(i, j));
    }
    images.push_back(std::move(p));
  }
  return images;
}

/// f ∘ g.
inline Polynomial act(const Matrix& g, const Polynomial& f) { return f.substitute(linear_images(g)); }

/// ρ_d(g) on the lex-descending degree-d monomial basis.
inline Matrix degree_action(const Matrix& g, std::uint32_t d) {
  const std::size_t n = g.rows();
  const auto images = linear_images(g);
  // Images of all monomials of the current degree, built one variable at a time.
  std::map<Monomial, Polynomial, std::greater<Monomial>> current{{Monomial(n, 0), Polynomial::constant(g.field().one(), n)}};
  for (std::uint32_t k = 1; k <= d; ++k) {
    std::map<Monomial, Polynomial, std::greater<Monomial>> next;
    for (const auto& m : monomials_of_degree(n, k)) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      Monomial lower = m;
      --lower[i];
      next.emplace(m, current.at(lower) * images[i]);
    }
    current = std::move(next);
  }
  const auto basis = monomials_of_degree(n, d);
  Matrix rho(g.field(), basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto c = current.at(basis[k]).coordinates(basis);
    for (std::size_t r = 0; r < basis.size(); ++r) rho(r, k) = c[r];
  }
  return rho;
}

/// Basis of (k[x]^G)_d: kernel of the stacked ρ_d(gen) - I, valid in every characteristic.
inline std::vector<Polynomial> invariant_space(const FiniteMatrixGroup& g, std::uint32_t d) {
  const std::size_t n = g.dim();
  const auto basis = monomials_of_degree(n, d);
  const std::size_t N = basis.size();
  std::vector<Matrix> blocks;
  for (const auto& gen : g.generators()) blocks.push_back(degree_action(gen, d) - Matrix::identity(g.field(), N));
  const Subspace fixed = blocks.empty() ? Subspace::whole(g.field(), N) : kernel(Matrix::stack(g.field(), N, blocks));
  std::vector<Polynomial> out;
  for (const auto& v : fixed.basis_vectors()) out.push_back(Polynomial::from_coordinates(g.field(), n, basis, v));
  return out;
}

inline GradedDims hilbert_dims(const FiniteMatrixGroup& g, std::uint32_t d_max) {
  GradedDims dims;
  for (std::uint32_t d = 0; d <= d_max; ++d) dims.push_back(invariant_space(g, d).size());
  return dims;
}

namespace detail {

/// Power series 1/a(t) to order d_max; a(0) must be invertible.
inline std::vector<FieldElement> series_inverse(const std::vector<FieldElement>& a, std::size_t d_max) {
  const FieldElement inv0 = a.at(0).inverse();
  std::vector<FieldElement> b(d_max + 1, a[0].field().zero());
  b[0] = inv0;
  for (std::size_t k = 1; k <= d_max; ++k) {
    FieldElement acc = a[0].field().zero();
    for (std::size_t j = 1; j <= std::min(k, a.size() - 1); ++j) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return b;
}

inline std::size_t as_count(const FieldElement& e, const char* what) {
  if (!e.is_prime_field_element()) throw DomainError(std::string("internal: non-rational ") + what);
  const Rational r = e.rational_value();
  if (r.get_den() != 1 || r < 0) throw DomainError(std::string("internal: non-integral ") + what);
  return r.get_num().get_ui();
}

}  // namespace detail

/// Coefficients of (1/|G|) Σ_g 1/det(I - t·g) to degree d_max (characteristic 0).
/// Elements with equal characteristic polynomials contribute equal series and
/// are grouped before the exact inversion.
inline GradedDims molien_series(const FiniteMatrixGroup& g, std::uint32_t d_max) {
  if (g.field().characteristic() != 0) throw DomainError("Molien series is only available in characteristic 0");
  const auto polys = parallel_map(g.order(), [&](std::size_t i) { return dense_coefficients(char_poly(g.element(i))); });
  std::map<std::vector<FieldElement>, std::size_t> classes;
  for (const auto& c : polys) ++classes[c];
  std::vector<FieldElement> total(d_max + 1, g.field().zero());
  for (const auto& [c, count] : classes) {
    // det(I - t g) is the reversed characteristic polynomial.
    std::vector<FieldElement> rev(c.rbegin(), c.rend());
    const auto s = detail::series_inverse(rev, d_max);
    const FieldElement w = g.field().from_int(static_cast<long>(count));
    for (std::size_t k = 0; k <= d_max; ++k) total[k] += w * s[k];
  }
  GradedDims out;
  const FieldElement inv_order = g.field().from_int(static_cast<long>(g.order())).inverse();
  for (const auto& t : total) out.push_back(detail::as_count(t * inv_order, "Molien coefficient"));
  return out;
}

/// (1/|G|) Σ_g f∘g; requires char k ∤ |G|.
inline Polynomial reynolds(const FiniteMatrixGroup& g, const Polynomial& f) {
  const auto p = g.field().characteristic();
  if (p != 0 && g.order() % p == 0) throw DomainError("Reynolds operator needs char k not dividing |G|");
  const auto images = parallel_map(g.order(), [&](std::size_t i) { return act(g.element(i), f); });
  Polynomial acc(g.field(), g.dim());
  for (const auto& im : images) acc += im;
  return acc * g.field().from_int(static_cast<long>(g.order())).inverse();
}

inline bool is_invariant(const FiniteMatrixGroup& g, const Polynomial& f) {
  for (const auto& gen : g.generators())
    if (act(gen, f) != f) return false;
  return true;
}

/// Minimal homogeneous generators of k[x]^G up to a degree bound.
struct GeneratorSet {
  Field field;
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;  // ascending degree
  std::vector<std::uint32_t> degrees;
  std::uint32_t e = 0;                 // gcd of the degrees (0 when there are none)
  std::uint32_t degree_bound = 0;
  GradedDims hilbert;                  // dim (k[x]^G)_d for d = 0..degree_bound

  std::vector<std::string> symbol_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("y" + std::to_string(i + 1));
    return names;
  }
};

namespace detail {

inline std::uint32_t gcd_of(const std::vector<std::uint32_t>& v) {
  std::uint32_t g = 0;
  for (auto d : v) g = std::gcd(g, d);
  return g;
}

}  // namespace detail

/// Degree by degree: the new generators in degree d complement the span of
/// products of earlier generators inside (k[x]^G)_d. They are the rref basis
/// vectors of the invariant space that enlarge that span, in basis order. In
/// characteristic 0 the Molien series gives the target dimension, so the
/// invariant space is solved only in degrees where products fall short.
/// Without an explicit bound, |G| is used (requires char k ∤ |G|).
inline GeneratorSet minimal_generators(const FiniteMatrixGroup& g, std::optional<std::uint32_t> d_max = std::nullopt) {
  const auto p = g.field().characteristic();
  const bool modular = p != 0 && g.order() % p == 0;
  if (!d_max) {
    if (modular) throw DomainError("minimal_generators: the modular case needs an explicit degree bound");
    d_max = static_cast<std::uint32_t>(g.order());
  }
  const std::size_t n = g.dim();
  const Field f = g.field();
  GeneratorSet gs;
  gs.field = f;
  gs.nvars = n;
  gs.degree_bound = *d_max;
  std::optional<GradedDims> target;
  if (p == 0) target = molien_series(g, *d_max);

  // Basis polynomials of the subalgebra generated so far, per degree.
  std::vector<std::vector<Polynomial>> algebra(*d_max + 1);
  algebra[0].push_back(Polynomial::constant(f.one(), n));
  gs.hilbert.push_back(1);
  for (std::uint32_t d = 1; d <= *d_max; ++d) {
    const auto basis = monomials_of_degree(n, d);
    std::vector<Vector> rows;
    std::vector<Polynomial> span;
    std::size_t rank = 0;
    auto try_add = [&](Polynomial poly) {
      auto coords = poly.coordinates(basis);
      rows.push_back(coords);
      const std::size_t r = Matrix::from_rows(f, rows).rank();
      if (r > rank) {
        rank = r;
        span.push_back(std::move(poly));
        return true;
      }
      rows.pop_back();
      return false;
    };
    for (std::size_t i = 0; i < gs.generators.size(); ++i) {
      const auto di = gs.degrees[i];
      if (di > d) break;
      for (const auto& a : algebra[d - di]) {
        if (target && rank == (*target)[d]) break;
        try_add(gs.generators[i] * a);
      }
    }
    std::size_t h = 0;
    if (target && rank == (*target)[d]) {
      h = rank;
    } else {
      const auto space = invariant_space(g, d);
      h = space.size();
      if (target && h != (*target)[d]) throw DomainError("internal: invariant dimension disagrees with the Molien series");
      for (const auto& v : space) {
        if (rank == h) break;
        if (try_add(v)) {
          gs.generators.push_back(v);
          gs.degrees.push_back(d);
        }
      }
    }
    gs.hilbert.push_back(h);
    algebra[d] = std::move(span);
  }
  gs.e = detail::gcd_of(gs.degrees);
  return gs;
}

/// deg(g_i)/e per generator.
inline std::vector<std::uint32_t> scaled_torus_exponents(const GeneratorSet& gs) {
  std::vector<std::uint32_t> out;
  for (auto d : gs.degrees) out.push_back(gs.e == 0 ? 0 : d / gs.e);
  return out;
}

inline std::vector<std::uint32_t> scaled_torus_exponents(const std::vector<std::uint32_t>& degrees) {
  const auto e = detail::gcd_of(degrees);
  std::vector<std::uint32_t> out;
  for (auto d : degrees) out.push_back(e == 0 ? 0 : d / e);
  return out;
}

/// Polynomial relation among generators, written in the symbols y1..ym.
struct Relation {
  Polynomial polynomial;
  std::uint32_t weighted_degree = 0;
  std::vector<std::string> names;

  std::string to_string() const { return polynomial.to_string(names); }
};

namespace detail {

inline void weighted_exponents(const std::vector<std::uint32_t>& w, std::uint32_t target, std::size_t i, Monomial& cur,
                               std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (std::uint32_t a = target / w[i] + 1; a-- > 0;) {
    cur[i] = a;
    weighted_exponents(w, target - a * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace detail

/// Weighted-degree-w monomials in the generator symbols, lex descending.
inline std::vector<Monomial> weighted_monomials(const std::vector<std::uint32_t>& weights, std::uint32_t w) {
  std::vector<Monomial> out;
  Monomial cur(weights.size(), 0);
  detail::weighted_exponents(weights, w, 0, cur, out);
  return out;
}

/// Lowest weighted degree ≤ wdeg_max at which products of generators become
/// linearly dependent; returns the first rref kernel vector, scaled monic.
inline std::optional<Relation> find_relation(const GeneratorSet& gs, std::uint32_t wdeg_max) {
  const std::size_t m = gs.generators.size();
  if (m == 0) return std::nullopt;
  std::vector<std::vector<Polynomial>> powers(m);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& c = powers[i];
    if (c.empty()) c.push_back(Polynomial::constant(gs.field.one(), gs.nvars));
    while (c.size() <= e) c.push_back(c.back() * gs.generators[i]);
    return c[e];
  };
  for (std::uint32_t w = 1; w <= wdeg_max; ++w) {
    const auto monos = weighted_monomials(gs.degrees, w);
    if (monos.size() < 2) continue;
    const auto xbasis = monomials_of_degree(gs.nvars, w);
    Matrix a(gs.field, xbasis.size(), monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Polynomial prod = Polynomial::constant(gs.field.one(), gs.nvars);
      for (std::size_t i = 0; i < m; ++i)
        if (monos[k][i] > 0) prod *= power(i, monos[k][i]);
      const auto c = prod.coordinates(xbasis);
      for (std::size_t r = 0; r < xbasis.size(); ++r) a(r, k) = c[r];
    }
    const Subspace ker = kernel(a);
    if (ker.dim() == 0) continue;
    const auto v = ker.basis_vectors().front();
    Polynomial rel(gs.field, m);
    for (std::size_t k = 0; k < monos.size(); ++k) rel.add_term(monos[k], v[k]);
    return Relation{rel.monic(), w, gs.symbol_names()};
  }
  return std::nullopt;
}

/// Substitutes the generators into a polynomial in the symbols y1..ym.
inline Polynomial evaluate_in_generators(const GeneratorSet& gs, const Polynomial& in_symbols) {
  return in_symbols.substitute(gs.generators);
}

/// True iff rel(images) is a polynomial multiple of rel, i.e. the substitution
/// preserves the hypersurface rel = 0.
inline bool check_presented_automorphism(const Polynomial& rel, const std::vector<Polynomial>& images) {
  if (images.size() != rel.nvars()) throw DomainError("check_presented_automorphism: need one image per symbol");
  if (rel.is_zero()) throw DomainError("check_presented_automorphism: zero relation");
  const Polynomial composed = rel.substitute(images);
  return composed.divmod(rel).second.is_zero();
}

/// dim(S_r / S_{r+1}) for r = 0..r_max, where S is the span of `polys` and
/// S_r its elements of multiplicity ≥ r at the origin. Echelon columns are
/// ordered by ascending degree, so each row's pivot is its lowest-degree term.
inline GradedDims multiplicity_filtration_dims(const std::vector<Polynomial>& polys, std::uint32_t r_max) {
  GradedDims dims(r_max + 1, 0);
  if (polys.empty()) return dims;
  const Field f = polys[0].field();
  std::vector<Monomial> monos;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) monos.push_back(m);
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a > b;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::map<Monomial, std::size_t> col;
  for (std::size_t k = 0; k < monos.size(); ++k) col[monos[k]] = k;
  Matrix a(f, polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) a(r, col[m]) = c;
  for (auto pc : a.rref_in_place()) {
    const auto d = total_degree(monos[pc]);
    if (d <= r_max) ++dims[d];
  }
  return dims;
}

/// Chevalley–Shephard–Todd reduction: G/W acting on the basic invariants of
/// the reflection subgroup W.
struct CstReduction {
  bool applicable = false;
  std::string note;
  FiniteMatrixGroup reflection_group;
  GeneratorSet basic_invariants;
  std::vector<FiniteMatrixGroup::Index> coset_representatives;
  std::vector<Matrix> action;  // h·f_i = Σ_j action(i, j) f_j, one matrix per representative
  std::size_t quotient_order = 0;
};

inline CstReduction cst_quotient_action(const FiniteMatrixGroup& g) {
  const auto p = g.field().characteristic();
  if (p != 0 && g.order() % p == 0) throw DomainError("cst_quotient_action needs char k not dividing |G|");
  CstReduction out;
  out.reflection_group = reflection_subgroup(g);
  const auto& w = out.reflection_group;
  out.basic_invariants = minimal_generators(w);
  const auto& basics = out.basic_invariants;
  out.quotient_order = g.order() / w.order();
  const std::size_t n = g.dim();
  std::size_t degree_product = 1;
  for (auto d : basics.degrees) degree_product *= d;
  if (basics.generators.size() != n || degree_product != w.order()) {
    out.note = "invariants of the reflection subgroup are not a polynomial ring on n generators";
    return out;
  }
  std::vector<bool> covered(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    out.coset_representatives.push_back(static_cast<FiniteMatrixGroup::Index>(i));
    for (const auto& x : w.elements()) covered[*g.index_of(g.element(i) * x)] = true;
  }
  for (auto rep : out.coset_representatives) {
    Matrix a(g.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial image = act(g.element(rep), basics.generators[i]);
      const auto xbasis = monomials_of_degree(n, basics.degrees[i]);
      std::vector<Vector> same_degree;
      std::vector<std::size_t> which;
      for (std::size_t j = 0; j < n; ++j)
        if (basics.degrees[j] == basics.degrees[i]) {
          same_degree.push_back(basics.generators[j].coordinates(xbasis));
          which.push_back(j);
        }
      const auto c = solve_combination(g.field(), same_degree, image.coordinates(xbasis));
      if (!c) {
        out.note = "induced action is not linear in the chosen basic invariants";
        out.action.clear();
        return out;
      }
      for (std::size_t k = 0; k < which.size(); ++k) a(i, which[k]) = (*c)[k];
    }
    out.action.push_back(std::move(a));
  }
  out.applicable = true;
  out.note = "G/W of order " + std::to_string(out.quotient_order) + " acts linearly on " + std::to_string(n) + " basic invariants";
  return out;
}

}  // namespace invforge
