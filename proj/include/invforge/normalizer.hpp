#pragma once

// Normalizer data N(G, GL_n)/G: the commutant (torus part) and the outer
// automorphism classes of G that are realized by conjugation in GL_n.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/invariants.hpp"
#include "invforge/matrix.hpp"
#include "invforge/parallel.hpp"

namespace invforge {

/// Solution space {T : T·ρ(s) = ρ(φ(s))·T for every generator s}.
inline std::vector<Matrix> intertwiner_space(const FiniteMatrixGroup& g, const GroupAutomorphism& phi) {
  const std::size_t n = g.dim(), nn = n * n;
  const Field f = g.field();
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const Matrix& a = g.generators()[s];
    const Matrix& b = g.element(phi.image.at(g.generator_indices()[s]));
    // Row (i, j) encodes (TA - BT)_{ij} in the unknowns T_{kl}, index k*n + l.
    Matrix block(f, nn, nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          block(i * n + j, i * n + k) += a(k, j);
          block(i * n + j, k * n + j) -= b(i, k);
        }
    blocks.push_back(std::move(block));
  }
  const Subspace sol = blocks.empty() ? Subspace::whole(f, nn) : kernel(Matrix::stack(f, nn, blocks));
  std::vector<Matrix> out;
  for (const auto& v : sol.basis_vectors()) {
    Matrix t(f, n, n);
    for (std::size_t k = 0; k < nn; ++k) t(k / n, k % n) = v[k];
    out.push_back(std::move(t));
  }
  return out;
}

/// An invertible intertwiner for φ, or nullopt. Candidates: each basis
/// element, then combinations Σ c^k B_k for c = 1, 2, ...; for absolutely
/// irreducible G any nonzero solution is invertible.
inline std::optional<Matrix> intertwiner(const FiniteMatrixGroup& g, const GroupAutomorphism& phi) {
  const auto space = intertwiner_space(g, phi);
  if (space.empty()) return std::nullopt;
  const bool irreducible = commutant_basis(g.generators(), g.field(), g.dim()).size() == 1;
  if (irreducible) {
    if (space.size() != 1 || space[0].determinant().is_zero()) throw DomainError("internal: Schur's lemma violated by an intertwiner");
    return space[0];
  }
  for (const auto& t : space)
    if (!t.determinant().is_zero()) return t;
  const Field f = g.field();
  std::vector<FieldElement> finite_elems;
  if (f->kind() == FieldKind::finite) finite_elems = all_elements(f);
  const std::size_t tries = finite_elems.empty() ? 64 : std::min<std::size_t>(finite_elems.size(), 64);
  for (std::size_t c = 1; c <= tries; ++c) {
    const FieldElement base = finite_elems.empty() ? f.from_int(static_cast<long>(c)) : finite_elems[c % finite_elems.size()];
    Matrix t(f, g.dim(), g.dim());
    FieldElement w = f.one();
    for (const auto& b : space) {
      t = t + w * b;
      w *= base;
    }
    if (!t.determinant().is_zero()) return t;
  }
  return std::nullopt;
}

/// ⟨χ, χ∘φ⟩ in characteristic 0.
inline FieldElement twisted_character_product(const FiniteMatrixGroup& g, const GroupAutomorphism& phi) {
  const auto chi = natural_character(g);
  std::vector<FieldElement> twisted(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) twisted[i] = chi[phi.image[i]];
  return character_inner_product(g, chi, twisted);
}

struct RealizedOuter {
  std::size_t outer_class = 0;
  std::size_t automorphism = 0;  // index into the automorphism list
  Matrix intertwiner;
};

struct NormalizerReport {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  std::size_t commutant_dim = 0;
  bool commutant_commutative = false;
  bool torus_split = false;
  std::size_t torus_rank = 0;
  std::size_t automorphism_count = 0;
  std::size_t inner_count = 0;
  std::size_t outer_count = 0;
  std::vector<RealizedOuter> realized_outer;  // non-trivial outer classes with an intertwiner
  std::size_t realized_outer_order = 1;       // including the trivial class
  std::vector<std::string> notes;
};

inline NormalizerReport normalizer_report(const FiniteMatrixGroup& g, std::size_t aut_bound = 400) {
  NormalizerReport r;
  r.group_order = g.order();
  const auto& table = g.abstract();
  r.center_order = table.center().size();
  const auto comm = commutant_basis(g.generators(), g.field(), g.dim());
  r.commutant_dim = comm.size();
  r.commutant_commutative = true;
  for (std::size_t i = 0; i < comm.size() && r.commutant_commutative; ++i)
    for (std::size_t j = i + 1; j < comm.size() && r.commutant_commutative; ++j)
      r.commutant_commutative = comm[i] * comm[j] == comm[j] * comm[i];
  if (r.commutant_commutative) {
    std::size_t total = 0;
    for (const auto& s : common_eigenspaces(comm, g.field(), g.dim())) total += s.dim();
    r.torus_split = total == g.dim();
  }
  r.torus_rank = r.commutant_dim;

  const auto aut = automorphism_group(g, aut_bound);
  r.automorphism_count = aut.order();
  r.inner_count = aut.inner_count;
  r.outer_count = aut.outer_order();
  std::vector<std::size_t> classes;
  for (std::size_t c = 1; c < aut.outer_order(); ++c) classes.push_back(c);
  const auto found = parallel_map(classes.size(), [&](std::size_t k) {
    return intertwiner(g, aut.automorphisms[aut.class_representatives[classes[k]]]);
  });
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (found[k]) r.realized_outer.push_back({classes[k], aut.class_representatives[classes[k]], *found[k]});
  r.realized_outer_order = 1 + r.realized_outer.size();

  if (!r.torus_split) r.notes.push_back("commutant is not a split torus over the base field; torus_rank is its dimension");
  if (r.commutant_dim == 1 && r.realized_outer.empty())
    r.notes.push_back("N = G*Gm, so N/G is Gm: graded automorphisms are the scalings");
  r.notes.push_back("graded automorphism group = torus part extended by the realized outer classes, modulo the image of G");
  r.notes.push_back("data describe N/G over a splitting field; (N/G)(k) can be larger than N(G, GL_n(k))/G(k)");
  return r;
}

/// Graded automorphisms of x^2 - d*y^2 = z^n.
struct AnAutomorphismReport {
  bool split = false;
  unsigned n = 0;
  unsigned r = 0;
  std::string description;
  std::size_t samples_checked = 0;
  bool samples_ok = false;
};

namespace detail {

inline bool is_square_in_field(const FieldElement& d) {
  const Field f = d.field();
  if (d.is_zero()) return true;
  Polynomial p(f, 1);
  p.add_term({2}, f.one());
  p.add_term({0}, -d);
  return !roots_in_field(p).empty();
}

}  // namespace detail

/// Splits on whether d is a square; in the non-split case describes the
/// GO-quotient by the parity of n and checks sample elements against the
/// relation x^2 - d*y^2 - z^n by exact substitution.
inline AnAutomorphismReport graded_aut_of_An(const FieldElement& d, unsigned n) {
  if (n < 2) throw DomainError("graded_aut_of_An needs n >= 2");
  const Field f = d.field();
  const auto p = f.characteristic();
  if (p != 0 && (2 * static_cast<std::uint64_t>(n)) % p == 0) throw DomainError("graded_aut_of_An needs char k not dividing 2n");
  if (d.is_zero()) throw DomainError("graded_aut_of_An needs d != 0");
  AnAutomorphismReport out;
  out.n = n;
  out.r = n / 2;
  out.split = detail::is_square_in_field(d);
  const Polynomial x = Polynomial::variable(f, 3, 0), y = Polynomial::variable(f, 3, 1), z = Polynomial::variable(f, 3, 2);
  std::size_t ok = 0, total = 0;
  auto check = [&](const Polynomial& rel, const std::vector<Polynomial>& images) {
    ++total;
    if (check_presented_automorphism(rel, images)) ++ok;
  };
  const std::string ds = d.to_string();
  if (out.split) {
    out.description = "split: equivalent to x*y = z^" + std::to_string(n) + "; infinite-dimensional (elementary automorphisms exist)";
    const Polynomial rel = x * y - z.pow(n);
    for (const Polynomial& q : {x, x.pow(2), x.pow(3) - x}) {
      const Polynomial shifted = z + x * q;
      check(rel, {x, y + (shifted.pow(n) - z.pow(n)).exact_divide(x), shifted});
    }
  } else {
    const Polynomial rel = x.pow(2) - d * y.pow(2) - z.pow(n);
    const std::string form = "x^2 - " + (d.is_prime_field_element() ? ds : "(" + ds + ")") + "*y^2";
    std::ostringstream os;
    if (n % 2 == 1) {
      os << "non-split, n = " << n << " odd (r = " << out.r << "): GO(" << form << ") acting via N -> det(N)^-" << out.r << " * N^" << n
         << "; M acts by (x, y) -> det(M)^" << out.r << " * M(x, y), z -> det(M) * z";
      // M = [[c, d s], [s, c]] preserves the form up to det M = c^2 - d s^2.
      for (auto [c, s] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, -2}, std::pair{0, 1}}) {
        const FieldElement ce = f.from_int(c), se = f.from_int(s);
        const FieldElement det = ce * ce - d * se * se;
        if (det.is_zero()) continue;
        const FieldElement scale = det.pow(out.r);
        check(rel, {scale * (ce * x + d * se * y), scale * (se * x + ce * y), det * z});
      }
    } else {
      os << "non-split, n = " << n << " even (r = " << out.r << "): Gm x O(" << form << ") acting via N -> (det N, det(N)^-" << out.r
         << " * N^" << n << "); (lambda, M) acts by (x, y) -> lambda^" << out.r << " * M(x, y), z -> lambda * z";
      // Rational points of O: c = (1 + d t^2)/(1 - d t^2), s = 2t/(1 - d t^2), plus the reflection y -> -y.
      for (auto [lam, t] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{-1, 3}, std::pair{5, 0}}) {
        const FieldElement te = f.from_int(t), le = f.from_int(lam);
        const FieldElement den = f.one() - d * te * te;
        if (den.is_zero() || le.is_zero()) continue;
        const FieldElement c = (f.one() + d * te * te) / den, s = f.from_int(2) * te / den;
        const FieldElement scale = le.pow(out.r);
        check(rel, {scale * (c * x + d * s * y), scale * (s * x + c * y), le * z});
        check(rel, {scale * (c * x - d * s * y), scale * (s * x - c * y), le * z});
      }
    }
    out.description = os.str();
  }
  out.samples_checked = total;
  out.samples_ok = total > 0 && ok == total;
  return out;
}

}  // namespace invforge
