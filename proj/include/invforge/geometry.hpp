#pragma once

// Finite-geometry checks: projective fixed points, multiplicities of
// polynomials at F_q-points, the multiplicity bounds for hypersurfaces
// invariant under the parabolic subgroup stabilizing (x_1 = 0), and
// irreducibility of deleted permutation modules.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/invariants.hpp"
#include "invforge/matrix.hpp"
#include "invforge/parallel.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
class ProjPoint {
 public:
  explicit ProjPoint(Vector coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const FieldElement& e) { return !e.is_zero(); });
    if (it == coords_.end()) throw DomainError("projective point needs a nonzero vector");
    const FieldElement inv = it->inverse();
    for (auto& c : coords_) c *= inv;
  }

  const Vector& coordinates() const noexcept { return coords_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? " : " : "") + coords_[i].to_string();
    return s + ")";
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  Vector coords_;
};

/// Fixed points of the induced action on P^{n-1}: isolated points come from
/// 1-dimensional joint eigenspaces; larger joint eigenspaces are fixed
/// linear subspaces, reported separately.
struct FixedPointReport {
  std::vector<ProjPoint> points;
  std::vector<Subspace> positive_dimensional;
};

inline FixedPointReport projective_fixed_points(const FiniteMatrixGroup& g) {
  FixedPointReport r;
  for (const auto& s : common_eigenspaces(g.generators(), g.field(), g.dim())) {
    if (s.dim() == 1) {
      r.points.emplace_back(s.basis_vectors().front());
    } else {
      r.positive_dimensional.push_back(s);
    }
  }
  std::sort(r.points.begin(), r.points.end());
  return r;
}

/// Lowest total degree of f(x + p); 0 iff f(p) != 0.
inline std::size_t multiplicity_at_point(const Polynomial& f, const Vector& p) {
  if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial is undefined");
  if (!f.evaluate(p).is_zero()) return 0;
  return static_cast<std::size_t>(f.translate(p).lowest_degree());
}

struct PointMultiplicity {
  Vector point;
  std::size_t multiplicity = 0;
};

struct MultReport {
  std::string polynomial;
  std::size_t degree = 0;
  std::vector<PointMultiplicity> points;  // points of positive multiplicity
  std::size_t total = 0;                  // Σ of multiplicities (claim 51) or the maximum (parabolic)
  Integer bound = 0;
  bool verdict = false;
};

namespace detail {

/// All vectors of F^n in base-|F| digit order; the first coordinate varies slowest.
inline std::vector<Vector> all_points(Field f, std::size_t n, std::size_t bound = 1000000) {
  const auto elems = all_elements(f);
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= elems.size();
    if (count > bound) throw BoundExceeded("too many points to enumerate");
  }
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(elems[digit[i]]);
    out.push_back(std::move(v));
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < elems.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

inline void require_finite(const Polynomial& f) {
  if (f.field()->kind() != FieldKind::finite) throw DomainError("this check needs a polynomial over a finite field");
}

}  // namespace detail

/// Σ_{p ∈ F_q^n} mult_p f against q^{n-1}·deg f.
inline MultReport check_claim_51(const Polynomial& f) {
  detail::require_finite(f);
  if (f.is_zero()) throw DomainError("check_claim_51 needs a nonzero polynomial");
  const Field k = f.field();
  const std::size_t n = f.nvars();
  const auto pts = detail::all_points(k, n);
  const auto mults = parallel_map(pts.size(), [&](std::size_t i) { return multiplicity_at_point(f, pts[i]); });
  MultReport r;
  r.polynomial = f.to_string();
  r.degree = static_cast<std::size_t>(f.degree());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (mults[i] > 0) {
      r.points.push_back({pts[i], mults[i]});
      r.total += mults[i];
    }
  Integer qn1 = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) qn1 *= k->order();
  r.bound = qn1 * static_cast<unsigned long>(r.degree);
  r.verdict = Integer(static_cast<unsigned long>(r.total)) <= r.bound;
  return r;
}

/// A generator of the multiplicative group of a finite field.
inline FieldElement primitive_element(Field f) {
  const auto elems = all_elements(f);
  const std::size_t m = elems.size() - 1;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    bool primitive = true;
    for (std::size_t d = 1; d < m && primitive; ++d)
      if (m % d == 0 && e.pow(static_cast<long long>(d)).is_one()) primitive = false;
    if (primitive) return e;
  }
  throw DomainError("internal: no primitive element");
}

/// Generators of the parabolic subgroup stabilizing (x_1 = 0), as
/// substitution matrices: x_1 ↦ c·x_1, with x_i ↦ x_i + a·x_1 (unipotent
/// radical) and GL_{n-1} acting on x_2..x_n.
inline std::vector<Matrix> parabolic_generators(Field f, std::size_t n) {
  if (f->kind() != FieldKind::finite) throw DomainError("parabolic subgroup needs a finite field");
  if (n < 2) throw DomainError("parabolic subgroup needs n >= 2");
  const FieldElement w = primitive_element(f);
  std::vector<Matrix> gens;
  Matrix d1 = Matrix::identity(f, n);
  d1(0, 0) = w;
  gens.push_back(d1);
  std::vector<FieldElement> additive_basis{f.one()};
  for (std::size_t k = 1; k < f->degree(); ++k) additive_basis.push_back(f.generator().pow(static_cast<long long>(k)));
  for (std::size_t i = 1; i < n; ++i)
    for (const auto& a : additive_basis) {
      Matrix u = Matrix::identity(f, n);
      u(i, 0) = a;
      gens.push_back(u);
    }
  Matrix d2 = Matrix::identity(f, n);
  d2(1, 1) = w;
  gens.push_back(d2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    Matrix s = Matrix::identity(f, n);
    s(i, i) = f.zero();
    s(i + 1, i + 1) = f.zero();
    s(i, i + 1) = f.one();
    s(i + 1, i) = f.one();
    gens.push_back(s);
  }
  if (n >= 3) {
    Matrix t = Matrix::identity(f, n);
    t(1, 2) = f.one();
    gens.push_back(t);
  }
  return gens;
}

/// Product of one representative of every linear form up to scalars.
inline Polynomial all_linear_forms_product(Field f, std::size_t n) {
  Polynomial h = Polynomial::constant(f.one(), n);
  for (const auto& v : detail::all_points(f, n)) {
    auto it = std::find_if(v.begin(), v.end(), [](const FieldElement& e) { return !e.is_zero(); });
    if (it == v.end() || !it->is_one()) continue;
    Polynomial form(f, n);
    for (std::size_t i = 0; i < n; ++i) form += Polynomial::variable(f, n, i) * v[i];
    h *= form;
  }
  return h;
}

/// True iff g·h is a scalar multiple of h.
inline bool defines_invariant_hypersurface(const Matrix& g, const Polynomial& h) {
  const Polynomial image = act(g, h);
  if (image.is_zero() || h.is_zero()) return image.is_zero() && h.is_zero();
  const FieldElement ratio = image.terms().begin()->second / h.terms().begin()->second;
  return image == h * ratio;
}

struct ParabolicReport {
  MultReport mult;  // total = maximal multiplicity off (x_1 = 0); bound = deg h
  std::size_t q = 0;
  std::size_t n = 0;
  // Counts for the product of all linear forms in n - 1 variables, logged
  // next to the computed values for comparison.
  Integer lower_dim_degree = 0;
  Integer lower_dim_multiplicity = 0;
};

/// max_{p = (1 : c_2 : ... : c_n)} mult_p h against deg h / q, for h defining a
/// hypersurface invariant under the parabolic subgroup.
inline ParabolicReport check_parabolic_claim(const Polynomial& h) {
  detail::require_finite(h);
  if (h.is_zero() || !h.is_homogeneous()) throw DomainError("check_parabolic_claim needs a nonzero homogeneous polynomial");
  const Field k = h.field();
  const std::size_t n = h.nvars();
  for (const auto& g : parabolic_generators(k, n))
    if (!defines_invariant_hypersurface(g, h))
      throw DomainError("polynomial is not invariant under the parabolic generator " + g.to_string());
  ParabolicReport out;
  out.q = k->order().get_ui();
  out.n = n;
  std::vector<Vector> pts;
  for (auto& tail : detail::all_points(k, n - 1)) {
    Vector v{k.one()};
    v.insert(v.end(), tail.begin(), tail.end());
    pts.push_back(std::move(v));
  }
  const auto mults = parallel_map(pts.size(), [&](std::size_t i) { return multiplicity_at_point(h, pts[i]); });
  MultReport& r = out.mult;
  r.polynomial = h.to_string();
  r.degree = static_cast<std::size_t>(h.degree());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (mults[i] > 0) r.points.push_back({pts[i], mults[i]});
    r.total = std::max(r.total, mults[i]);
  }
  r.bound = static_cast<unsigned long>(r.degree);
  r.verdict = out.q * r.total <= r.degree;
  Integer qq = static_cast<unsigned long>(out.q), a = 1, b = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) a *= qq;
  for (std::size_t i = 0; i + 2 < n; ++i) b *= qq;
  out.lower_dim_degree = (a - 1) / (qq - 1);
  out.lower_dim_multiplicity = (b - 1) / (qq - 1);
  return out;
}

/// Permutation σ of a permutation matrix (e_j ↦ e_{σ(j)}).
inline std::vector<std::size_t> permutation_of(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, j).is_one()) {
        sigma[j] = i;
        ++ones;
      } else if (!m(i, j).is_zero()) {
        ones = 2;
      }
    }
    if (ones != 1) throw DomainError("not a permutation matrix: " + m.to_string());
  }
  return sigma;
}

inline Matrix permutation_matrix(Field f, const std::vector<std::size_t>& sigma) {
  Matrix m(f, sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) m(sigma[j], j) = f.one();
  return m;
}

/// Z/n generated by the n-cycle, as permutation matrices.
inline std::vector<Matrix> cyclic_permutation_generators(Field f, std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = (j + 1) % n;
  return {permutation_matrix(f, s)};
}

/// A_n generated by the 3-cycles (0 1 i).
inline std::vector<Matrix> alternating_permutation_generators(Field f, std::size_t n) {
  std::vector<Matrix> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<std::size_t> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = j;
    s[0] = 1;
    s[1] = i;
    s[i] = 0;
    gens.push_back(permutation_matrix(f, s));
  }
  return gens;
}

/// S_n generated by a transposition and the n-cycle.
inline std::vector<Matrix> symmetric_permutation_generators(Field f, std::size_t n) {
  std::vector<Matrix> gens;
  if (n < 2) return gens;
  std::vector<std::size_t> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = j;
  std::swap(t[0], t[1]);
  gens.push_back(permutation_matrix(f, t));
  if (n > 2) gens.push_back(cyclic_permutation_generators(f, n)[0]);
  return gens;
}

namespace detail {

/// Dimension of the F_p-span of the orbit of v under `mats`, computed by spinning.
inline std::size_t spin_dimension_mod_p(const std::vector<std::vector<std::int64_t>>& mats, std::size_t dim,
                                        const std::vector<std::int64_t>& v, std::int64_t p) {
  const ModOps ops{p};
  std::vector<std::vector<std::int64_t>> echelon;  // rows with distinct leading columns, leading entry 1
  std::vector<std::size_t> lead;
  auto reduce = [&](std::vector<std::int64_t> w) {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const std::int64_t c = w[lead[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) w[j] = ops.sub(w[j], ops.mul(c, echelon[r][j]));
    }
    return w;
  };
  std::vector<std::vector<std::int64_t>> queue{v};
  auto insert = [&](const std::vector<std::int64_t>& w0) {
    auto w = reduce(w0);
    std::size_t l = 0;
    while (l < dim && w[l] == 0) ++l;
    if (l == dim) return false;
    const std::int64_t inv = ops.inv(w[l]);
    for (auto& x : w) x = ops.mul(x, inv);
    for (auto& row : echelon) {
      const std::int64_t c = row[l];
      if (c != 0)
        for (std::size_t j = 0; j < dim; ++j) row[j] = ops.sub(row[j], ops.mul(c, w[j]));
    }
    echelon.push_back(w);
    lead.push_back(l);
    return true;
  };
  insert(v);
  for (std::size_t k = 0; k < queue.size() && echelon.size() < dim; ++k)
    for (const auto& m : mats) {
      std::vector<std::int64_t> image(dim, 0);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) image[i] = ops.add(image[i], ops.mul(m[i * dim + j], queue[k][j]));
      if (insert(image)) queue.push_back(image);
    }
  return echelon.size();
}

}  // namespace detail

/// Irreducibility of the deleted permutation module over F_p: the sum-zero
/// submodule of F_p^n when p ∤ n, the quotient F_p^n/⟨(1,...,1)⟩ when p | n.
/// Every nonzero vector (up to scalars) is spun; irreducible iff each spans
/// the whole module.
inline bool perm_module_irreducible(const std::vector<Matrix>& perm_matrices, std::size_t n, std::uint64_t p,
                                    std::size_t bound = 1000000) {
  if (!detail::is_prime(p)) throw DomainError("perm_module_irreducible needs a prime p");
  if (n < 2) throw DomainError("perm_module_irreducible needs n >= 2");
  const std::size_t dim = n - 1;
  const auto ip = static_cast<std::int64_t>(p);
  double count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= static_cast<double>(p);
  if (count > static_cast<double>(bound)) throw BoundExceeded("deleted permutation module has more than " + std::to_string(bound) + " vectors");
  const bool quotient = n % p == 0;
  const detail::ModOps ops{ip};
  // Module element w ∈ F_p^{n-1} ↔ full vector (w, -Σw) or (w, 0).
  std::vector<std::vector<std::int64_t>> mats;
  for (const auto& pm : perm_matrices) {
    if (pm.rows() != n) throw DomainError("permutation matrix has the wrong size");
    const auto sigma = permutation_of(pm);
    std::vector<std::int64_t> m(dim * dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<std::int64_t> full(n, 0);
      full[j] = 1;
      if (!quotient) full[n - 1] = ops.neg(1);
      std::vector<std::int64_t> moved(n, 0);
      for (std::size_t t = 0; t < n; ++t) moved[sigma[t]] = full[t];
      const std::int64_t shift = quotient ? moved[n - 1] : 0;
      for (std::size_t i = 0; i < dim; ++i) m[i * dim + j] = ops.sub(moved[i], shift);
    }
    mats.push_back(std::move(m));
  }
  std::vector<std::int64_t> v(dim, 0);
  const auto total = static_cast<std::size_t>(count);
  for (std::size_t k = 1; k < total; ++k) {
    std::size_t x = k;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<std::int64_t>(x % p);
      x /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
    if (*first != 1) continue;
    if (detail::spin_dimension_mod_p(mats, dim, v, ip) < dim) return false;
  }
  return true;
}

/// Quotient of G by its scalar subgroup, as an abstract group.
inline AbstractGroup projective_image(const FiniteMatrixGroup& g, std::size_t* scalar_order = nullptr) {
  const auto& t = g.abstract();
  const auto scalars = g.scalar_elements();
  if (scalar_order) *scalar_order = scalars.size();
  std::vector<AbstractGroup::Index> coset(g.order(), static_cast<AbstractGroup::Index>(g.order()));
  std::vector<AbstractGroup::Index> reps;
  for (AbstractGroup::Index a = 0; a < g.order(); ++a) {
    if (coset[a] != g.order()) continue;
    const auto id = static_cast<AbstractGroup::Index>(reps.size());
    reps.push_back(a);
    for (auto s : scalars) coset[t.mul(a, s)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<AbstractGroup::Index> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = coset[t.mul(reps[i], reps[j])];
  return AbstractGroup::from_flat_table(m, std::move(flat));
}

struct RankObstructionReport {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t scalar_order = 0;
  std::size_t projective_order = 0;
  std::size_t rank = 0;
  std::size_t required = 0;       // n - 1
  bool hypothesis_holds = false;  // the image contains (Z/ℓ)^{n-1}
};

/// Elementary abelian ℓ-rank of G modulo scalars, compared with n - 1. States
/// whether the subgroup hypothesis holds; it is not a verdict on
/// birational irreducibility.
inline RankObstructionReport rank_obstruction(const FiniteMatrixGroup& g, std::size_t ell) {
  if (g.field().characteristic() == ell) throw DomainError("rank_obstruction needs ell different from the characteristic");
  RankObstructionReport r;
  r.n = g.dim();
  r.ell = ell;
  const auto image = projective_image(g, &r.scalar_order);
  r.projective_order = image.order();
  r.rank = elementary_abelian_rank(image, ell);
  r.required = g.dim() - 1;
  r.hypothesis_holds = r.rank >= r.required;
  return r;
}

}  // namespace invforge
