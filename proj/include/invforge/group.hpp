#pragma once

/**
 * @file group.hpp
 * @brief Finite groups: table-based abstract groups and closed matrix groups.
 *
 * A FiniteMatrixGroup is built by breadth-first closure of its generators.
 * Element indices are stable: index 0 is the identity and elements appear in
 * BFS discovery order (right multiplication by generators, in generator
 * order), so identical inputs give identical numbering on every run.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/field.hpp"
#include "invforge/matrix.hpp"

namespace invforge {

/// Finite group given by its full multiplication table.
class AbstractGroup {
 public:
  using Index = std::uint32_t;

  AbstractGroup() = default;

  /// `table[i][j]` is the index of i*j. Checks closure, identity, inverses and
  /// (for order <= 200) associativity.
  static AbstractGroup from_table(const std::vector<std::vector<Index>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw DomainError("group table is empty");
    AbstractGroup g;
    g.n_ = n;
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw DomainError("group table is not square");
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) throw DomainError("group table entry out of range");
        g.table_[i * n + j] = table[i][j];
      }
    }
    g.finish();
    if (n <= 200)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (g.mul(g.mul(static_cast<Index>(a), static_cast<Index>(b)), static_cast<Index>(c)) !=
                g.mul(static_cast<Index>(a), g.mul(static_cast<Index>(b), static_cast<Index>(c))))
              throw DomainError("group table is not associative");
    return g;
  }

  static AbstractGroup from_flat_table(std::size_t n, std::vector<Index> flat) {
    AbstractGroup g;
    g.n_ = n;
    g.table_ = std::move(flat);
    g.finish();
    return g;
  }

  /// Z/n with element k ↦ k.
  static AbstractGroup cyclic(std::size_t n) {
    std::vector<Index> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Index>((i + j) % n);
    return from_flat_table(n, std::move(t));
  }

  /// S_n on {0..n-1}, elements in lexicographic order of their image lists.
  static AbstractGroup symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, Index> pos;
    for (std::size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = static_cast<Index>(i);
    const std::size_t m = perms.size();
    std::vector<Index> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        // (i*j)(x) = i(j(x)).
        std::vector<std::size_t> c(n);
        for (std::size_t x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
        t[i * m + j] = pos[c];
      }
    return from_flat_table(m, std::move(t));
  }

  std::size_t order() const noexcept { return n_; }
  Index identity() const noexcept { return identity_; }
  Index mul(Index a, Index b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Index a) const noexcept { return orders_[a]; }
  const std::vector<Index>& flat_table() const noexcept { return table_; }

  Index pow(Index a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Index r = identity_;
    for (long long k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  Index conjugate(Index g, Index x) const { return mul(mul(g, x), inv(g)); }

  bool commute(Index a, Index b) const { return mul(a, b) == mul(b, a); }

  bool is_abelian() const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = a + 1; b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  std::vector<Index> center() const {
    std::vector<Index> z;
    for (Index a = 0; a < n_; ++a) {
      bool central = true;
      for (Index b = 0; b < n_ && central; ++b) central = commute(a, b);
      if (central) z.push_back(a);
    }
    return z;
  }

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<Index> subgroup(const std::vector<Index>& gens) const {
    std::vector<bool> in(n_, false);
    std::vector<Index> elems{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (Index s : gens) {
        const Index x = mul(elems[k], s);
        if (!in[x]) {
          in[x] = true;
          elems.push_back(x);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  bool is_normal(const std::vector<Index>& sub) const {
    std::vector<bool> in(n_, false);
    for (Index x : sub) in[x] = true;
    for (Index g = 0; g < n_; ++g)
      for (Index x : sub)
        if (!in[conjugate(g, x)]) return false;
    return true;
  }

  /// Conjugacy class index of every element; classes numbered by smallest member.
  std::vector<std::size_t> conjugacy_class_ids() const {
    std::vector<std::size_t> id(n_, SIZE_MAX);
    std::size_t next = 0;
    for (Index a = 0; a < n_; ++a) {
      if (id[a] != SIZE_MAX) continue;
      for (Index g = 0; g < n_; ++g) id[conjugate(g, a)] = next;
      ++next;
    }
    return id;
  }

  std::vector<std::size_t> conjugacy_class_sizes() const {
    const auto ids = conjugacy_class_ids();
    std::vector<std::size_t> count(n_, 0);
    for (auto c : ids) ++count[c];
    std::vector<std::size_t> out(n_);
    for (Index a = 0; a < n_; ++a) out[a] = count[ids[a]];
    return out;
  }

  /// Small generating set: an element of maximal order, completed greedily by
  /// the element that enlarges the generated subgroup the most.
  std::vector<Index> generating_set() const {
    if (n_ == 1) return {};
    std::vector<Index> by_order(n_);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [this](Index a, Index b) { return orders_[a] > orders_[b]; });
    std::vector<Index> gens{by_order[0]};
    auto current = subgroup(gens);
    while (current.size() < n_) {
      Index best = identity_;
      std::size_t best_size = current.size();
      for (Index x : by_order) {
        if (std::binary_search(current.begin(), current.end(), x)) continue;
        auto trial = gens;
        trial.push_back(x);
        const auto s = subgroup(trial).size();
        if (s > best_size) {
          best_size = s;
          best = x;
          if (s == n_) break;
        }
      }
      gens.push_back(best);
      current = subgroup(gens);
    }
    return gens;
  }

  /// Relabels elements: element i of this group becomes perm[i].
  AbstractGroup relabel(const std::vector<Index>& perm) const {
    std::vector<Index> t(n_ * n_);
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b) t[static_cast<std::size_t>(perm[a]) * n_ + perm[b]] = perm[mul(a, b)];
    return from_flat_table(n_, std::move(t));
  }

 private:
  void finish() {
    identity_ = static_cast<Index>(n_);
    for (Index e = 0; e < n_ && identity_ == n_; ++e) {
      bool ok = true;
      for (Index x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ == n_) throw DomainError("group table has no identity");
    inverse_.assign(n_, static_cast<Index>(n_));
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        if (mul(a, b) == identity_) {
          if (mul(b, a) != identity_) throw DomainError("group table: left and right inverses differ");
          inverse_[a] = b;
          break;
        }
    for (Index a = 0; a < n_; ++a)
      if (inverse_[a] == n_) throw DomainError("group table: element without inverse");
    orders_.assign(n_, 0);
    for (Index a = 0; a < n_; ++a) {
      std::size_t k = 1;
      Index x = a;
      while (x != identity_) {
        x = mul(x, a);
        ++k;
        if (k > n_) throw DomainError("group table: element of unbounded order");
      }
      orders_[a] = k;
    }
  }

  std::size_t n_ = 0;
  Index identity_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::size_t> orders_;
};

/// Closed finite subgroup of GL_n(k).
class FiniteMatrixGroup {
 public:
  using Index = AbstractGroup::Index;

  static constexpr std::size_t default_cap = 20000;
  static constexpr std::size_t table_limit = 6000;

  /// BFS closure of `gens` under products. Throws BoundExceeded past `cap`
  /// elements and DomainError on a singular or mis-shaped generator.
  static FiniteMatrixGroup close(Field field, std::size_t dim, const std::vector<Matrix>& gens,
                                 std::size_t cap = default_cap) {
    FiniteMatrixGroup g;
    g.field_ = field;
    g.dim_ = dim;
    g.generators_ = gens;
    for (const auto& m : gens) {
      if (m.rows() != dim || m.cols() != dim || m.field() != field) throw DomainError("generator has the wrong size or field");
      if (m.determinant().is_zero()) throw DomainError("generator is singular: " + m.to_string());
    }
    g.insert(Matrix::identity(field, dim), 0, 0);
    g.right_.clear();
    for (std::size_t k = 0; k < g.elements_.size(); ++k) {
      std::vector<Index> row(gens.size());
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Matrix prod = g.elements_[k] * gens[s];
        auto found = g.find(prod);
        if (!found) {
          if (g.elements_.size() >= cap)
            throw BoundExceeded("group closure exceeded " + std::to_string(cap) + " elements (infinite or too large)");
          found = g.insert(std::move(prod), static_cast<Index>(k), static_cast<Index>(s));
        }
        row[s] = *found;
      }
      g.right_.push_back(std::move(row));
    }
    for (const auto& m : gens) g.generator_index_.push_back(*g.find(m));
    if (g.elements_.size() <= table_limit) g.build_table();
    return g;
  }

  static FiniteMatrixGroup trivial(Field field, std::size_t dim) { return close(field, dim, {}); }

  Field field() const { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Index>& generator_indices() const noexcept { return generator_index_; }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }

  std::optional<Index> index_of(const Matrix& m) const { return find(m); }

  bool has_table() const noexcept { return table_.order() == order(); }

  /// The multiplication table; throws for groups above table_limit.
  const AbstractGroup& abstract() const {
    if (!has_table()) throw BoundExceeded("group of order " + std::to_string(order()) + " is too large for a multiplication table");
    return table_;
  }

  /// Generator word (sequence of generator positions) of element i.
  std::vector<std::size_t> word(Index i) const {
    std::vector<std::size_t> w;
    while (i != 0) {
      w.push_back(via_gen_[i]);
      i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::vector<Index> center() const { return abstract().center(); }

  bool is_abelian() const {
    for (std::size_t a = 0; a < generators_.size(); ++a)
      for (std::size_t b = a + 1; b < generators_.size(); ++b)
        if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
    return true;
  }

  /// Elements that are scalar matrices.
  std::vector<Index> scalar_elements() const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].is_scalar()) out.push_back(static_cast<Index>(i));
    return out;
  }

 private:
  struct Bucket {
    std::vector<Index> items;
  };

  std::optional<Index> find(const Matrix& m) const {
    auto it = index_.find(m.hash());
    if (it == index_.end()) return std::nullopt;
    for (Index i : it->second.items)
      if (elements_[i] == m) return i;
    return std::nullopt;
  }

  Index insert(Matrix m, Index parent, Index via) {
    const auto id = static_cast<Index>(elements_.size());
    index_[m.hash()].items.push_back(id);
    elements_.push_back(std::move(m));
    parent_.push_back(parent);
    via_gen_.push_back(via);
    return id;
  }

  void build_table() {
    const std::size_t n = elements_.size();
    std::vector<Index> flat(n * n);
    std::vector<std::vector<std::size_t>> words(n);
    for (std::size_t j = 1; j < n; ++j) {
      words[j] = words[parent_[j]];
      words[j].push_back(via_gen_[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Index cur = static_cast<Index>(i);
        for (auto s : words[j]) cur = right_[cur][s];
        flat[i * n + j] = cur;
      }
    table_ = AbstractGroup::from_flat_table(n, std::move(flat));
  }

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Index> generator_index_;
  std::vector<Matrix> elements_;
  std::vector<Index> parent_, via_gen_;
  std::vector<std::vector<Index>> right_;
  std::unordered_map<std::size_t, Bucket> index_;
  AbstractGroup table_;
};

/// Non-identity elements g with rank(g - I) = 1.
inline std::vector<FiniteMatrixGroup::Index> pseudo_reflections(const FiniteMatrixGroup& g) {
  std::vector<FiniteMatrixGroup::Index> out;
  const Matrix id = Matrix::identity(g.field(), g.dim());
  for (std::size_t i = 1; i < g.order(); ++i)
    if ((g.element(i) - id).rank() == 1) out.push_back(static_cast<FiniteMatrixGroup::Index>(i));
  return out;
}

/// Subgroup generated by all pseudo-reflections; checked to be normal.
inline FiniteMatrixGroup reflection_subgroup(const FiniteMatrixGroup& g) {
  std::vector<Matrix> gens;
  for (auto i : pseudo_reflections(g)) gens.push_back(g.element(i));
  FiniteMatrixGroup w = FiniteMatrixGroup::close(g.field(), g.dim(), gens);
  for (const auto& s : g.generators())
    for (const auto& x : w.generators()) {
      const Matrix c = s * x * s.inverse();
      if (!w.index_of(c)) throw DomainError("internal: reflection subgroup is not normal");
    }
  return w;
}

/// Commutant dimension 1 (every matrix commuting with G is scalar).
inline bool is_absolutely_irreducible(const FiniteMatrixGroup& g) {
  return commutant_basis(g.generators(), g.field(), g.dim()).size() == 1;
}

/// G abelian and k^n is spanned by common eigenvectors defined over k.
inline bool is_diagonalizable_over_k(const FiniteMatrixGroup& g) {
  if (!g.is_abelian()) return false;
  std::size_t total = 0;
  for (const auto& s : common_eigenspaces(g.generators(), g.field(), g.dim())) total += s.dim();
  return total == g.dim();
}

/// Largest r with (Z/ℓ)^r ⊂ G, by depth-first search over commuting order-ℓ
/// elements taken in increasing index order.
inline std::size_t elementary_abelian_rank(const AbstractGroup& g, std::size_t ell) {
  if (!detail::is_prime(ell)) throw DomainError("elementary_abelian_rank needs a prime");
  using Index = AbstractGroup::Index;
  std::vector<Index> candidates;
  for (Index a = 0; a < g.order(); ++a)
    if (g.element_order(a) == ell) candidates.push_back(a);
  std::size_t max_possible = 0;
  for (std::size_t n = g.order(); n % ell == 0; n /= ell) ++max_possible;
  std::size_t best = 0;
  std::function<void(const std::vector<Index>&, const std::vector<Index>&, std::size_t, std::size_t)> search =
      [&](const std::vector<Index>& basis, const std::vector<Index>& members, std::size_t start, std::size_t rank) {
        best = std::max(best, rank);
        if (best == max_possible) return;
        for (std::size_t c = start; c < candidates.size(); ++c) {
          const Index x = candidates[c];
          if (std::binary_search(members.begin(), members.end(), x)) continue;
          if (!std::all_of(basis.begin(), basis.end(), [&](Index b) { return g.commute(b, x); })) continue;
          auto next_basis = basis;
          next_basis.push_back(x);
          auto next_members = g.subgroup(next_basis);
          std::size_t expected = 1;
          for (std::size_t k = 0; k <= rank; ++k) expected *= ell;
          if (next_members.size() != expected) throw DomainError("internal: subgroup is not elementary abelian");
          search(next_basis, next_members, c + 1, rank + 1);
          if (best == max_possible) return;
        }
      };
  search({}, {g.identity()}, 0, 0);
  return best;
}

inline std::size_t elementary_abelian_rank(const FiniteMatrixGroup& g, std::size_t ell) {
  return elementary_abelian_rank(g.abstract(), ell);
}

/// Natural character χ(g) = trace(g), indexed by element.
inline std::vector<FieldElement> natural_character(const FiniteMatrixGroup& g) {
  std::vector<FieldElement> chi;
  chi.reserve(g.order());
  for (const auto& m : g.elements()) chi.push_back(m.trace());
  return chi;
}

/// <χ, ψ> = (1/|G|) Σ χ(g) conj(ψ(g)); characteristic 0 only.
inline FieldElement character_inner_product(const FiniteMatrixGroup& g, const std::vector<FieldElement>& chi,
                                            const std::vector<FieldElement>& psi) {
  if (g.field().characteristic() != 0) throw DomainError("character inner product needs characteristic 0");
  FieldElement acc = g.field().zero();
  for (std::size_t i = 0; i < g.order(); ++i) acc += chi[i] * psi[i].conjugate();
  return acc / g.field().from_int(static_cast<long>(g.order()));
}

inline FieldElement character_norm(const FiniteMatrixGroup& g) {
  const auto chi = natural_character(g);
  return character_inner_product(g, chi, chi);
}

/// Automorphism of an abstract group as a permutation of element indices.
struct GroupAutomorphism {
  std::vector<AbstractGroup::Index> image;
  bool inner = false;

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.image == b.image; }
  friend bool operator<(const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.image < b.image; }

  /// (this ∘ other)(x) = this(other(x)).
  GroupAutomorphism compose(const GroupAutomorphism& other) const {
    GroupAutomorphism r;
    r.image.resize(image.size());
    for (std::size_t x = 0; x < image.size(); ++x) r.image[x] = image[other.image[x]];
    return r;
  }

  GroupAutomorphism inverse() const {
    GroupAutomorphism r;
    r.image.resize(image.size());
    for (std::size_t x = 0; x < image.size(); ++x) r.image[image[x]] = static_cast<AbstractGroup::Index>(x);
    r.inner = inner;
    return r;
  }
};

/// Aut(G) together with its partition into outer classes (cosets of Inn(G)).
struct AutomorphismGroup {
  std::vector<GroupAutomorphism> automorphisms;  // sorted; identity first
  std::size_t inner_count = 0;
  std::vector<std::size_t> outer_class;           // class id per automorphism
  std::vector<std::size_t> class_representatives;  // smallest member per class; class 0 is Inn(G)

  std::size_t order() const noexcept { return automorphisms.size(); }
  std::size_t outer_order() const noexcept { return class_representatives.size(); }

  std::optional<std::size_t> find(const GroupAutomorphism& a) const {
    auto it = std::lower_bound(automorphisms.begin(), automorphisms.end(), a);
    if (it == automorphisms.end() || !(*it == a)) return std::nullopt;
    return static_cast<std::size_t>(it - automorphisms.begin());
  }
};

inline GroupAutomorphism inner_automorphism(const AbstractGroup& g, AbstractGroup::Index h) {
  GroupAutomorphism a;
  a.inner = true;
  a.image.resize(g.order());
  for (AbstractGroup::Index x = 0; x < g.order(); ++x) a.image[x] = g.conjugate(h, x);
  return a;
}

/// All automorphisms, found by backtracking over images of a small generating
/// set. Candidate images must match element order and conjugacy class size.
inline AutomorphismGroup automorphism_group(const AbstractGroup& g, std::size_t bound = 400) {
  using Index = AbstractGroup::Index;
  if (g.order() > bound) throw BoundExceeded("automorphism_group: |G| = " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
  const auto gens = g.generating_set();
  const auto class_size = g.conjugacy_class_sizes();
  const std::size_t n = g.order();

  // BFS spanning tree of the Cayley graph: element = parent * gens[via].
  std::vector<Index> order_bfs{g.identity()}, parent(n, 0), via(n, 0);
  std::vector<bool> seen(n, false);
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < order_bfs.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Index x = g.mul(order_bfs[k], gens[s]);
      if (!seen[x]) {
        seen[x] = true;
        parent[x] = order_bfs[k];
        via[x] = static_cast<Index>(s);
        order_bfs.push_back(x);
      }
    }

  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (Index x = 0; x < n; ++x)
      if (g.element_order(x) == g.element_order(gens[s]) && class_size[x] == class_size[gens[s]]) candidates[s].push_back(x);

  std::vector<GroupAutomorphism> found;
  std::vector<Index> images(gens.size());
  std::function<void(std::size_t)> choose = [&](std::size_t s) {
    if (s == gens.size()) {
      std::vector<Index> phi(n, static_cast<Index>(n));
      phi[g.identity()] = g.identity();
      for (std::size_t k = 1; k < order_bfs.size(); ++k) {
        const Index x = order_bfs[k];
        phi[x] = g.mul(phi[parent[x]], images[via[x]]);
      }
      // Homomorphism check on every Cayley edge, then bijectivity.
      for (Index x = 0; x < n; ++x)
        for (std::size_t t = 0; t < gens.size(); ++t)
          if (phi[g.mul(x, gens[t])] != g.mul(phi[x], images[t])) return;
      std::vector<bool> hit(n, false);
      for (Index x = 0; x < n; ++x) {
        if (hit[phi[x]]) return;
        hit[phi[x]] = true;
      }
      found.push_back(GroupAutomorphism{phi, false});
      return;
    }
    for (Index c : candidates[s]) {
      images[s] = c;
      choose(s + 1);
    }
  };
  choose(0);

  AutomorphismGroup out;
  std::sort(found.begin(), found.end());
  out.automorphisms = std::move(found);
  std::set<std::vector<Index>> inner;
  for (Index h = 0; h < n; ++h) inner.insert(inner_automorphism(g, h).image);
  out.inner_count = inner.size();
  for (auto& a : out.automorphisms) a.inner = inner.count(a.image) > 0;

  out.outer_class.assign(out.automorphisms.size(), SIZE_MAX);
  std::vector<GroupAutomorphism> inner_list;
  for (const auto& im : inner) inner_list.push_back(GroupAutomorphism{im, true});
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) {
    if (out.outer_class[i] != SIZE_MAX) continue;
    const std::size_t cls = out.class_representatives.size();
    out.class_representatives.push_back(i);
    for (const auto& in : inner_list) {
      auto j = out.find(out.automorphisms[i].compose(in));
      if (!j) throw DomainError("internal: automorphism set not closed under inner composition");
      out.outer_class[*j] = cls;
    }
  }
  return out;
}

inline AutomorphismGroup automorphism_group(const FiniteMatrixGroup& g, std::size_t bound = 400) {
  if (g.order() > bound) throw BoundExceeded("automorphism_group: |G| = " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
  return automorphism_group(g.abstract(), bound);
}

}  // namespace invforge
