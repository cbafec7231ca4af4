#pragma once

// Nonabelian H^1(Γ, M) for a finite group Γ acting on a finite group M by
// automorphisms, by enumerating cocycles and sorting them into classes
// under twisted conjugation. Also the square-class count that indexes the
// forms x^2 - d*y^2 = z^n.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/field.hpp"
#include "invforge/group.hpp"
#include "invforge/parse.hpp"

namespace invforge {

/// Γ acting on M; act[σ] is the permutation of M's indices given by σ.
/// Invariant: σ ↦ act[σ] is a homomorphism Γ → Aut(M) (σ(τ(m)) = (στ)(m)).
class FiniteAction {
 public:
  using Index = AbstractGroup::Index;
  using Perm = std::vector<Index>;

  /// Extends the images of Γ's generators along words and verifies the result
  /// on the full table.
  static FiniteAction from_generators(AbstractGroup gamma, AbstractGroup m, std::vector<Index> gamma_generators,
                                      const std::vector<Perm>& generator_images) {
    if (gamma_generators.size() != generator_images.size())
      throw DomainError("action needs one image per generator of the acting group");
    FiniteAction a;
    a.gamma_ = std::move(gamma);
    a.m_ = std::move(m);
    a.gens_ = std::move(gamma_generators);
    const std::size_t ng = a.gamma_.order(), nm = a.m_.order();
    for (const auto& p : generator_images) a.check_automorphism(p);
    for (auto s : a.gens_)
      if (s >= ng) throw DomainError("acting-group generator out of range");
    Perm id(nm);
    for (Index i = 0; i < nm; ++i) id[i] = i;
    a.act_.assign(ng, Perm{});
    a.act_[a.gamma_.identity()] = id;
    std::vector<Index> queue{a.gamma_.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t s = 0; s < a.gens_.size(); ++s) {
        const Index next = a.gamma_.mul(queue[k], a.gens_[s]);
        if (!a.act_[next].empty()) continue;
        a.act_[next] = compose(a.act_[queue[k]], generator_images[s]);
        queue.push_back(next);
      }
    if (queue.size() != ng) throw DomainError("listed elements do not generate the acting group");
    for (Index s = 0; s < ng; ++s)
      for (Index t = 0; t < ng; ++t)
        if (a.act_[a.gamma_.mul(s, t)] != compose(a.act_[s], a.act_[t]))
          throw DomainError("action is not a homomorphism into Aut(M)");
    return a;
  }

  static FiniteAction trivial(AbstractGroup gamma, AbstractGroup m) {
    auto gens = gamma.generating_set();
    Perm id(m.order());
    for (Index i = 0; i < m.order(); ++i) id[i] = i;
    std::vector<Perm> images(gens.size(), id);
    return from_generators(std::move(gamma), std::move(m), std::move(gens), images);
  }

  const AbstractGroup& gamma() const noexcept { return gamma_; }
  const AbstractGroup& module() const noexcept { return m_; }
  const std::vector<Index>& gamma_generators() const noexcept { return gens_; }
  Index apply(Index sigma, Index x) const { return act_[sigma][x]; }
  const Perm& action_of(Index sigma) const { return act_.at(sigma); }

  /// The same action with M's element i renamed perm[i].
  FiniteAction relabel_module(const Perm& perm) const {
    const std::size_t nm = m_.order();
    if (perm.size() != nm) throw DomainError("relabeling has the wrong length");
    std::vector<Perm> images;
    for (auto s : gens_) {
      Perm p(nm);
      for (Index x = 0; x < nm; ++x) p[perm[x]] = perm[act_[s][x]];
      images.push_back(std::move(p));
    }
    return from_generators(gamma_, m_.relabel(perm), gens_, images);
  }

 private:
  static Perm compose(const Perm& outer, const Perm& inner) {
    Perm r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
  }

  void check_automorphism(const Perm& p) const {
    const std::size_t nm = m_.order();
    if (p.size() != nm) throw DomainError("automorphism image has the wrong length");
    std::vector<bool> seen(nm, false);
    for (auto x : p) {
      if (x >= nm || seen[x]) throw DomainError("automorphism image is not a permutation");
      seen[x] = true;
    }
    for (Index x = 0; x < nm; ++x)
      for (Index y = 0; y < nm; ++y)
        if (p[m_.mul(x, y)] != m_.mul(p[x], p[y])) throw DomainError("image is not an automorphism of M");
  }

  AbstractGroup gamma_;
  AbstractGroup m_;
  std::vector<Index> gens_;
  std::vector<Perm> act_;
};

/// A cocycle as its values c_σ for every σ ∈ Γ, indexed by σ.
using Cocycle = std::vector<AbstractGroup::Index>;

/// c_{στ} = c_σ·σ(c_τ) for all σ, τ.
inline bool is_cocycle(const FiniteAction& a, const Cocycle& c) {
  const auto& g = a.gamma();
  const auto& m = a.module();
  if (c.size() != g.order()) return false;
  for (AbstractGroup::Index s = 0; s < g.order(); ++s)
    for (AbstractGroup::Index t = 0; t < g.order(); ++t)
      if (c[g.mul(s, t)] != m.mul(c[s], a.apply(s, c[t]))) return false;
  return true;
}

/// σ ↦ b⁻¹·c_σ·σ(b).
inline Cocycle twist(const FiniteAction& a, const Cocycle& c, AbstractGroup::Index b) {
  const auto& m = a.module();
  Cocycle out(c.size());
  for (AbstractGroup::Index s = 0; s < c.size(); ++s) out[s] = m.mul(m.mul(m.inv(b), c[s]), a.apply(s, b));
  return out;
}

struct CocycleClassSet {
  std::vector<Cocycle> representatives;  // lexicographically least in each class, sorted
  std::vector<std::size_t> class_sizes;
  std::size_t cocycle_count = 0;

  std::size_t count() const noexcept { return representatives.size(); }
};

/// Enumerates value assignments on Γ's generators, extends each along words
/// with c_{σs} = c_σ·σ(c_s), keeps those satisfying the full cocycle identity,
/// and partitions them into twisted-conjugacy classes.
inline CocycleClassSet h1_classes(const FiniteAction& a, std::size_t bound = 1000000) {
  using Index = AbstractGroup::Index;
  const auto& g = a.gamma();
  const auto& m = a.module();
  const auto& gens = a.gamma_generators();
  const std::size_t ng = g.order(), nm = m.order();
  double candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) candidates *= static_cast<double>(nm);
  if (candidates > static_cast<double>(bound))
    throw BoundExceeded("cocycle enumeration needs " + std::to_string(static_cast<long double>(candidates)) + " candidates");

  // BFS tree of Γ: each non-identity σ = parent·generator.
  std::vector<Index> order{g.identity()}, parent(ng, 0), via(ng, 0);
  std::vector<bool> seen(ng, false);
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Index next = g.mul(order[k], gens[s]);
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = order[k];
      via[next] = static_cast<Index>(s);
      order.push_back(next);
    }

  std::vector<Cocycle> cocycles;
  std::vector<Index> values(gens.size(), 0);
  const auto total = static_cast<std::size_t>(candidates);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t x = k;
    for (std::size_t i = gens.size(); i-- > 0;) {
      values[i] = static_cast<Index>(x % nm);
      x /= nm;
    }
    Cocycle c(ng, m.identity());
    for (std::size_t j = 1; j < order.size(); ++j) {
      const Index sigma = order[j], p = parent[sigma];
      c[sigma] = m.mul(c[p], a.apply(p, values[via[sigma]]));
    }
    if (is_cocycle(a, c)) cocycles.push_back(std::move(c));
  }

  CocycleClassSet out;
  out.cocycle_count = cocycles.size();
  std::map<Cocycle, std::size_t> class_of;
  std::vector<std::pair<Cocycle, std::size_t>> classes;
  for (const auto& c : cocycles) {
    if (class_of.count(c)) continue;
    std::vector<Cocycle> orbit;
    for (Index b = 0; b < nm; ++b) orbit.push_back(twist(a, c, b));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const auto& o : orbit) class_of[o] = classes.size();
    classes.emplace_back(orbit.front(), orbit.size());
  }
  std::sort(classes.begin(), classes.end());
  for (auto& [rep, size] : classes) {
    out.representatives.push_back(rep);
    out.class_sizes.push_back(size);
  }
  return out;
}

struct SquareClassReport {
  std::string field;
  std::vector<std::string> representatives;  // of k^x / (k^x)^2
  std::vector<std::string> forms;            // x^2 - d*y^2 = z^n, one per class
};

/// Representatives of k^x/(k^x)^2 for k = the reals or a finite field of odd
/// order: 1 and one non-square.
inline SquareClassReport square_class_forms(const std::string& field_spec) {
  SquareClassReport r;
  r.field = field_spec;
  if (field_spec == "reals" || field_spec == "R") {
    r.representatives = {"1", "-1"};
    r.forms = {"x^2 - y^2 = z^n (equivalently x*y = z^n)", "x^2 + y^2 = z^n"};
    return r;
  }
  const Field f = parse_field(field_spec);
  if (f->kind() != FieldKind::finite) throw DomainError("square classes are computed for the reals and finite fields only");
  if (f.characteristic() == 2) throw DomainError("square classes need odd characteristic");
  const Integer half = (f->order() - 1) / 2;
  for (const auto& e : all_elements(f)) {
    if (e.is_zero()) continue;
    if (!e.pow(static_cast<long long>(half.get_ui())).is_one()) {
      r.representatives = {"1", e.to_string()};
      r.forms = {"x^2 - y^2 = z^n (equivalently x*y = z^n)", "x^2 - (" + e.to_string() + ")*y^2 = z^n"};
      return r;
    }
  }
  throw DomainError("internal: no non-square in a finite field of odd order");
}

/// The reduction that lets form counting ignore unipotent kernels.
inline std::string h1_trivial_for_unipotent_note() {
  return "Over a perfect field k, H^1(Gal(k_sep/k), U) is trivial for every unipotent group U, "
         "and H^1 of a split torus vanishes by Hilbert 90. Twisted forms are therefore counted by H^1 "
         "with coefficients in the finite quotient of N(G, GL_n)/G, which is what h1_classes computes.";
}

}  // namespace invforge
