#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/field.hpp"

namespace invforge {

/// Exponent vector of a monomial.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Monomials of total degree d in n variables, lexicographically descending
/// (x1^d first). This order is the basis order of every degree-d action matrix.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

/// Sparse polynomial in k[x1, ..., xn]. No zero coefficients are stored;
/// terms iterate in descending lexicographic order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, std::greater<Monomial>>;

  Polynomial() = default;
  Polynomial(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}

  static Polynomial constant(const FieldElement& c, std::size_t nvars) {
    Polynomial p(c.field(), nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static Polynomial variable(Field f, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    Polynomial p(f, nvars);
    p.add_term(m, f.one());
    return p;
  }

  static Polynomial term(const FieldElement& c, Monomial m) {
    Polynomial p(c.field(), m.size());
    p.add_term(std::move(m), c);
    return p;
  }

  Field field() const { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
    return d;
  }

  /// Smallest total degree of a term (the multiplicity at the origin); -1 for zero.
  int lowest_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      const int t = static_cast<int>(total_degree(m));
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

  FieldElement coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  FieldElement constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  /// Adds c·m, dropping the term if it cancels.
  void add_term(Monomial m, const FieldElement& c) {
    if (m.size() != nvars_) throw DomainError("monomial has the wrong number of variables");
    if (c.field() != field_) throw DomainError("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial homogeneous_component(std::uint32_t d) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const FieldElement& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_.one(), nvars_), base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// f(images[0], ..., images[n-1]); all images share a variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw DomainError("substitute: need one image per variable");
    const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
      if (im.nvars() != out_vars || im.field() != field_) throw DomainError("substitute: inconsistent images");
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(field_.one(), out_vars));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      return cache[e];
    };
    Polynomial r(field_, out_vars);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(c, out_vars);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0) t *= power(i, m[i]);
      r += t;
    }
    return r;
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw DomainError("evaluate: wrong point dimension");
    FieldElement acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      FieldElement t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0) t *= point[i].pow(m[i]);
      acc += t;
    }
    return acc;
  }

  /// f(x + p).
  Polynomial translate(const std::vector<FieldElement>& p) const {
    if (p.size() != nvars_) throw DomainError("translate: wrong point dimension");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) images.push_back(variable(field_, nvars_, i) + constant(p[i], nvars_));
    return substitute(images);
  }

  /// Division with remainder by g in lex order. Since {g} is a Gröbner basis
  /// of (g), the remainder is zero iff g divides *this.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const {
    check_compatible(g);
    if (g.is_zero()) throw DivisionByZero();
    const auto& [lm, lc] = *g.terms_.begin();
    const FieldElement lc_inv = lc.inverse();
    Polynomial q(field_, nvars_), r(field_, nvars_), p = *this;
    while (!p.is_zero()) {
      const auto [pm, pc] = *p.terms_.begin();
      bool divides = true;
      for (std::size_t i = 0; i < nvars_; ++i) divides = divides && pm[i] >= lm[i];
      if (divides) {
        Monomial s(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) s[i] = pm[i] - lm[i];
        const FieldElement c = pc * lc_inv;
        q.add_term(s, c);
        p -= term(c, s) * g;
      } else {
        r.add_term(pm, pc);
        p.terms_.erase(p.terms_.begin());
      }
    }
    return {std::move(q), std::move(r)};
  }

  /// Exact quotient; throws DomainError when g does not divide.
  Polynomial exact_divide(const Polynomial& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
  }

  /// Scales so the lexicographically leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * terms_.begin()->second.inverse();
  }

  /// `coeff*x1^a1*...*xn^an` terms joined by +/-, lexicographically descending.
  /// Non-constant coefficients are parenthesized.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      bool negative = false;
      if (c.is_prime_field_element() && cs[0] == '-') {
        negative = true;
        cs = cs.substr(1);
      }
      if (!c.is_prime_field_element()) cs = "(" + cs + ")";
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names.empty() ? "x" + std::to_string(i + 1) : names.at(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        os << cs;
      } else if (cs == "1") {
        os << mono;
      } else {
        os << cs << '*' << mono;
      }
    }
    return os.str();
  }

  /// Dense coefficient vector over a monomial basis; throws if a term is missing from it.
  std::vector<FieldElement> coordinates(const std::vector<Monomial>& basis) const {
    std::map<Monomial, std::size_t, std::greater<Monomial>> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    std::vector<FieldElement> v(basis.size(), field_.zero());
    for (const auto& [m, c] : terms_) {
      auto it = pos.find(m);
      if (it == pos.end()) throw DomainError("polynomial has a term outside the given basis");
      v[it->second] = c;
    }
    return v;
  }

  static Polynomial from_coordinates(Field f, std::size_t nvars, const std::vector<Monomial>& basis,
                                     const std::vector<FieldElement>& v) {
    Polynomial p(f, nvars);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_) throw DomainError("polynomial ring mismatch");
  }

  Field field_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Univariate dense view: coefficient of x^k at index k (trimmed).
inline std::vector<FieldElement> dense_coefficients(const Polynomial& p) {
  if (p.nvars() != 1) throw DomainError("dense_coefficients needs a univariate polynomial");
  std::vector<FieldElement> out(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), p.field().zero());
  for (const auto& [m, c] : p.terms()) out[m[0]] = c;
  return out;
}

inline Polynomial from_dense(Field f, const std::vector<FieldElement>& coeffs) {
  Polynomial p(f, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(Monomial{static_cast<std::uint32_t>(k)}, coeffs[k]);
  return p;
}

/// Φ_n as a univariate polynomial over Q.
inline Polynomial cyclotomic_polynomial(unsigned n) {
  const auto c = detail::cyclotomic_coefficients(n);
  const Field q = Field::rational();
  std::vector<FieldElement> coeffs;
  for (const auto& v : c) coeffs.push_back(q.from_rational(v));
  return from_dense(q, coeffs);
}

/// Irreducibility of a univariate polynomial over a prime field F_p.
inline bool is_irreducible_mod_p(const Polynomial& f) {
  const Field k = f.field();
  if (k->kind() != FieldKind::finite || k->degree() != 1) throw DomainError("is_irreducible_mod_p needs a polynomial over a prime field F_p");
  if (f.nvars() != 1) throw DomainError("is_irreducible_mod_p needs a univariate polynomial");
  if (f.degree() < 1) throw DomainError("is_irreducible_mod_p needs degree >= 1");
  detail::Coeffs<detail::ModOps> c;
  for (const auto& e : dense_coefficients(f)) c.push_back(e.modular_coeffs().empty() ? 0 : e.modular_coeffs()[0]);
  return detail::is_irreducible_mod_p(c, k->mod_ops());
}

}  // namespace invforge
