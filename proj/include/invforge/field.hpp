#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in Q, F_{p^m} = F_p[z]/(m(z)) and Q[z]/(m(z)).
 *
 * A field is described by an immutable FieldSpec. Specs are interned: two
 * handles to the same field compare equal by address, and a spec lives for the
 * rest of the process, so elements can carry a plain pointer to it.
 *
 * Elements are stored as their canonical representative: a reduced fraction
 * for Q, and a polynomial in z of degree < deg(modulus) with canonical
 * coefficients otherwise. Equality is representative equality.
 *
 * @code{.cpp}
 * Field k = Field::cyclotomic(20);
 * FieldElement z = k.generator();
 * assert(z.pow(20) == k.one());
 * @endcode
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invforge/detail/upoly.hpp"
#include "invforge/errors.hpp"

namespace invforge {

enum class FieldKind { rational, finite, number_field };

/// Receives non-fatal diagnostics (unverified irreducibility and the like).
inline std::function<void(const std::string&)>& warning_sink() {
  static std::function<void(const std::string&)> sink = [](const std::string& msg) {
    std::cerr << "invforge: warning: " << msg << '\n';
  };
  return sink;
}

inline void warn(const std::string& msg) {
  if (warning_sink()) warning_sink()(msg);
}

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Φ_n with integer coefficients, low degree first: z^n - 1 divided by Φ_d for
/// every proper divisor d of n.
inline std::vector<Rational> cyclotomic_coefficients(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic polynomial needs n >= 1");
  const RationalOps ops;
  std::vector<Rational> f(n + 1, Rational(0));
  f[0] = -1;
  f[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(f, cyclotomic_coefficients(d), ops);
    f = std::move(q);
  }
  return f;
}

inline std::string render_z_poly(const std::vector<Rational>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Rational a = c[k];
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    a = abs(a);
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

inline std::vector<Integer> integer_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer("1000000000000")) throw BoundExceeded("rational root test: coefficient too large to factor");
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

/// Scales a rational polynomial to a primitive integer polynomial.
inline std::vector<Integer> primitive_integer_part(const std::vector<Rational>& f) {
  Integer l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

/// All rational roots of a rational polynomial (rational root test).
inline std::vector<Rational> rational_roots(const std::vector<Rational>& f) {
  std::vector<Rational> roots;
  if (f.size() < 2) return roots;
  auto z = primitive_integer_part(f);
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 >= z.size()) return roots;
  const auto nums = integer_divisors(z[low]);
  const auto dens = integer_divisors(z.back());
  std::set<Rational> seen;
  for (const auto& a : nums) {
    for (const auto& b : dens) {
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        if (!seen.insert(r).second) continue;
        Rational acc = 0;
        for (std::size_t k = f.size(); k-- > 0;) acc = acc * r + f[k];
        if (sgn(acc) == 0) roots.push_back(r);
      }
    }
  }
  return roots;
}

/// Tri-state irreducibility verdict over Q for degree <= 8 polynomials.
enum class Irreducibility { irreducible, reducible, unknown };

inline Irreducibility check_irreducible_over_q(const std::vector<Rational>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return Irreducibility::reducible;
  if (d == 1) return Irreducibility::irreducible;
  if (!rational_roots(f).empty()) return Irreducibility::reducible;
  if (d <= 3) return Irreducibility::irreducible;
  // Degrees of rational factors must be subset sums of every good reduction's
  // factor degrees.
  const auto z = primitive_integer_part(f);
  std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
  int probes = 0;
  for (std::int64_t p = 3; p < 400 && probes < 25; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const ModOps ops{p};
    if (ops.reduce(mpz_fdiv_ui(z.back().get_mpz_t(), static_cast<unsigned long>(p))) == 0) continue;
    Coeffs<ModOps> fp;
    for (const auto& c : z) fp.push_back(ops.reduce(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
    Coeffs<ModOps> deriv;
    for (std::size_t k = 1; k < fp.size(); ++k) deriv.push_back(ops.mul(fp[k], ops.reduce(static_cast<std::int64_t>(k))));
    trim(deriv, ops);
    if (deriv.empty() || gcd(fp, deriv, ops).size() > 1) continue;
    ++probes;
    std::vector<bool> sums(static_cast<std::size_t>(d) + 1, false);
    sums[0] = true;
    for (int deg : factor_degrees_mod_p(fp, ops))
      for (int s = d; s >= deg; --s)
        if (sums[static_cast<std::size_t>(s - deg)]) sums[static_cast<std::size_t>(s)] = true;
    for (int s = 0; s <= d; ++s) possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
  }
  for (int s = 1; s < d; ++s)
    if (possible[static_cast<std::size_t>(s)]) return Irreducibility::unknown;
  return Irreducibility::irreducible;
}

}  // namespace detail

class FieldElement;

/// Immutable description of a field. Obtain instances through Field.
class FieldSpec {
 public:
  FieldKind kind() const noexcept { return kind_; }
  /// 0 for Q and number fields.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Degree over the prime field (1 for Q and F_p).
  std::size_t degree() const noexcept { return degree_; }
  bool is_cyclotomic() const noexcept { return cyclotomic_order_ > 0; }
  unsigned cyclotomic_order() const noexcept { return cyclotomic_order_; }
  /// Number of elements of a finite field, 0 otherwise.
  const Integer& order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  /// Monic modulus over Q (number fields; {0, 1} for Q itself).
  const std::vector<Rational>& rational_modulus() const noexcept { return qmod_; }
  /// Monic modulus over F_p (finite fields).
  const std::vector<std::int64_t>& modular_modulus() const noexcept { return pmod_; }
  detail::ModOps mod_ops() const noexcept { return detail::ModOps{static_cast<std::int64_t>(p_)}; }

 private:
  friend class Field;
  FieldKind kind_ = FieldKind::rational;
  std::uint64_t p_ = 0;
  std::size_t degree_ = 1;
  unsigned cyclotomic_order_ = 0;
  Integer order_ = 0;
  std::string name_;
  std::vector<Rational> qmod_;
  std::vector<std::int64_t> pmod_;
};

/// Handle to an interned FieldSpec. Cheap to copy; equality is identity.
class Field {
 public:
  Field() : spec_(&rational().spec()) {}

  static Field rational() {
    static const Field q = intern([] {
      FieldSpec s;
      s.kind_ = FieldKind::rational;
      s.name_ = "Q";
      s.qmod_ = {Rational(0), Rational(1)};
      return s;
    }());
    return q;
  }

  /// Q(ζ_n) = Q[z]/(Φ_n(z)); z is a primitive n-th root of unity.
  static Field cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic(n) needs n >= 1");
    FieldSpec s;
    s.kind_ = FieldKind::number_field;
    s.cyclotomic_order_ = n;
    s.qmod_ = detail::cyclotomic_coefficients(n);
    s.degree_ = s.qmod_.size() - 1;
    s.name_ = "cyclotomic(" + std::to_string(n) + ")";
    return intern(std::move(s));
  }

  /// Q[z]/(m(z)); m is made monic. Irreducibility is verified for degree <= 8.
  static Field number_field(std::vector<Rational> min_poly) {
    const detail::RationalOps ops;
    detail::trim(min_poly, ops);
    if (min_poly.size() < 2) throw DomainError("number field modulus must have degree >= 1");
    min_poly = detail::make_monic(min_poly, ops);
    const std::size_t d = min_poly.size() - 1;
    if (d == 1) return rational();
    if (d <= 8) {
      switch (detail::check_irreducible_over_q(min_poly)) {
        case detail::Irreducibility::reducible:
          throw DomainError("modulus " + detail::render_z_poly(min_poly) + " is reducible over Q");
        case detail::Irreducibility::unknown:
          warn("irreducibility of " + detail::render_z_poly(min_poly) + " over Q not established; accepted");
          break;
        case detail::Irreducibility::irreducible:
          break;
      }
    } else {
      warn("modulus of degree " + std::to_string(d) + " accepted without an irreducibility check");
    }
    FieldSpec s;
    s.kind_ = FieldKind::number_field;
    s.degree_ = d;
    s.qmod_ = std::move(min_poly);
    s.name_ = "number_field(" + detail::render_z_poly(s.qmod_) + ")";
    return intern(std::move(s));
  }

  /// F_p, with z = 0.
  static Field finite(std::uint64_t p) { return finite(p, {0, 1}); }

  /// F_p[z]/(m(z)); m is reduced mod p, made monic, and must be irreducible.
  static Field finite(std::uint64_t p, std::vector<std::int64_t> modulus) {
    if (!detail::is_prime(p) || p >= (1ULL << 31)) throw DomainError("finite field characteristic must be a prime < 2^31");
    const detail::ModOps ops{static_cast<std::int64_t>(p)};
    for (auto& c : modulus) c = ops.reduce(c);
    detail::trim(modulus, ops);
    if (modulus.size() < 2) throw DomainError("finite field modulus must have degree >= 1");
    modulus = detail::make_monic(modulus, ops);
    if (!detail::is_irreducible_mod_p(modulus, ops)) throw DomainError("finite field modulus is reducible mod " + std::to_string(p));
    FieldSpec s;
    s.kind_ = FieldKind::finite;
    s.p_ = p;
    s.degree_ = modulus.size() - 1;
    mpz_ui_pow_ui(s.order_.get_mpz_t(), p, s.degree_);
    std::vector<Rational> as_q(modulus.begin(), modulus.end());
    for (std::size_t k = 0; k < modulus.size(); ++k) as_q[k] = Rational(static_cast<long>(modulus[k]));
    s.name_ = s.degree_ == 1 && modulus[0] == 0 ? "finite(" + std::to_string(p) + ")"
                                                : "finite(" + std::to_string(p) + ", " + detail::render_z_poly(as_q) + ")";
    s.pmod_ = std::move(modulus);
    return intern(std::move(s));
  }

  const FieldSpec& spec() const noexcept { return *spec_; }
  const FieldSpec* operator->() const noexcept { return spec_; }
  bool operator==(const Field& o) const noexcept { return spec_ == o.spec_; }
  bool operator!=(const Field& o) const noexcept { return spec_ != o.spec_; }

  std::uint64_t characteristic() const noexcept { return spec_->characteristic(); }
  const std::string& name() const noexcept { return spec_->name(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_integer(const Integer& v) const;
  FieldElement from_rational(const Rational& v) const;
  /// The class of z (the defining root).
  FieldElement generator() const;

 private:
  explicit Field(const FieldSpec* s) : spec_(s) {}

  static Field intern(FieldSpec s) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(s.name_);
    if (it == registry.end()) {
      auto key = s.name_;
      it = registry.emplace(key, std::make_unique<FieldSpec>(std::move(s))).first;
    }
    return Field(it->second.get());
  }

  const FieldSpec* spec_;
};

/// Exact element of a Field.
class FieldElement {
 public:
  FieldElement() = default;

  Field field() const { return field_; }
  bool is_zero() const noexcept { return q_.empty() && m_.empty(); }
  bool is_one() const { return *this == field_.one(); }
  /// True when the representative is a constant (an element of the prime field).
  bool is_prime_field_element() const noexcept { return q_.size() <= 1 && m_.size() <= 1; }

  /// Rational value; throws unless char 0 and the representative is constant.
  Rational rational_value() const {
    if (field_.characteristic() != 0 || q_.size() > 1) throw DomainError("element is not rational");
    return q_.empty() ? Rational(0) : q_[0];
  }

  /// Canonical representative coefficients (low degree first, trimmed).
  const std::vector<Rational>& rational_coeffs() const noexcept { return q_; }
  const std::vector<std::int64_t>& modular_coeffs() const noexcept { return m_; }

  FieldElement operator-() const {
    FieldElement r = *this;
    if (char0()) {
      for (auto& c : r.q_) c = -c;
    } else {
      const auto ops = field_->mod_ops();
      for (auto& c : r.m_) c = ops.neg(c);
    }
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    check_same(o);
    if (char0()) {
      q_ = detail::add(q_, o.q_, detail::RationalOps{});
    } else {
      m_ = detail::add(m_, o.m_, field_->mod_ops());
    }
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    check_same(o);
    if (char0()) {
      q_ = detail::sub(q_, o.q_, detail::RationalOps{});
    } else {
      m_ = detail::sub(m_, o.m_, field_->mod_ops());
    }
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o) {
    check_same(o);
    if (char0()) {
      const detail::RationalOps ops;
      if (q_.size() <= 1 || o.q_.size() <= 1) {
        if (q_.empty() || o.q_.empty()) {
          q_.clear();
        } else if (o.q_.size() == 1) {
          for (auto& c : q_) c *= o.q_[0];
        } else {
          const Rational c = q_[0];
          q_ = o.q_;
          for (auto& v : q_) v *= c;
        }
        return *this;
      }
      q_ = detail::mul(q_, o.q_, ops);
      detail::reduce_monic(q_, field_->rational_modulus(), ops);
    } else {
      const auto ops = field_->mod_ops();
      m_ = detail::mul(m_, o.m_, ops);
      detail::reduce_monic(m_, field_->modular_modulus(), ops);
    }
    return *this;
  }
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.q_ == b.q_ && a.m_ == b.m_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on representatives (not compatible with arithmetic); used for
  /// deterministic sorting only.
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    if (a.q_.size() != b.q_.size()) return a.q_.size() < b.q_.size();
    if (a.m_ != b.m_) return a.m_ < b.m_;
    for (std::size_t k = a.q_.size(); k-- > 0;)
      if (a.q_[k] != b.q_[k]) return a.q_[k] < b.q_[k];
    return false;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against the modulus.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement r;
    r.field_ = field_;
    if (char0()) {
      if (q_.size() == 1) {
        r.q_ = {1 / q_[0]};
      } else {
        r.q_ = detail::inverse_mod(q_, field_->rational_modulus(), detail::RationalOps{});
      }
    } else {
      const auto ops = field_->mod_ops();
      r.m_ = m_.size() == 1 ? std::vector<std::int64_t>{ops.inv(m_[0])}
                            : detail::inverse_mod(m_, field_->modular_modulus(), ops);
    }
    return r;
  }

  FieldElement pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = field_.one(), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Complex conjugation of Q(ζ_n): the automorphism z ↦ z^(n-1). Identity on Q.
  FieldElement conjugate() const {
    if (field_->kind() == FieldKind::rational) return *this;
    if (!field_->is_cyclotomic()) throw DomainError("conjugate() needs a cyclotomic field or Q");
    const auto zinv = field_.generator().pow(static_cast<long long>(field_->cyclotomic_order()) - 1);
    FieldElement acc = field_.zero(), zpow = field_.one();
    for (const auto& c : q_) {
      acc += field_.from_rational(c) * zpow;
      zpow *= zinv;
    }
    return acc;
  }

  /// Exact-grammar rendering, constant term first: "1/2 + z^3", "-z", "0".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::size_t n = char0() ? q_.size() : m_.size();
    for (std::size_t k = 0; k < n; ++k) {
      Rational c = char0() ? q_[k] : Rational(static_cast<long>(m_[k]));
      if (sgn(c) == 0) continue;
      if (first) {
        if (sgn(c) < 0) os << '-';
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      c = abs(c);
      if (k == 0) {
        os << c.get_str();
      } else {
        if (c != 1) os << c.get_str() << '*';
        os << 'z';
        if (k > 1) os << '^' << k;
      }
    }
    if (first) os << '0';
    return os.str();
  }

  /// Hash of the canonical representative.
  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& c : q_) {
      mix(hash_mpz(c.get_num_mpz_t()));
      mix(hash_mpz(c.get_den_mpz_t()));
    }
    for (auto c : m_) mix(static_cast<std::size_t>(c));
    mix(q_.size() + (m_.size() << 8));
    return h;
  }

 private:
  friend class Field;

  static std::size_t hash_mpz(mpz_srcptr z) noexcept {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
    return h;
  }

  bool char0() const noexcept { return field_.characteristic() == 0; }

  void check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw DomainError("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }

  Field field_;
  std::vector<Rational> q_;
  std::vector<std::int64_t> m_;
};

inline FieldElement Field::zero() const {
  FieldElement e;
  e.field_ = *this;
  return e;
}

inline FieldElement Field::one() const { return from_int(1); }

inline FieldElement Field::from_int(long v) const { return from_integer(Integer(v)); }

inline FieldElement Field::from_integer(const Integer& v) const {
  FieldElement e = zero();
  if (spec_->characteristic() == 0) {
    if (v != 0) e.q_ = {Rational(v)};
  } else {
    const auto p = static_cast<unsigned long>(spec_->characteristic());
    const auto r = static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
    if (r != 0) e.m_ = {r};
  }
  return e;
}

inline FieldElement Field::from_rational(const Rational& v) const {
  if (spec_->characteristic() == 0) {
    FieldElement e = zero();
    if (sgn(v) != 0) e.q_ = {v};
    return e;
  }
  return from_integer(v.get_num()) / from_integer(v.get_den());
}

inline FieldElement Field::generator() const {
  if (spec_->kind() == FieldKind::rational) throw DomainError("the field Q has no generator symbol z");
  FieldElement e = zero();
  if (spec_->characteristic() == 0) {
    e.q_ = {Rational(0), Rational(1)};
    detail::reduce_monic(e.q_, spec_->rational_modulus(), detail::RationalOps{});
  } else {
    e.m_ = {0, 1};
    detail::reduce_monic(e.m_, spec_->modular_modulus(), spec_->mod_ops());
  }
  return e;
}

/// Every element of a finite field, in base-p digit order of the
/// representative coefficients (0, 1, ..., p-1, z, 1+z, ...).
inline std::vector<FieldElement> all_elements(const Field& f, std::size_t bound = 1000000) {
  if (f->kind() != FieldKind::finite) throw DomainError("all_elements needs a finite field");
  if (f->order() > Integer(static_cast<unsigned long>(bound))) throw BoundExceeded("field too large to enumerate");
  const std::size_t q = f->order().get_ui();
  const auto p = static_cast<long>(f.characteristic());
  std::vector<FieldElement> out;
  out.reserve(q);
  const FieldElement z = f->degree() > 1 ? f.generator() : f.zero();
  for (std::size_t idx = 0; idx < q; ++idx) {
    FieldElement e = f.zero(), zp = f.one();
    std::size_t rest = idx;
    for (std::size_t k = 0; k < f->degree(); ++k) {
      e += f.from_int(static_cast<long>(rest % static_cast<std::size_t>(p))) * zp;
      rest /= static_cast<std::size_t>(p);
      zp *= z;
    }
    out.push_back(e);
  }
  return out;
}

inline bool is_square_in_q(const Rational& a) {
  if (sgn(a) < 0) return false;
  return mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
}

}  // namespace invforge

template <>
struct std::hash<invforge::FieldElement> {
  std::size_t operator()(const invforge::FieldElement& e) const noexcept { return e.hash(); }
};
