#pragma once

// Dense univariate polynomial kernels shared by the field implementations.
// Coefficients are stored low degree first; a canonical polynomial has no
// trailing zeros, so the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"

namespace invforge {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

/// Coefficient arithmetic in Q.
struct RationalOps {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw DivisionByZero();
    return 1 / a;
  }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
};

/// Coefficient arithmetic in the prime field F_p, p < 2^31.
struct ModOps {
  using value_type = std::int64_t;
  std::int64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type reduce(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const {
    value_type s = a - b;
    return s < 0 ? s + p : s;
  }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw DivisionByZero();
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return reduce(s0);
  }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = (acc + a * b) % p; }
};

template <class Ops>
using Coeffs = std::vector<typename Ops::value_type>;

template <class Ops>
void trim(Coeffs<Ops>& a, const Ops& ops) {
  while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

template <class Ops>
int degree(const Coeffs<Ops>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class Ops>
Coeffs<Ops> add(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  Coeffs<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.add(r[i], b[i]);
  trim(r, ops);
  return r;
}

template <class Ops>
Coeffs<Ops> sub(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  Coeffs<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.sub(r[i], b[i]);
  trim(r, ops);
  return r;
}

template <class Ops>
Coeffs<Ops> mul(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  if (a.empty() || b.empty()) return {};
  Coeffs<Ops> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) ops.add_mul(r[i + j], a[i], b[j]);
  }
  trim(r, ops);
  return r;
}

template <class Ops>
Coeffs<Ops> scale(const Coeffs<Ops>& a, const typename Ops::value_type& c, const Ops& ops) {
  if (ops.is_zero(c)) return {};
  Coeffs<Ops> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ops.mul(a[i], c);
  return r;
}

/// Quotient and remainder of a by b (b nonzero).
template <class Ops>
std::pair<Coeffs<Ops>, Coeffs<Ops>> divmod(Coeffs<Ops> a, const Coeffs<Ops>& b, const Ops& ops) {
  if (b.empty()) throw DivisionByZero();
  trim(a, ops);
  if (a.size() < b.size()) return {{}, std::move(a)};
  const auto lead_inv = ops.inv(b.back());
  Coeffs<Ops> q(a.size() - b.size() + 1, ops.zero());
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const std::size_t k = shift + b.size() - 1;
    if (ops.is_zero(a[k])) continue;
    const auto c = ops.mul(a[k], lead_inv);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ops.sub(a[shift + j], ops.mul(c, b[j]));
  }
  trim(a, ops);
  trim(q, ops);
  return {std::move(q), std::move(a)};
}

/// Remainder modulo a monic modulus; only the nonzero modulus terms are visited.
template <class Ops>
void reduce_monic(Coeffs<Ops>& a, const Coeffs<Ops>& modulus, const Ops& ops) {
  const std::size_t m = modulus.size() - 1;
  for (std::size_t k = a.size(); k-- > m;) {
    if (ops.is_zero(a[k])) continue;
    const auto c = a[k];
    for (std::size_t j = 0; j < m; ++j) {
      if (ops.is_zero(modulus[j])) continue;
      a[k - m + j] = ops.sub(a[k - m + j], ops.mul(c, modulus[j]));
    }
    a[k] = ops.zero();
  }
  trim(a, ops);
}

template <class Ops>
Coeffs<Ops> make_monic(const Coeffs<Ops>& a, const Ops& ops) {
  if (a.empty()) return a;
  return scale(a, ops.inv(a.back()), ops);
}

/// Monic gcd (zero if both inputs are zero).
template <class Ops>
Coeffs<Ops> gcd(Coeffs<Ops> a, Coeffs<Ops> b, const Ops& ops) {
  trim(a, ops);
  trim(b, ops);
  while (!b.empty()) {
    auto r = divmod(a, b, ops).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, ops);
}

/// Inverse of a modulo m via the extended Euclidean algorithm.
template <class Ops>
Coeffs<Ops> inverse_mod(const Coeffs<Ops>& a, const Coeffs<Ops>& m, const Ops& ops) {
  Coeffs<Ops> r0 = m, r1 = divmod(a, m, ops).second;
  if (r1.empty()) throw DivisionByZero();
  Coeffs<Ops> s0, s1{ops.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, ops);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = sub(s0, mul(q, s1, ops), ops);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DivisionByZero();  // a shares a factor with m
  return divmod(scale(s0, ops.inv(r0[0]), ops), m, ops).second;
}

/// base^e mod m for a monic modulus.
template <class Ops>
Coeffs<Ops> powmod(Coeffs<Ops> base, Integer e, const Coeffs<Ops>& m, const Ops& ops) {
  Coeffs<Ops> result{ops.one()};
  reduce_monic(base, m, ops);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      result = mul(result, base, ops);
      reduce_monic(result, m, ops);
    }
    e >>= 1;
    if (sgn(e) > 0) {
      base = mul(base, base, ops);
      reduce_monic(base, m, ops);
    }
  }
  return result;
}

/// Irreducibility over F_p by distinct-degree testing: a polynomial of degree d
/// is irreducible iff gcd(f, x^(p^i) - x) = 1 for every i <= d/2.
inline bool is_irreducible_mod_p(const Coeffs<ModOps>& f_in, const ModOps& ops) {
  Coeffs<ModOps> f = f_in;
  trim(f, ops);
  if (f.size() < 2) throw DomainError("irreducibility test needs a polynomial of degree >= 1");
  f = make_monic(f, ops);
  const int d = degree<ModOps>(f);
  if (d == 1) return true;
  const Coeffs<ModOps> x{0, 1};
  Coeffs<ModOps> frob = x;  // x^(p^i) mod f
  for (int i = 1; 2 * i <= d; ++i) {
    frob = powmod(frob, Integer(static_cast<unsigned long>(ops.p)), f, ops);
    auto g = gcd(sub(frob, x, ops), f, ops);
    if (g.size() > 1) return false;
  }
  return true;
}

/// Degrees of the irreducible factors of a squarefree f over F_p, by
/// distinct-degree factorization.
inline std::vector<int> factor_degrees_mod_p(Coeffs<ModOps> f, const ModOps& ops) {
  trim(f, ops);
  f = make_monic(f, ops);
  std::vector<int> degrees;
  const Coeffs<ModOps> x{0, 1};
  Coeffs<ModOps> frob = x;
  for (int i = 1; degree<ModOps>(f) >= 2 * i; ++i) {
    frob = powmod(frob, Integer(static_cast<unsigned long>(ops.p)), f, ops);
    auto g = gcd(sub(frob, x, ops), f, ops);
    if (g.size() > 1) {
      for (int k = 0; k < degree<ModOps>(g) / i; ++k) degrees.push_back(i);
      f = divmod(f, g, ops).first;
      frob = divmod(frob, f, ops).second;
    }
  }
  if (degree<ModOps>(f) >= 1) degrees.push_back(degree<ModOps>(f));
  return degrees;
}

}  // namespace detail
}  // namespace invforge
