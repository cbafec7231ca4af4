#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "invforge/field.hpp"
#include "invforge/parse.hpp"
#include "invforge/polynomial.hpp"

using namespace invforge;

namespace {

// Integer polynomial helpers used only as oracles (low degree first).
using IPoly = std::vector<long long>;

IPoly imul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic divisor; returns {quotient, remainder}.
std::pair<IPoly, IPoly> idivmod(IPoly a, const IPoly& b) {
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const long long c = a[k];
    q[k + 1 - b.size()] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + 1 - b.size() + j] -= c * b[j];
    if (k + 1 == b.size()) break;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {q, a};
}

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

// Φ_n = Π_{d|n} (z^d - 1)^{μ(n/d)}: multiply the positive factors, then divide.
IPoly oracle_cyclotomic(int n) {
  IPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    IPoly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = imul(num, f);
    if (mu == -1) den = imul(den, f);
  }
  return idivmod(num, den).first;
}

std::vector<Field> sample_fields() {
  return {Field::rational(),
          Field::cyclotomic(20),
          Field::number_field(detail::parse_rational_z_poly("z^2 + z + 2")),
          Field::finite(7),
          Field::finite(2, {1, 1, 0, 1}),
          Field::finite(3, {1, 0, 1})};
}

FieldElement random_element(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5);
  FieldElement acc = f.zero(), zp = f.one();
  const FieldElement z = f->kind() == FieldKind::rational ? f.one() : f.generator();
  const std::size_t terms = f->kind() == FieldKind::rational ? 1 : f->degree();
  for (std::size_t k = 0; k < terms; ++k) {
    Rational c(coeff(rng), f.characteristic() == 0 ? den(rng) : 1);
    c.canonicalize();
    acc += f.from_rational(c) * zp;
    zp *= z;
  }
  return acc;
}

}  // namespace

TEST(ParseElement, EchoesCanonicalRepresentative) {
  const Field k = Field::cyclotomic(20);
  const FieldElement e = parse_element("1/2 + z^3", k);
  EXPECT_EQ(e.to_string(), "1/2 + z^3");
  EXPECT_EQ(e, k.from_rational(Rational(1, 2)) + k.generator().pow(3));
}

TEST(ParseElement, ReducesHighPowersModuloCyclotomicPolynomial) {
  const Field k = Field::cyclotomic(20);
  // Oracle: long division of z^20 by Φ_20 over the integers.
  IPoly z20(21, 0);
  z20[20] = 1;
  const auto [q, r] = idivmod(z20, oracle_cyclotomic(20));
  ASSERT_EQ(r, IPoly({1}));
  const FieldElement e = parse_element("z^20", k);
  EXPECT_EQ(e, k.one());
  EXPECT_LT(e.rational_coeffs().size(), 8U);
  // A value that is not a root-of-unity identity: z^9 = z * z^8 with z^8 = z^6 - z^4 + z^2 - 1.
  EXPECT_EQ(parse_element("z^9", k).to_string(), "-z + z^3 - z^5 + z^7");
}

TEST(ParseElement, DivisionByZeroIsReported) {
  EXPECT_THROW(parse_element("2/0", Field::rational()), DivisionByZero);
  EXPECT_THROW(parse_element("1/2", Field::finite(2)), DivisionByZero);
}

TEST(ParseElement, SyntaxErrorsCarryPosition) {
  try {
    parse_element("1 + * 2", Field::rational());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(parse_element("z", Field::rational()), ParseError);
  EXPECT_THROW(parse_element("(1 + 2", Field::rational()), ParseError);
  EXPECT_THROW(parse_element("", Field::rational()), ParseError);
  EXPECT_THROW(parse_element("2^z", Field::cyclotomic(3)), ParseError);
}

TEST(ParseElement, UnaryMinusAndNesting) {
  const Field q = Field::rational();
  EXPECT_EQ(parse_element("-1/2", q), q.from_rational(Rational(-1, 2)));
  EXPECT_EQ(parse_element("-(3 - 5)^3", q), q.from_int(8));
  EXPECT_EQ(parse_element("2*3/4", q), q.from_rational(Rational(3, 2)));
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).to_string({"z"}), "z - 1");
  EXPECT_EQ(cyclotomic_polynomial(4).to_string({"z"}), "z^2 + 1");
  EXPECT_EQ(cyclotomic_polynomial(20).to_string({"z"}), "z^8 - z^6 + z^4 - z^2 + 1");
}

TEST(CyclotomicPolynomial, MatchesMobiusProductOracle) {
  for (int n = 1; n <= 40; ++n) {
    const auto dense = dense_coefficients(cyclotomic_polynomial(static_cast<unsigned>(n)));
    const IPoly expected = oracle_cyclotomic(n);
    ASSERT_EQ(dense.size(), expected.size()) << n;
    for (std::size_t k = 0; k < dense.size(); ++k) EXPECT_EQ(dense[k].rational_value(), Rational(static_cast<long>(expected[k]))) << n;
  }
}

TEST(CyclotomicPolynomial, DividesZnMinusOne) {
  for (unsigned n = 1; n <= 30; ++n) {
    const Polynomial phi = cyclotomic_polynomial(n);
    const Polynomial zn = parse_polynomial("x^" + std::to_string(n) + " - 1", Field::rational(), 1);
    EXPECT_TRUE(zn.divmod(phi).second.is_zero()) << n;
  }
}

TEST(Invert, Examples) {
  const Field q = Field::rational();
  EXPECT_EQ(q.from_int(2).inverse(), q.from_rational(Rational(1, 2)));
  const Field c4 = Field::cyclotomic(4);
  EXPECT_EQ(c4.generator().inverse(), -c4.generator());
  // (1 + z)(-z) = -z - z^2 = 1 in Q(ζ_3).
  const Field c3 = Field::cyclotomic(3);
  EXPECT_EQ((c3.one() + c3.generator()).inverse(), -c3.generator());
  EXPECT_THROW(c3.zero().inverse(), DivisionByZero);
}

TEST(Conjugate, Examples) {
  const Field c4 = Field::cyclotomic(4);
  EXPECT_EQ(c4.generator().conjugate(), -c4.generator());
  EXPECT_EQ(c4.from_int(7).conjugate(), c4.from_int(7));
  const Field c5 = Field::cyclotomic(5);
  const FieldElement real = parse_element("z + z^4", c5);
  EXPECT_EQ(real.conjugate(), real);
  EXPECT_THROW(Field::finite(5).one().conjugate(), DomainError);
  const Field nf = Field::number_field(detail::parse_rational_z_poly("z^2 - 2"));
  EXPECT_THROW(nf.generator().conjugate(), DomainError);
}

TEST(IrreducibleModP, Examples) {
  EXPECT_TRUE(is_irreducible_mod_p(parse_polynomial("x^2 + x + 1", Field::finite(2), 1)));
  EXPECT_FALSE(is_irreducible_mod_p(parse_polynomial("x^2 + x + 1", Field::finite(7), 1)));
  EXPECT_TRUE(is_irreducible_mod_p(parse_polynomial("x - 1", Field::finite(5), 1)));
  EXPECT_THROW(is_irreducible_mod_p(parse_polynomial("3", Field::finite(5), 1)), DomainError);
}

TEST(IrreducibleModP, AgreesWithBruteForceRootAndQuadraticSearch) {
  // Degree <= 3: irreducible iff no root. Degree 4: iff no root and no monic quadratic factor.
  for (std::int64_t p : {2, 3, 5}) {
    const Field fp = Field::finite(static_cast<std::uint64_t>(p));
    for (int code = 0; code < p * p * p * p; ++code) {
      std::string text = "x^4";
      int c = code;
      for (int k = 0; k < 4; ++k, c /= static_cast<int>(p)) text += " + " + std::to_string(c % p) + "*x^" + std::to_string(k);
      const Polynomial f = parse_polynomial(text, fp, 1);
      bool reducible = false;
      for (std::int64_t a = 0; a < p && !reducible; ++a) reducible = f.evaluate({fp.from_int(static_cast<long>(a))}).is_zero();
      for (std::int64_t a = 0; a < p && !reducible; ++a)
        for (std::int64_t b = 0; b < p && !reducible; ++b) {
          const Polynomial g = parse_polynomial("x^2 + " + std::to_string(a) + "*x + " + std::to_string(b), fp, 1);
          reducible = f.divmod(g).second.is_zero();
        }
      EXPECT_EQ(is_irreducible_mod_p(f), !reducible) << text << " over F_" << p;
    }
  }
}

TEST(FieldSpec, ConstructionChecks) {
  EXPECT_THROW(Field::finite(4), DomainError);
  EXPECT_THROW(Field::finite(2, {1, 0, 1}), DomainError);  // z^2 + 1 = (z + 1)^2 over F_2
  EXPECT_THROW(Field::number_field(detail::parse_rational_z_poly("z^2 - 4")), DomainError);
  EXPECT_THROW(Field::number_field(detail::parse_rational_z_poly("z^4 - 1")), DomainError);
  const Field k = Field::number_field(detail::parse_rational_z_poly("z^2 + z + 2"));
  EXPECT_EQ(k->degree(), 2U);
  EXPECT_EQ(k.name(), "number_field(z^2 + z + 2)");
  EXPECT_EQ(parse_field("cyclotomic(20)"), Field::cyclotomic(20));
  EXPECT_EQ(parse_field("finite(3, z^2 + 1)")->order(), 9);
  EXPECT_EQ(parse_field(Field::finite(3, {1, 0, 1}).name()), Field::finite(3, {1, 0, 1}));
  EXPECT_THROW(parse_field("reals"), ParseError);
}

TEST(FieldAxioms, HoldOnRandomSamples) {
  std::mt19937 rng(20240601);
  for (const Field& f : sample_fields()) {
    for (int trial = 0; trial < 1000; ++trial) {
      const FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << f.name();
      ASSERT_EQ((a * b) * c, a * (b * c)) << f.name();
      ASSERT_EQ(a * (b + c), a * b + a * c) << f.name();
      ASSERT_EQ(a * b, b * a) << f.name();
      if (!a.is_zero()) {
        ASSERT_TRUE((a * a.inverse()).is_one()) << f.name() << " " << a.to_string();
      }
    }
  }
}

TEST(FieldAxioms, RenderParseRoundTrip) {
  std::mt19937 rng(7);
  for (const Field& f : sample_fields()) {
    for (int trial = 0; trial < 200; ++trial) {
      const FieldElement a = random_element(f, rng);
      ASSERT_EQ(parse_element(a.to_string(), f), a) << f.name() << ": " << a.to_string();
    }
  }
}

TEST(FieldAxioms, ConjugationIsAnInvolutiveAutomorphism) {
  std::mt19937 rng(11);
  for (unsigned n : {3U, 4U, 5U, 7U, 12U, 20U}) {
    const Field f = Field::cyclotomic(n);
    for (int trial = 0; trial < 100; ++trial) {
      const FieldElement a = random_element(f, rng), b = random_element(f, rng);
      ASSERT_EQ(a.conjugate().conjugate(), a);
      ASSERT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
      ASSERT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    }
    const FieldElement r = f.from_rational(Rational(-3, 7));
    EXPECT_EQ(r.conjugate(), r);
    EXPECT_EQ(f.generator().conjugate() * f.generator(), f.one());
  }
}

TEST(AllElements, EnumeratesFiniteField) {
  const Field f9 = Field::finite(3, {1, 0, 1});
  const auto els = all_elements(f9);
  ASSERT_EQ(els.size(), 9U);
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) EXPECT_NE(els[i], els[j]);
  EXPECT_EQ(els[0], f9.zero());
  EXPECT_EQ(els[1], f9.one());
}
