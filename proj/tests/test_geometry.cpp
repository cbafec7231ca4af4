#include <gtest/gtest.h>

#include <random>

#include "invforge/geometry.hpp"
#include "support.hpp"

using namespace invforge;
using namespace testing_support;

namespace {

// Multiplicity via Hasse derivatives: the least |a| with (D^(a) f)(p) != 0,
// where D^(a) x^m = Π C(m_i, a_i) x^{m - a}. Valid in every characteristic.
std::size_t hasse_multiplicity(const Polynomial& f, const Vector& p) {
  const Field k = f.field();
  const std::size_t n = f.nvars();
  for (std::uint32_t r = 0; r <= static_cast<std::uint32_t>(f.degree()); ++r) {
    for (const auto& a : monomials_of_degree(n, r)) {
      FieldElement value = k.zero();
      for (const auto& [m, c] : f.terms()) {
        FieldElement t = c;
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i) {
          if (m[i] < a[i]) {
            t = k.zero();
            break;
          }
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), m[i], a[i]);
          t *= k.from_integer(binom) * p[i].pow(static_cast<long long>(m[i] - a[i]));
        }
        value += t;
      }
      if (!value.is_zero()) return r;
    }
  }
  ADD_FAILURE() << "nonzero polynomial with all Hasse derivatives vanishing";
  return 0;
}

Polynomial random_polynomial(Field f, std::size_t n, std::mt19937& rng) {
  const auto elems = all_elements(f);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1), deg(0, 4), terms(1, 4);
  Polynomial p(f, n);
  while (p.is_zero()) {
    const std::size_t t = terms(rng);
    for (std::size_t k = 0; k < t; ++k) {
      const auto ms = monomials_of_degree(n, static_cast<std::uint32_t>(deg(rng)));
      std::uniform_int_distribution<std::size_t> mi(0, ms.size() - 1);
      Polynomial term(f, n);
      term.add_term(ms[mi(rng)], elems[pick(rng)]);
      p += term;
    }
  }
  // Products of linear factors have points of high multiplicity.
  if (rng() % 2) {
    Polynomial lin(f, n);
    for (std::size_t i = 0; i < n; ++i) lin += Polynomial::variable(f, n, i) * elems[pick(rng)];
    lin += Polynomial::constant(elems[pick(rng)], n);
    if (!lin.is_zero()) p *= lin * lin;
  }
  return p;
}

// Keeps exhaustive spinning within the module-size bound.
bool small_module(std::size_t n, std::uint64_t p) {
  double c = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) c *= static_cast<double>(p);
  return c <= 1e6;
}

Integer ipow(std::uint64_t q, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(q);
  return r;
}

}  // namespace

TEST(Multiplicity, Examples) {
  const Field f2 = Field::finite(2);
  EXPECT_EQ(multiplicity_at_point(poly("x*y", f2, 2), vec(f2, {"0", "0"})), 2u);
  EXPECT_EQ(multiplicity_at_point(poly("x*y", f2, 2), vec(f2, {"1", "0"})), 1u);
  EXPECT_EQ(multiplicity_at_point(poly("x*y", f2, 2), vec(f2, {"1", "1"})), 0u);
  EXPECT_EQ(multiplicity_at_point(poly("x^2 + y^3", Field::rational(), 2), vec(Field::rational(), {"0", "0"})), 2u);
  EXPECT_THROW(multiplicity_at_point(Polynomial(f2, 2), vec(f2, {"0", "0"})), DomainError);
}

TEST(Multiplicity, MatchesHasseDerivatives) {
  std::mt19937 rng(51);
  for (const Field f : {Field::finite(2), Field::finite(3), Field::finite(2, {1, 1, 1})})
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const auto p = random_polynomial(f, n, rng);
        for (const auto& pt : detail::all_points(f, n)) ASSERT_EQ(multiplicity_at_point(p, pt), hasse_multiplicity(p, pt)) << p.to_string();
      }
}

TEST(Multiplicity, AdditiveOnProducts) {
  std::mt19937 rng(77);
  for (const Field f : {Field::finite(2), Field::finite(3)})
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
      const auto a = random_polynomial(f, n, rng), b = random_polynomial(f, n, rng);
      for (const auto& pt : detail::all_points(f, n)) {
        const auto ma = multiplicity_at_point(a, pt);
        EXPECT_EQ(ma >= 1, a.evaluate(pt).is_zero());
        EXPECT_EQ(multiplicity_at_point(a * b, pt), ma + multiplicity_at_point(b, pt));
      }
    }
}

TEST(Claim51, Examples) {
  const Field f2 = Field::finite(2);
  const auto r = check_claim_51(poly("x*(x+1)*y*(y+1)", f2, 2));
  EXPECT_EQ(r.total, 8u);
  EXPECT_EQ(r.bound, 8);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.points.size(), 4u);

  const auto lin = check_claim_51(poly("x", Field::finite(3), 2));
  EXPECT_EQ(lin.total, 3u);
  EXPECT_EQ(lin.bound, 3);
  EXPECT_TRUE(lin.verdict);

  const auto c = check_claim_51(poly("1", f2, 2));
  EXPECT_EQ(c.total, 0u);
  EXPECT_TRUE(c.verdict);
  EXPECT_THROW(check_claim_51(poly("x", Field::rational(), 2)), DomainError);
}

TEST(Claim51, RandomPolynomialsSatisfyBound) {
  std::mt19937 rng(2024);
  const std::vector<Field> fields{Field::finite(2), Field::finite(3), Field::finite(5), Field::finite(2, {1, 1, 1})};
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = fields[static_cast<std::size_t>(trial) % fields.size()];
    const std::size_t n = 1 + static_cast<std::size_t>(trial / 4) % 3;
    const auto p = random_polynomial(f, n, rng);
    const auto r = check_claim_51(p);
    std::size_t oracle = 0;
    for (const auto& pt : detail::all_points(f, n)) oracle += hasse_multiplicity(p, pt);
    ASSERT_EQ(r.total, oracle) << p.to_string();
    ASSERT_EQ(r.bound, ipow(f->order().get_ui(), n - 1) * static_cast<unsigned long>(p.degree()));
    ASSERT_TRUE(r.verdict) << p.to_string();
  }
}

TEST(Parabolic, GeneratorsStabilizeHyperplane) {
  for (const Field f : {Field::finite(3), Field::finite(2, {1, 1, 1})})
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& g : parabolic_generators(f, n)) {
        EXPECT_FALSE(g.determinant().is_zero());
        for (std::size_t j = 1; j < n; ++j) EXPECT_TRUE(g(0, j).is_zero());
      }
}

TEST(Parabolic, GeneratedGroupIsTheFullStabilizer) {
  // |P_3(F_2)| = |F_2^x| * |GL_2(F_2)| * |F_2^2| = 1 * 6 * 4.
  const Field f2 = Field::finite(2);
  EXPECT_EQ(FiniteMatrixGroup::close(f2, 3, parabolic_generators(f2, 3)).order(), 24u);
  // |P_3(F_3)| = 2 * 48 * 9.
  const Field f3 = Field::finite(3);
  EXPECT_EQ(FiniteMatrixGroup::close(f3, 3, parabolic_generators(f3, 3)).order(), 864u);
}

TEST(Parabolic, AllLinearForms) {
  for (const auto& [q, expected_deg, expected_mult] : {std::tuple{3u, 13u, 4u}, std::tuple{5u, 31u, 6u}}) {
    const Field f = Field::finite(q);
    const auto h = all_linear_forms_product(f, 3);
    EXPECT_EQ(h.degree(), static_cast<int>(expected_deg));
    const auto r = check_parabolic_claim(h);
    EXPECT_EQ(r.mult.degree, expected_deg);
    EXPECT_EQ(r.mult.total, expected_mult);
    // Forms through a point of P^2 form a pencil of q + 1 lines.
    EXPECT_EQ(r.mult.total, q + 1);
    EXPECT_TRUE(r.mult.verdict);  // q * (q + 1) <= q^2 + q + 1
    EXPECT_EQ(r.lower_dim_degree, q + 1);
    EXPECT_EQ(r.lower_dim_multiplicity, 1);
  }
}

TEST(Parabolic, InvariantPolynomialsAndErrors) {
  const Field f3 = Field::finite(3);
  const auto r = check_parabolic_claim(parse_polynomial("x1^4", f3, std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(r.mult.total, 0u);
  EXPECT_TRUE(r.mult.verdict);
  try {
    check_parabolic_claim(parse_polynomial("x2*x3", f3, std::vector<std::string>{"x1", "x2", "x3"}));
    FAIL() << "expected an invariance error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("parabolic generator"), std::string::npos);
  }
  EXPECT_THROW(check_parabolic_claim(poly("x^2 + y", f3, 2)), DomainError);
}

TEST(FixedPoints, Examples) {
  for (unsigned n : {3u, 4u, 5u}) {
    const auto r = projective_fixed_points(mu_n(n));
    const Field f = Field::cyclotomic(n);
    ASSERT_EQ(r.points.size(), 2u);
    EXPECT_EQ(r.points[0].coordinates(), vec(f, {"0", "1"}));
    EXPECT_EQ(r.points[1].coordinates(), vec(f, {"1", "0"}));
    EXPECT_TRUE(r.positive_dimensional.empty());
  }
  EXPECT_TRUE(projective_fixed_points(quaternion()).points.empty());
  const Field q = Field::rational();
  const auto scalar = projective_fixed_points(FiniteMatrixGroup::close(q, 2, {mat(q, {{"-1", "0"}, {"0", "-1"}})}));
  EXPECT_TRUE(scalar.points.empty());
  ASSERT_EQ(scalar.positive_dimensional.size(), 1u);
  EXPECT_EQ(scalar.positive_dimensional[0].dim(), 2u);
}

TEST(PermModule, CyclicMatchesPolynomialCriterion) {
  const Field q = Field::rational();
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (!small_module(n, p)) continue;
      const Field fp = Field::finite(p);
      Polynomial phi(fp, 1);
      for (std::uint32_t k = 0; k < n; ++k) phi.add_term({k}, fp.one());
      EXPECT_EQ(perm_module_irreducible(cyclic_permutation_generators(q, n), n, p), is_irreducible_mod_p(phi)) << n << " " << p;
    }
}

TEST(PermModule, CyclicPrimeOrderIsPrimitiveRootCondition) {
  const Field q = Field::rational();
  for (std::size_t n : {3u, 5u, 7u})
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
      if (p == n || !small_module(n, p)) continue;
      std::size_t order = 1;
      for (std::uint64_t x = p % n; x != 1; x = x * p % n) ++order;
      EXPECT_EQ(perm_module_irreducible(cyclic_permutation_generators(q, n), n, p), order == n - 1) << n << " " << p;
    }
}

TEST(PermModule, AlternatingAndSymmetric) {
  const Field q = Field::rational();
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      const bool expected = n % p != 0;
      EXPECT_EQ(perm_module_irreducible(alternating_permutation_generators(q, n), n, p), expected) << n << " " << p;
      EXPECT_EQ(perm_module_irreducible(symmetric_permutation_generators(q, n), n, p), expected) << n << " " << p;
    }
  // S_3 is GL_2(F_2) on its sum-zero plane.
  EXPECT_TRUE(perm_module_irreducible(symmetric_permutation_generators(q, 3), 3, 2));
  EXPECT_FALSE(perm_module_irreducible(symmetric_permutation_generators(q, 3), 3, 3));
}

TEST(PermModule, AgreesWithFieldElementSpin) {
  // Same question through the generic submodule spinner over F_p.
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const Field fp = Field::finite(p);
    const std::size_t n = 4;
    const auto gens = alternating_permutation_generators(fp, n);
    std::vector<Matrix> restricted;
    for (const auto& g : gens) {
      // Action on the sum-zero basis e_i - e_n (p ∤ n) expressed through coordinates.
      Matrix basis(fp, n, n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        basis(i, i) = fp.one();
        basis(n - 1, i) = -fp.one();
      }
      Matrix m(fp, n - 1, n - 1);
      const Matrix image = g * basis;
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = image(i, j);
      restricted.push_back(m);
    }
    if (n % p == 0) continue;
    bool irreducible = true;
    for (const auto& v : detail::all_points(fp, n - 1)) {
      if (std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); })) continue;
      if (spin_submodule(restricted, v).dim() < n - 1) irreducible = false;
    }
    EXPECT_EQ(perm_module_irreducible(gens, n, p), irreducible);
  }
}

TEST(PermModule, Errors) {
  const Field q = Field::rational();
  EXPECT_THROW(perm_module_irreducible(cyclic_permutation_generators(q, 3), 3, 4), DomainError);
  EXPECT_THROW(perm_module_irreducible({mat(q, {{"1", "1"}, {"0", "1"}})}, 2, 3), DomainError);
  EXPECT_THROW(perm_module_irreducible(alternating_permutation_generators(q, 12), 12, 7), BoundExceeded);
}

TEST(RankObstruction, Examples) {
  const auto mu = rank_obstruction(mu3(), 3);
  EXPECT_EQ(mu.scalar_order, 1u);
  EXPECT_EQ(mu.rank, 1u);
  EXPECT_TRUE(mu.hypothesis_holds);

  // PO_3(F_3): signed permutation matrices modulo ±1.
  const Field f3 = Field::finite(3);
  auto gens = symmetric_permutation_generators(f3, 3);
  gens.push_back(Matrix::diagonal(f3, vec(f3, {"-1", "1", "1"})));
  const auto g = FiniteMatrixGroup::close(f3, 3, gens);
  ASSERT_EQ(g.order(), 48u);
  const auto po = rank_obstruction(g, 2);
  EXPECT_EQ(po.scalar_order, 2u);
  EXPECT_EQ(po.projective_order, 24u);
  EXPECT_EQ(po.rank, 2u);
  EXPECT_EQ(po.required, 2u);
  EXPECT_TRUE(po.hypothesis_holds);
  EXPECT_THROW(rank_obstruction(g, 3), DomainError);

  const auto q8 = rank_obstruction(quaternion(), 2);
  EXPECT_EQ(q8.projective_order, 4u);
  EXPECT_EQ(q8.rank, 2u);
  EXPECT_TRUE(q8.hypothesis_holds);

  // Cyclic diagonal group mod scalars has rank 1 < 2 in dimension 3.
  const Field c3 = Field::cyclotomic(3);
  const auto z = c3.generator();
  const auto cyc = rank_obstruction(FiniteMatrixGroup::close(c3, 3, {Matrix::diagonal(c3, {c3.one(), z, z * z})}), 3);
  EXPECT_EQ(cyc.rank, 1u);
  EXPECT_FALSE(cyc.hypothesis_holds);
}

TEST(RankObstruction, ProjectiveImageIsAGroupQuotient) {
  for (const auto& g : {quaternion(), binary_icosahedral(), mu_n(4)}) {
    std::size_t s = 0;
    const auto img = projective_image(g, &s);
    EXPECT_EQ(img.order() * s, g.order());
  }
  // 2I / ±1 is A_5: rank 2 at ℓ = 2.
  EXPECT_EQ(elementary_abelian_rank(projective_image(binary_icosahedral()), 2), 2u);
}
