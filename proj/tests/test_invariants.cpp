#include <gtest/gtest.h>

#include <random>

#include "invforge/invariants.hpp"
#include "support.hpp"

using namespace invforge;
using namespace testing_support;

namespace {

Polynomial random_homogeneous(Field f, std::size_t n, std::uint32_t d, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial p(f, n);
  for (const auto& m : monomials_of_degree(n, d)) p.add_term(m, f.from_int(c(rng)));
  return p;
}

FiniteMatrixGroup minus_identity() {
  const Field q = Field::rational();
  return FiniteMatrixGroup::close(q, 2, {mat(q, {{"-1", "0"}, {"0", "-1"}})});
}

}  // namespace

TEST(InvariantSpace, Examples) {
  for (unsigned n : {3u, 5u}) {
    const auto g = mu_n(n);
    const auto v = invariant_space(g, 2);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0], poly("x1*x2", g.field(), 2));
  }
  EXPECT_EQ(invariant_space(FiniteMatrixGroup::trivial(Field::rational(), 2), 3).size(), 4u);
  const auto c2 = char2_involution();
  const auto v1 = invariant_space(c2, 1);
  ASSERT_EQ(v1.size(), 2u);
  EXPECT_EQ(v1[0], poly("x1", c2.field(), 4));
  EXPECT_EQ(v1[1], poly("x2", c2.field(), 4));
}

TEST(DegreeAction, IsARepresentation) {
  const auto g = quaternion();
  for (std::uint32_t d : {1u, 2u, 3u}) {
    const Matrix a = g.generators()[0], b = g.generators()[1];
    // Substitution reverses products: ρ_d(ab) = ρ_d(b)ρ_d(a) on coordinates.
    EXPECT_EQ(degree_action(a * b, d), degree_action(b, d) * degree_action(a, d));
    EXPECT_TRUE(degree_action(Matrix::identity(g.field(), 2), d).is_identity());
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_dims(minus_identity(), 4), (GradedDims{1, 0, 3, 0, 5}));
  EXPECT_EQ(hilbert_dims(FiniteMatrixGroup::trivial(Field::rational(), 2), 4), (GradedDims{1, 2, 3, 4, 5}));
  const auto dims = hilbert_dims(binary_icosahedral(), 12);
  EXPECT_EQ(dims[12], 1u);
  for (std::size_t d = 1; d < 12; ++d) EXPECT_EQ(dims[d], 0u);
}

TEST(Molien, Examples) {
  EXPECT_EQ(molien_series(FiniteMatrixGroup::trivial(Field::rational(), 2), 5), (GradedDims{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(molien_series(minus_identity(), 6), (GradedDims{1, 0, 3, 0, 5, 0, 7}));
  const auto m = molien_series(binary_icosahedral(), 60);
  std::vector<std::size_t> nonzero;
  for (std::size_t d = 1; d <= 60; ++d)
    if (m[d] != 0) nonzero.push_back(d);
  // Products of degrees 12, 20, 30 modulo the single relation in degree 60.
  EXPECT_EQ(std::vector<std::size_t>(nonzero.begin(), nonzero.begin() + 4), (std::vector<std::size_t>{12, 20, 24, 30}));
  EXPECT_EQ(m[60], 2u);  // three products of weight 60, one relation
  EXPECT_THROW(molien_series(char2_involution(), 3), DomainError);
}

TEST(Molien, EqualsHilbertOnCorpusGroups) {
  const Field q = Field::rational();
  std::vector<FiniteMatrixGroup> groups{minus_identity(), sign_group(), quaternion(), mu3(), mu_n(4),
                                        FiniteMatrixGroup::close(q, 3, permutation_generators(q, 3)),
                                        FiniteMatrixGroup::close(q, 2, {rotation3(q)}),
                                        FiniteMatrixGroup::close(m7().field(), 3, {m7()})};
  for (const auto& g : groups) EXPECT_EQ(molien_series(g, 12), hilbert_dims(g, 12)) << g.order();
}

TEST(Reynolds, Examples) {
  const auto g = minus_identity();
  const Field q = g.field();
  EXPECT_EQ(reynolds(g, poly("x1^2", q, 2)), poly("x1^2", q, 2));
  EXPECT_TRUE(reynolds(g, poly("x1", q, 2)).is_zero());
  const Polynomial inv = poly("x1^2 + 3*x1*x2", q, 2);
  EXPECT_EQ(reynolds(g, inv), inv);
  EXPECT_THROW(reynolds(char2_involution(), poly("x1", Field::finite(2), 4)), DomainError);
}

TEST(Reynolds, IdempotentWithImageOfHilbertDimension) {
  std::mt19937 rng(5);
  for (const auto& g : {quaternion(), mu3(), sign_group()}) {
    for (std::uint32_t d = 1; d <= 4; ++d) {
      std::vector<Vector> images;
      const auto basis = monomials_of_degree(g.dim(), d);
      for (const auto& m : basis) {
        const Polynomial r = reynolds(g, Polynomial::term(g.field().one(), m));
        EXPECT_EQ(reynolds(g, r), r);
        EXPECT_TRUE(is_invariant(g, r));
        images.push_back(r.coordinates(basis));
      }
      EXPECT_EQ(Matrix::from_rows(g.field(), images).rank(), invariant_space(g, d).size());
      const Polynomial f = random_homogeneous(g.field(), g.dim(), d, rng);
      EXPECT_EQ(reynolds(g, reynolds(g, f)), reynolds(g, f));
    }
  }
}

TEST(Generators, Examples) {
  const auto m3 = minimal_generators(mu3());
  EXPECT_EQ(m3.degrees, (std::vector<std::uint32_t>{2, 3, 3}));
  EXPECT_EQ(m3.e, 1u);
  const auto s = minimal_generators(sign_group());
  EXPECT_EQ(s.degrees, (std::vector<std::uint32_t>{2, 2}));
  EXPECT_EQ(s.generators[0], poly("x^2", s.field, 2));
  EXPECT_EQ(s.generators[1], poly("y^2", s.field, 2));
  EXPECT_THROW(minimal_generators(char2_involution()), DomainError);
  const auto c2 = minimal_generators(char2_involution(), 3);
  EXPECT_EQ(c2.degrees, (std::vector<std::uint32_t>{1, 1, 2, 2, 2}));
}

TEST(Generators, BinaryIcosahedral) {
  const auto g = binary_icosahedral();
  const auto gs = minimal_generators(g);
  EXPECT_EQ(gs.degrees, (std::vector<std::uint32_t>{12, 20, 30}));
  EXPECT_EQ(gs.e, 2u);
  EXPECT_EQ(scaled_torus_exponents(gs), (std::vector<std::uint32_t>{6, 10, 15}));
  for (const auto& p : gs.generators) EXPECT_TRUE(is_invariant(g, p));
  const auto rel = find_relation(gs, 60);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->weighted_degree, 60u);
  // Symbols y1, y2, y3 carry degrees 12, 20, 30: support {y3^2, y2^3, y1^5}.
  std::set<Monomial> support;
  for (const auto& [m, c] : rel->polynomial.terms()) support.insert(m);
  EXPECT_EQ(support, (std::set<Monomial>{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}));
  EXPECT_TRUE(evaluate_in_generators(gs, rel->polynomial).is_zero());
}

TEST(Generators, RegenerateHilbertDimsAndDegreeGcd) {
  for (const auto& g : {mu3(), mu_n(4), quaternion(), sign_group()}) {
    const auto gs = minimal_generators(g);
    // Subalgebra generated by the output, degree by degree.
    for (std::uint32_t d = 1; d <= gs.degree_bound; ++d) {
      std::vector<Vector> rows;
      const auto basis = monomials_of_degree(g.dim(), d);
      for (const auto& m : weighted_monomials(gs.degrees, d)) {
        Polynomial prod = Polynomial::constant(g.field().one(), g.dim());
        for (std::size_t i = 0; i < m.size(); ++i) prod *= gs.generators[i].pow(m[i]);
        rows.push_back(prod.coordinates(basis));
      }
      const std::size_t rank = rows.empty() ? 0 : Matrix::from_rows(g.field(), rows).rank();
      EXPECT_EQ(rank, gs.hilbert[d]);
      for (const auto& f : invariant_space(g, d)) EXPECT_EQ(static_cast<std::uint32_t>(f.degree()) % gs.e, 0u);
    }
    // No generator lies in the subalgebra generated by the others of lower degree.
    for (std::size_t i = 0; i < gs.generators.size(); ++i) {
      const auto d = gs.degrees[i];
      std::vector<std::uint32_t> lower;
      for (std::size_t j = 0; j < gs.generators.size(); ++j) lower.push_back(j == i || gs.degrees[j] >= d ? 1000 : gs.degrees[j]);
      std::vector<Vector> rows;
      const auto basis = monomials_of_degree(g.dim(), d);
      for (const auto& m : weighted_monomials(lower, d)) {
        Polynomial prod = Polynomial::constant(g.field().one(), g.dim());
        for (std::size_t j = 0; j < m.size(); ++j) prod *= gs.generators[j].pow(m[j]);
        rows.push_back(prod.coordinates(basis));
      }
      for (std::size_t j = 0; j < gs.generators.size(); ++j)
        if (j != i && gs.degrees[j] == d) rows.push_back(gs.generators[j].coordinates(basis));
      const std::size_t before = rows.empty() ? 0 : Matrix::from_rows(g.field(), rows).rank();
      rows.push_back(gs.generators[i].coordinates(basis));
      EXPECT_EQ(Matrix::from_rows(g.field(), rows).rank(), before + 1);
    }
  }
}

TEST(ScaledTorus, Examples) {
  EXPECT_EQ(scaled_torus_exponents(std::vector<std::uint32_t>{30, 20, 12}), (std::vector<std::uint32_t>{15, 10, 6}));
  EXPECT_EQ(scaled_torus_exponents(std::vector<std::uint32_t>{2, 2}), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(scaled_torus_exponents(std::vector<std::uint32_t>{2, 3, 3}), (std::vector<std::uint32_t>{2, 3, 3}));
}

TEST(Relation, CyclicQuotients) {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    const auto g = mu_n(n);
    const auto gs = minimal_generators(g);
    ASSERT_EQ(gs.degrees, (std::vector<std::uint32_t>{2, n, n}));
    // Locate uv, u^n, v^n among the generators (each up to a unit).
    const Field f = g.field();
    auto index_of = [&](const Polynomial& target) {
      for (std::size_t i = 0; i < 3; ++i)
        if (gs.generators[i].monic() == target) return i;
      return std::size_t{99};
    };
    const std::size_t iz = index_of(poly("x1*x2", f, 2));
    const std::size_t ix = index_of(poly("x1^" + std::to_string(n), f, 2));
    const std::size_t iy = index_of(poly("x2^" + std::to_string(n), f, 2));
    ASSERT_LT(std::max({ix, iy, iz}), 3u);
    const auto rel = find_relation(gs, 4 * n);
    ASSERT_TRUE(rel.has_value());
    EXPECT_EQ(rel->weighted_degree, 2 * n);
    const auto c = [&](std::size_t i) { return gs.generators[i].terms().begin()->second; };
    std::vector<std::string> names = rel->names;
    // Expected relation in the symbols: (x/cx)(y/cy) - (z/cz)^n.
    Polynomial y_x = Polynomial::variable(f, 3, ix) * c(ix).inverse();
    Polynomial y_y = Polynomial::variable(f, 3, iy) * c(iy).inverse();
    Polynomial y_z = Polynomial::variable(f, 3, iz) * c(iz).inverse();
    const Polynomial expected = (y_x * y_y - y_z.pow(n)).monic();
    EXPECT_EQ(rel->polynomial, expected) << rel->to_string();
  }
}

TEST(Relation, NoneForPolynomialInvariants) {
  const Field q = Field::rational();
  const auto g = FiniteMatrixGroup::close(q, 2, {mat(q, {{"-1", "0"}, {"0", "1"}})});
  const auto gs = minimal_generators(g);
  EXPECT_EQ(gs.degrees, (std::vector<std::uint32_t>{1, 2}));
  EXPECT_FALSE(find_relation(gs, 12).has_value());
}

TEST(Invariance, CharTwoExample) {
  const auto g = char2_involution();
  const Field f = g.field();
  // Variables (x1, x2, y1, y2).
  const std::vector<std::string> names{"x1", "x2", "y1", "y2"};
  for (const auto* text : {"x1", "x2", "y1*(y1 + x1)", "y2*(y2 + x2)", "x1*y2 + x2*y1"})
    EXPECT_TRUE(is_invariant(g, parse_polynomial(text, f, names))) << text;
  EXPECT_FALSE(is_invariant(g, parse_polynomial("y1", f, names)));
  EXPECT_TRUE(is_invariant(g, Polynomial::constant(f.one(), 4)));
}

TEST(PresentedAutomorphism, SplitFormula) {
  const Field q = Field::rational();
  const std::vector<std::string> names{"x", "y", "z"};
  for (unsigned n : {2u, 3u, 5u})
    for (const std::string p : {"x", "x^2", "3*x^3 - x"}) {
      const Polynomial rel = parse_polynomial("x*y - z^" + std::to_string(n), q, names);
      const Polynomial x = parse_polynomial("x", q, names), y = parse_polynomial("y", q, names), z = parse_polynomial("z", q, names);
      const Polynomial pp = parse_polynomial(p, q, names);
      const Polynomial shifted = z + x * pp;
      const Polynomial ny = y + (shifted.pow(n) - z.pow(n)).exact_divide(x);
      EXPECT_TRUE(check_presented_automorphism(rel, {x, ny, shifted}));
      EXPECT_TRUE(check_presented_automorphism(rel, {x, y, z}));
      EXPECT_FALSE(check_presented_automorphism(rel, {x, y, z + x}));
    }
}

TEST(MultiplicityFiltration, MatchesHilbertDims) {
  std::mt19937 rng(9);
  for (const auto& g : {mu3(), quaternion()}) {
    const std::uint32_t r_max = 6;
    std::vector<Polynomial> homogeneous;
    for (std::uint32_t d = 0; d <= r_max; ++d)
      for (const auto& p : invariant_space(g, d)) homogeneous.push_back(p);
    // Mix the homogeneous basis by a random unitriangular change of basis.
    std::vector<Polynomial> mixed;
    std::uniform_int_distribution<int> c(-2, 2);
    for (std::size_t i = 0; i < homogeneous.size(); ++i) {
      Polynomial m = homogeneous[i];
      for (std::size_t j = 0; j < i; ++j) m += homogeneous[j] * g.field().from_int(c(rng));
      mixed.push_back(m);
    }
    EXPECT_EQ(multiplicity_filtration_dims(mixed, r_max), hilbert_dims(g, r_max));
  }
}

TEST(Cst, Examples) {
  const auto s = cst_quotient_action(sign_group());
  EXPECT_TRUE(s.applicable);
  EXPECT_EQ(s.reflection_group.order(), 4u);
  EXPECT_EQ(s.quotient_order, 1u);
  EXPECT_EQ(s.basic_invariants.degrees, (std::vector<std::uint32_t>{2, 2}));

  const auto e8 = cst_quotient_action(binary_icosahedral());
  EXPECT_TRUE(e8.applicable);
  EXPECT_EQ(e8.reflection_group.order(), 1u);
  EXPECT_EQ(e8.basic_invariants.degrees, (std::vector<std::uint32_t>{1, 1}));
  ASSERT_EQ(e8.action.size(), 120u);

  // Mixed case: a reflection together with the swap twisted by ζ_3.
  const Field f = Field::cyclotomic(3);
  const auto g = FiniteMatrixGroup::close(f, 2, {mat(f, {{"-1", "0"}, {"0", "1"}}), mat(f, {{"0", "z"}, {"z^2", "0"}})});
  const auto m = cst_quotient_action(g);
  EXPECT_TRUE(g.abstract().is_normal([&] {
    std::vector<AbstractGroup::Index> idx;
    for (const auto& x : m.reflection_group.elements()) idx.push_back(*g.index_of(x));
    std::sort(idx.begin(), idx.end());
    return idx;
  }()));
  EXPECT_EQ(m.quotient_order * m.reflection_group.order(), g.order());
  if (m.applicable) {
    EXPECT_EQ(m.action.size(), m.quotient_order);
    for (std::size_t k = 0; k < m.action.size(); ++k)
      for (std::size_t i = 0; i < 2; ++i) {
        Polynomial rhs(f, 2);
        for (std::size_t j = 0; j < 2; ++j) rhs += m.basic_invariants.generators[j] * m.action[k](i, j);
        EXPECT_EQ(act(g.element(m.coset_representatives[k]), m.basic_invariants.generators[i]), rhs);
      }
  }
}
