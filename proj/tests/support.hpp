#pragma once

// Shared fixtures: matrices written in the entry grammar and the standard
// example groups used across the suites.

#include <string>
#include <vector>

#include "invforge/field.hpp"
#include "invforge/group.hpp"
#include "invforge/matrix.hpp"
#include "invforge/parse.hpp"

namespace testing_support {

using namespace invforge;

inline Matrix mat(Field f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& e : row) v.push_back(parse_element(e, f));
    r.push_back(v);
  }
  return Matrix::from_rows(f, r);
}

inline Vector vec(Field f, const std::vector<std::string>& entries) {
  Vector v;
  for (const auto& e : entries) v.push_back(parse_element(e, f));
  return v;
}

inline Polynomial poly(const std::string& text, Field f, std::size_t n) { return parse_polynomial(text, f, n); }

// Binary icosahedral group in Klein's form over Q(ζ_20), ε = z^4, √5 = z^4 - z^8 - z^12 + z^16.
inline std::vector<Matrix> binary_icosahedral_generators() {
  const Field f = Field::cyclotomic(20);
  const FieldElement e = f.generator().pow(4);
  const FieldElement s5 = parse_element("z^4 - z^8 - z^12 + z^16", f);
  const FieldElement inv_s5 = s5 / f.from_int(5);
  Matrix s = Matrix::diagonal(f, {-e.pow(3), -e.pow(2)});
  const FieldElement a = e - e.pow(4), b = e.pow(2) - e.pow(3);
  Matrix t = Matrix::from_rows(f, {{-a * inv_s5, b * inv_s5}, {b * inv_s5, a * inv_s5}});
  return {s, t};
}

inline FiniteMatrixGroup binary_icosahedral() {
  return FiniteMatrixGroup::close(Field::cyclotomic(20), 2, binary_icosahedral_generators());
}

// Quaternion group Q8 over Q(i) = cyclotomic(4).
inline FiniteMatrixGroup quaternion() {
  const Field f = Field::cyclotomic(4);
  return FiniteMatrixGroup::close(f, 2, {mat(f, {{"z", "0"}, {"0", "-z"}}), mat(f, {{"0", "1"}, {"-1", "0"}})});
}

inline FiniteMatrixGroup sign_group() {
  const Field q = Field::rational();
  return FiniteMatrixGroup::close(q, 2, {mat(q, {{"-1", "0"}, {"0", "1"}}), mat(q, {{"1", "0"}, {"0", "-1"}})});
}

inline FiniteMatrixGroup mu3() {
  const Field f = Field::cyclotomic(3);
  return FiniteMatrixGroup::close(f, 2, {mat(f, {{"z", "0"}, {"0", "z^2"}})});
}

inline FiniteMatrixGroup mu_n(unsigned n) {
  const Field f = Field::cyclotomic(n);
  const FieldElement z = f.generator();
  return FiniteMatrixGroup::close(f, 2, {Matrix::diagonal(f, {z, z.pow(-1)})});
}

// S_n as permutation matrices on k^n: e_j ↦ e_{σ(j)}.
inline std::vector<Matrix> permutation_generators(Field f, std::size_t n) {
  std::vector<Matrix> gens;
  Matrix swap = Matrix::identity(f, n);
  swap(0, 0) = f.zero();
  swap(1, 1) = f.zero();
  swap(0, 1) = f.one();
  swap(1, 0) = f.one();
  gens.push_back(swap);
  if (n > 2) {
    Matrix cycle(f, n, n);
    for (std::size_t j = 0; j < n; ++j) cycle((j + 1) % n, j) = f.one();
    gens.push_back(cycle);
  }
  return gens;
}

// The order-3 rotation preserving x^2 + 3y^2.
inline Matrix rotation3(Field f) { return mat(f, {{"-1/2", "-3/2"}, {"1/2", "-1/2"}}); }

// M_7 over Q[z]/(z^2+z+2), α = z.
inline Matrix m7() {
  const Field f = Field::number_field({2, 1, 1});
  return mat(f, {{"0", "0", "1"}, {"1", "0", "1 + z"}, {"0", "1", "z"}});
}

// The char-2 involution on (x1, x2, y1, y2): y_i ↦ y_i + x_i.
inline FiniteMatrixGroup char2_involution() {
  const Field f = Field::finite(2);
  return FiniteMatrixGroup::close(
      f, 4, {mat(f, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"1", "0", "1", "0"}, {"0", "1", "0", "1"}})});
}

}  // namespace testing_support
