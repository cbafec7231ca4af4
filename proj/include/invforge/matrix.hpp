#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact linear algebra over any Field.
 *
 * Everything here is exact: rank, kernels and eigenspaces are computed by
 * Gauss-Jordan elimination, and subspaces are kept in reduced row echelon
 * form so that two subspaces are equal iff their bases are equal.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/field.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(Field f, const std::vector<Vector>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) {
        if (rows[i][j].field() != f) throw DomainError("matrix entry field mismatch");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static Matrix diagonal(Field f, const Vector& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }
  Vector column(std::size_t j) const {
    Vector v;
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_) throw DomainError("matrix product: shape or field mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector product: shape mismatch");
    Vector r(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const FieldElement& c, Matrix a) {
    for (auto& e : a.data_) e *= c;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  FieldElement trace() const {
    require_square("trace");
    FieldElement t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix pow(long long e) const {
    require_square("pow");
    if (e < 0) return inverse().pow(-e);
    Matrix result = identity(field_, rows_), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  bool is_identity() const { return is_square() && *this == identity(field_, rows_); }

  bool is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
        if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
      }
    return true;
  }

  /// Reduces to reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      const FieldElement inv = (*this)(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        const FieldElement f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  Matrix rref() const {
    Matrix m = *this;
    m.rref_in_place();
    return m;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  FieldElement determinant() const {
    require_square("determinant");
    Matrix m = *this;
    FieldElement det = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return field_.zero();
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      const FieldElement inv = m(c, c).inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        const FieldElement f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const {
    require_square("inverse");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = field_.one();
    }
    const auto piv = aug.rref_in_place();
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw DomainError("matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  /// Vertical concatenation.
  static Matrix stack(Field f, std::size_t cols, const std::vector<Matrix>& blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
      if (b.cols_ != cols) throw DomainError("stack: column mismatch");
      total += b.rows_;
    }
    Matrix m(f, total, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.rows_; ++i, ++r)
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
    return m;
  }

  /// "[[a, b], [c, d]]" with entries in the exact grammar.
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
      os << ']';
    }
    os << ']';
    return os.str();
  }

  /// Hash of the canonical entries, row-major.
  std::size_t hash() const noexcept {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& e : data_) h = h * 1000003ULL ^ e.hash();
    return h;
  }

  const std::vector<FieldElement>& data() const noexcept { return data_; }

 private:
  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_) throw DomainError("matrix shape or field mismatch");
  }
  void require_square(const char* what) const {
    if (!is_square()) throw DomainError(std::string(what) + " needs a square matrix");
  }

  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Subspace of k^n, represented by a basis in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient), ambient_(ambient) {}

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return Subspace(f, ambient);
    Matrix m = Matrix::from_rows(f, vectors);
    if (m.cols() != ambient) throw DomainError("span: vector length mismatch");
    return from_matrix_rows(std::move(m));
  }

  static Subspace from_matrix_rows(Matrix m) {
    const std::size_t r = m.rref_in_place().size();
    Subspace s(m.field(), m.cols());
    Matrix b(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace whole(Field f, std::size_t n) { return from_matrix_rows(Matrix::identity(f, n)); }

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vector& v) const {
    std::vector<Vector> rows = basis_vectors();
    rows.push_back(v);
    return Matrix::from_rows(field(), rows).rank() == dim();
  }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_vectors().begin(), other.basis_vectors().end(), [this](const Vector& v) { return contains(v); });
  }

  /// {w : <w, v> = 0 for every v in this} under the standard bilinear form.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Matrix basis_;
  std::size_t ambient_ = 0;
};

/// Null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

inline Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(field(), ambient_);
  return kernel(basis_);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("intersect: ambient mismatch");
  const Subspace aa = a.annihilator(), bb = b.annihilator();
  if (aa.dim() + bb.dim() == 0) return Subspace::whole(a.field(), a.ambient_dim());
  return kernel(Matrix::stack(a.field(), a.ambient_dim(), {aa.basis(), bb.basis()}));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  auto rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(v);
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

/// Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recurrence.
/// Needs char 0 or char > n, since step k divides by k.
inline Polynomial char_poly_faddeev_leverrier(const Matrix& m) {
  if (!m.is_square()) throw DomainError("char_poly needs a square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  if (f.characteristic() != 0 && f.characteristic() <= n) throw DomainError("Faddeev-LeVerrier needs char 0 or char > n");
  std::vector<FieldElement> c(n + 1, f.zero());
  c[n] = f.one();
  Matrix mk = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = m * mk;
    c[n - k] = -am.trace() / f.from_int(static_cast<long>(k));
    mk = am + c[n - k] * Matrix::identity(f, n);
  }
  return from_dense(f, c);
}

/// Characteristic polynomial via reduction to upper Hessenberg form; valid
/// over every field.
inline Polynomial char_poly_hessenberg(const Matrix& m_in) {
  if (!m_in.is_square()) throw DomainError("char_poly needs a square matrix");
  const Field f = m_in.field();
  const std::size_t n = m_in.rows();
  Matrix h = m_in;
  // Similarity transforms column by column to zero everything below the subdiagonal.
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    const FieldElement inv = h(j + 1, j).inverse();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      const FieldElement u = h(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, i);
    }
  }
  // p_k = charpoly of the leading k x k block, by the Hessenberg recurrence.
  const Polynomial x = Polynomial::variable(f, 1, 0);
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f.one(), 1));
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial pk = (x - Polynomial::constant(h(k - 1, k - 1), 1)) * p[k - 1];
    FieldElement prod = f.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      pk -= p[i] * (prod * h(i, k - 1));
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

/// det(xI - m): Faddeev-LeVerrier in characteristic 0, Hessenberg otherwise.
inline Polynomial char_poly(const Matrix& m) {
  if (m.field().characteristic() == 0) return char_poly_faddeev_leverrier(m);
  return char_poly_hessenberg(m);
}

/// Evaluates a univariate polynomial at a square matrix (Horner).
inline Matrix evaluate_at_matrix(const Polynomial& p, const Matrix& m) {
  const auto c = dense_coefficients(p);
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * m + c[k] * id;
  return acc;
}

namespace detail {

inline FieldElement horner(const std::vector<FieldElement>& c, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// Synthetic division by (x - r); the caller guarantees r is a root.
inline std::vector<FieldElement> deflate(const std::vector<FieldElement>& c, const FieldElement& r) {
  std::vector<FieldElement> q(c.size() - 1, r.field().zero());
  FieldElement carry = r.field().zero();
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = carry * r + c[k];
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace detail

/// Roots (with multiplicity) of a univariate polynomial that lie in its
/// coefficient field. Finite fields are searched exhaustively. In char 0 the
/// candidates are rational roots (when the coefficients are rational), the
/// roots of unity ±z^k of a cyclotomic field or small powers ±z^k otherwise,
/// and the root of any remaining linear factor. No field extension is made.
inline std::vector<FieldElement> roots_in_field(const Polynomial& poly) {
  const Field f = poly.field();
  auto c = dense_coefficients(poly);
  std::vector<FieldElement> roots;
  if (c.size() < 2) return roots;
  auto take = [&](const FieldElement& r) {
    while (c.size() >= 2 && detail::horner(c, r).is_zero()) {
      roots.push_back(r);
      c = detail::deflate(c, r);
    }
  };
  take(f.zero());
  if (f->kind() == FieldKind::finite) {
    for (const auto& e : all_elements(f)) {
      if (c.size() < 2) break;
      take(e);
    }
    return roots;
  }
  const bool rational_coeffs = std::all_of(c.begin(), c.end(), [](const FieldElement& e) { return e.rational_coeffs().size() <= 1; });
  if (rational_coeffs) {
    std::vector<Rational> qc;
    for (const auto& e : c) qc.push_back(e.rational_coeffs().empty() ? Rational(0) : e.rational_coeffs()[0]);
    for (const auto& r : detail::rational_roots(qc)) take(f.from_rational(r));
  }
  if (f->kind() == FieldKind::number_field) {
    const long long bound = f->is_cyclotomic() ? static_cast<long long>(f->cyclotomic_order()) : 4LL * static_cast<long long>(f->degree());
    const FieldElement z = f.generator();
    FieldElement zk = f.one();
    for (long long k = 0; k < bound && c.size() >= 2; ++k) {
      take(zk);
      take(-zk);
      zk *= z;
    }
  }
  if (c.size() == 2) take(-c[0] / c[1]);
  return roots;
}

/// Distinct roots in the field, deterministically ordered.
inline std::vector<FieldElement> distinct_roots_in_field(const Polynomial& poly) {
  auto r = roots_in_field(poly);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

/// kernel(m - λI).
inline Subspace eigenspace(const Matrix& m, const FieldElement& lambda) {
  if (!m.is_square()) throw DomainError("eigenspace needs a square matrix");
  return kernel(m - lambda * Matrix::identity(m.field(), m.rows()));
}

/// Basis of {X : X A = A X for every A in mats}.
inline std::vector<Matrix> commutant_basis(const std::vector<Matrix>& mats, Field f, std::size_t n) {
  const std::size_t nn = n * n;
  std::vector<Matrix> blocks;
  for (const auto& a : mats) {
    if (a.rows() != n || a.cols() != n || a.field() != f) throw DomainError("commutant_basis: size or field mismatch");
    // Row (i, j) of the block encodes (XA - AX)_{ij} in the unknowns X_{kl}, index k*n + l.
    Matrix block(f, nn, nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          block(row, i * n + k) += a(k, j);
          block(row, k * n + j) -= a(i, k);
        }
      }
    blocks.push_back(std::move(block));
  }
  const Subspace sol = blocks.empty() ? Subspace::whole(f, nn) : kernel(Matrix::stack(f, nn, blocks));
  std::vector<Matrix> out;
  for (const auto& v : sol.basis_vectors()) {
    Matrix x(f, n, n);
    for (std::size_t k = 0; k < nn; ++k) x(k / n, k % n) = v[k];
    out.push_back(std::move(x));
  }
  return out;
}

inline std::vector<Matrix> commutant_basis(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw DomainError("commutant_basis: give the field and size for an empty list");
  return commutant_basis(mats, mats[0].field(), mats[0].rows());
}

/// Smallest subspace containing v and stable under every matrix.
inline Subspace spin_submodule(const std::vector<Matrix>& mats, const Vector& v) {
  if (v.empty()) throw DomainError("spin_submodule: empty vector");
  const Field f = v[0].field();
  if (std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); })) throw DomainError("spin_submodule: zero vector");
  const std::size_t n = v.size();
  std::vector<Vector> basis{v};
  std::size_t rank = 1;
  for (std::size_t next = 0; next < basis.size() && rank < n; ++next) {
    for (const auto& a : mats) {
      Vector w = a * basis[next];
      std::vector<Vector> rows = basis;
      rows.push_back(w);
      if (Matrix::from_rows(f, rows).rank() > rank) {
        basis.push_back(std::move(w));
        ++rank;
        if (rank == n) break;
      }
    }
  }
  return Subspace::span(f, n, basis);
}

/// Coefficients c with Σ c_k·vectors[k] = target, or nullopt if target is
/// outside the span. With dependent vectors the free coefficients are 0.
inline std::optional<Vector> solve_combination(Field f, const std::vector<Vector>& vectors, const Vector& target) {
  const std::size_t rows = target.size(), cols = vectors.size();
  Matrix a(f, rows, cols + 1);
  for (std::size_t j = 0; j < cols; ++j) {
    if (vectors[j].size() != rows) throw DomainError("solve_combination: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = vectors[j][i];
  }
  for (std::size_t i = 0; i < rows; ++i) a(i, cols) = target[i];
  const auto pivots = a.rref_in_place();
  Vector c(cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    c[pivots[r]] = a(r, cols);
  }
  return c;
}

/// Nonzero joint eigenspaces {v : A v = λ_A v for every A}, over the matrices'
/// field only. Each returned subspace is one joint eigenspace; together they
/// contain every common eigenvector available over the field.
inline std::vector<Subspace> common_eigenspaces(const std::vector<Matrix>& mats, Field f, std::size_t n) {
  std::vector<Subspace> spaces{Subspace::whole(f, n)};
  for (const auto& a : mats) {
    const auto eigenvalues = distinct_roots_in_field(char_poly(a));
    std::vector<Subspace> next;
    for (const auto& s : spaces)
      for (const auto& lambda : eigenvalues) {
        Subspace i = intersect(s, eigenspace(a, lambda));
        if (i.dim() > 0) next.push_back(std::move(i));
      }
    spaces = std::move(next);
    if (spaces.empty()) break;
  }
  return spaces;
}

}  // namespace invforge
