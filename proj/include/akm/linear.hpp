#pragma once

#include <optional>
#include <vector>

#include "akm/errors.hpp"
#include "akm/tensor.hpp"

namespace akm {

using Matrix = std::vector<Vector>;

inline Matrix identity_matrix(int n) {
  Matrix m(n, Vector(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline bool is_rectangular(const Matrix& m) {
  for (const auto& row : m)
    if (row.size() != m.front().size()) return false;
  return true;
}

inline bool is_square(const Matrix& m) {
  return m.empty() || (is_rectangular(m) && m.size() == m.front().size());
}

inline bool is_symmetric(const Matrix& m) {
  if (!is_square(m)) return false;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

inline Vector mat_vec(const Matrix& m, const Vector& x) {
  Vector y(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw ShapeError("mat_vec: shape mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

/// Determinant by exact Gaussian elimination.
inline Rational determinant(const Matrix& m) {
  if (!is_square(m)) throw ShapeError("determinant needs a square matrix");
  const size_t n = m.size();
  Matrix a = m;
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

/// Exact inverse; throws ValidationError on a singular matrix.
inline Matrix invert(const Matrix& m) {
  if (!is_square(m) || m.empty()) throw ShapeError("invert needs a non-empty square matrix");
  const size_t n = m.size();
  Matrix a = m;
  Matrix inv = identity_matrix(static_cast<int>(n));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ValidationError("invert: matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Sylvester criterion: all leading principal minors positive. Exact.
inline bool is_positive_definite(const Matrix& m) {
  if (!is_square(m) || m.empty())
    throw ValidationError("is_positive_definite needs a non-empty square matrix");
  if (!is_symmetric(m)) throw ValidationError("is_positive_definite needs a symmetric matrix");
  for (size_t k = 1; k <= m.size(); ++k) {
    Matrix minor(k, Vector(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

/// Outcome of exact linear solving. On Unique and Parametric the returned
/// vectors satisfy the system with exactly zero residual; Parametric fixes
/// free variables to zero in `particular` and describes the rest of the
/// solution set by `nullspace` (one basis vector per free column, in
/// ascending column order, with the free component set to 1).
struct LinearSolution {
  enum class Kind { Unique, Parametric, Inconsistent };
  Kind kind = Kind::Inconsistent;
  Vector particular;
  std::vector<Vector> nullspace;
};

/// Maintains the reduced row echelon form of an augmented system while rows
/// are appended one at a time. The stored form is the canonical RREF of the
/// rows added so far, so results do not depend on insertion order; the index
/// of the first row that makes the system inconsistent is reported exactly,
/// which downstream code uses for deterministic witnesses.
class LinearSystemBuilder {
 public:
  explicit LinearSystemBuilder(int unknowns) : unknowns_(unknowns) {
    if (unknowns < 0) throw ShapeError("negative unknown count");
  }

  /// Appends one equation (coefficients, right-hand side). Returns false the
  /// first time the accumulated system becomes inconsistent (and stays false).
  bool add_equation(Vector coefficients, Rational rhs) {
    if (static_cast<int>(coefficients.size()) != unknowns_)
      throw ShapeError("equation has wrong number of coefficients");
    ++rows_added_;
    if (inconsistent_) return false;
    coefficients.push_back(std::move(rhs));
    reduce(coefficients);
    bool all_zero = true;
    for (int j = 0; j < unknowns_; ++j)
      if (coefficients[j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      if (coefficients[unknowns_] != 0) {
        inconsistent_ = true;
        first_bad_row_ = rows_added_ - 1;
        return false;
      }
      return true;
    }
    insert_pivot_row(std::move(coefficients));
    return true;
  }

  bool consistent() const { return !inconsistent_; }

  /// Index (in insertion order, 0-based) of the first equation that made the
  /// system inconsistent.
  std::optional<int> first_inconsistent_row() const { return first_bad_row_; }

  int rank() const { return static_cast<int>(rows_.size()); }

  LinearSolution solution() const {
    LinearSolution s;
    if (inconsistent_) {
      s.kind = LinearSolution::Kind::Inconsistent;
      return s;
    }
    s.particular.assign(unknowns_, Rational(0));
    std::vector<bool> is_pivot(unknowns_, false);
    for (size_t r = 0; r < rows_.size(); ++r) {
      is_pivot[pivot_cols_[r]] = true;
      s.particular[pivot_cols_[r]] = rows_[r][unknowns_];
    }
    for (int f = 0; f < unknowns_; ++f) {
      if (is_pivot[f]) continue;
      Vector v(unknowns_, Rational(0));
      v[f] = 1;
      for (size_t r = 0; r < rows_.size(); ++r) v[pivot_cols_[r]] = -rows_[r][f];
      s.nullspace.push_back(std::move(v));
    }
    s.kind = s.nullspace.empty() ? LinearSolution::Kind::Unique
                                 : LinearSolution::Kind::Parametric;
    return s;
  }

 private:
  void reduce(Vector& row) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = row[pivot_cols_[r]];
      if (c == 0) continue;
      Rational f = c;
      for (int j = 0; j <= unknowns_; ++j) row[j] -= f * rows_[r][j];
    }
  }

  void insert_pivot_row(Vector row) {
    int pcol = 0;
    while (row[pcol] == 0) ++pcol;
    Rational p = row[pcol];
    for (int j = 0; j <= unknowns_; ++j) row[j] /= p;
    // Eliminate the new pivot column from the existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
      Rational f = rows_[r][pcol];
      if (f == 0) continue;
      for (int j = 0; j <= unknowns_; ++j) rows_[r][j] -= f * row[j];
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivot_cols_[pos] < pcol) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivot_cols_.insert(pivot_cols_.begin() + pos, pcol);
  }

  int unknowns_;
  int rows_added_ = 0;
  bool inconsistent_ = false;
  std::optional<int> first_bad_row_;
  std::vector<Vector> rows_;   // RREF rows, augmented column last
  std::vector<int> pivot_cols_;
};

/// Exact Gaussian elimination of A x = b with Unique / Parametric /
/// Inconsistent classification.
inline LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("solve_linear: row count differs from rhs length");
  if (!a.empty() && !is_rectangular(a))
    throw ShapeError("solve_linear: rows have inconsistent lengths");
  const int unknowns = a.empty() ? 0 : static_cast<int>(a.front().size());
  LinearSystemBuilder builder(unknowns);
  for (size_t i = 0; i < a.size(); ++i) builder.add_equation(a[i], b[i]);
  return builder.solution();
}

}  // namespace akm
