#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "akm/linear.hpp"
#include "akm/tensor.hpp"

namespace akm {

/// A bracket table entry: [e_i, e_j] = coeffs (i < j; unlisted pairs vanish).
struct BracketEntry {
  int i = 0;
  int j = 0;
  Vector coeffs;
};

/// Manifold presented by a global frame with constant Lie-bracket structure
/// constants and a constant metric. Validation is separate from construction
/// so that deliberately broken inputs can be built for negative tests.
struct FrameManifold {
  std::string name;
  int dim = 0;
  std::vector<std::string> frame_labels;
  /// structure(k, i, j) = coefficient of e_k in [e_i, e_j].
  Tensor structure{{1, 2}, 1};
  Matrix metric;

  /// m in dim = 2m + 1.
  int half_rank() const { return (dim - 1) / 2; }

  Vector bracket_basis(int i, int j) const {
    Vector v(dim, Rational(0));
    for (int k = 0; k < dim; ++k) v[k] = structure({k, i, j});
    return v;
  }

  Rational metric_pair(const Vector& x, const Vector& y) const {
    Rational s(0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) s += x[i] * metric[i][j] * y[j];
    return s;
  }
};

inline std::vector<std::string> default_frame_labels(int dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

inline Tensor structure_from_brackets(int dim, const std::vector<BracketEntry>& brackets) {
  Tensor c({1, 2}, dim);
  for (const auto& entry : brackets) {
    if (entry.i < 0 || entry.j >= dim || entry.i >= entry.j)
      throw ShapeError("bracket entry needs 0 <= i < j < dim");
    if (static_cast<int>(entry.coeffs.size()) != dim)
      throw ShapeError("bracket coefficients must have length dim");
    for (int k = 0; k < dim; ++k) {
      c({k, entry.i, entry.j}) = entry.coeffs[k];
      c({k, entry.j, entry.i}) = -entry.coeffs[k];
    }
  }
  return c;
}

inline FrameManifold make_frame_manifold(std::string name, int dim,
                                         const std::vector<BracketEntry>& brackets,
                                         Matrix metric = {},
                                         std::vector<std::string> labels = {}) {
  FrameManifold man;
  man.name = std::move(name);
  man.dim = dim;
  man.frame_labels = labels.empty() ? default_frame_labels(dim) : std::move(labels);
  man.structure = structure_from_brackets(dim, brackets);
  man.metric = metric.empty() ? identity_matrix(dim) : std::move(metric);
  if (static_cast<int>(man.frame_labels.size()) != dim)
    throw ShapeError("frame label count must equal dim");
  if (man.metric.size() != static_cast<size_t>(dim) || !is_rectangular(man.metric) ||
      man.metric.front().size() != static_cast<size_t>(dim))
    throw ShapeError("metric must be dim x dim");
  return man;
}

/// Bilinear extension of the structure constants. [X,Y] = -[Y,X].
inline Vector bracket(const FrameManifold& man, const Vector& x, const Vector& y) {
  if (static_cast<int>(x.size()) != man.dim || static_cast<int>(y.size()) != man.dim)
    throw ShapeError("bracket arguments must have length dim");
  Vector out(man.dim, Rational(0));
  for (int i = 0; i < man.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < man.dim; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      for (int k = 0; k < man.dim; ++k) out[k] += f * man.structure({k, i, j});
    }
  }
  return out;
}

/// Well-formedness report: antisymmetry and Jacobi identity of the structure
/// constants, symmetric positive-definite metric, odd dimension >= 3.
struct ValidationReport {
  bool antisymmetry_ok = false;
  std::optional<std::array<int, 3>> antisymmetry_witness;  // (k, i, j)
  bool jacobi_ok = false;
  std::optional<std::array<int, 3>> jacobi_witness;  // triple (i, j, k)
  bool metric_symmetric_ok = false;
  bool metric_spd_ok = false;
  bool odd_dimension_ok = false;

  bool passed() const {
    return antisymmetry_ok && jacobi_ok && metric_symmetric_ok && metric_spd_ok &&
           odd_dimension_ok;
  }
};

inline ValidationReport validate_frame(const FrameManifold& man) {
  ValidationReport report;
  const int n = man.dim;

  report.antisymmetry_ok = true;
  for (int k = 0; k < n && report.antisymmetry_ok; ++k)
    for (int i = 0; i < n && report.antisymmetry_ok; ++i)
      for (int j = 0; j < n; ++j)
        if (man.structure({k, i, j}) != -man.structure({k, j, i})) {
          report.antisymmetry_ok = false;
          report.antisymmetry_witness = {k, i, j};
          break;
        }

  // Jacobi over basis triples; with antisymmetric bilinear brackets the
  // cyclic sum is alternating, so i < j < k covers all cases.
  report.jacobi_ok = true;
  for (int i = 0; i < n && report.jacobi_ok; ++i)
    for (int j = i + 1; j < n && report.jacobi_ok; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vector sum = bracket(man, ei, bracket(man, ej, ek));
        Vector t = bracket(man, ej, bracket(man, ek, ei));
        Vector u = bracket(man, ek, bracket(man, ei, ej));
        bool zero = true;
        for (int l = 0; l < n; ++l)
          if (sum[l] + t[l] + u[l] != 0) {
            zero = false;
            break;
          }
        if (!zero) {
          report.jacobi_ok = false;
          report.jacobi_witness = {i, j, k};
          break;
        }
      }

  report.metric_symmetric_ok = is_symmetric(man.metric);
  report.metric_spd_ok = report.metric_symmetric_ok && is_positive_definite(man.metric);
  report.odd_dimension_ok = n >= 3 && n % 2 == 1;
  return report;
}

}  // namespace akm
