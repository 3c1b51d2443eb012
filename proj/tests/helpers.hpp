#pragma once

#include <random>
#include <vector>

#include "akm/catalog.hpp"
#include "akm/frame.hpp"
#include "akm/linear.hpp"

namespace akm::testing {

inline Vector basis_vector(int dim, int i) {
  Vector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

/// Small random rationals, numerator in [-bound, bound], denominator in
/// [1, den_bound].
inline Rational random_rational(std::mt19937& rng, int bound = 4, int den_bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937& rng, int dim, int bound = 4) {
  Vector v(dim);
  for (auto& e : v) e = random_rational(rng, bound);
  return v;
}

/// Random rational orthogonal matrix: a product of plane rotations with
/// rational cosine/sine pairs ((1-t^2)/(1+t^2), 2t/(1+t^2)) and a random
/// diagonal of signs.
inline Matrix random_orthogonal(std::mt19937& rng, int dim, int sweeps = 2) {
  Matrix q = identity_matrix(dim);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> tnum(-3, 3);
  std::uniform_int_distribution<int> tden(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int s = 0; s < sweeps * dim; ++s) {
    int p = pick(rng), r = pick(rng);
    if (p == r) continue;
    Rational t(tnum(rng), tden(rng));
    Rational c = (1 - t * t) / (1 + t * t);
    Rational sn = 2 * t / (1 + t * t);
    for (int col = 0; col < dim; ++col) {
      Rational a = q[p][col], b = q[r][col];
      q[p][col] = c * a - sn * b;
      q[r][col] = sn * a + c * b;
    }
  }
  for (int i = 0; i < dim; ++i)
    if (coin(rng)) {
      for (int col = 0; col < dim; ++col) q[i][col] = -q[i][col];
    }
  return q;
}

/// Conjugates the frame of an identity-metric manifold by an orthogonal
/// matrix: new frame f_i = sum_j q[j][i] e_j. The metric stays the identity
/// and the bracket table transforms accordingly.
inline FrameManifold conjugate_frame(const FrameManifold& man, const Matrix& q) {
  const int n = man.dim;
  FrameManifold out = man;
  out.name = man.name + "_conjugated";
  Tensor c({1, 2}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [f_i, f_j] = sum_{k,l} q[k][i] q[l][j] [e_k, e_l], re-expressed in f.
      Vector image(n, Rational(0));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (q[k][i] == 0 || q[l][j] == 0) continue;
          const Rational f = q[k][i] * q[l][j];
          for (int m = 0; m < n; ++m) image[m] += f * man.structure({m, k, l});
        }
      // e_m = sum_a q[m][a] f_a for orthogonal q.
      for (int a = 0; a < n; ++a) {
        Rational v(0);
        for (int m = 0; m < n; ++m) v += q[m][a] * image[m];
        c({a, i, j}) = v;
      }
    }
  out.structure = c;
  return out;
}

}  // namespace akm::testing
