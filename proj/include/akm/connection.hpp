#pragma once

#include "akm/frame.hpp"
#include "akm/linear.hpp"
#include "akm/tensor.hpp"

namespace akm {

/// Levi-Civita connection coefficients: gamma(k, i, j) = coefficient of e_k
/// in the covariant derivative of e_j along e_i.
struct ConnectionData {
  Tensor gamma{{1, 2}, 1};
};

/// Koszul formula specialized to constant metric and constant structure
/// constants: 2 g(D_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i)
///                                     + g([e_k,e_i],e_j).
inline ConnectionData connection(const FrameManifold& man) {
  const int n = man.dim;
  const Matrix ginv = invert(man.metric);
  Tensor gamma({1, 2}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector rhs(n, Rational(0));  // rhs[k] = 2 g(D_{e_i} e_j, e_k)
      for (int k = 0; k < n; ++k) {
        Rational a(0);
        for (int l = 0; l < n; ++l) {
          a += man.structure({l, i, j}) * man.metric[l][k];
          a -= man.structure({l, j, k}) * man.metric[l][i];
          a += man.structure({l, k, i}) * man.metric[l][j];
        }
        rhs[k] = a;
      }
      for (int l = 0; l < n; ++l) {
        Rational coeff(0);
        for (int k = 0; k < n; ++k) coeff += ginv[l][k] * rhs[k];
        gamma({l, i, j}) = coeff / 2;
      }
    }
  }
  return {gamma};
}

/// D_X W for constant-coefficient fields X, W.
inline Vector covariant_derivative_vector(const ConnectionData& conn, const Vector& x,
                                          const Vector& w) {
  const int n = conn.gamma.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(w.size()) != n)
    throw ShapeError("covariant_derivative_vector: length mismatch");
  Vector out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const Rational f = x[i] * w[j];
      for (int l = 0; l < n; ++l) out[l] += f * conn.gamma({l, i, j});
    }
  }
  return out;
}

/// Curvature package: riemann(l, i, j, k) = coefficient of e_l in
/// R(e_i, e_j) e_k with R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z,
/// Ricci tensor S(U,V) = sum_{i,j} g^{ij} g(R(e_i,U)V, e_j), Ricci operator
/// Q with S(U,V) = g(QU,V), and scalar curvature r = tr Q.
struct CurvatureData {
  Tensor riemann{{1, 3}, 1};
  Tensor ricci{{0, 2}, 1};
  Tensor ricci_operator{{1, 1}, 1};
  Rational scalar;
};

inline CurvatureData curvature(const FrameManifold& man, const ConnectionData& conn) {
  const int n = man.dim;
  CurvatureData out;
  out.riemann = Tensor({1, 3}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational v(0);
          for (int m = 0; m < n; ++m) {
            v += conn.gamma({m, j, k}) * conn.gamma({l, i, m});
            v -= conn.gamma({m, i, k}) * conn.gamma({l, j, m});
            v -= man.structure({m, i, j}) * conn.gamma({l, m, k});
          }
          out.riemann({l, i, j, k}) = v;
        }

  const Matrix ginv = invert(man.metric);
  out.ricci = Tensor({0, 2}, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Rational s(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            s += ginv[i][j] * out.riemann({l, i, u, v}) * man.metric[l][j];
      out.ricci({u, v}) = s;
    }

  out.ricci_operator = Tensor({1, 1}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational q(0);
      for (int k = 0; k < n; ++k) q += ginv[i][k] * out.ricci({k, j});
      out.ricci_operator({i, j}) = q;
    }
  out.scalar = endo_trace(out.ricci_operator);
  return out;
}

inline CurvatureData curvature(const FrameManifold& man) {
  return curvature(man, connection(man));
}

/// R(X,Y)Z for constant-coefficient fields.
inline Vector riemann_apply(const CurvatureData& curv, const Vector& x, const Vector& y,
                            const Vector& z) {
  const int n = curv.riemann.dim();
  Vector out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational f = x[i] * y[j] * z[k];
        if (f == 0) continue;
        for (int l = 0; l < n; ++l) out[l] += f * curv.riemann({l, i, j, k});
      }
  return out;
}

inline bool is_alternating(const Tensor& t) {
  const auto& r = t.rank();
  if (r.contravariant != 0) return false;
  if (r.covariant == 1) return true;
  if (r.covariant == 2) {
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j)
        if (t({i, j}) != -t({j, i})) return false;
    return true;
  }
  if (r.covariant == 3) {
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j)
        for (int k = 0; k < t.dim(); ++k) {
          const Rational& v = t({i, j, k});
          if (v != -t({j, i, k}) || v != -t({i, k, j})) return false;
        }
    return true;
  }
  return false;
}

/// Exterior derivative of a constant-component alternating p-form, p = 1 or 2:
/// d w(X_0..X_p) = sum_{a<b} (-1)^{a+b} w([X_a,X_b], X_0..^X_a..^X_b..X_p).
inline Tensor exterior_derivative(const FrameManifold& man, const Tensor& omega) {
  const auto& r = omega.rank();
  if (r.contravariant != 0 || (r.covariant != 1 && r.covariant != 2))
    throw UnsupportedRankError("exterior_derivative supports (0,1) and (0,2) forms");
  if (omega.dim() != man.dim) throw ShapeError("form dimension does not match manifold");
  if (!is_alternating(omega))
    throw ValidationError("exterior_derivative requires an alternating form");

  const int n = man.dim;
  if (r.covariant == 1) {
    Tensor d({0, 2}, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v(0);
        for (int k = 0; k < n; ++k) v -= omega({k}) * man.structure({k, i, j});
        d({i, j}) = v;
      }
    return d;
  }

  Tensor d({0, 3}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v(0);
        for (int l = 0; l < n; ++l) {
          v -= man.structure({l, i, j}) * omega({l, k});
          v += man.structure({l, i, k}) * omega({l, j});
          v -= man.structure({l, j, k}) * omega({l, i});
        }
        d({i, j, k}) = v;
      }
  return d;
}

/// Wedge of a 1-form and an alternating 2-form, without combinatorial
/// prefactor: (a ^ b)(X,Y,Z) = a(X)b(Y,Z) - a(Y)b(X,Z) + a(Z)b(X,Y).
inline Tensor wedge_1_2(const Tensor& alpha, const Tensor& beta) {
  if (!(alpha.rank() == TensorRank{0, 1}) || !(beta.rank() == TensorRank{0, 2}) ||
      alpha.dim() != beta.dim())
    throw ShapeError("wedge_1_2 needs a (0,1) and a (0,2) form of equal dimension");
  if (!is_alternating(beta)) throw ValidationError("wedge_1_2 requires an alternating 2-form");
  const int n = alpha.dim();
  Tensor out({0, 3}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out({i, j, k}) = alpha({i}) * beta({j, k}) - alpha({j}) * beta({i, k}) +
                         alpha({k}) * beta({i, j});
  return out;
}

/// Lie derivative along a constant-coefficient field of a constant-component
/// tensor of rank (0,1), (0,2), (1,1) or (1,3). The scalar derivative term
/// X(T(...)) vanishes for constant components and is dropped.
inline Tensor lie_derivative(const FrameManifold& man, const Vector& x, const Tensor& t) {
  if (static_cast<int>(x.size()) != man.dim)
    throw ShapeError("lie_derivative: field length does not match manifold dimension");
  if (t.dim() != man.dim) throw ShapeError("lie_derivative: tensor dimension mismatch");
  const int n = man.dim;

  // [x, e_j] for each basis index j.
  std::vector<Vector> ad(n);
  for (int j = 0; j < n; ++j) {
    Vector ej(n, Rational(0));
    ej[j] = 1;
    ad[j] = bracket(man, x, ej);
  }

  const auto& r = t.rank();
  if (r == TensorRank{0, 1}) {
    Tensor out({0, 1}, n);
    for (int i = 0; i < n; ++i) {
      Rational v(0);
      for (int k = 0; k < n; ++k) v -= t({k}) * ad[i][k];
      out({i}) = v;
    }
    return out;
  }
  if (r == TensorRank{0, 2}) {
    Tensor out({0, 2}, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v(0);
        for (int k = 0; k < n; ++k) {
          v -= ad[i][k] * t({k, j});
          v -= ad[j][k] * t({i, k});
        }
        out({i, j}) = v;
      }
    return out;
  }
  if (r == TensorRank{1, 1}) {
    Tensor out({1, 1}, n);
    for (int j = 0; j < n; ++j) {
      // [x, T e_j] - T [x, e_j]
      Vector tej(n, Rational(0));
      for (int l = 0; l < n; ++l) tej[l] = t({l, j});
      Vector first = bracket(man, x, tej);
      Vector second = apply_endo(t, ad[j]);
      for (int l = 0; l < n; ++l) out({l, j}) = first[l] - second[l];
    }
    return out;
  }
  if (r == TensorRank{1, 3}) {
    Tensor out({1, 3}, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vector rijk(n, Rational(0));
          for (int l = 0; l < n; ++l) rijk[l] = t({l, i, j, k});
          Vector v = bracket(man, x, rijk);
          for (int l = 0; l < n; ++l) {
            for (int m = 0; m < n; ++m) {
              v[l] -= ad[i][m] * t({l, m, j, k});
              v[l] -= ad[j][m] * t({l, i, m, k});
              v[l] -= ad[k][m] * t({l, i, j, m});
            }
            out({l, i, j, k}) = v[l];
          }
        }
    return out;
  }
  throw UnsupportedRankError("lie_derivative supports ranks (0,1), (0,2), (1,1), (1,3)");
}

/// Lie derivative of the connection:
/// (L_X D)(U,V) = [X, D_U V] - D_[X,U] V - D_U [X,V], as a (1,2) tensor over
/// frame arguments.
inline Tensor lie_derivative_connection(const FrameManifold& man, const ConnectionData& conn,
                                        const Vector& x) {
  if (static_cast<int>(x.size()) != man.dim)
    throw ShapeError("lie_derivative_connection: field length mismatch");
  const int n = man.dim;
  Tensor out({1, 2}, n);
  for (int i = 0; i < n; ++i) {
    Vector ei(n, Rational(0));
    ei[i] = 1;
    Vector xi = bracket(man, x, ei);
    for (int j = 0; j < n; ++j) {
      Vector ej(n, Rational(0));
      ej[j] = 1;
      Vector xj = bracket(man, x, ej);
      Vector dij(n, Rational(0));
      for (int l = 0; l < n; ++l) dij[l] = conn.gamma({l, i, j});
      Vector v = bracket(man, x, dij);
      Vector a = covariant_derivative_vector(conn, xi, ej);
      Vector b = covariant_derivative_vector(conn, ei, xj);
      for (int l = 0; l < n; ++l) out({l, i, j}) = v[l] - a[l] - b[l];
    }
  }
  return out;
}

/// Covariant derivative of a (1,1) tensor with constant components:
/// result(l, i, j) = coefficient of e_l in (D_{e_i} A) e_j
///                 = sum_k ( gamma(l,i,k) A(k,j) - gamma(k,i,j) A(l,k) ).
inline Tensor covariant_derivative_endo(const ConnectionData& conn, const Tensor& a) {
  if (!(a.rank() == TensorRank{1, 1}) || a.dim() != conn.gamma.dim())
    throw ShapeError("covariant_derivative_endo needs a (1,1) tensor over the same frame");
  const int n = a.dim();
  Tensor out({1, 2}, n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v(0);
        for (int k = 0; k < n; ++k) {
          v += conn.gamma({l, i, k}) * a({k, j});
          v -= conn.gamma({k, i, j}) * a({l, k});
        }
        out({l, i, j}) = v;
      }
  return out;
}

}  // namespace akm
