#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "akm/catalog.hpp"
#include "akm/connection.hpp"

#include "helpers.hpp"

using namespace akm;
using akm::testing::basis_vector;
using akm::testing::random_vector;

namespace {

Vector nabla_basis(const ConnectionData& conn, int i, int j) {
  Vector v(conn.gamma.dim(), Rational(0));
  for (int l = 0; l < conn.gamma.dim(); ++l) v[l] = conn.gamma({l, i, j});
  return v;
}

bool torsion_free(const FrameManifold& man, const ConnectionData& conn) {
  for (int i = 0; i < man.dim; ++i)
    for (int j = 0; j < man.dim; ++j)
      for (int k = 0; k < man.dim; ++k)
        if (conn.gamma({k, i, j}) - conn.gamma({k, j, i}) != man.structure({k, i, j}))
          return false;
  return true;
}

bool metric_compatible(const FrameManifold& man, const ConnectionData& conn) {
  // Constant metric: 0 = g(D_{e_i} e_j, e_k) + g(e_j, D_{e_i} e_k).
  for (int i = 0; i < man.dim; ++i)
    for (int j = 0; j < man.dim; ++j)
      for (int k = 0; k < man.dim; ++k) {
        Rational v(0);
        for (int l = 0; l < man.dim; ++l) {
          v += conn.gamma({l, i, j}) * man.metric[l][k];
          v += conn.gamma({l, i, k}) * man.metric[j][l];
        }
        if (v != 0) return false;
      }
  return true;
}

void check_curvature_identities(const FrameManifold& man, const CurvatureData& curv) {
  const int n = man.dim;
  // antisymmetry in the first argument pair
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          REQUIRE(curv.riemann({l, i, j, k}) == -curv.riemann({l, j, i, k}));
  // first Bianchi
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          REQUIRE(curv.riemann({l, i, j, k}) + curv.riemann({l, j, k, i}) +
                      curv.riemann({l, k, i, j}) ==
                  0);
  // lowered tensor: antisymmetry in the last pair and pair symmetry
  Tensor low({0, 4}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          Rational v(0);
          for (int l = 0; l < n; ++l) v += man.metric[l][w] * curv.riemann({l, i, j, k});
          low({i, j, k, w}) = v;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          REQUIRE(low({i, j, k, w}) == -low({i, j, w, k}));
          REQUIRE(low({i, j, k, w}) == low({k, w, i, j}));
        }
  // Ricci symmetric, operator consistent, scalar = trace
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      REQUIRE(curv.ricci({i, j}) == curv.ricci({j, i}));
      Rational qv(0);
      for (int l = 0; l < n; ++l) qv += man.metric[l][j] * curv.ricci_operator({l, i});
      REQUIRE(qv == curv.ricci({i, j}));
    }
  REQUIRE(curv.scalar == endo_trace(curv.ricci_operator));
}

}  // namespace

TEST_CASE("kenmotsu3 connection matches the hand-expanded Koszul values") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  ConnectionData conn = connection(man);
  CHECK(nabla_basis(conn, 1, 0) == Vector{Rational(0), Rational(1), Rational(1)});
  CHECK(nabla_basis(conn, 0, 0) == Vector(3, Rational(0)));
  CHECK(nabla_basis(conn, 0, 1) == Vector(3, Rational(0)));
  CHECK(nabla_basis(conn, 0, 2) == Vector(3, Rational(0)));
  CHECK(nabla_basis(conn, 1, 1) == Vector{Rational(-1), Rational(0), Rational(0)});
  CHECK(nabla_basis(conn, 1, 2) == Vector{Rational(-1), Rational(0), Rational(0)});
  CHECK(nabla_basis(conn, 2, 0) == Vector{Rational(0), Rational(1), Rational(1)});
  CHECK(nabla_basis(conn, 2, 1) == Vector{Rational(-1), Rational(0), Rational(0)});
  CHECK(nabla_basis(conn, 2, 2) == Vector{Rational(-1), Rational(0), Rational(0)});
}

TEST_CASE("abelian frame is flat") {
  FrameManifold man = make_builtin("abelian_flat3").manifold;
  CHECK(connection(man).gamma.is_zero());
  CHECK(curvature(man).riemann.is_zero());
  CHECK(curvature(man).scalar == 0);
}

TEST_CASE("connection is torsion-free and metric-compatible on all builtins") {
  for (const auto& name : builtin_names()) {
    FrameManifold man = make_builtin(name).manifold;
    ConnectionData conn = connection(man);
    CHECK(torsion_free(man, conn));
    CHECK(metric_compatible(man, conn));
  }
}

TEST_CASE("kenmotsu3 curvature matches the hand-expanded table") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  CurvatureData curv = curvature(man);
  Vector e0 = basis_vector(3, 0), e1 = basis_vector(3, 1), e2 = basis_vector(3, 2);

  CHECK(riemann_apply(curv, e0, e1, e0) == Vector{Rational(0), Rational(2), Rational(2)});
  CHECK(riemann_apply(curv, e0, e1, e1) == Vector{Rational(-2), Rational(0), Rational(0)});
  CHECK(riemann_apply(curv, e0, e1, e2) == Vector{Rational(-2), Rational(0), Rational(0)});
  CHECK(riemann_apply(curv, e0, e2, e0) == Vector{Rational(0), Rational(2), Rational(2)});
  CHECK(riemann_apply(curv, e0, e2, e1) == Vector{Rational(-2), Rational(0), Rational(0)});
  CHECK(riemann_apply(curv, e0, e2, e2) == Vector{Rational(-2), Rational(0), Rational(0)});
  for (int k = 0; k < 3; ++k)
    CHECK(riemann_apply(curv, e1, e2, basis_vector(3, k)) == Vector(3, Rational(0)));

  CHECK(curv.ricci({0, 0}) == -4);
  CHECK(curv.ricci({1, 1}) == -2);
  CHECK(curv.ricci({2, 2}) == -2);
  CHECK(curv.ricci({1, 2}) == -2);
  CHECK(curv.ricci({0, 1}) == 0);
  CHECK(curv.ricci({0, 2}) == 0);
  CHECK(curv.scalar == -8);
}

TEST_CASE("R(X,X)Y vanishes for any X") {
  std::mt19937 rng(37);
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  CurvatureData curv = curvature(man);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = random_vector(rng, 3), y = random_vector(rng, 3);
    CHECK(riemann_apply(curv, x, x, y) == Vector(3, Rational(0)));
  }
}

TEST_CASE("hyperbolic frame has constant curvature -1") {
  FrameManifold man = make_builtin("hyperbolic_kenmotsu3").manifold;
  CurvatureData curv = curvature(man);
  // S = -2 g in dimension 3, r = -6
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(curv.ricci({i, j}) == Rational(-2) * man.metric[i][j]);
  CHECK(curv.scalar == -6);
}

TEST_CASE("su2 frame has constant curvature +1") {
  FrameManifold man = make_builtin("su2_round3").manifold;
  CurvatureData curv = curvature(man);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(curv.ricci({i, j}) == Rational(2) * man.metric[i][j]);
  CHECK(curv.scalar == 6);
}

TEST_CASE("curvature identity suite on builtins and conjugated variants") {
  std::mt19937 rng(43);
  for (const auto& name : builtin_names()) {
    FrameManifold man = make_builtin(name).manifold;
    check_curvature_identities(man, curvature(man));
    for (int trial = 0; trial < 3; ++trial) {
      FrameManifold conj =
          akm::testing::conjugate_frame(man, akm::testing::random_orthogonal(rng, 3));
      REQUIRE(validate_frame(conj).passed());
      check_curvature_identities(conj, curvature(conj));
    }
  }
}

TEST_CASE("rescaled non-orthonormal frame keeps the same invariants") {
  // kenmotsu3 with e1 doubled: [e0,f1] = -f1 - 2 f2, [e0,f2] = -(1/2) f1 - f2,
  // metric diag(1,4,1). Scalar curvature and Ricci eigendata are unchanged.
  Rational z(0);
  FrameManifold man = make_frame_manifold(
      "kenmotsu3_rescaled", 3,
      {{0, 1, {z, Rational(-1), Rational(-2)}}, {0, 2, {z, Rational(-1, 2), Rational(-1)}}},
      {{Rational(1), z, z}, {z, Rational(4), z}, {z, z, Rational(1)}});
  REQUIRE(validate_frame(man).passed());
  ConnectionData conn = connection(man);
  CHECK(torsion_free(man, conn));
  CHECK(metric_compatible(man, conn));
  CurvatureData curv = curvature(man, conn);
  check_curvature_identities(man, curv);
  CHECK(curv.scalar == -8);
  CHECK(curv.ricci({0, 0}) == -4);
}

TEST_CASE("non-diagonal constant metric still gives a flat abelian frame") {
  Rational z(0), one(1), two(2);
  FrameManifold man = make_frame_manifold("abelian_skew", 3, {},
                                          {{two, one, z}, {one, two, z}, {z, z, one}});
  REQUIRE(validate_frame(man).passed());
  ConnectionData conn = connection(man);
  CHECK(conn.gamma.is_zero());
  CHECK(torsion_free(man, conn));
  CHECK(metric_compatible(man, conn));
  check_curvature_identities(man, curvature(man, conn));
}

TEST_CASE("exterior derivative on kenmotsu3 forms") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  const FrameManifold& man = sm.manifold;

  // d eta = 0
  CHECK(exterior_derivative(man, sm.structure.eta).is_zero());

  // zero form maps to zero form
  CHECK(exterior_derivative(man, Tensor({0, 1}, 3)).is_zero());
  CHECK(exterior_derivative(man, Tensor({0, 2}, 3)).is_zero());

  // dF(e0,e1,e2) = -2 and (2 eta ^ F)(e0,e1,e2) = -2
  Tensor f = fundamental_two_form(man, sm.structure);
  CHECK(f({1, 2}) == -1);
  Tensor df = exterior_derivative(man, f);
  CHECK(df({0, 1, 2}) == -2);
  Tensor w = Rational(2) * wedge_1_2(sm.structure.eta, f);
  CHECK(w({0, 1, 2}) == -2);
  CHECK(df == w);
}

TEST_CASE("exterior derivative rejects bad input") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  Tensor sym({0, 2}, 3);
  sym({0, 1}) = 1;  // not alternating
  CHECK_THROWS_AS(exterior_derivative(man, sym), ValidationError);
  CHECK_THROWS_AS(exterior_derivative(man, Tensor({0, 3}, 3)), UnsupportedRankError);
  CHECK_THROWS_AS(exterior_derivative(man, Tensor({1, 1}, 3)), UnsupportedRankError);
}

TEST_CASE("d compose d vanishes on random constant 1-forms") {
  std::mt19937 rng(47);
  for (const auto& name : builtin_names()) {
    FrameManifold man = make_builtin(name).manifold;
    for (int trial = 0; trial < 30; ++trial) {
      Tensor omega({0, 1}, 3);
      for (int i = 0; i < 3; ++i) omega({i}) = akm::testing::random_rational(rng);
      CHECK(exterior_derivative(man, exterior_derivative(man, omega)).is_zero());
    }
  }
}

TEST_CASE("lie derivative of the metric along the reeb field") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  Tensor g({0, 2}, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g({i, j}) = man.metric[i][j];
  Tensor lg = lie_derivative(man, basis_vector(3, 0), g);
  CHECK(lg({1, 1}) == 2);
  CHECK(lg({1, 2}) == 2);
  CHECK(lg({2, 2}) == 2);
  CHECK(lg({0, 0}) == 0);
  CHECK(lg({0, 1}) == 0);
}

TEST_CASE("lie derivative agrees with the covariant-derivative expansion on the metric") {
  // Independent route: (L_X g)(U,V) = g(D_U X, V) + g(U, D_V X).
  std::mt19937 rng(53);
  for (const auto& name : builtin_names()) {
    FrameManifold man = make_builtin(name).manifold;
    ConnectionData conn = connection(man);
    Tensor g({0, 2}, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g({i, j}) = man.metric[i][j];
    for (int trial = 0; trial < 20; ++trial) {
      Vector x = random_vector(rng, 3);
      Tensor lg = lie_derivative(man, x, g);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Vector di = covariant_derivative_vector(conn, basis_vector(3, i), x);
          Vector dj = covariant_derivative_vector(conn, basis_vector(3, j), x);
          Rational expect = man.metric_pair(di, basis_vector(3, j)) +
                            man.metric_pair(basis_vector(3, i), dj);
          REQUIRE(lg({i, j}) == expect);
        }
    }
  }
}

TEST_CASE("lie derivative vanishes along the zero field") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  Vector zero(3, Rational(0));
  CurvatureData curv = curvature(man);
  StructuredManifold sm = make_builtin("kenmotsu3");
  CHECK(lie_derivative(man, zero, sm.structure.eta).is_zero());
  CHECK(lie_derivative(man, zero, curv.ricci).is_zero());
  CHECK(lie_derivative(man, zero, sm.structure.phi).is_zero());
  CHECK(lie_derivative(man, zero, curv.riemann).is_zero());
}

TEST_CASE("lie derivative rejects unsupported ranks") {
  FrameManifold man = make_builtin("kenmotsu3").manifold;
  CHECK_THROWS_AS(lie_derivative(man, basis_vector(3, 0), Tensor({0, 3}, 3)),
                  UnsupportedRankError);
  CHECK_THROWS_AS(lie_derivative(man, basis_vector(3, 0), Tensor({2, 0}, 3)),
                  UnsupportedRankError);
  CHECK_THROWS_AS(lie_derivative(man, Vector(2, Rational(0)), Tensor({1, 1}, 3)), ShapeError);
}

TEST_CASE("killing fields preserve ricci and curvature") {
  // On su2_round3 every basis field is Killing; the lie derivative of every
  // curvature object along them must vanish identically.
  FrameManifold man = make_builtin("su2_round3").manifold;
  CurvatureData curv = curvature(man);
  for (int i = 0; i < 3; ++i) {
    Vector x = basis_vector(3, i);
    CHECK(lie_derivative(man, x, curv.ricci).is_zero());
    CHECK(lie_derivative(man, x, curv.riemann).is_zero());
  }
}
