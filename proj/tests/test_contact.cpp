#include <catch2/catch_amalgamated.hpp>

#include "akm/catalog.hpp"
#include "akm/contact.hpp"
#include "akm/fields.hpp"

#include "helpers.hpp"

using namespace akm;
using akm::testing::basis_vector;

namespace {

Vector endo_column(const Tensor& a, int j) {
  Vector v(a.dim(), Rational(0));
  for (int l = 0; l < a.dim(); ++l) v[l] = a({l, j});
  return v;
}

}  // namespace

TEST_CASE("kenmotsu3 grades as almost Kenmotsu") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  StructureReport rep = validate_structure(sm.manifold, sm.structure);
  CHECK(rep.phi_square_ok);
  CHECK(rep.eta_unit_ok);
  CHECK(rep.metric_compatible_ok);
  CHECK(rep.phi_reeb_zero_ok);
  CHECK(rep.eta_phi_zero_ok);
  CHECK(rep.eta_closed_ok);
  CHECK(rep.kenmotsu_equation_ok);
  CHECK(rep.grade() == StructureGrade::AlmostKenmotsu);
}

TEST_CASE("hyperbolic frame grades as almost Kenmotsu") {
  StructuredManifold sm = make_builtin("hyperbolic_kenmotsu3");
  CHECK(validate_structure(sm.manifold, sm.structure).grade() ==
        StructureGrade::AlmostKenmotsu);
}

TEST_CASE("abelian and su2 frames are almost contact metric but not almost Kenmotsu") {
  for (const char* name : {"abelian_flat3", "su2_round3"}) {
    StructuredManifold sm = make_builtin(name);
    StructureReport rep = validate_structure(sm.manifold, sm.structure);
    CHECK(rep.almost_contact_metric());
    CHECK(rep.grade() == StructureGrade::AlmostContactMetric);
  }
}

TEST_CASE("zero phi fails the square identity on non-reeb fields") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  AlmostContactStructure acs = make_structure(sm.manifold, Tensor({1, 1}, 3), 0);
  StructureReport rep = validate_structure(sm.manifold, acs);
  CHECK_FALSE(rep.phi_square_ok);
  CHECK(rep.grade() == StructureGrade::NotAlmostContact);
}

TEST_CASE("scaled phi fails metric compatibility at (e1,e1)") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  Tensor phi({1, 1}, 3);
  phi({2, 1}) = 2;   // phi e1 = 2 e2, so g(phi e1, phi e1) = 4 != 1
  phi({1, 2}) = -1;
  AlmostContactStructure acs = make_structure(sm.manifold, phi, 0);
  StructureReport rep = validate_structure(sm.manifold, acs);
  CHECK_FALSE(rep.metric_compatible_ok);
  REQUIRE(rep.metric_compatible_witness.has_value());
  CHECK(*rep.metric_compatible_witness == std::array<int, 2>{1, 1});
}

TEST_CASE("eta is derived from the metric and reeb index") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  CHECK(sm.structure.eta({0}) == 1);
  CHECK(sm.structure.eta({1}) == 0);
  CHECK(sm.structure.eta({2}) == 0);
  // eta(reeb) = 1 and eta o phi = 0 on all validated structures
  for (const auto& name : builtin_names()) {
    StructuredManifold t = make_builtin(name);
    StructureReport rep = validate_structure(t.manifold, t.structure);
    CHECK(rep.eta_unit_ok);
    CHECK(rep.eta_phi_zero_ok);
  }
}

TEST_CASE("kenmotsu3 h tensors match the hand-expanded values") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);

  // h' reeb = 0, h' e1 = e2, h' e2 = e1
  CHECK(endo_column(ct.h_prime, 0) == Vector(3, Rational(0)));
  CHECK(endo_column(ct.h_prime, 1) == basis_vector(3, 2));
  CHECK(endo_column(ct.h_prime, 2) == basis_vector(3, 1));

  // h e1 = -e1, h e2 = e2 from expanding (1/2)([reeb, phi U] - phi [reeb, U])
  CHECK(endo_column(ct.h, 1) == Vector{Rational(0), Rational(-1), Rational(0)});
  CHECK(endo_column(ct.h, 2) == Vector{Rational(0), Rational(0), Rational(1)});
  CHECK(endo_trace(ct.h) == 0);

  // h o phi must reproduce h'
  CHECK(compose_endo(ct.h, sm.structure.phi) == ct.h_prime);

  CHECK(ct.anticommute_ok);
  CHECK(ct.h_reeb_zero_ok);
  CHECK(ct.h_prime_reeb_zero_ok);
  CHECK(ct.trace_h_zero_ok);
  CHECK(ct.trace_h_prime_zero_ok);
  CHECK(ct.reeb_derivative_ok);
  CHECK(ct.all_identities());
}

TEST_CASE("hyperbolic frame has vanishing h") {
  StructuredManifold sm = make_builtin("hyperbolic_kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CHECK(ct.h.is_zero());
  CHECK(ct.h_prime.is_zero());
  CHECK(ct.all_identities());
}

TEST_CASE("su2 frame has vanishing h but fails the reeb derivative identity") {
  StructuredManifold sm = make_builtin("su2_round3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CHECK(ct.h.is_zero());
  CHECK(ct.anticommute_ok);
  CHECK_FALSE(ct.reeb_derivative_ok);
}

TEST_CASE("compute_h_tensors requires an almost contact metric structure") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  AlmostContactStructure broken = make_structure(sm.manifold, Tensor({1, 1}, 3), 0);
  CHECK_THROWS_AS(compute_h_tensors(sm.manifold, broken), ContractError);
}

TEST_CASE("kenmotsu3 nullity fit is (-2, -2)") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CurvatureData curv = curvature(sm.manifold);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curv);
  REQUIRE(fit.kind == NullityFit::Kind::Fit);
  CHECK(fit.k == -2);
  REQUIRE(fit.mu.has_value());
  CHECK(*fit.mu == -2);

  // entrywise verification of the fitted condition over all frame pairs
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        Rational expect =
            fit.k * (sm.structure.eta({j}) * (l == i ? Rational(1) : Rational(0)) -
                     sm.structure.eta({i}) * (l == j ? Rational(1) : Rational(0))) +
            *fit.mu * (sm.structure.eta({j}) * ct.h_prime({l, i}) -
                       sm.structure.eta({i}) * ct.h_prime({l, j}));
        CHECK(curv.riemann({l, i, j, 0}) == expect);
      }
}

TEST_CASE("hyperbolic frame is the degenerate k = -1 case") {
  StructuredManifold sm = make_builtin("hyperbolic_kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curvature(sm.manifold));
  REQUIRE(fit.kind == NullityFit::Kind::KenmotsuDegenerate);
  CHECK(fit.k == -1);
  CHECK_FALSE(fit.mu.has_value());
}

TEST_CASE("flat frame fits k = 0 with the free mu zeroed") {
  StructuredManifold sm = make_builtin("abelian_flat3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curvature(sm.manifold));
  REQUIRE(fit.kind == NullityFit::Kind::Fit);
  CHECK(fit.k == 0);
  CHECK(*fit.mu == 0);
}

TEST_CASE("su2 frame fits k = 1") {
  StructuredManifold sm = make_builtin("su2_round3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curvature(sm.manifold));
  REQUIRE(fit.kind == NullityFit::Kind::Fit);
  CHECK(fit.k == 1);
  CHECK(*fit.mu == 0);
}

TEST_CASE("a frame outside every nullity class reports the first witness") {
  // Perturb kenmotsu3 by an extra [e1,e2] = e1 bracket; the curvature then
  // has R(.,.)reeb components that no (k, mu) pair satisfies.
  Rational z(0), neg(-1), one(1);
  FrameManifold man = make_frame_manifold(
      "twisted", 3, {{0, 1, {z, neg, neg}}, {0, 2, {z, neg, neg}}, {1, 2, {z, one, z}}});
  // Not a Lie algebra necessarily; nullity fitting only needs curvature data.
  StructuredManifold base = make_builtin("kenmotsu3");
  AlmostContactStructure acs = make_structure(man, base.structure.phi, 0);
  StructureReport srep = validate_structure(man, acs);
  REQUIRE(srep.almost_contact_metric());
  ContactTensors ct = compute_h_tensors(man, acs);
  NullityFit fit = fit_nullity(man, acs, ct, curvature(man));
  REQUIRE(fit.kind == NullityFit::Kind::NotNullity);
  REQUIRE(fit.witness.has_value());
  // Deterministic: lexicographically first failing (U, V, component) triple.
  NullityFit again = fit_nullity(man, acs, ct, curvature(man));
  CHECK(*again.witness == *fit.witness);
}

TEST_CASE("kmu identity family passes on kenmotsu3") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CurvatureData curv = curvature(sm.manifold);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curv);
  Vector killing = {Rational(0), Rational(1), Rational(-1)};
  std::vector<Vector> killing_fields = {killing};
  KmuIdentityReport rep =
      check_kmu_identities(sm.manifold, sm.structure, ct, curv, fit, killing_fields);

  CHECK(rep.square_identity == CheckStatus::Pass);
  CHECK(rep.mu_is_minus_two == CheckStatus::Pass);
  CHECK(rep.ricci_operator_form == CheckStatus::Pass);
  CHECK(rep.scalar_closed_form == CheckStatus::Pass);
  CHECK(rep.h_prime_derivative == CheckStatus::Pass);
  REQUIRE(rep.killing_traces.size() == 1);
  CHECK(rep.killing_traces[0].ok);
  CHECK(rep.all_passed());

  // spot values: h'^2 e1 = e1 = (k+1) phi^2 e1, Q e0 = -4 e0, r = 2m(k-2m)
  Tensor sq = compose_endo(ct.h_prime, ct.h_prime);
  CHECK(endo_column(sq, 1) == basis_vector(3, 1));
  CHECK(endo_column(curv.ricci_operator, 0) ==
        Vector{Rational(-4), Rational(0), Rational(0)});
  CHECK(curv.scalar == Rational(2) * (fit.k - 2));
}

TEST_CASE("kmu identity family on the degenerate hyperbolic case") {
  StructuredManifold sm = make_builtin("hyperbolic_kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CurvatureData curv = curvature(sm.manifold);
  NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curv);
  KmuIdentityReport rep = check_kmu_identities(sm.manifold, sm.structure, ct, curv, fit);
  CHECK(rep.square_identity == CheckStatus::Pass);           // both sides vanish
  CHECK(rep.mu_is_minus_two == CheckStatus::NotApplicable);  // mu indeterminate
  CHECK(rep.ricci_operator_form == CheckStatus::NotApplicable);  // k + 1 = 0
  CHECK(rep.scalar_closed_form == CheckStatus::Pass);        // r = -6 = 2(k-2)
  CHECK(rep.h_prime_derivative == CheckStatus::Pass);
  CHECK(rep.all_passed());
}

TEST_CASE("check_kmu_identities refuses a NotNullity fit") {
  StructuredManifold sm = make_builtin("kenmotsu3");
  ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
  CurvatureData curv = curvature(sm.manifold);
  NullityFit bad;
  bad.kind = NullityFit::Kind::NotNullity;
  CHECK_THROWS_AS(check_kmu_identities(sm.manifold, sm.structure, ct, curv, bad),
                  ContractError);
}

TEST_CASE("h vanishes exactly when the degenerate fit appears") {
  // h' = 0 <=> fitted k = -1 on the almost Kenmotsu builtins.
  for (const char* name : {"kenmotsu3", "hyperbolic_kenmotsu3"}) {
    StructuredManifold sm = make_builtin(name);
    ContactTensors ct = compute_h_tensors(sm.manifold, sm.structure);
    NullityFit fit = fit_nullity(sm.manifold, sm.structure, ct, curvature(sm.manifold));
    if (ct.h_prime.is_zero())
      CHECK(fit.k == -1);
    else
      CHECK(fit.k != -1);
  }
}

TEST_CASE("five-dimensional analogue carries the same structure") {
  // Two copies of the kenmotsu3 plane glued to one reeb direction:
  // [e0,e1] = [e0,e2] = -e1 - e2, [e0,e3] = [e0,e4] = -e3 - e4,
  // phi rotating each pair. Almost Kenmotsu with k = -2, mu = -2, m = 2.
  Rational z(0), neg(-1);
  FrameManifold man = make_frame_manifold("kenmotsu5", 5,
                                          {{0, 1, {z, neg, neg, z, z}},
                                           {0, 2, {z, neg, neg, z, z}},
                                           {0, 3, {z, z, z, neg, neg}},
                                           {0, 4, {z, z, z, neg, neg}}});
  REQUIRE(validate_frame(man).passed());
  Tensor phi({1, 1}, 5);
  phi({2, 1}) = 1;
  phi({1, 2}) = -1;
  phi({4, 3}) = 1;
  phi({3, 4}) = -1;
  AlmostContactStructure acs = make_structure(man, phi, 0);
  REQUIRE(validate_structure(man, acs).grade() == StructureGrade::AlmostKenmotsu);

  ContactTensors ct = compute_h_tensors(man, acs);
  CHECK(ct.all_identities());
  CHECK(ct.h_prime({2, 1}) == 1);
  CHECK(ct.h_prime({4, 3}) == 1);

  CurvatureData curv = curvature(man);
  CHECK(curv.ricci({0, 0}) == -8);  // 2mk at m = 2, k = -2
  CHECK(curv.scalar == -24);        // 2m(k - 2m)

  NullityFit fit = fit_nullity(man, acs, ct, curv);
  REQUIRE(fit.kind == NullityFit::Kind::Fit);
  CHECK(fit.k == -2);
  CHECK(*fit.mu == -2);

  std::vector<Vector> killing = solve_killing(man);
  CHECK(killing.size() == 2);
  CHECK(check_kmu_identities(man, acs, ct, curv, fit, killing).all_passed());
}

TEST_CASE("permuted reeb index gives the same invariants") {
  // kenmotsu3 with the frame listed as (f0, f1, reeb): [reeb, f0] =
  // [reeb, f1] = -f0 - f1, stored as [f0, reeb] = [f1, reeb] = f0 + f1.
  Rational z(0), one(1);
  FrameManifold man = make_frame_manifold(
      "kenmotsu3_permuted", 3, {{0, 2, {one, one, z}}, {1, 2, {one, one, z}}});
  REQUIRE(validate_frame(man).passed());
  Tensor phi({1, 1}, 3);  // phi f0 = f1, phi f1 = -f0, phi f2 = 0
  phi({1, 0}) = 1;
  phi({0, 1}) = -1;
  AlmostContactStructure acs = make_structure(man, phi, 2);
  REQUIRE(validate_structure(man, acs).grade() == StructureGrade::AlmostKenmotsu);
  ContactTensors ct = compute_h_tensors(man, acs);
  CurvatureData curv = curvature(man);
  NullityFit fit = fit_nullity(man, acs, ct, curv);
  REQUIRE(fit.kind == NullityFit::Kind::Fit);
  CHECK(fit.k == -2);
  CHECK(*fit.mu == -2);
  CHECK(curv.scalar == -8);
  CHECK(check_kmu_identities(man, acs, ct, curv, fit).all_passed());
}
