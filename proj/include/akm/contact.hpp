#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akm/connection.hpp"
#include "akm/frame.hpp"

namespace akm {

/// Almost contact data on a frame manifold: the (1,1) tensor phi, the Reeb
/// field designated by frame index, and the 1-form eta derived from the
/// metric as eta(U) = g(U, reeb).
struct AlmostContactStructure {
  Tensor phi{{1, 1}, 1};
  int reeb_index = 0;
  Tensor eta{{0, 1}, 1};
};

inline AlmostContactStructure make_structure(const FrameManifold& man, Tensor phi,
                                             int reeb_index = 0) {
  if (!(phi.rank() == TensorRank{1, 1}) || phi.dim() != man.dim)
    throw ShapeError("phi must be a (1,1) tensor over the manifold frame");
  if (reeb_index < 0 || reeb_index >= man.dim)
    throw ShapeError("reeb index out of range");
  AlmostContactStructure acs;
  acs.phi = std::move(phi);
  acs.reeb_index = reeb_index;
  acs.eta = Tensor({0, 1}, man.dim);
  for (int i = 0; i < man.dim; ++i) acs.eta({i}) = man.metric[i][reeb_index];
  return acs;
}

/// Frame manifold together with its almost contact structure.
struct StructuredManifold {
  FrameManifold manifold;
  AlmostContactStructure structure;
};

inline Vector reeb_vector(const AlmostContactStructure& acs, int dim) {
  Vector v(dim, Rational(0));
  v[acs.reeb_index] = 1;
  return v;
}

/// Fundamental 2-form F(U,V) = g(U, phi V).
inline Tensor fundamental_two_form(const FrameManifold& man, const AlmostContactStructure& acs) {
  Tensor f({0, 2}, man.dim);
  for (int i = 0; i < man.dim; ++i)
    for (int j = 0; j < man.dim; ++j) {
      Rational v(0);
      for (int k = 0; k < man.dim; ++k) v += man.metric[i][k] * acs.phi({k, j});
      f({i, j}) = v;
    }
  return f;
}

enum class StructureGrade { NotAlmostContact, AlmostContactMetric, AlmostKenmotsu };

/// Axiom-by-axiom validation. The first five rows grade the data as an
/// almost contact metric structure; the last two upgrade it to almost
/// Kenmotsu (closed eta and d F = 2 eta ^ F).
struct StructureReport {
  bool phi_square_ok = false;              // phi^2 = -Id + eta (x) reeb
  std::optional<std::array<int, 2>> phi_square_witness;
  bool eta_unit_ok = false;                // eta(reeb) = 1
  bool metric_compatible_ok = false;       // g(phi U, phi V) = g(U,V) - eta(U)eta(V)
  std::optional<std::array<int, 2>> metric_compatible_witness;
  bool phi_reeb_zero_ok = false;           // phi(reeb) = 0
  bool eta_phi_zero_ok = false;            // eta o phi = 0
  bool eta_closed_ok = false;              // d eta = 0
  bool two_form_alternating_ok = false;
  bool kenmotsu_equation_ok = false;       // d F = 2 eta ^ F
  std::optional<std::array<int, 3>> kenmotsu_equation_witness;

  bool almost_contact_metric() const {
    return phi_square_ok && eta_unit_ok && metric_compatible_ok && phi_reeb_zero_ok &&
           eta_phi_zero_ok;
  }
  StructureGrade grade() const {
    if (!almost_contact_metric()) return StructureGrade::NotAlmostContact;
    if (eta_closed_ok && two_form_alternating_ok && kenmotsu_equation_ok)
      return StructureGrade::AlmostKenmotsu;
    return StructureGrade::AlmostContactMetric;
  }
};

inline StructureReport validate_structure(const FrameManifold& man,
                                          const AlmostContactStructure& acs) {
  const int n = man.dim;
  const int rb = acs.reeb_index;
  StructureReport rep;

  Tensor phi2 = compose_endo(acs.phi, acs.phi);
  rep.phi_square_ok = true;
  for (int i = 0; i < n && rep.phi_square_ok; ++i)
    for (int j = 0; j < n; ++j) {
      Rational expect = -(i == j ? Rational(1) : Rational(0)) +
                        (i == rb ? acs.eta({j}) : Rational(0));
      if (phi2({i, j}) != expect) {
        rep.phi_square_ok = false;
        rep.phi_square_witness = {i, j};
        break;
      }
    }

  rep.eta_unit_ok = acs.eta({rb}) == 1;

  rep.metric_compatible_ok = true;
  for (int i = 0; i < n && rep.metric_compatible_ok; ++i)
    for (int j = 0; j < n; ++j) {
      Rational lhs(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lhs += acs.phi({k, i}) * man.metric[k][l] * acs.phi({l, j});
      Rational rhs = man.metric[i][j] - acs.eta({i}) * acs.eta({j});
      if (lhs != rhs) {
        rep.metric_compatible_ok = false;
        rep.metric_compatible_witness = {i, j};
        break;
      }
    }

  rep.phi_reeb_zero_ok = true;
  for (int i = 0; i < n; ++i)
    if (acs.phi({i, rb}) != 0) {
      rep.phi_reeb_zero_ok = false;
      break;
    }

  rep.eta_phi_zero_ok = true;
  for (int j = 0; j < n; ++j) {
    Rational v(0);
    for (int i = 0; i < n; ++i) v += acs.eta({i}) * acs.phi({i, j});
    if (v != 0) {
      rep.eta_phi_zero_ok = false;
      break;
    }
  }

  rep.eta_closed_ok = exterior_derivative(man, acs.eta).is_zero();

  Tensor f = fundamental_two_form(man, acs);
  rep.two_form_alternating_ok = is_alternating(f);
  if (rep.two_form_alternating_ok) {
    Tensor lhs = exterior_derivative(man, f);
    Tensor rhs = Rational(2) * wedge_1_2(acs.eta, f);
    rep.kenmotsu_equation_ok = true;
    for (int i = 0; i < n && rep.kenmotsu_equation_ok; ++i)
      for (int j = 0; j < n && rep.kenmotsu_equation_ok; ++j)
        for (int k = 0; k < n; ++k)
          if (lhs({i, j, k}) != rhs({i, j, k})) {
            rep.kenmotsu_equation_ok = false;
            rep.kenmotsu_equation_witness = {i, j, k};
            break;
          }
  }
  return rep;
}

/// The tensors h = (1/2) L_reeb phi and h' = h o phi, with the standard
/// identity checks: anticommutation with phi, vanishing on the Reeb field,
/// tracelessness, and the Reeb covariant-derivative identity
/// D_U reeb = U - eta(U) reeb + h'U.
struct ContactTensors {
  Tensor h{{1, 1}, 1};
  Tensor h_prime{{1, 1}, 1};

  bool anticommute_ok = false;      // h phi + phi h = 0
  bool h_reeb_zero_ok = false;      // h(reeb) = 0
  bool h_prime_reeb_zero_ok = false;
  bool trace_h_zero_ok = false;
  bool trace_h_prime_zero_ok = false;
  bool reeb_derivative_ok = false;  // D_U reeb identity
  std::optional<std::array<int, 2>> reeb_derivative_witness;

  bool all_identities() const {
    return anticommute_ok && h_reeb_zero_ok && h_prime_reeb_zero_ok && trace_h_zero_ok &&
           trace_h_prime_zero_ok && reeb_derivative_ok;
  }
};

inline ContactTensors compute_h_tensors(const FrameManifold& man,
                                        const AlmostContactStructure& acs) {
  const StructureReport rep = validate_structure(man, acs);
  if (rep.grade() == StructureGrade::NotAlmostContact)
    throw ContractError("compute_h_tensors requires an almost contact metric structure");

  const int n = man.dim;
  const int rb = acs.reeb_index;
  ContactTensors ct;
  Vector reeb = reeb_vector(acs, n);
  ct.h = Rational(1, 2) * lie_derivative(man, reeb, acs.phi);
  ct.h_prime = compose_endo(ct.h, acs.phi);

  Tensor anti = compose_endo(ct.h, acs.phi) + compose_endo(acs.phi, ct.h);
  ct.anticommute_ok = anti.is_zero();

  ct.h_reeb_zero_ok = true;
  ct.h_prime_reeb_zero_ok = true;
  for (int i = 0; i < n; ++i) {
    if (ct.h({i, rb}) != 0) ct.h_reeb_zero_ok = false;
    if (ct.h_prime({i, rb}) != 0) ct.h_prime_reeb_zero_ok = false;
  }
  ct.trace_h_zero_ok = endo_trace(ct.h) == 0;
  ct.trace_h_prime_zero_ok = endo_trace(ct.h_prime) == 0;

  const ConnectionData conn = connection(man);
  ct.reeb_derivative_ok = true;
  for (int i = 0; i < n && ct.reeb_derivative_ok; ++i)
    for (int l = 0; l < n; ++l) {
      // coefficient of e_l in D_{e_i} reeb vs e_i - eta(e_i) reeb + h' e_i
      Rational lhs = conn.gamma({l, i, rb});
      Rational rhs = (l == i ? Rational(1) : Rational(0)) -
                     (l == rb ? acs.eta({i}) : Rational(0)) + ct.h_prime({l, i});
      if (lhs != rhs) {
        ct.reeb_derivative_ok = false;
        ct.reeb_derivative_witness = {l, i};
        break;
      }
    }
  return ct;
}

/// Result of fitting the nullity condition
/// R(U,V) reeb = k (eta(V)U - eta(U)V) + mu (eta(V)h'U - eta(U)h'V)
/// over all frame instances. Fit carries the unique (k, mu); when h' = 0 the
/// mu column vanishes, and a k = -1 fit is reported as KenmotsuDegenerate
/// with mu indeterminate. NotNullity carries the first failing component in
/// lexicographic (U, V, component) order.
struct NullityFit {
  enum class Kind { Fit, KenmotsuDegenerate, NotNullity };
  Kind kind = Kind::NotNullity;
  Rational k;
  std::optional<Rational> mu;
  std::optional<std::array<int, 3>> witness;
};

inline NullityFit fit_nullity(const FrameManifold& man, const AlmostContactStructure& acs,
                              const ContactTensors& ct, const CurvatureData& curv) {
  const int n = man.dim;
  const int rb = acs.reeb_index;
  LinearSystemBuilder builder(2);
  std::optional<std::array<int, 3>> witness;
  for (int i = 0; i < n && !witness; ++i)
    for (int j = 0; j < n && !witness; ++j)
      for (int l = 0; l < n; ++l) {
        Rational k_coeff = acs.eta({j}) * (l == i ? Rational(1) : Rational(0)) -
                           acs.eta({i}) * (l == j ? Rational(1) : Rational(0));
        Rational mu_coeff =
            acs.eta({j}) * ct.h_prime({l, i}) - acs.eta({i}) * ct.h_prime({l, j});
        if (!builder.add_equation({k_coeff, mu_coeff}, curv.riemann({l, i, j, rb}))) {
          witness = {i, j, l};
          break;
        }
      }

  NullityFit fit;
  if (witness) {
    fit.kind = NullityFit::Kind::NotNullity;
    fit.witness = witness;
    return fit;
  }
  const LinearSolution sol = builder.solution();
  fit.k = sol.particular[0];
  if (sol.kind == LinearSolution::Kind::Unique) {
    fit.kind = NullityFit::Kind::Fit;
    fit.mu = sol.particular[1];
  } else if (fit.k == -1) {
    fit.kind = NullityFit::Kind::KenmotsuDegenerate;
  } else {
    // mu unconstrained but k != -1; report the zeroed free variable.
    fit.kind = NullityFit::Kind::Fit;
    fit.mu = sol.particular[1];
  }
  return fit;
}

enum class CheckStatus { Pass, Fail, NotApplicable };

/// Identity family attached to a nullity fit: the square identity
/// h'^2 = (k+1) phi^2, mu = -2, the Ricci operator closed form
/// Q = -2m Id + 2m(k+1) eta (x) reeb - 2m h' (only meaningful for k+1 < 0),
/// the scalar closed form r = 2m(k-2m), the h' covariant-derivative
/// identity, and tr(L_X h') = 0 for each supplied Killing field.
struct KmuIdentityReport {
  CheckStatus square_identity = CheckStatus::Fail;
  CheckStatus mu_is_minus_two = CheckStatus::Fail;
  CheckStatus ricci_operator_form = CheckStatus::Fail;
  std::optional<std::array<int, 2>> ricci_operator_witness;
  CheckStatus scalar_closed_form = CheckStatus::Fail;
  CheckStatus h_prime_derivative = CheckStatus::Fail;
  std::optional<std::array<int, 3>> h_prime_derivative_witness;
  struct KillingTraceRow {
    Vector field;
    bool ok = false;
  };
  std::vector<KillingTraceRow> killing_traces;

  bool all_passed() const {
    auto ok = [](CheckStatus s) { return s != CheckStatus::Fail; };
    bool killing_ok = true;
    for (const auto& row : killing_traces) killing_ok = killing_ok && row.ok;
    return ok(square_identity) && ok(mu_is_minus_two) && ok(ricci_operator_form) &&
           ok(scalar_closed_form) && ok(h_prime_derivative) && killing_ok;
  }
};

inline KmuIdentityReport check_kmu_identities(const FrameManifold& man,
                                              const AlmostContactStructure& acs,
                                              const ContactTensors& ct,
                                              const CurvatureData& curv, const NullityFit& fit,
                                              std::span<const Vector> killing_fields = {}) {
  if (fit.kind == NullityFit::Kind::NotNullity)
    throw ContractError("check_kmu_identities requires a nullity fit");
  const int n = man.dim;
  const int rb = acs.reeb_index;
  const int m = man.half_rank();
  const Rational k = fit.k;
  KmuIdentityReport rep;

  Tensor lhs = compose_endo(ct.h_prime, ct.h_prime);
  Tensor rhs = (k + 1) * compose_endo(acs.phi, acs.phi);
  rep.square_identity = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;

  if (fit.mu.has_value())
    rep.mu_is_minus_two = *fit.mu == -2 ? CheckStatus::Pass : CheckStatus::Fail;
  else
    rep.mu_is_minus_two = CheckStatus::NotApplicable;

  if (k + 1 < 0) {
    rep.ricci_operator_form = CheckStatus::Pass;
    for (int i = 0; i < n && rep.ricci_operator_form == CheckStatus::Pass; ++i)
      for (int j = 0; j < n; ++j) {
        Rational expect = Rational(-2 * m) * (i == j ? Rational(1) : Rational(0)) +
                          Rational(2 * m) * (k + 1) *
                              (i == rb ? acs.eta({j}) : Rational(0)) -
                          Rational(2 * m) * ct.h_prime({i, j});
        if (curv.ricci_operator({i, j}) != expect) {
          rep.ricci_operator_form = CheckStatus::Fail;
          rep.ricci_operator_witness = {i, j};
          break;
        }
      }
  } else {
    rep.ricci_operator_form = CheckStatus::NotApplicable;
  }

  rep.scalar_closed_form = curv.scalar == Rational(2 * m) * (k - Rational(2 * m))
                               ? CheckStatus::Pass
                               : CheckStatus::Fail;

  const ConnectionData conn = connection(man);
  const Tensor dh = covariant_derivative_endo(conn, ct.h_prime);
  rep.h_prime_derivative = CheckStatus::Pass;
  for (int i = 0; i < n && rep.h_prime_derivative == CheckStatus::Pass; ++i)
    for (int j = 0; j < n && rep.h_prime_derivative == CheckStatus::Pass; ++j) {
      // (D_{e_i} h') e_j components: g((k+1)e_i - h'e_i, e_j) reeb
      //   + eta(e_j)((k+1)e_i - h'e_i) - 2(k+1) eta(e_i) eta(e_j) reeb
      Vector w(n, Rational(0));  // (k+1) e_i - h' e_i
      for (int l = 0; l < n; ++l)
        w[l] = (l == i ? k + 1 : Rational(0)) - ct.h_prime({l, i});
      Rational gw(0);
      for (int l = 0; l < n; ++l) gw += w[l] * man.metric[l][j];
      for (int l = 0; l < n; ++l) {
        Rational expect = (l == rb ? gw : Rational(0)) + acs.eta({j}) * w[l] -
                          (l == rb ? Rational(2) * (k + 1) * acs.eta({i}) * acs.eta({j})
                                   : Rational(0));
        if (dh({l, i, j}) != expect) {
          rep.h_prime_derivative = CheckStatus::Fail;
          rep.h_prime_derivative_witness = {l, i, j};
          break;
        }
      }
    }

  for (const Vector& x : killing_fields) {
    Tensor lx = lie_derivative(man, x, ct.h_prime);
    rep.killing_traces.push_back({x, endo_trace(lx) == 0});
  }
  return rep;
}

}  // namespace akm
