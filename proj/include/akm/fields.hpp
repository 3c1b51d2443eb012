#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akm/connection.hpp"
#include "akm/contact.hpp"
#include "akm/frame.hpp"
#include "akm/linear.hpp"

namespace akm {

/// Conformal / Killing / contact-transformation verdicts for one
/// constant-coefficient field. conformal_rho is present exactly when
/// L_X g = 2 rho g has a rational solution; contact_sigma is present exactly
/// when L_X eta = sigma eta does.
struct FieldClassification {
  Vector field;
  std::optional<Rational> conformal_rho;
  bool killing = false;     // conformal with rho = 0
  bool homothetic = false;  // conformal with constant rho (always, when conformal)
  std::optional<Rational> contact_sigma;
  bool strict_contact = false;  // sigma = 0
};

inline Tensor metric_tensor(const FrameManifold& man) {
  Tensor g({0, 2}, man.dim);
  for (int i = 0; i < man.dim; ++i)
    for (int j = 0; j < man.dim; ++j) g({i, j}) = man.metric[i][j];
  return g;
}

inline FieldClassification classify_field(const FrameManifold& man,
                                          const AlmostContactStructure& acs, const Vector& x) {
  if (static_cast<int>(x.size()) != man.dim)
    throw ShapeError("classify_field: field length does not match manifold dimension");
  const int n = man.dim;
  FieldClassification out;
  out.field = x;

  const Tensor lg = lie_derivative(man, x, metric_tensor(man));
  LinearSystemBuilder conformal(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      conformal.add_equation({Rational(2) * man.metric[i][j]}, lg({i, j}));
  if (conformal.consistent()) {
    out.conformal_rho = conformal.solution().particular[0];
    out.killing = *out.conformal_rho == 0;
    out.homothetic = true;
  }

  const Tensor leta = lie_derivative(man, x, acs.eta);
  LinearSystemBuilder contact(1);
  for (int i = 0; i < n; ++i) contact.add_equation({acs.eta({i})}, leta({i}));
  if (contact.consistent()) {
    out.contact_sigma = contact.solution().particular[0];
    out.strict_contact = *out.contact_sigma == 0;
  }
  return out;
}

namespace detail {

/// Coefficient of unknown x_a in (L_X g)(e_i, e_j) for X = sum_a x_a e_a:
/// g(D_{e_i} e_a, e_j) + g(e_i, D_{e_j} e_a).
inline Rational lie_metric_coefficient(const FrameManifold& man, const ConnectionData& conn,
                                       int a, int i, int j) {
  Rational v(0);
  for (int l = 0; l < man.dim; ++l) {
    v += conn.gamma({l, i, a}) * man.metric[l][j];
    v += conn.gamma({l, j, a}) * man.metric[i][l];
  }
  return v;
}

}  // namespace detail

/// Solves L_X g = 0 over constant-coefficient fields. Returns the
/// reduced-echelon basis of the solution space.
inline std::vector<Vector> solve_killing(const FrameManifold& man) {
  const int n = man.dim;
  const ConnectionData conn = connection(man);
  LinearSystemBuilder builder(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector row(n);
      for (int a = 0; a < n; ++a) row[a] = detail::lie_metric_coefficient(man, conn, a, i, j);
      builder.add_equation(row, Rational(0));
    }
  return builder.solution().nullspace;
}

/// Joint solution space of L_X g = 2 rho g in the unknowns
/// (field coefficients, rho). Each basis element carries its rho; the
/// Killing subspace is listed separately.
struct ConformalStratum {
  Vector field;
  Rational rho;
};

struct ConformalSpace {
  std::vector<ConformalStratum> basis;
  std::vector<Vector> killing_basis;

  /// True when some solution has rho != 0.
  bool has_nontrivial() const {
    for (const auto& s : basis)
      if (s.rho != 0) return true;
    return false;
  }
};

inline ConformalSpace solve_conformal(const FrameManifold& man) {
  const int n = man.dim;
  const ConnectionData conn = connection(man);
  LinearSystemBuilder builder(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector row(n + 1);
      for (int a = 0; a < n; ++a) row[a] = detail::lie_metric_coefficient(man, conn, a, i, j);
      row[n] = Rational(-2) * man.metric[i][j];
      builder.add_equation(row, Rational(0));
    }
  ConformalSpace out;
  for (const Vector& v : builder.solution().nullspace) {
    ConformalStratum s;
    s.field.assign(v.begin(), v.begin() + n);
    s.rho = v[n];
    out.basis.push_back(std::move(s));
  }
  out.killing_basis = solve_killing(man);
  return out;
}

/// Checks of the classical conformal-field consequences in their
/// constant-rho reduction: L_X D = 0, L_X R = 0, L_X S = 0, and rho r = 0.
/// The premise L_X g = 2 rho g is re-verified and reported rather than
/// assumed, so hypothetical (X, rho) pairs can be audited; every consequence
/// row is evaluated regardless of the premise.
struct ConsequenceReport {
  bool premise_ok = false;              // L_X g = 2 rho g
  bool connection_invariant_ok = false; // L_X D = 0
  bool curvature_invariant_ok = false;  // L_X R = 0
  bool ricci_invariant_ok = false;      // L_X S = 0
  bool rho_scalar_zero_ok = false;      // rho r = 0
  Rational rho_scalar;                  // the product rho * r

  bool all_passed() const {
    return premise_ok && connection_invariant_ok && curvature_invariant_ok &&
           ricci_invariant_ok && rho_scalar_zero_ok;
  }
};

inline ConsequenceReport verify_conformal_consequences(const FrameManifold& man,
                                                       const Vector& x, const Rational& rho) {
  if (static_cast<int>(x.size()) != man.dim)
    throw ShapeError("verify_conformal_consequences: field length mismatch");
  const int n = man.dim;
  ConsequenceReport rep;

  Tensor lg = lie_derivative(man, x, metric_tensor(man));
  rep.premise_ok = true;
  for (int i = 0; i < n && rep.premise_ok; ++i)
    for (int j = 0; j < n; ++j)
      if (lg({i, j}) != Rational(2) * rho * man.metric[i][j]) {
        rep.premise_ok = false;
        break;
      }

  const ConnectionData conn = connection(man);
  const CurvatureData curv = curvature(man, conn);
  rep.connection_invariant_ok = lie_derivative_connection(man, conn, x).is_zero();
  rep.curvature_invariant_ok = lie_derivative(man, x, curv.riemann).is_zero();
  rep.ricci_invariant_ok = lie_derivative(man, x, curv.ricci).is_zero();
  rep.rho_scalar = Rational(rho * curv.scalar);
  rep.rho_scalar_zero_ok = rep.rho_scalar == 0;
  return rep;
}

/// Branch-condition audit of the classification statements for conformal and
/// Killing fields. Each record reports whether the statement's hypothesis is
/// satisfiable over constant-coefficient fields (with a witness or a
/// refutation certificate) and the conclusion labels whose exact branch
/// conditions hold on this manifold: h = 0 ("Kenmotsu", warped product),
/// k = -1 (warped product), k = -2 (product-space isometry), L_X eta = 0
/// (strict infinitesimal contact transformation). Labels are keyed to the
/// branch conditions alone; no statement is asserted as an identity. The
/// structure-dependent labels are only meaningful on an almost Kenmotsu
/// structure and are suppressed on lower grades.
struct TheoremAudit {
  struct Record {
    bool hypothesis_satisfiable = false;
    std::string certificate;
    std::vector<std::string> labels;
  };

  Record reeb_conformal;       // hypothesis: the Reeb field is conformal
  Record collinear_conformal;  // hypothesis: b * reeb conformal, constant b != 0
  Record killing_general;      // hypothesis: a nonzero constant Killing field exists
  Record killing_non_kenmotsu; // same, on a non-Kenmotsu nullity manifold

  std::vector<Vector> killing_basis;
  std::vector<bool> killing_strict_contact;  // L_X eta = 0 per basis field
  std::optional<Rational> nullity_k;
  bool h_zero = false;
  bool h_prime_zero = false;
};

inline const char* label_kenmotsu() { return "Kenmotsu"; }
inline const char* label_warped_product() { return "warped product N' x_f M"; }
inline const char* label_product_space() { return "locally isometric to H^{m+1}(-4) x R^m"; }
inline const char* label_strict_contact() {
  return "strict infinitesimal contact transformation";
}

inline TheoremAudit theorem_audit(const FrameManifold& man, const AlmostContactStructure& acs,
                                  const ContactTensors& ct, const NullityFit& fit) {
  const int n = man.dim;
  const bool almost_kenmotsu =
      validate_structure(man, acs).grade() == StructureGrade::AlmostKenmotsu;
  TheoremAudit audit;
  audit.h_zero = ct.h.is_zero();
  audit.h_prime_zero = ct.h_prime.is_zero();
  if (fit.kind != NullityFit::Kind::NotNullity) audit.nullity_k = fit.k;

  // Reeb field as a conformal field, and constant multiples of it. For
  // constant b != 0, L_{b reeb} g = b L_reeb g, so satisfiability matches the
  // Reeb case with rho scaled by b.
  const FieldClassification reeb_class = classify_field(man, acs, reeb_vector(acs, n));
  audit.reeb_conformal.hypothesis_satisfiable = reeb_class.conformal_rho.has_value();
  audit.reeb_conformal.certificate =
      reeb_class.conformal_rho
          ? "reeb field is conformal with rho = " + to_string(*reeb_class.conformal_rho)
          : "L_reeb g is not proportional to g; vacuous on this manifold";
  audit.collinear_conformal.hypothesis_satisfiable =
      audit.reeb_conformal.hypothesis_satisfiable;
  audit.collinear_conformal.certificate =
      std::string("constant multiples scale rho; ") + audit.reeb_conformal.certificate;
  if (almost_kenmotsu && audit.h_zero) {
    for (auto* rec : {&audit.reeb_conformal, &audit.collinear_conformal}) {
      rec->labels.push_back(label_kenmotsu());
      rec->labels.push_back(label_warped_product());
    }
  }

  audit.killing_basis = solve_killing(man);
  for (const Vector& x : audit.killing_basis) {
    Tensor leta = lie_derivative(man, x, acs.eta);
    audit.killing_strict_contact.push_back(leta.is_zero());
  }

  const bool has_killing = !audit.killing_basis.empty();
  audit.killing_general.hypothesis_satisfiable = has_killing;
  audit.killing_general.certificate =
      has_killing ? "killing space has dimension " + std::to_string(audit.killing_basis.size())
                  : "only the zero field solves L_X g = 0 over constant coefficients";
  if (almost_kenmotsu && audit.nullity_k && *audit.nullity_k == -1)
    audit.killing_general.labels.push_back(label_warped_product());
  bool any_strict = false;
  for (bool s : audit.killing_strict_contact) any_strict = any_strict || s;
  if (any_strict) audit.killing_general.labels.push_back(label_strict_contact());

  const bool non_kenmotsu =
      almost_kenmotsu && audit.nullity_k.has_value() && !audit.h_prime_zero;
  audit.killing_non_kenmotsu.hypothesis_satisfiable = non_kenmotsu && has_killing;
  audit.killing_non_kenmotsu.certificate =
      non_kenmotsu ? audit.killing_general.certificate
                   : "h' = 0, so the manifold is not in the non-Kenmotsu class";
  if (non_kenmotsu) {
    if (*audit.nullity_k == -2)
      audit.killing_non_kenmotsu.labels.push_back(label_product_space());
    if (any_strict) audit.killing_non_kenmotsu.labels.push_back(label_strict_contact());
  }
  return audit;
}

}  // namespace akm
