#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "akm/catalog.hpp"
#include "akm/connection.hpp"
#include "akm/contact.hpp"
#include "akm/fields.hpp"
#include "akm/report.hpp"
#include "akm/soliton.hpp"
#include "akm/spec_io.hpp"

namespace akm::cli {

/// Exit codes: 0 = all checks passed / analysis complete, 1 = a mathematical
/// check failed, 2 = usage or parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_math_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

using nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Vector parse_field_arg(const std::string& text, int dim) {
  Vector out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
  if (static_cast<int>(out.size()) != dim)
    throw ParseError("--field needs " + std::to_string(dim) +
                     " comma-separated rational coefficients");
  return out;
}

// ---- analysis bundle ------------------------------------------------------

struct Analysis {
  StructuredManifold sm;
  ValidationReport frame_report;
  StructureReport structure_report;
  StructureGrade grade = StructureGrade::NotAlmostContact;
  CurvatureData curv;
  std::optional<ContactTensors> ct;    // present when grade is at least ACM
  std::optional<NullityFit> fit;       // present when ct is
  std::vector<Vector> killing_basis;
  ConformalSpace conformal;
};

inline Analysis analyze(StructuredManifold sm) {
  Analysis a{std::move(sm), {}, {}, StructureGrade::NotAlmostContact, {}, {}, {}, {}, {}};
  a.frame_report = validate_frame(a.sm.manifold);
  a.structure_report = validate_structure(a.sm.manifold, a.sm.structure);
  a.grade = a.structure_report.grade();
  a.curv = curvature(a.sm.manifold);
  if (a.grade != StructureGrade::NotAlmostContact) {
    a.ct = compute_h_tensors(a.sm.manifold, a.sm.structure);
    a.fit = fit_nullity(a.sm.manifold, a.sm.structure, *a.ct, a.curv);
  }
  a.killing_basis = solve_killing(a.sm.manifold);
  a.conformal = solve_conformal(a.sm.manifold);
  return a;
}

// ---- json sections --------------------------------------------------------

inline ordered_json validate_json(const Analysis& a) {
  ordered_json j;
  j["name"] = a.sm.manifold.name;
  j["dimension"] = a.sm.manifold.dim;
  ordered_json frame;
  frame["antisymmetry"] = status_string(a.frame_report.antisymmetry_ok);
  frame["jacobi"] = status_string(a.frame_report.jacobi_ok);
  frame["metric_symmetric"] = status_string(a.frame_report.metric_symmetric_ok);
  frame["metric_positive_definite"] = status_string(a.frame_report.metric_spd_ok);
  frame["odd_dimension"] = status_string(a.frame_report.odd_dimension_ok);
  j["frame"] = frame;
  ordered_json st;
  st["phi_square"] = status_string(a.structure_report.phi_square_ok);
  st["unit_eta_on_reeb"] = status_string(a.structure_report.eta_unit_ok);
  st["metric_compatibility"] = status_string(a.structure_report.metric_compatible_ok);
  st["phi_kills_reeb"] = status_string(a.structure_report.phi_reeb_zero_ok);
  st["eta_kills_phi"] = status_string(a.structure_report.eta_phi_zero_ok);
  st["eta_closed"] = status_string(a.structure_report.eta_closed_ok);
  st["kenmotsu_two_form"] = status_string(a.structure_report.two_form_alternating_ok &&
                                          a.structure_report.kenmotsu_equation_ok);
  j["structure"] = st;
  j["grade"] = grade_json_string(a.grade);
  return j;
}

inline ordered_json curvature_json(const Analysis& a) {
  const int n = a.sm.manifold.dim;
  ordered_json j;
  ordered_json riem = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        Vector value(n, Rational(0));
        bool zero = true;
        for (int l = 0; l < n; ++l) {
          value[l] = a.curv.riemann({l, i, jj, k});
          zero = zero && value[l] == 0;
        }
        if (zero) continue;
        ordered_json entry;
        entry["i"] = i;
        entry["j"] = jj;
        entry["k"] = k;
        entry["value"] = vector_to_json(value);
        riem.push_back(entry);
      }
  j["riemann"] = riem;
  j["ricci"] = bilinear_to_json(a.curv.ricci);
  j["ricci_operator"] = endo_to_json(a.curv.ricci_operator);
  j["scalar"] = to_string(a.curv.scalar);
  return j;
}

inline ordered_json contact_json(const Analysis& a) {
  const ContactTensors& ct = *a.ct;
  ordered_json j;
  j["grade"] = grade_json_string(a.grade);
  j["h"] = endo_to_json(ct.h);
  j["h_prime"] = endo_to_json(ct.h_prime);
  ordered_json checks;
  checks["phi_anticommutation"] = status_string(ct.anticommute_ok);
  checks["h_kills_reeb"] = status_string(ct.h_reeb_zero_ok);
  checks["h_prime_kills_reeb"] = status_string(ct.h_prime_reeb_zero_ok);
  checks["h_traceless"] = status_string(ct.trace_h_zero_ok);
  checks["h_prime_traceless"] = status_string(ct.trace_h_prime_zero_ok);
  checks["reeb_covariant_derivative"] = status_string(ct.reeb_derivative_ok);
  j["checks"] = checks;
  return j;
}

inline ordered_json nullity_json(const NullityFit& fit) {
  ordered_json j;
  if (fit.kind == NullityFit::Kind::Fit) {
    j["k"] = to_string(fit.k);
    j["mu"] = to_string(*fit.mu);
  } else if (fit.kind == NullityFit::Kind::KenmotsuDegenerate) {
    j["kind"] = "kenmotsu_degenerate";
    j["k"] = to_string(fit.k);
  } else {
    j["kind"] = "not_nullity";
    ordered_json w;
    w["u"] = (*fit.witness)[0];
    w["v"] = (*fit.witness)[1];
    w["component"] = (*fit.witness)[2];
    j["witness"] = w;
  }
  return j;
}

inline ordered_json kmu_json(const KmuIdentityReport& rep) {
  ordered_json j;
  j["square_identity"] = status_string(rep.square_identity);
  j["mu_is_minus_two"] = status_string(rep.mu_is_minus_two);
  j["ricci_operator_form"] = status_string(rep.ricci_operator_form);
  j["scalar_closed_form"] = status_string(rep.scalar_closed_form);
  j["h_prime_derivative"] = status_string(rep.h_prime_derivative);
  ordered_json traces = ordered_json::array();
  for (const auto& row : rep.killing_traces) {
    ordered_json t;
    t["field"] = vector_to_json(row.field);
    t["status"] = status_string(row.ok);
    traces.push_back(t);
  }
  j["killing_traces"] = traces;
  return j;
}

inline ordered_json fields_json(const Analysis& a) {
  ordered_json j;
  ordered_json kb = ordered_json::array();
  for (const auto& x : a.killing_basis) kb.push_back(vector_to_json(x));
  j["killing_basis"] = kb;
  ordered_json cb = ordered_json::array();
  for (const auto& s : a.conformal.basis) {
    ordered_json entry;
    entry["field"] = vector_to_json(s.field);
    entry["rho"] = to_string(s.rho);
    cb.push_back(entry);
  }
  j["conformal_basis"] = cb;
  j["has_nontrivial_conformal"] = a.conformal.has_nontrivial();
  return j;
}

inline ordered_json classify_json(const FieldClassification& cls) {
  ordered_json j;
  j["field"] = vector_to_json(cls.field);
  j["conformal"] = cls.conformal_rho.has_value();
  if (cls.conformal_rho) j["rho"] = to_string(*cls.conformal_rho);
  j["killing"] = cls.killing;
  j["homothetic"] = cls.homothetic;
  j["contact_transformation"] = cls.contact_sigma.has_value();
  if (cls.contact_sigma) j["sigma"] = to_string(*cls.contact_sigma);
  j["strict_contact"] = cls.strict_contact;
  return j;
}

inline ordered_json consequences_json(const Vector& field, const Rational& rho,
                                      const ConsequenceReport& rep) {
  ordered_json j;
  j["field"] = vector_to_json(field);
  j["rho"] = to_string(rho);
  j["premise"] = status_string(rep.premise_ok);
  j["connection_invariant"] = status_string(rep.connection_invariant_ok);
  j["curvature_invariant"] = status_string(rep.curvature_invariant_ok);
  j["ricci_invariant"] = status_string(rep.ricci_invariant_ok);
  j["rho_times_scalar"] = to_string(rep.rho_scalar);
  j["rho_scalar_zero"] = status_string(rep.rho_scalar_zero_ok);
  return j;
}

inline ordered_json eta_einstein_json(const EtaEinsteinFit& fit) {
  ordered_json j;
  if (fit.kind == EtaEinsteinFit::Kind::NotEtaEinstein) {
    j["kind"] = "not_eta_einstein";
    ordered_json w;
    w["u"] = (*fit.witness)[0];
    w["v"] = (*fit.witness)[1];
    j["witness"] = w;
  } else {
    j["kind"] = fit.kind == EtaEinsteinFit::Kind::Einstein ? "einstein" : "eta_einstein";
    j["a1"] = to_string(fit.a1);
    j["b1"] = to_string(fit.b1);
  }
  return j;
}

inline ordered_json audit_record_json(const TheoremAudit::Record& rec) {
  ordered_json j;
  j["hypothesis_satisfiable"] = rec.hypothesis_satisfiable;
  j["certificate"] = rec.certificate;
  j["labels"] = rec.labels;
  return j;
}

inline ordered_json audit_json(const TheoremAudit& audit) {
  ordered_json j;
  j["reeb_conformal"] = audit_record_json(audit.reeb_conformal);
  j["collinear_conformal"] = audit_record_json(audit.collinear_conformal);
  j["killing_general"] = audit_record_json(audit.killing_general);
  j["killing_non_kenmotsu"] = audit_record_json(audit.killing_non_kenmotsu);
  ordered_json kb = ordered_json::array();
  for (const auto& x : audit.killing_basis) kb.push_back(vector_to_json(x));
  j["killing_basis"] = kb;
  j["killing_strict_contact"] = audit.killing_strict_contact;
  j["nullity_k"] = audit.nullity_k ? ordered_json(to_string(*audit.nullity_k))
                                   : ordered_json(nullptr);
  j["h_zero"] = audit.h_zero;
  j["h_prime_zero"] = audit.h_prime_zero;
  return j;
}

inline ordered_json soliton_json(const Analysis& a, const Vector& field,
                                 const SolitonParams& params, const SolitonSolution& sol) {
  ordered_json j;
  j["field"] = vector_to_json(field);
  j["alpha1"] = to_string(params.alpha1);
  j["beta1"] = to_string(params.beta1);
  j["rho"] = to_string(sol.rho);
  j["lambda1"] = to_string(sol.lambda1);
  j["nu1"] = to_string(sol.nu1);
  auto projection = [](const ProjectedEquation& eq) {
    ordered_json p;
    p["lambda_coeff"] = to_string(eq.lambda_coeff);
    p["nu_coeff"] = to_string(eq.nu_coeff);
    p["rhs"] = to_string(eq.rhs);
    return p;
  };
  j["reeb_projection"] = projection(sol.reeb_equation);
  j["trace_projection"] = projection(sol.trace_equation);
  j["exact"] = sol.exact;
  j["residual"] = bilinear_to_json(sol.full_residual);
  if (a.fit && a.fit->kind != NullityFit::Kind::NotNullity) {
    auto [lam, nu] = predict_constants(a.sm.manifold.half_rank(), a.fit->k, params, sol.rho);
    ordered_json p;
    p["m"] = a.sm.manifold.half_rank();
    p["k"] = to_string(a.fit->k);
    p["lambda1"] = to_string(lam);
    p["nu1"] = to_string(nu);
    p["agrees"] = lam == sol.lambda1 && nu == sol.nu1;
    j["prediction"] = p;
  }
  return j;
}

// ---- text sections --------------------------------------------------------

inline void validate_text(std::ostream& out, const Analysis& a) {
  out << "manifold: " << a.sm.manifold.name << " (dimension " << a.sm.manifold.dim << ")\n";
  out << "frame checks\n";
  out << "  " << status_line(a.frame_report.antisymmetry_ok) << " bracket antisymmetry\n";
  out << "  " << status_line(a.frame_report.jacobi_ok) << " jacobi identity";
  if (a.frame_report.jacobi_witness) {
    const auto& w = *a.frame_report.jacobi_witness;
    out << "  (fails at triple " << w[0] << "," << w[1] << "," << w[2] << ")";
  }
  out << "\n";
  out << "  " << status_line(a.frame_report.metric_symmetric_ok) << " metric symmetric\n";
  out << "  " << status_line(a.frame_report.metric_spd_ok) << " metric positive definite\n";
  out << "  " << status_line(a.frame_report.odd_dimension_ok) << " odd dimension\n";
  out << "structure checks\n";
  out << "  " << status_line(a.structure_report.phi_square_ok) << " phi square identity\n";
  out << "  " << status_line(a.structure_report.eta_unit_ok) << " unit eta on reeb\n";
  out << "  " << status_line(a.structure_report.metric_compatible_ok)
      << " phi metric compatibility\n";
  out << "  " << status_line(a.structure_report.phi_reeb_zero_ok) << " phi kills reeb\n";
  out << "  " << status_line(a.structure_report.eta_phi_zero_ok) << " eta kills phi\n";
  out << "  " << status_line(a.structure_report.eta_closed_ok) << " eta closed\n";
  out << "  "
      << status_line(a.structure_report.two_form_alternating_ok &&
                     a.structure_report.kenmotsu_equation_ok)
      << " kenmotsu two-form equation\n";
  out << "grade: " << grade_text_string(a.grade) << "\n";
}

inline void curvature_text(std::ostream& out, const Analysis& a) {
  const auto& labels = a.sm.manifold.frame_labels;
  const int n = a.sm.manifold.dim;
  out << "curvature of " << a.sm.manifold.name << "\n";
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector value(n, Rational(0));
        bool zero = true;
        for (int l = 0; l < n; ++l) {
          value[l] = a.curv.riemann({l, i, j, k});
          zero = zero && value[l] == 0;
        }
        if (zero) continue;
        any = true;
        out << "  R(" << labels[i] << "," << labels[j] << ")" << labels[k] << " = "
            << combo_string(value, labels) << "\n";
      }
  if (!any) out << "  flat: R = 0\n";
  out << "ricci tensor rows\n";
  for (int i = 0; i < n; ++i) {
    Vector row(n);
    for (int j = 0; j < n; ++j) row[j] = a.curv.ricci({i, j});
    out << "  " << tuple_string(row) << "\n";
  }
  out << "scalar curvature: " << to_string(a.curv.scalar) << "\n";
}

inline void contact_text(std::ostream& out, const Analysis& a) {
  const ContactTensors& ct = *a.ct;
  const auto& labels = a.sm.manifold.frame_labels;
  const int n = a.sm.manifold.dim;
  out << "contact tensors of " << a.sm.manifold.name << "\n";
  for (int j = 0; j < n; ++j) {
    Vector hcol(n), hpcol(n);
    for (int l = 0; l < n; ++l) {
      hcol[l] = ct.h({l, j});
      hpcol[l] = ct.h_prime({l, j});
    }
    out << "  h(" << labels[j] << ") = " << combo_string(hcol, labels) << ", h'("
        << labels[j] << ") = " << combo_string(hpcol, labels) << "\n";
  }
  out << "  " << status_line(ct.anticommute_ok) << " h phi + phi h = 0\n";
  out << "  " << status_line(ct.h_reeb_zero_ok) << " h kills reeb\n";
  out << "  " << status_line(ct.h_prime_reeb_zero_ok) << " h' kills reeb\n";
  out << "  " << status_line(ct.trace_h_zero_ok) << " tr h = 0\n";
  out << "  " << status_line(ct.trace_h_prime_zero_ok) << " tr h' = 0\n";
  out << "  " << status_line(ct.reeb_derivative_ok)
      << " D_U reeb = U - eta(U) reeb + h'U\n";
}

inline void nullity_text(std::ostream& out, const NullityFit& fit) {
  if (fit.kind == NullityFit::Kind::Fit) {
    out << "nullity fit: k = " << to_string(fit.k) << ", mu = " << to_string(*fit.mu) << "\n";
  } else if (fit.kind == NullityFit::Kind::KenmotsuDegenerate) {
    out << "nullity fit: kenmotsu degenerate, k = " << to_string(fit.k)
        << ", mu indeterminate (h' = 0)\n";
  } else {
    const auto& w = *fit.witness;
    out << "not a nullity manifold; first failing component (U,V,component) = (" << w[0]
        << "," << w[1] << "," << w[2] << ")\n";
  }
}

inline void kmu_text(std::ostream& out, const KmuIdentityReport& rep) {
  out << "nullity identity family\n";
  out << "  " << status_line(rep.square_identity) << " h'^2 = (k+1) phi^2\n";
  out << "  " << status_line(rep.mu_is_minus_two) << " mu = -2\n";
  out << "  " << status_line(rep.ricci_operator_form)
      << " Q = -2m Id + 2m(k+1) eta(x)reeb - 2m h'\n";
  out << "  " << status_line(rep.scalar_closed_form) << " r = 2m(k - 2m)\n";
  out << "  " << status_line(rep.h_prime_derivative) << " covariant derivative of h'\n";
  for (const auto& row : rep.killing_traces)
    out << "  " << status_line(row.ok) << " tr(L_X h') = 0 for X = " << tuple_string(row.field)
        << "\n";
}

inline void fields_text(std::ostream& out, const Analysis& a) {
  const auto& labels = a.sm.manifold.frame_labels;
  out << "killing fields of " << a.sm.manifold.name << "\n";
  if (a.killing_basis.empty()) {
    out << "  none (only the zero field)\n";
  } else {
    for (const auto& x : a.killing_basis)
      out << "  X = " << combo_string(x, labels) << "\n";
  }
  out << "conformal fields\n";
  if (a.conformal.basis.empty()) {
    out << "  none (only the zero field)\n";
  } else {
    for (const auto& s : a.conformal.basis)
      out << "  X = " << combo_string(s.field, labels) << ", rho = " << to_string(s.rho)
          << "\n";
  }
  out << (a.conformal.has_nontrivial() ? "  nontrivial conformal fields exist\n"
                                       : "  no nontrivial conformal fields\n");
}

inline void classify_text(std::ostream& out, const Analysis& a,
                          const FieldClassification& cls) {
  out << "classification of X = " << combo_string(cls.field, a.sm.manifold.frame_labels)
      << " on " << a.sm.manifold.name << "\n";
  if (cls.conformal_rho) {
    out << "  conformal: yes, rho = " << to_string(*cls.conformal_rho)
        << (cls.killing ? " (killing)" : " (homothetic)") << "\n";
  } else {
    out << "  conformal: no (not a conformal vector field)\n";
  }
  if (cls.contact_sigma) {
    out << "  contact transformation: yes, sigma = " << to_string(*cls.contact_sigma)
        << (cls.strict_contact ? " (strict)" : "") << "\n";
  } else {
    out << "  contact transformation: no\n";
  }
}

inline void consequences_text(std::ostream& out, const Analysis& a, const Vector& field,
                              const Rational& rho, const ConsequenceReport& rep) {
  out << "conformal consequence checks for X = "
      << combo_string(field, a.sm.manifold.frame_labels) << ", rho = " << to_string(rho)
      << "\n";
  out << "  " << status_line(rep.premise_ok) << " L_X g = 2 rho g\n";
  out << "  " << status_line(rep.connection_invariant_ok) << " L_X D = 0\n";
  out << "  " << status_line(rep.curvature_invariant_ok) << " L_X R = 0\n";
  out << "  " << status_line(rep.ricci_invariant_ok) << " L_X S = 0\n";
  out << "  " << status_line(rep.rho_scalar_zero_ok)
      << " rho r = " << to_string(rep.rho_scalar) << "\n";
}

inline void eta_einstein_text(std::ostream& out, const EtaEinsteinFit& fit) {
  if (fit.kind == EtaEinsteinFit::Kind::NotEtaEinstein) {
    const auto& w = *fit.witness;
    out << "eta-einstein: no fit; witness component (" << w[0] << "," << w[1] << ")\n";
  } else if (fit.kind == EtaEinsteinFit::Kind::Einstein) {
    out << "eta-einstein: einstein with a1 = " << to_string(fit.a1) << "\n";
  } else {
    out << "eta-einstein: S = a1 g + b1 eta(x)eta with a1 = " << to_string(fit.a1)
        << ", b1 = " << to_string(fit.b1) << "\n";
  }
}

inline void audit_text(std::ostream& out, const Analysis& a, const TheoremAudit& audit) {
  auto record = [&](const char* title, const TheoremAudit::Record& rec) {
    out << title << "\n";
    out << "  hypothesis satisfiable: " << (rec.hypothesis_satisfiable ? "yes" : "no") << "\n";
    out << "  " << rec.certificate << "\n";
    if (rec.labels.empty()) {
      out << "  labels: none\n";
    } else {
      out << "  labels:\n";
      for (const auto& l : rec.labels) out << "    - " << l << "\n";
    }
  };
  out << "theorem audit for " << a.sm.manifold.name << "\n";
  record("reeb field conformal", audit.reeb_conformal);
  record("collinear field conformal", audit.collinear_conformal);
  record("killing field on a nullity manifold", audit.killing_general);
  record("killing field on a non-kenmotsu nullity manifold", audit.killing_non_kenmotsu);
  out << "data: k = " << (audit.nullity_k ? to_string(*audit.nullity_k) : "(no fit)")
      << ", h = 0: " << (audit.h_zero ? "yes" : "no")
      << ", h' = 0: " << (audit.h_prime_zero ? "yes" : "no") << "\n";
}

inline void soliton_text(std::ostream& out, const Analysis& a, const Vector& field,
                         const SolitonParams& params, const SolitonSolution& sol) {
  const auto& labels = a.sm.manifold.frame_labels;
  out << "soliton solve on " << a.sm.manifold.name << " with X = "
      << combo_string(field, labels) << ", alpha1 = " << to_string(params.alpha1)
      << ", beta1 = " << to_string(params.beta1) << "\n";
  out << "  rho = " << to_string(sol.rho) << "\n";
  out << "  lambda1 = " << to_string(sol.lambda1) << ", nu1 = " << to_string(sol.nu1) << "\n";
  if (a.fit && a.fit->kind != NullityFit::Kind::NotNullity) {
    auto [lam, nu] = predict_constants(a.sm.manifold.half_rank(), a.fit->k, params, sol.rho);
    out << "  closed form at m = " << a.sm.manifold.half_rank()
        << ", k = " << to_string(a.fit->k) << ": lambda1 = " << to_string(lam)
        << ", nu1 = " << to_string(nu)
        << ((lam == sol.lambda1 && nu == sol.nu1) ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  out << "  projected equations satisfied exactly\n";
  if (sol.exact) {
    out << "  full tensor equation satisfied exactly\n";
  } else {
    const int n = a.sm.manifold.dim;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sol.full_residual({i, j}) != 0) {
          out << "  full tensor equation NOT satisfied: residual(" << labels[i] << ","
              << labels[j] << ") = " << to_string(sol.full_residual({i, j})) << "\n";
          return;
        }
  }
}

// ---- command drivers ------------------------------------------------------

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

inline void emit(std::ostream& out, const Options& opt, const ordered_json& j,
                 const std::function<void(std::ostream&)>& text) {
  if (opt.json())
    out << j.dump() << "\n";
  else
    text(out);
}

inline int cmd_validate(std::ostream& out, const Options& opt, const std::string& bytes) {
  // Renders the frame report even when validation fails, instead of
  // propagating the parse-level exception.
  try {
    Analysis a = analyze(parse_manifold_spec(bytes));
    emit(out, opt, validate_json(a), [&](std::ostream& o) { validate_text(o, a); });
    return a.frame_report.passed() && a.grade != StructureGrade::NotAlmostContact
               ? exit_ok
               : exit_math_failure;
  } catch (const SpecValidationError& e) {
    if (opt.json()) {
      ordered_json j;
      ordered_json frame;
      frame["antisymmetry"] = status_string(e.report.antisymmetry_ok);
      frame["jacobi"] = status_string(e.report.jacobi_ok);
      frame["metric_symmetric"] = status_string(e.report.metric_symmetric_ok);
      frame["metric_positive_definite"] = status_string(e.report.metric_spd_ok);
      frame["odd_dimension"] = status_string(e.report.odd_dimension_ok);
      j["frame"] = frame;
      j["error"] = e.what();
      out << j.dump() << "\n";
    } else {
      out << "frame validation failed\n";
      out << "  " << status_line(e.report.antisymmetry_ok) << " bracket antisymmetry\n";
      out << "  " << status_line(e.report.jacobi_ok) << " jacobi identity\n";
      out << "  " << status_line(e.report.metric_symmetric_ok) << " metric symmetric\n";
      out << "  " << status_line(e.report.metric_spd_ok) << " metric positive definite\n";
      out << "  " << status_line(e.report.odd_dimension_ok) << " odd dimension\n";
    }
    return exit_math_failure;
  }
}

inline int cmd_curvature(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  emit(out, opt, curvature_json(a), [&](std::ostream& o) { curvature_text(o, a); });
  return exit_ok;
}

inline int cmd_contact(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  if (!a.ct)
    throw ContractError("contact tensors require an almost contact metric structure; grade is " +
                        std::string(grade_text_string(a.grade)));
  emit(out, opt, contact_json(a), [&](std::ostream& o) { contact_text(o, a); });
  return a.ct->all_identities() ? exit_ok : exit_math_failure;
}

inline int cmd_nullity(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  if (!a.fit)
    throw ContractError("nullity fitting requires an almost contact metric structure; grade is " +
                        std::string(grade_text_string(a.grade)));
  emit(out, opt, nullity_json(*a.fit),
       [&](std::ostream& o) { nullity_text(o, *a.fit); });
  return a.fit->kind != NullityFit::Kind::NotNullity ? exit_ok : exit_math_failure;
}

inline int cmd_fields(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  emit(out, opt, fields_json(a), [&](std::ostream& o) { fields_text(o, a); });
  return exit_ok;
}

inline int cmd_classify(std::ostream& out, const Options& opt, const std::string& bytes,
                        const std::string& field_text) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  Vector x = parse_field_arg(field_text, a.sm.manifold.dim);
  FieldClassification cls = classify_field(a.sm.manifold, a.sm.structure, x);
  emit(out, opt, classify_json(cls), [&](std::ostream& o) { classify_text(o, a, cls); });
  return exit_ok;
}

inline int cmd_soliton(std::ostream& out, const Options& opt, const std::string& bytes,
                       const std::string& alpha_text, const std::string& beta_text,
                       const std::optional<std::string>& field_text) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  SolitonParams params{parse_rational(alpha_text), parse_rational(beta_text)};
  Vector x(a.sm.manifold.dim, Rational(0));
  if (field_text)
    x = parse_field_arg(*field_text, a.sm.manifold.dim);
  else if (!a.killing_basis.empty())
    x = a.killing_basis.front();
  SolitonSolution sol = solve_soliton(a.sm.manifold, a.sm.structure, a.curv, x, params);
  emit(out, opt, soliton_json(a, x, params, sol),
       [&](std::ostream& o) { soliton_text(o, a, x, params, sol); });
  return exit_ok;
}

inline int cmd_audit(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  if (!a.ct || !a.fit)
    throw ContractError("the audit requires an almost contact metric structure; grade is " +
                        std::string(grade_text_string(a.grade)));
  TheoremAudit audit = theorem_audit(a.sm.manifold, a.sm.structure, *a.ct, *a.fit);
  emit(out, opt, audit_json(audit), [&](std::ostream& o) { audit_text(o, a, audit); });
  return exit_ok;
}

inline int cmd_all(std::ostream& out, const Options& opt, const std::string& bytes) {
  Analysis a = analyze(parse_manifold_spec(bytes));
  bool ok = a.frame_report.passed() && a.grade != StructureGrade::NotAlmostContact;

  ordered_json j;
  j["name"] = a.sm.manifold.name;
  j["validate"] = validate_json(a);
  j["curvature"] = curvature_json(a);

  std::optional<KmuIdentityReport> kmu;
  std::optional<TheoremAudit> audit;
  std::vector<std::pair<Vector, ConsequenceReport>> consequences;
  for (const Vector& x : a.killing_basis)
    consequences.emplace_back(x,
                              verify_conformal_consequences(a.sm.manifold, x, Rational(0)));

  if (a.ct) {
    j["contact"] = contact_json(a);
    ok = ok && a.ct->all_identities();
    j["nullity"] = nullity_json(*a.fit);
    ok = ok && a.fit->kind != NullityFit::Kind::NotNullity;
    if (a.grade == StructureGrade::AlmostKenmotsu &&
        a.fit->kind != NullityFit::Kind::NotNullity) {
      kmu = check_kmu_identities(a.sm.manifold, a.sm.structure, *a.ct, a.curv, *a.fit,
                                 a.killing_basis);
      j["kmu_identities"] = kmu_json(*kmu);
      ok = ok && kmu->all_passed();
    } else {
      j["kmu_identities"] = {{"skipped", "requires an almost Kenmotsu structure"}};
    }
    audit = theorem_audit(a.sm.manifold, a.sm.structure, *a.ct, *a.fit);
  } else {
    j["contact"] = {{"skipped", "not an almost contact metric structure"}};
    j["nullity"] = {{"skipped", "not an almost contact metric structure"}};
    j["kmu_identities"] = {{"skipped", "not an almost contact metric structure"}};
  }

  j["fields"] = fields_json(a);
  ordered_json cons = ordered_json::array();
  for (const auto& [x, rep] : consequences) {
    cons.push_back(consequences_json(x, Rational(0), rep));
    ok = ok && rep.all_passed();
  }
  j["killing_consequences"] = cons;

  EtaEinsteinFit einstein = eta_einstein_classify(a.sm.manifold, a.curv, a.sm.structure);
  j["eta_einstein"] = eta_einstein_json(einstein);

  if (audit)
    j["audit"] = audit_json(*audit);
  else
    j["audit"] = {{"skipped", "not an almost contact metric structure"}};

  j["passed"] = ok;

  if (opt.json()) {
    out << j.dump() << "\n";
  } else {
    validate_text(out, a);
    out << "\n";
    curvature_text(out, a);
    out << "\n";
    if (a.ct) {
      contact_text(out, a);
      out << "\n";
      nullity_text(out, *a.fit);
      if (kmu) kmu_text(out, *kmu);
      out << "\n";
    } else {
      out << "contact, nullity and identity sections skipped: not an almost contact"
             " metric structure\n\n";
    }
    fields_text(out, a);
    out << "\n";
    for (const auto& [x, rep] : consequences) consequences_text(out, a, x, Rational(0), rep);
    if (!consequences.empty()) out << "\n";
    eta_einstein_text(out, einstein);
    if (audit) {
      out << "\n";
      audit_text(out, a, *audit);
    }
    out << "\noverall: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? exit_ok : exit_math_failure;
}

}  // namespace detail

/// Runs one CLI invocation (argv without the program name). Reports go to
/// `out`, errors to `err`; the return value is the process exit code.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact curvature and almost-Kenmotsu structure analysis on constant frames"};
  app.name("akm");
  app.require_subcommand(1);
  app.fallthrough(true);

  detail::Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string spec_path;
  std::string field_text;
  std::string alpha_text, beta_text;
  std::string example_name;
  bool emit_flag = false;

  CLI::App* validate = app.add_subcommand("validate", "frame and structure checks");
  validate->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* curvature_cmd = app.add_subcommand("curvature", "curvature, ricci and scalar");
  curvature_cmd->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* contact_cmd = app.add_subcommand("contact", "h tensors and identities");
  contact_cmd->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* nullity_cmd = app.add_subcommand("nullity", "fit the nullity constants (k, mu)");
  nullity_cmd->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* fields_cmd = app.add_subcommand("fields", "killing and conformal field solvers");
  fields_cmd->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify one constant field");
  classify_cmd->add_option("spec", spec_path, "manifold document")->required();
  classify_cmd->add_option("--field", field_text, "frame coefficients, e.g. \"0,1,-1\"")
      ->required();
  CLI::App* soliton_cmd = app.add_subcommand("soliton", "solve the soliton constants");
  soliton_cmd->add_option("spec", spec_path, "manifold document")->required();
  soliton_cmd->add_option("--alpha", alpha_text, "alpha1 selector")->required();
  soliton_cmd->add_option("--beta", beta_text, "beta1 selector")->required();
  CLI::Option* soliton_field =
      soliton_cmd->add_option("--field", field_text, "conformal field (default: first killing field)");
  CLI::App* audit_cmd = app.add_subcommand("audit", "theorem hypothesis and branch audit");
  audit_cmd->add_option("spec", spec_path, "manifold document")->required();
  CLI::App* example_cmd = app.add_subcommand("example", "bundled example manifolds");
  example_cmd->add_option("name", example_name, "one of the bundled example names")->required();
  example_cmd->add_flag("--emit", emit_flag, "print the document instead of analyzing it");
  CLI::App* all_cmd = app.add_subcommand("all", "every analysis in one report");
  all_cmd->add_option("spec", spec_path, "manifold document")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (app.got_subcommand(validate))
      return detail::cmd_validate(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(curvature_cmd))
      return detail::cmd_curvature(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(contact_cmd))
      return detail::cmd_contact(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(nullity_cmd))
      return detail::cmd_nullity(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(fields_cmd))
      return detail::cmd_fields(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(classify_cmd))
      return detail::cmd_classify(out, opt, detail::read_file(spec_path), field_text);
    if (app.got_subcommand(soliton_cmd))
      return detail::cmd_soliton(out, opt, detail::read_file(spec_path), alpha_text, beta_text,
                                 soliton_field->count() ? std::optional(field_text)
                                                        : std::nullopt);
    if (app.got_subcommand(audit_cmd))
      return detail::cmd_audit(out, opt, detail::read_file(spec_path));
    if (app.got_subcommand(example_cmd)) {
      bool known = false;
      for (const auto& n : builtin_names()) known = known || n == example_name;
      if (!known) {
        err << "unknown example '" << example_name << "'; available:";
        for (const auto& n : builtin_names()) err << " " << n;
        err << "\n";
        return exit_usage;
      }
      if (emit_flag) {
        out << emit_builtin_example(example_name);
        return exit_ok;
      }
      return detail::cmd_all(out, opt, emit_builtin_example(example_name));
    }
    if (app.got_subcommand(all_cmd))
      return detail::cmd_all(out, opt, detail::read_file(spec_path));
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const SpecValidationError& e) {
    err << e.what() << "\n";
    return exit_math_failure;
  } catch (const ContractError& e) {
    err << e.what() << "\n";
    return exit_math_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace akm::cli
