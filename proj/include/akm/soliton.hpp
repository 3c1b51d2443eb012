#pragma once

#include <array>
#include <optional>
#include <utility>

#include "akm/connection.hpp"
#include "akm/contact.hpp"
#include "akm/fields.hpp"
#include "akm/frame.hpp"
#include "akm/linear.hpp"

namespace akm {

/// Type selectors of the soliton equation
/// L_X g + 2 a1 S + (2 l1 - b1 r) g + 2 n1 eta (x) eta = 0.
/// (1, 0) is the eta-Ricci case, (0, 1) eta-Yamabe, (1, -1) eta-Einstein.
struct SolitonParams {
  Rational alpha1;
  Rational beta1;
};

/// One scalar projection of the soliton equation, as coefficients of the
/// unknowns (lambda1, nu1) and a right-hand side.
struct ProjectedEquation {
  Rational lambda_coeff;
  Rational nu_coeff;
  Rational rhs;
};

/// Constants solved from the two projections the derivation uses (the
/// Reeb-Reeb component and the full metric trace), together with the full
/// tensor residual of the unprojected equation. `exact` records whether the
/// residual vanishes identically; the projections themselves are satisfied
/// by construction.
struct SolitonSolution {
  Rational lambda1;
  Rational nu1;
  Rational rho;
  ProjectedEquation reeb_equation;
  ProjectedEquation trace_equation;
  Tensor full_residual{{0, 2}, 1};
  bool exact = false;
};

inline SolitonSolution solve_soliton(const FrameManifold& man,
                                     const AlmostContactStructure& acs,
                                     const CurvatureData& curv, const Vector& x,
                                     const SolitonParams& p) {
  const int n = man.dim;
  const FieldClassification cls = classify_field(man, acs, x);
  if (!cls.conformal_rho.has_value())
    throw ContractError(
        "solve_soliton requires a conformal field, but L_X g is not proportional to g"
        " (killing = false, conformal rho absent)");
  SolitonSolution out;
  out.rho = *cls.conformal_rho;

  const Rational r = curv.scalar;
  const int rb = acs.reeb_index;

  // Substituting L_X g = 2 rho g turns the equation into
  //   rho g + a1 S + (l1 - b1 r / 2) g + n1 eta (x) eta = 0.
  // Reeb-Reeb component (g(reeb,reeb) = 1, eta(reeb) = 1):
  //   l1 + n1 = -rho - a1 S(reeb,reeb) + b1 r / 2.
  out.reeb_equation = {Rational(1), Rational(1),
                       Rational(-out.rho - p.alpha1 * curv.ricci({rb, rb}) +
                                p.beta1 * r / 2)};
  // Full g-trace (trace of eta (x) eta is 1):
  //   n l1 + n1 = -n rho - a1 r + n b1 r / 2.
  out.trace_equation = {Rational(n), Rational(1),
                        Rational(-Rational(n) * out.rho - p.alpha1 * r +
                                 Rational(n) * p.beta1 * r / 2)};

  const LinearSolution sol = solve_linear(
      {{out.reeb_equation.lambda_coeff, out.reeb_equation.nu_coeff},
       {out.trace_equation.lambda_coeff, out.trace_equation.nu_coeff}},
      {out.reeb_equation.rhs, out.trace_equation.rhs});
  out.lambda1 = sol.particular[0];
  out.nu1 = sol.particular[1];

  const Tensor lg = lie_derivative(man, x, metric_tensor(man));
  out.full_residual = Tensor({0, 2}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.full_residual({i, j}) =
          lg({i, j}) + 2 * p.alpha1 * curv.ricci({i, j}) +
          (2 * out.lambda1 - p.beta1 * r) * man.metric[i][j] +
          2 * out.nu1 * acs.eta({i}) * acs.eta({j});
  out.exact = out.full_residual.is_zero();
  return out;
}

/// Closed-form constants for a nullity manifold of parameter k in dimension
/// 2m + 1: lambda1 = b1 m (k - 2m) - rho + 2 m a1, nu1 = -2 m a1 (k + 1).
inline std::pair<Rational, Rational> predict_constants(int m, const Rational& k,
                                                       const SolitonParams& p,
                                                       const Rational& rho) {
  if (m < 1) throw ContractError("predict_constants requires m >= 1");
  Rational lambda1 = p.beta1 * m * (k - 2 * m) - rho + 2 * m * p.alpha1;
  Rational nu1 = Rational(-2 * m) * p.alpha1 * (k + 1);
  return {lambda1, nu1};
}

/// Imposing nu1 = 0 in the closed form with a1 != 0 forces k = -1 (the
/// degenerate branch where h' = 0); with a1 = 0 every k qualifies and no
/// value is singled out.
inline std::optional<Rational> k_for_vanishing_nu(const SolitonParams& p) {
  if (p.alpha1 == 0) return std::nullopt;
  return Rational(-1);
}

/// Exact fit of S = a1 g + b1 eta (x) eta. Einstein when b1 = 0, eta-Einstein
/// when b1 != 0, otherwise the lexicographically first component pair where
/// the linear system becomes inconsistent is reported as witness.
struct EtaEinsteinFit {
  enum class Kind { Einstein, EtaEinstein, NotEtaEinstein };
  Kind kind = Kind::NotEtaEinstein;
  Rational a1;
  Rational b1;
  std::optional<std::array<int, 2>> witness;
};

inline EtaEinsteinFit eta_einstein_classify(const FrameManifold& man,
                                            const CurvatureData& curv,
                                            const AlmostContactStructure& acs) {
  const int n = man.dim;
  LinearSystemBuilder builder(2);
  std::optional<std::array<int, 2>> witness;
  for (int i = 0; i < n && !witness; ++i)
    for (int j = 0; j < n; ++j)
      if (!builder.add_equation({man.metric[i][j], Rational(acs.eta({i}) * acs.eta({j}))},
                                curv.ricci({i, j}))) {
        witness = {i, j};
        break;
      }

  EtaEinsteinFit fit;
  if (witness) {
    fit.kind = EtaEinsteinFit::Kind::NotEtaEinstein;
    fit.witness = witness;
    return fit;
  }
  const LinearSolution sol = builder.solution();
  fit.a1 = sol.particular[0];
  fit.b1 = sol.particular[1];
  fit.kind = fit.b1 == 0 ? EtaEinsteinFit::Kind::Einstein : EtaEinsteinFit::Kind::EtaEinstein;
  return fit;
}

}  // namespace akm
