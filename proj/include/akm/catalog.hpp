#pragma once

#include <string>
#include <vector>

#include "akm/contact.hpp"
#include "akm/frame.hpp"

namespace akm {

/// Names of the bundled example manifolds, in canonical order.
inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "kenmotsu3", "hyperbolic_kenmotsu3", "abelian_flat3", "su2_round3"};
  return names;
}

/// Standard rotation phi on a 3-frame: phi e1 = e2, phi e2 = -e1, phi e0 = 0.
inline Tensor standard_phi3() {
  Tensor phi({1, 1}, 3);
  phi({2, 1}) = 1;
  phi({1, 2}) = -1;
  return phi;
}

/// The bundled examples. All are 3-dimensional with identity metric and
/// Reeb index 0:
///   kenmotsu3            [e0,e1] = [e0,e2] = -e1 - e2; almost Kenmotsu with
///                        nullity constants k = -2, mu = -2.
///   hyperbolic_kenmotsu3 [e0,e1] = -e1, [e0,e2] = -e2; Kenmotsu (h = 0),
///                        constant curvature -1.
///   abelian_flat3        all brackets zero; flat.
///   su2_round3           [e0,e1] = 2e2 cyclic; constant curvature +1,
///                        almost contact metric but not almost Kenmotsu.
inline StructuredManifold make_builtin(const std::string& name) {
  const Rational z(0), one(1), neg(-1), two(2);
  if (name == "kenmotsu3") {
    FrameManifold man = make_frame_manifold(
        name, 3, {{0, 1, {z, neg, neg}}, {0, 2, {z, neg, neg}}});
    return {man, make_structure(man, standard_phi3(), 0)};
  }
  if (name == "hyperbolic_kenmotsu3") {
    FrameManifold man =
        make_frame_manifold(name, 3, {{0, 1, {z, neg, z}}, {0, 2, {z, z, neg}}});
    return {man, make_structure(man, standard_phi3(), 0)};
  }
  if (name == "abelian_flat3") {
    FrameManifold man = make_frame_manifold(name, 3, {});
    return {man, make_structure(man, standard_phi3(), 0)};
  }
  if (name == "su2_round3") {
    FrameManifold man = make_frame_manifold(
        name, 3, {{0, 1, {z, z, two}}, {0, 2, {z, -two, z}}, {1, 2, {two, z, z}}});
    return {man, make_structure(man, standard_phi3(), 0)};
  }
  throw Error("unknown builtin example '" + name + "'");
}

}  // namespace akm
