#pragma once

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "akm/catalog.hpp"
#include "akm/contact.hpp"
#include "akm/frame.hpp"

namespace akm {

using json = nlohmann::ordered_json;

/// Raised when a document parses and matches the schema but its frame fails
/// validation (antisymmetry, Jacobi, SPD metric, odd dimension).
struct SpecValidationError : Error {
  SpecValidationError(std::string what, ValidationReport report)
      : Error(std::move(what)), report(report) {}
  ValidationReport report;
};

namespace detail {

inline std::string frame_validation_message(const ValidationReport& rep) {
  std::string msg = "frame validation failed:";
  if (!rep.antisymmetry_ok) msg += " antisymmetry";
  if (!rep.jacobi_ok) {
    msg += " jacobi";
    if (rep.jacobi_witness) {
      const auto& w = *rep.jacobi_witness;
      msg += " at (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
             std::to_string(w[2]) + ")";
    }
  }
  if (!rep.metric_symmetric_ok) msg += " metric-symmetry";
  if (!rep.metric_spd_ok) msg += " metric-positivity";
  if (!rep.odd_dimension_ok) msg += " odd-dimension";
  return msg;
}

inline Rational rational_field(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

inline Matrix rational_matrix(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw SchemaError(path, "expected " + std::to_string(dim) + " rows");
  Matrix m(dim, Vector(dim));
  for (int i = 0; i < dim; ++i) {
    const json& row = j[i];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw SchemaError(row_path, "expected " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      m[i][k] = rational_field(row[k], row_path + "[" + std::to_string(k) + "]");
  }
  return m;
}

inline int int_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

}  // namespace detail

/// Parses a manifold document (a single JSON object; see the README for the
/// schema) into validated objects. Throws ParseError on malformed JSON,
/// SchemaError (with a field path) on schema violations, and
/// SpecValidationError when the frame fails validation.
inline StructuredManifold parse_manifold_spec(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "document must be a JSON object");

  static const std::set<std::string> known_keys = {
      "name", "dimension", "frame", "reeb_index", "metric", "brackets", "phi"};
  for (const auto& [key, value] : doc.items())
    if (!known_keys.count(key)) throw SchemaError(key, "unknown field");
  for (const char* required : {"name", "dimension", "frame", "brackets", "phi"})
    if (!doc.contains(required)) throw SchemaError(required, "missing required field");

  if (!doc["name"].is_string()) throw SchemaError("name", "expected a string");
  const std::string name = doc["name"].get<std::string>();
  const int dim = detail::int_field(doc["dimension"], "dimension");
  if (dim < 1) throw SchemaError("dimension", "must be positive");

  if (!doc["frame"].is_array() || static_cast<int>(doc["frame"].size()) != dim)
    throw SchemaError("frame", "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (int i = 0; i < dim; ++i) {
    const json& l = doc["frame"][i];
    if (!l.is_string())
      throw SchemaError("frame[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(l.get<std::string>());
  }

  int reeb_index = 0;
  if (doc.contains("reeb_index")) {
    reeb_index = detail::int_field(doc["reeb_index"], "reeb_index");
    if (reeb_index < 0 || reeb_index >= dim)
      throw SchemaError("reeb_index", "out of range for dimension " + std::to_string(dim));
  }

  Matrix metric = identity_matrix(dim);
  if (doc.contains("metric")) {
    const json& mj = doc["metric"];
    if (mj.is_string()) {
      if (mj.get<std::string>() != "identity")
        throw SchemaError("metric", "string form must be \"identity\"");
    } else {
      metric = detail::rational_matrix(mj, dim, "metric");
    }
  }

  if (!doc["brackets"].is_array()) throw SchemaError("brackets", "expected an array");
  std::vector<BracketEntry> brackets;
  for (size_t b = 0; b < doc["brackets"].size(); ++b) {
    const std::string path = "brackets[" + std::to_string(b) + "]";
    const json& ej = doc["brackets"][b];
    if (!ej.is_object()) throw SchemaError(path, "expected an object");
    for (const char* field : {"i", "j", "coeffs"})
      if (!ej.contains(field)) throw SchemaError(path + "." + field, "missing required field");
    for (const auto& [key, value] : ej.items())
      if (std::string(key) != "i" && key != "j" && key != "coeffs")
        throw SchemaError(path + "." + std::string(key), "unknown field");
    BracketEntry entry;
    entry.i = detail::int_field(ej["i"], path + ".i");
    entry.j = detail::int_field(ej["j"], path + ".j");
    if (entry.i < 0 || entry.j >= dim || entry.i >= entry.j)
      throw SchemaError(path, "needs 0 <= i < j < dimension");
    const json& cj = ej["coeffs"];
    if (!cj.is_array() || static_cast<int>(cj.size()) != dim)
      throw SchemaError(path + ".coeffs", "expected " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      entry.coeffs.push_back(
          detail::rational_field(cj[k], path + ".coeffs[" + std::to_string(k) + "]"));
    brackets.push_back(std::move(entry));
  }

  const Matrix phi_matrix = detail::rational_matrix(doc["phi"], dim, "phi");

  FrameManifold man = make_frame_manifold(name, dim, brackets, metric, labels);
  const ValidationReport vrep = validate_frame(man);
  if (!vrep.passed())
    throw SpecValidationError(detail::frame_validation_message(vrep), vrep);

  Tensor phi({1, 1}, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) phi({r, c}) = phi_matrix[r][c];
  return {man, make_structure(man, phi, reeb_index)};
}

/// Serializes a manifold and structure back to canonical document form.
inline json manifold_to_document(const StructuredManifold& sm) {
  const FrameManifold& man = sm.manifold;
  json doc;
  doc["name"] = man.name;
  doc["dimension"] = man.dim;
  doc["frame"] = man.frame_labels;
  doc["reeb_index"] = sm.structure.reeb_index;
  bool identity = man.metric == identity_matrix(man.dim);
  if (identity) {
    doc["metric"] = "identity";
  } else {
    json rows = json::array();
    for (int i = 0; i < man.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < man.dim; ++j) row.push_back(to_string(man.metric[i][j]));
      rows.push_back(row);
    }
    doc["metric"] = rows;
  }
  json brackets = json::array();
  for (int i = 0; i < man.dim; ++i)
    for (int j = i + 1; j < man.dim; ++j) {
      Vector coeffs = man.bracket_basis(i, j);
      bool zero = true;
      for (const auto& c : coeffs) zero = zero && c == 0;
      if (zero) continue;
      json entry;
      entry["i"] = i;
      entry["j"] = j;
      json cj = json::array();
      for (const auto& c : coeffs) cj.push_back(to_string(c));
      entry["coeffs"] = cj;
      brackets.push_back(entry);
    }
  doc["brackets"] = brackets;
  json phi = json::array();
  for (int r = 0; r < man.dim; ++r) {
    json row = json::array();
    for (int c = 0; c < man.dim; ++c) row.push_back(to_string(sm.structure.phi({r, c})));
    phi.push_back(row);
  }
  doc["phi"] = phi;
  return doc;
}

/// Canonical document bytes for a bundled example.
inline std::string emit_builtin_example(const std::string& name) {
  return manifold_to_document(make_builtin(name)).dump(2) + "\n";
}

}  // namespace akm
