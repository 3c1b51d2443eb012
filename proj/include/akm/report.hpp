#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "akm/contact.hpp"
#include "akm/frame.hpp"
#include "akm/rational.hpp"
#include "akm/tensor.hpp"

namespace akm {

/// Formatting helpers shared by the report renderers. Everything prints
/// canonical rational strings; output bytes are deterministic for identical
/// inputs.

inline nlohmann::ordered_json vector_to_json(const Vector& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

inline nlohmann::ordered_json endo_to_json(const Tensor& t) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int i = 0; i < t.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(to_string(t({i, j})));
    out.push_back(row);
  }
  return out;
}

inline nlohmann::ordered_json bilinear_to_json(const Tensor& t) { return endo_to_json(t); }

/// "2*e1 + 2*e2", "-e0", "0" -- a vector as a combination of frame labels.
inline std::string combo_string(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational mag = v[i] < 0 ? Rational(-v[i]) : v[i];
    std::string term = mag == 1 ? labels[i] : to_string(mag) + "*" + labels[i];
    if (out.empty())
      out = (v[i] < 0 ? "-" : "") + term;
    else
      out += (v[i] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// "(0, -1, 1)" -- a vector as a coefficient tuple.
inline std::string tuple_string(const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline const char* status_string(bool ok) { return ok ? "pass" : "fail"; }

inline const char* status_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "not_applicable";
  }
}

inline std::string status_line(bool ok) { return ok ? "[pass]" : "[FAIL]"; }

inline std::string status_line(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "[pass]";
    case CheckStatus::Fail: return "[FAIL]";
    default: return "[ n/a]";
  }
}

inline const char* grade_json_string(StructureGrade g) {
  switch (g) {
    case StructureGrade::NotAlmostContact: return "not_almost_contact";
    case StructureGrade::AlmostContactMetric: return "almost_contact_metric";
    default: return "almost_kenmotsu";
  }
}

inline const char* grade_text_string(StructureGrade g) {
  switch (g) {
    case StructureGrade::NotAlmostContact: return "not almost contact";
    case StructureGrade::AlmostContactMetric: return "almost contact metric";
    default: return "almost Kenmotsu";
  }
}

}  // namespace akm
