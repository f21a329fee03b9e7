#include "vqs/io.hpp"

#include <iostream>
#include <nlohmann/json.hpp>

namespace vqs {

using nlohmann::json;

namespace {

bool is_nonneg_int(const json& j) {
  return j.is_number_unsigned() ||
         (j.is_number_integer() && j.get<int64_t>() >= 0);
}

uint64_t get_uint(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw ParseError("missing field \"" + key + "\"");
  if (!is_nonneg_int(j[key]))
    throw ParseError("field \"" + key + "\" must be a non-negative integer");
  return j[key].get<uint64_t>();
}

const char* kind_name(ClassificationReport::Kind k) {
  switch (k) {
    case ClassificationReport::Kind::Plus:
      return "plus";
    case ClassificationReport::Kind::Minus:
      return "minus";
    default:
      return "odd_dim";
  }
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j)
      row.push_back(element_to_json(m.field(), m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json field_to_json(const FieldPtr& f) {
  return json{{"p", f->p()}, {"d", f->d()}, {"modulus", f->modulus()}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("field spec must be an object");
  uint64_t p = get_uint(j, "p");
  unsigned d = static_cast<unsigned>(get_uint(j, "d"));
  std::optional<std::vector<unsigned>> modulus;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array())
      throw ParseError("field \"modulus\" must be an array");
    modulus = j["modulus"].get<std::vector<unsigned>>();
  }
  return Field::make(p, d, modulus);
}

json element_to_json(const FieldPtr& f, uint32_t idx) {
  if (f->d() == 1) return idx;
  return json(f->coeffs_of(idx));
}

uint32_t element_from_json(const FieldPtr& f, const json& j,
                           const std::string& where) {
  if (is_nonneg_int(j)) {
    uint64_t v = j.get<uint64_t>();
    if (v >= f->q())
      throw ParseError("element out of range at " + where);
    return static_cast<uint32_t>(v);
  }
  if (j.is_array()) {
    auto c = j.get<std::vector<unsigned>>();
    if (c.size() != f->d())
      throw ParseError("coefficient list of wrong length at " + where);
    for (unsigned x : c)
      if (x >= f->p()) throw ParseError("coefficient out of range at " + where);
    return f->from_coeffs(c);
  }
  throw ParseError("element must be an integer or coefficient list at " + where);
}

json form_to_json(const QuadraticSpace& qs) {
  return json{{"field", field_to_json(qs.field())},
              {"dim", qs.dim()},
              {"coeffs", matrix_to_json(qs.coeffs())}};
}

QuadraticSpace form_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("form must be a JSON object");
  if (!j.contains("field")) throw ParseError("missing field \"field\"");
  FieldPtr f = field_from_json(j["field"]);
  size_t n = static_cast<size_t>(get_uint(j, "dim"));
  if (!j.contains("coeffs") || !j["coeffs"].is_array() ||
      j["coeffs"].size() != n)
    throw ParseError("\"coeffs\" must be an array of " + std::to_string(n) +
                     " rows");
  Mat c(f, n, n);
  for (size_t i = 0; i < n; ++i) {
    const json& row = j["coeffs"][i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("coeffs row " + std::to_string(i) + " has wrong length");
    for (size_t k = 0; k < n; ++k) {
      std::string where =
          "coeffs(" + std::to_string(i) + "," + std::to_string(k) + ")";
      uint32_t v = element_from_json(f, row[k], where);
      if (k < i && v != 0)
        throw ParseError("nonzero entry below the diagonal at " + where);
      c.at(i, k) = v;
    }
  }
  return QuadraticSpace(std::move(c));
}

json virtual_to_json(const VirtualQuadraticSpace& vqs) {
  json j = form_to_json(vqs.ambient());
  j["subspace"] = subspace_to_json(vqs.u_sub());
  return j;
}

VirtualQuadraticSpace virtual_from_json(const json& j) {
  QuadraticSpace ambient = form_from_json(j);
  if (!j.contains("subspace") || !j["subspace"].is_array())
    throw ParseError("missing \"subspace\" basis rows");
  const auto& f = ambient.field();
  std::vector<Vec> rows;
  for (size_t i = 0; i < j["subspace"].size(); ++i) {
    const json& row = j["subspace"][i];
    if (!row.is_array() || row.size() != ambient.dim())
      throw ParseError("subspace row " + std::to_string(i) +
                       " has wrong length");
    Vec v(ambient.dim());
    for (size_t k = 0; k < v.size(); ++k)
      v[k] = element_from_json(
          f, row[k], "subspace(" + std::to_string(i) + "," + std::to_string(k) + ")");
    rows.push_back(std::move(v));
  }
  Mat given = Mat::from_rows(f, rows, ambient.dim());
  Subspace u = Subspace::from_rows(given);
  if (u.dim() != given.rows() || u.basis() != given)
    std::cerr << "warning: subspace basis was not in reduced row-echelon "
                 "form; re-canonicalized\n";
  if (!ambient.gram().invertible())
    throw ValidationError("ambient not non-degenerate");
  return VirtualQuadraticSpace(std::move(ambient), std::move(u));
}

json classification_to_json(const ClassificationReport& rep) {
  json j{{"field", field_to_json(rep.field)},
         {"dim", rep.dim},
         {"kind", kind_name(rep.kind)},
         {"witt_index", rep.witt_index},
         {"canonical_coeffs", matrix_to_json(rep.canonical_coeffs)},
         {"transform", matrix_to_json(rep.transform)}};
  if (rep.e_used) j["e_used"] = element_to_json(rep.field, *rep.e_used);
  if (rep.residual_is_square)
    j["residual_square_class"] = *rep.residual_is_square ? "square" : "nonsquare";
  return j;
}

json census_to_json(const CensusReport& rep) {
  json classes = json::array();
  for (const auto& c : rep.classes) {
    classes.push_back(json{{"kind", kind_name(c.kind)},
                           {"witt_index", c.witt_index},
                           {"representative_coeffs",
                            matrix_to_json(c.representative_coeffs)},
                           {"count", c.count}});
  }
  size_t expected = rep.dim % 2 == 0 ? 2 : 1;
  return json{{"field", field_to_json(rep.field)},
              {"dim", rep.dim},
              {"forms_total", rep.forms_total},
              {"forms_trivial_radical", rep.forms_trivial_radical},
              {"num_classes", rep.classes.size()},
              {"expected_classes", expected},
              {"classes", std::move(classes)}};
}

json group_order_report_to_json(const GroupOrderReport& rep) {
  json j{{"q", rep.q},
         {"dim", rep.dim},
         {"semantics", rep.classical ? "classical" : "virtual"},
         {"formula", rep.formula_value.str()}};
  if (rep.dim % 2 == 0) j["type"] = rep.epsilon == 1 ? "+" : "-";
  if (rep.enumerated_value) j["enumerated"] = rep.enumerated_value->str();
  if (rep.skipped) {
    j["skipped"] = true;
    j["note"] = rep.note;
  } else {
    j["match"] = rep.match;
  }
  return j;
}

json decomposition_to_json(const MinimalDecomposition& dec) {
  return json{{"N", subspace_to_json(dec.n_sub)},
              {"M", subspace_to_json(dec.m_sub)},
              {"Sigma", subspace_to_json(dec.sigma)},
              {"N_tilde", subspace_to_json(dec.n_tilde)},
              {"M_hat", subspace_to_json(dec.m_hat)},
              {"V_m", subspace_to_json(dec.vm)}};
}

}  // namespace vqs
