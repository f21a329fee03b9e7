#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "vqs/classify.hpp"
#include "vqs/embedding.hpp"
#include "vqs/iso_groups.hpp"

namespace vqs {

// Field JSON: {"p": 2, "d": 2, "modulus": [1,1,1]} (constant term first;
// omitted modulus means the deterministic default).
nlohmann::json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const nlohmann::json& j);

// Field elements serialize as plain integers for prime fields and as
// coefficient lists (constant term first) for extensions.
nlohmann::json element_to_json(const FieldPtr& f, uint32_t idx);
uint32_t element_from_json(const FieldPtr& f, const nlohmann::json& j,
                           const std::string& where);

// Form JSON: {"field": {...}, "dim": n, "coeffs": [[...], ...]} with the
// coefficient matrix upper-triangular; nonzero entries below the
// diagonal are rejected with their (row, col) position.
nlohmann::json form_to_json(const QuadraticSpace& qs);
QuadraticSpace form_from_json(const nlohmann::json& j);

// Virtual-space JSON adds "subspace": a list of basis row vectors.
// Non-RREF bases are re-canonicalized with a warning on stderr.
nlohmann::json virtual_to_json(const VirtualQuadraticSpace& vqs);
VirtualQuadraticSpace virtual_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const ClassificationReport& rep);
nlohmann::json census_to_json(const CensusReport& rep);
nlohmann::json group_order_report_to_json(const GroupOrderReport& rep);
nlohmann::json decomposition_to_json(const MinimalDecomposition& dec);

// wraps nlohmann parse errors into ParseError with location context
nlohmann::json parse_json_text(const std::string& text);

}  // namespace vqs
