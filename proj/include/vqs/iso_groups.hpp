#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vqs/quad.hpp"

namespace vqs {

using BigInt = boost::multiprecision::cpp_int;

struct Budget {
  uint64_t max_nodes = 100'000'000;  // backtracking candidate tests
  uint64_t max_scan = 1'000'000;     // exhaustive vector/matrix scans
  size_t max_dim = 6;                // ambient dimension for enumeration
  uint64_t max_q = 5;                // field order for enumeration
};

struct IsometrySet {
  std::optional<std::vector<Mat>> elements;  // sorted canonically when present
  BigInt order = 0;
  enum class Method { Enumerated, Formula } method = Method::Enumerated;
};

// Backtracking over images of a basis: candidates must match Q on the
// basis vector and B against all earlier images, and stay linearly
// independent.  Complete and duplicate-free; deterministic order.
IsometrySet enumerate_isometries(const QuadraticSpace& qs,
                                 const Budget& budget = {});

// Same search with every basis vector of U^perp pinned to itself.
IsometrySet enumerate_virtual_isometries(const VirtualQuadraticSpace& vqs,
                                         const Budget& budget = {});

// Exact order of the orthogonal / virtual isometry group.
//   even dim 2k:  2 q^{k^2-k} (q^k - eps) prod_{i<k} (q^{2i}-1)
//   odd dim 2k+1: 2 q^{k^2} prod_{i<=k} (q^{2i}-1),
//                 halved for classical Iso(U) when q is even.
// epsilon: +1 or -1 for even dim, 0 for odd dim.
BigInt order_formula(uint64_t q, size_t dim, int epsilon, bool classical);

struct RestrictionResult {
  QuadraticSpace u_form;  // Q|_U in U's basis coordinates
  IsometrySet image;
  IsometrySet kernel;
};

// Restrict each enumerated element of Iso(V,U) to U.  Requires vqs
// minimal and non-degenerate; the image then lands in Iso(U).
RestrictionResult restriction_map(const VirtualQuadraticSpace& vqs,
                                  const IsometrySet& iso_set);

struct GroupOrderReport {
  uint64_t q = 0;
  size_t dim = 0;
  int epsilon = 0;        // 0 for odd dimension
  bool classical = true;  // classical Iso(U) vs virtual Iso(V,U) semantics
  BigInt formula_value;
  std::optional<BigInt> enumerated_value;
  bool match = false;
  bool skipped = false;
  std::string note;
};

// Every (q, dim, type) cell up to the bounds: build the canonical
// representative, enumerate, compare with the formula.  Over-budget cells
// are reported as skipped.
std::vector<GroupOrderReport> verify_orders(uint64_t q_max, size_t dim_max,
                                            const Budget& budget = {});

}  // namespace vqs
