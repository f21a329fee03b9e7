#pragma once

#include <map>
#include <optional>

#include "vqs/iso_groups.hpp"
#include "vqs/quad.hpp"

namespace vqs {

struct ClassificationReport {
  enum class Kind { Plus, Minus, OddDim };

  FieldPtr field;
  size_t dim = 0;
  Kind kind = Kind::Plus;
  size_t witt_index = 0;
  Mat canonical_coeffs;   // the normal-form coefficient matrix
  Mat canonical_basis;    // rows: canonical basis in input coordinates
  Mat transform;          // inverse of canonical_basis: input -> canonical coords
  std::optional<uint32_t> e_used;  // the canonical e, for minus type
  // odd characteristic, odd dimension: square class of the residual
  // coefficient (x^2 vs e x^2); auxiliary data, merged by the census
  std::optional<bool> residual_is_square;
};

// First nonzero v with Q(v)=0 in coordinate-lexicographic scan order, or
// nullopt if the form is anisotropic.  Requires a trivial radical.
std::optional<Vec> find_singular_vector(const QuadraticSpace& qs,
                                        const Budget& budget = {});

struct HyperbolicSplit {
  Vec v;        // the singular vector
  Vec w;        // partner with B(v,w)=1 and Q(w)=0
  Subspace complement;       // <v,w>^perp, dimension n-2
  QuadraticSpace residual;   // Q restricted to the complement
};

HyperbolicSplit split_hyperbolic(const QuadraticSpace& qs, const Vec& v);

// Witt-index splitting down to an anisotropic residual of dimension
// 0, 1 or 2, then normalization to the standard representative.
ClassificationReport canonical_form(const QuadraticSpace& qs,
                                    const Budget& budget = {});

bool is_isomorphic(const QuadraticSpace& a, const QuadraticSpace& b,
                   const Budget& budget = {});

struct CensusClass {
  ClassificationReport::Kind kind;
  size_t witt_index;
  Mat representative_coeffs;  // first form found in the class
  uint64_t count = 0;         // coefficient matrices in the class
};

struct CensusReport {
  FieldPtr field;
  size_t dim = 0;
  uint64_t forms_total = 0;
  uint64_t forms_trivial_radical = 0;
  std::vector<CensusClass> classes;  // virtual-space isomorphism classes
};

// Exhaustive bucketing of all q^{n(n+1)/2} coefficient matrices with
// trivial radical.  Classes are virtual-space classes: the two odd-
// characteristic square classes in odd dimension fall into one bucket.
CensusReport class_census(const FieldPtr& f, size_t n,
                          const Budget& budget = {});

uint64_t count_singular_vectors(const QuadraticSpace& qs,
                                const Budget& budget = {});

// Canonical representative of the given dimension and type:
// epsilon +1 (plus), -1 (minus), 0 (odd dimension).
QuadraticSpace canonical_space(const FieldPtr& f, size_t dim, int epsilon);

}  // namespace vqs
