#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vqs/errors.hpp"

namespace vqs {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(p^d), elements represented as polynomial residues
/// over GF(p) modulo a monic irreducible polynomial of degree d.
///
/// Elements are addressed by their index in [0, q): the element with
/// coefficients (c0, c1, ..., c_{d-1}) (constant term first) has index
/// c0 + c1*p + ... + c_{d-1}*p^{d-1}.  Index order is the canonical
/// element order used everywhere (enumeration, lexicographic-smallest
/// choices, tie-breaking).
class Field {
 public:
  // modulus: degree-d monic irreducible, coefficient list of length d+1,
  // constant term first.  Omitted: the smallest monic irreducible in
  // index order (deterministic across runs).
  static FieldPtr make(uint64_t p, unsigned d,
                       std::optional<std::vector<unsigned>> modulus = {});

  uint64_t p() const { return p_; }
  unsigned d() const { return d_; }
  uint64_t q() const { return q_; }
  bool char2() const { return p_ == 2; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
  }

  // arithmetic on element indices
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws DivisionByZero on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  bool is_square(uint32_t a) const;
  // The root with the smaller index when two exist; throws NotASquare.
  uint32_t sqrt(uint32_t a) const;

  // Thm-4.2/4.3 canonical e: odd characteristic, the smallest non-square;
  // characteristic 2, the smallest e with x^2+x+e rootless.  Cached.
  uint32_t canonical_e() const;

  std::vector<unsigned> coeffs_of(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<unsigned>& c) const;
  uint32_t from_int(uint64_t v) const { return static_cast<uint32_t>(v % p_); }

 private:
  Field() = default;

  uint32_t mul_poly(uint32_t a, uint32_t b) const;

  uint64_t p_ = 0;
  unsigned d_ = 0;
  uint64_t q_ = 0;
  std::vector<unsigned> modulus_;
  // full multiplication table for small fields; empty otherwise
  std::vector<uint32_t> mul_tab_;
  mutable int64_t canonical_e_ = -1;
};

/// An element of a fixed Field.  Immutable value type; mixing elements of
/// structurally distinct fields throws MixedFields.
class FieldElement {
 public:
  FieldElement(FieldPtr f, uint32_t idx) : f_(std::move(f)), idx_(idx) {}

  const FieldPtr& field() const { return f_; }
  uint32_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  std::vector<unsigned> coeffs() const { return f_->coeffs_of(idx_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {f_, f_->neg(idx_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_->same_as(*b.f_) && a.idx_ == b.idx_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  FieldPtr f_;
  uint32_t idx_;
};

bool is_square(const FieldElement& a);
FieldElement sqrt(const FieldElement& a);
FieldElement find_canonical_e(const FieldPtr& f);

// All q elements in index order, starting with 0.
std::vector<FieldElement> enumerate_elements(const FieldPtr& f);

void require_same_field(const Field& a, const Field& b);

}  // namespace vqs
