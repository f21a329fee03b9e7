#pragma once

#include "vqs/matrix.hpp"

namespace vqs {

/// A quadratic space (GF(q)^n, Q) with Q given by an upper-triangular
/// coefficient matrix C: Q(x) = sum_{i<=j} C_ij x_i x_j.  The Gram matrix
/// C + C^T does not determine Q in characteristic 2, so C is the stored
/// representation in both characteristics.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(Mat upper_coeffs);

  const FieldPtr& field() const { return coeffs_.field(); }
  size_t dim() const { return coeffs_.rows(); }
  const Mat& coeffs() const { return coeffs_; }
  const Mat& gram() const { return gram_; }  // C + C^T

  uint32_t evaluate(const Vec& x) const;

  Subspace radical() const;
  QuadraticSpace direct_sum(const QuadraticSpace& o) const;

  // column convention: candidate isometry maps x to m*x
  bool is_isometry(const Mat& m) const;

  // Q restricted to s, in the coordinates of s's canonical basis
  QuadraticSpace restrict_to(const Subspace& s) const;

  // Q expressed in the basis given by the rows of an invertible matrix:
  // coefficient matrix of y -> Q(y * rows)
  QuadraticSpace in_basis(const Mat& rows) const;

  bool operator==(const QuadraticSpace& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QuadraticSpace& o) const { return !(*this == o); }

 private:
  Mat coeffs_;
  Mat gram_;
};

// fold a square matrix into upper-triangular form: entry (j,i), i<j, is
// added into (i,j); the result represents the same quadratic form
Mat fold_upper(const Mat& m);

/// The paper's (V, Q, U): a non-degenerate ambient space with a
/// distinguished subspace.  Construction rejects singular ambient Grams.
class VirtualQuadraticSpace {
 public:
  VirtualQuadraticSpace(QuadraticSpace ambient, Subspace u_sub);

  const QuadraticSpace& ambient() const { return ambient_; }
  const Subspace& u_sub() const { return u_; }
  size_t virtual_dim() const { return u_.dim(); }

  Subspace u_perp() const { return perp(u_, ambient_.gram()); }
  QuadraticSpace restricted_form() const { return ambient_.restrict_to(u_); }
  bool is_minimal() const { return u_.contains(u_perp()); }

 private:
  QuadraticSpace ambient_;
  Subspace u_;
};

bool is_nondegenerate_virtual(const VirtualQuadraticSpace& vqs);

}  // namespace vqs
