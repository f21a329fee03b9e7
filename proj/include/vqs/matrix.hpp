#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vqs/field.hpp"

namespace vqs {

/// Coordinate vector over a field, entries as element indices.
using Vec = std::vector<uint32_t>;

struct RrefResult;

/// Dense exact matrix over a fixed Field.  Entries stored row-major as
/// element indices.  All operations are pure; shapes are checked.
class Mat {
 public:
  Mat(FieldPtr f, size_t rows, size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  static Mat identity(FieldPtr f, size_t n);
  static Mat from_rows(FieldPtr f, const std::vector<Vec>& rows, size_t cols);

  const FieldPtr& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  uint32_t& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  FieldElement element(size_t i, size_t j) const { return {f_, at(i, j)}; }

  Vec row(size_t i) const;
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  RrefResult rref() const;

  bool invertible() const;
  Mat inverse() const;  // throws ShapeMismatch / DegenerateGram

  bool is_symmetric() const;
  bool is_zero() const;

  // total order on equal-shape matrices: entry sequence, row-major
  bool lex_less(const Mat& o) const { return e_ < o.e_; }

 private:
  FieldPtr f_;
  size_t rows_, cols_;
  std::vector<uint32_t> e_;
};

struct RrefResult {
  Mat reduced;
  size_t rank;
  std::vector<size_t> pivots;
};

// y = x * m for a row vector x (|x| = rows)
Vec vec_mat(const Vec& x, const Mat& m);
// y = m * x for a column vector x (|x| = cols)
Vec mat_vec(const Mat& m, const Vec& x);
// bilinear value x * m * y^T
uint32_t bilinear(const Vec& x, const Mat& m, const Vec& y);

Vec vec_add(const FieldPtr& f, const Vec& a, const Vec& b);
Vec vec_scale(const FieldPtr& f, uint32_t c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// A subspace of GF(q)^n, held in canonical reduced row-echelon basis so
/// that equality is entry-wise equality of bases.
class Subspace {
 public:
  static Subspace from_rows(const Mat& rows);
  static Subspace zero(FieldPtr f, size_t ambient_dim);
  static Subspace full(FieldPtr f, size_t ambient_dim);

  const FieldPtr& field() const { return basis_.field(); }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // coordinates of v in this basis; nullopt if v is outside
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(Mat basis, size_t ambient, std::vector<size_t> pivots)
      : basis_(std::move(basis)), ambient_(ambient), pivots_(std::move(pivots)) {}
  Mat basis_;
  size_t ambient_;
  std::vector<size_t> pivots_;
};

// {x : m * x^T = 0}, as a canonical subspace of GF(q)^cols
Subspace kernel(const Mat& m);

// {v : B(u,v) = 0 for all u in s} with B given by a symmetric gram matrix
Subspace perp(const Subspace& s, const Mat& gram);

// Solution set of m * x^T = b: a particular solution plus the kernel,
// nullopt if inconsistent.
struct AffineSolutions {
  Vec particular;
  Subspace homogeneous;
};
std::optional<AffineSolutions> solve(const Mat& m, const Vec& b);

// The minimal solution of m * x^T = b in coordinate-lexicographic order
// (element index order per coordinate), by scanning the solution coset.
std::optional<Vec> solve_lex_min(const Mat& m, const Vec& b);

}  // namespace vqs
