#include "vqs/quad.hpp"

namespace vqs {

QuadraticSpace::QuadraticSpace(Mat upper_coeffs)
    : coeffs_(std::move(upper_coeffs)),
      gram_(coeffs_ + coeffs_.transpose()) {
  if (coeffs_.rows() != coeffs_.cols())
    throw ShapeMismatch("coefficient matrix must be square");
  for (size_t i = 0; i < coeffs_.rows(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (coeffs_.at(i, j) != 0)
        throw ShapeMismatch("coefficient matrix must be upper-triangular");
}

uint32_t QuadraticSpace::evaluate(const Vec& x) const {
  if (x.size() != dim()) throw ShapeMismatch("evaluate: vector length mismatch");
  const auto& f = *field();
  uint32_t r = 0;
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = i; j < dim(); ++j) {
      uint32_t c = coeffs_.at(i, j);
      if (c == 0) continue;
      r = f.add(r, f.mul(c, f.mul(x[i], x[j])));
    }
  }
  return r;
}

Subspace QuadraticSpace::radical() const {
  Subspace k = kernel(gram_);
  if (!field()->char2()) return k;  // Q vanishes on ker B automatically
  // In characteristic 2, u -> sqrt(Q(u)) is linear on ker B; the radical
  // is the kernel of that functional.
  const auto& f = field();
  Mat functional(f, 1, k.dim());
  for (size_t i = 0; i < k.dim(); ++i)
    functional.at(0, i) = f->sqrt(evaluate(k.basis().row(i)));
  Subspace combos = kernel(functional);
  std::vector<Vec> rows;
  for (size_t i = 0; i < combos.dim(); ++i)
    rows.push_back(vec_mat(combos.basis().row(i), k.basis()));
  return Subspace::from_rows(Mat::from_rows(f, rows, dim()));
}

QuadraticSpace QuadraticSpace::direct_sum(const QuadraticSpace& o) const {
  require_same_field(*field(), *o.field());
  size_t n = dim(), m = o.dim();
  Mat c(field(), n + m, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) c.at(i, j) = coeffs_.at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) c.at(n + i, n + j) = o.coeffs_.at(i, j);
  return QuadraticSpace(std::move(c));
}

Mat fold_upper(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("fold_upper: non-square");
  const auto& f = *m.field();
  Mat r(m.field(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    r.at(i, i) = m.at(i, i);
    for (size_t j = i + 1; j < m.cols(); ++j)
      r.at(i, j) = f.add(m.at(i, j), m.at(j, i));
  }
  return r;
}

bool QuadraticSpace::is_isometry(const Mat& m) const {
  if (m.rows() != dim() || m.cols() != dim())
    throw ShapeMismatch("is_isometry: matrix shape mismatch");
  if (!m.invertible()) return false;
  return fold_upper(m.transpose() * coeffs_ * m) == coeffs_;
}

QuadraticSpace QuadraticSpace::in_basis(const Mat& rows) const {
  if (rows.cols() != dim()) throw ShapeMismatch("in_basis: shape mismatch");
  return QuadraticSpace(fold_upper(rows * coeffs_ * rows.transpose()));
}

QuadraticSpace QuadraticSpace::restrict_to(const Subspace& s) const {
  if (s.ambient_dim() != dim())
    throw ShapeMismatch("restrict_to: ambient dim mismatch");
  return in_basis(s.basis());
}

VirtualQuadraticSpace::VirtualQuadraticSpace(QuadraticSpace ambient,
                                             Subspace u_sub)
    : ambient_(std::move(ambient)), u_(std::move(u_sub)) {
  if (u_.ambient_dim() != ambient_.dim())
    throw ShapeMismatch("subspace ambient dim mismatch");
  if (!ambient_.gram().invertible())
    throw DegenerateAmbient("ambient bilinear form is degenerate");
}

bool is_nondegenerate_virtual(const VirtualQuadraticSpace& vqs) {
  return vqs.restricted_form().radical().dim() == 0;
}

}  // namespace vqs
