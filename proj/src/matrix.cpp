#include "vqs/matrix.hpp"

#include <algorithm>

namespace vqs {

Mat Mat::identity(FieldPtr f, size_t n) {
  Mat m(std::move(f), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<Vec>& rows, size_t cols) {
  Mat m(std::move(f), rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(size_t i) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(f_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(*f_, *o.f_);
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Mat r(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = f_->add(r.at(i, j), f_->mul(a, o.at(k, j)));
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_field(*f_, *o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix sum shape mismatch");
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return f_->same_as(*o.f_) && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

RrefResult Mat::rref() const {
  Mat r = *this;
  std::vector<size_t> pivots;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
    size_t sel = pr;
    while (sel < rows_ && r.at(sel, pc) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pr)
      for (size_t j = 0; j < cols_; ++j) std::swap(r.at(sel, j), r.at(pr, j));
    uint32_t inv = f_->inv(r.at(pr, pc));
    for (size_t j = 0; j < cols_; ++j) r.at(pr, j) = f_->mul(inv, r.at(pr, j));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      uint32_t c = r.at(i, pc);
      if (c == 0) continue;
      for (size_t j = 0; j < cols_; ++j)
        r.at(i, j) = f_->sub(r.at(i, j), f_->mul(c, r.at(pr, j)));
    }
    pivots.push_back(pc);
    ++pr;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

bool Mat::invertible() const {
  return rows_ == cols_ && rref().rank == rows_;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of non-square matrix");
  Mat aug(f_, rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  RrefResult rr = aug.rref();
  for (size_t i = 0; i < rows_; ++i)
    if (i >= rr.pivots.size() || rr.pivots[i] != i)
      throw DegenerateGram("matrix is singular");
  Mat inv(f_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = rr.reduced.at(i, cols_ + j);
  return inv;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t v) { return v == 0; });
}

Vec vec_mat(const Vec& x, const Mat& m) {
  if (x.size() != m.rows()) throw ShapeMismatch("vec_mat shape mismatch");
  const auto& f = *m.field();
  Vec y(m.cols(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols(); ++j)
      y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
  }
  return y;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  if (x.size() != m.cols()) throw ShapeMismatch("mat_vec shape mismatch");
  const auto& f = *m.field();
  Vec y(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      y[i] = f.add(y[i], f.mul(m.at(i, j), x[j]));
  return y;
}

uint32_t bilinear(const Vec& x, const Mat& m, const Vec& y) {
  Vec xm = vec_mat(x, m);
  if (y.size() != xm.size()) throw ShapeMismatch("bilinear shape mismatch");
  const auto& f = *m.field();
  uint32_t r = 0;
  for (size_t j = 0; j < y.size(); ++j) r = f.add(r, f.mul(xm[j], y[j]));
  return r;
}

Vec vec_add(const FieldPtr& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vec_add length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f->add(a[i], b[i]);
  return r;
}

Vec vec_scale(const FieldPtr& f, uint32_t c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f->mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t v) { return v == 0; });
}

Subspace Subspace::from_rows(const Mat& rows) {
  RrefResult rr = rows.rref();
  Mat basis(rows.field(), rr.rank, rows.cols());
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = rr.reduced.at(i, j);
  return Subspace(std::move(basis), rows.cols(), std::move(rr.pivots));
}

Subspace Subspace::zero(FieldPtr f, size_t ambient_dim) {
  return Subspace(Mat(std::move(f), 0, ambient_dim), ambient_dim, {});
}

Subspace Subspace::full(FieldPtr f, size_t ambient_dim) {
  std::vector<size_t> pivots(ambient_dim);
  for (size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Mat::identity(std::move(f), ambient_dim), ambient_dim,
                  std::move(pivots));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector outside ambient space");
  // pivot columns of an RREF basis read the coordinates off directly
  Vec y(dim());
  for (size_t i = 0; i < dim(); ++i) y[i] = v[pivots_[i]];
  Vec chk = vec_mat(y, basis_);
  if (chk != v) return std::nullopt;
  return y;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch("ambient dims differ");
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !field()->same_as(*o.field()))
    throw AmbientMismatch("subspace sum: ambient mismatch");
  Mat stacked(field(), dim() + o.dim(), ambient_);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (size_t i = 0; i < o.dim(); ++i)
    for (size_t j = 0; j < ambient_; ++j)
      stacked.at(dim() + i, j) = o.basis_.at(i, j);
  return from_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !field()->same_as(*o.field()))
    throw AmbientMismatch("subspace intersect: ambient mismatch");
  const auto& f = field();
  size_t a = dim(), b = o.dim();
  // pairs (y, z) with y*A = z*B: kernel of [A^T | -B^T]
  Mat d(f, ambient_, a + b);
  for (size_t i = 0; i < a; ++i)
    for (size_t j = 0; j < ambient_; ++j) d.at(j, i) = basis_.at(i, j);
  for (size_t i = 0; i < b; ++i)
    for (size_t j = 0; j < ambient_; ++j)
      d.at(j, a + i) = f->neg(o.basis_.at(i, j));
  Subspace pairs = kernel(d);
  std::vector<Vec> rows;
  for (size_t i = 0; i < pairs.dim(); ++i) {
    Vec yz = pairs.basis().row(i);
    Vec y(yz.begin(), yz.begin() + a);
    rows.push_back(vec_mat(y, basis_));
  }
  return from_rows(Mat::from_rows(f, rows, ambient_));
}

Subspace kernel(const Mat& m) {
  RrefResult rr = m.rref();
  const auto& f = m.field();
  size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = f->neg(rr.reduced.at(i, free));
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(Mat::from_rows(f, rows, n));
}

Subspace perp(const Subspace& s, const Mat& gram) {
  if (gram.rows() != gram.cols() || gram.rows() != s.ambient_dim())
    throw ShapeMismatch("perp: gram shape mismatch");
  if (!gram.is_symmetric()) throw ShapeMismatch("perp: gram not symmetric");
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return kernel(s.basis() * gram);
}

std::optional<AffineSolutions> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw ShapeMismatch("solve: rhs length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = aug.rref();
  for (size_t p : rr.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec part(m.cols(), 0);
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    part[rr.pivots[i]] = rr.reduced.at(i, m.cols());
  return AffineSolutions{std::move(part), kernel(m)};
}

std::optional<Vec> solve_lex_min(const Mat& m, const Vec& b) {
  auto sol = solve(m, b);
  if (!sol) return std::nullopt;
  const auto& ker = sol->homogeneous;
  size_t k = ker.dim();
  if (k == 0) return sol->particular;
  uint64_t q = m.field()->q();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > 1'000'000) return sol->particular;  // deterministic fallback
  }
  const auto& f = m.field();
  Vec best = sol->particular;
  Vec combo(k, 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (size_t i = 0; i < k; ++i) {
      combo[i] = static_cast<uint32_t>(v % q);
      v /= q;
    }
    Vec cand = vec_add(f, sol->particular, vec_mat(combo, ker.basis()));
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace vqs
