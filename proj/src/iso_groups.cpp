#include "vqs/iso_groups.hpp"

#include <algorithm>

#include "vqs/classify.hpp"
#include "vqs/embedding.hpp"

namespace vqs {

namespace {

void check_enumeration_budget(const QuadraticSpace& qs, const Budget& budget) {
  if (qs.dim() > budget.max_dim)
    throw BudgetExceeded("enumeration dimension exceeds budget");
  if (qs.field()->q() > budget.max_q)
    throw BudgetExceeded("enumeration field order exceeds budget");
}

// Backtracking over images of an adapted basis.  The first `fixed`
// basis vectors are pinned to themselves; images of the rest must match
// Q on the basis vector and B against all earlier images, and keep the
// image list linearly independent.
class IsometrySearch {
 public:
  IsometrySearch(const QuadraticSpace& qs, Mat basis_rows, size_t fixed,
                 const Budget& budget)
      : qs_(qs),
        f_(qs.field()),
        n_(qs.dim()),
        q_(f_->q()),
        basis_(std::move(basis_rows)),
        fixed_(fixed),
        budget_(budget) {
    // all vectors of GF(q)^n in coordinate-lexicographic order
    uint64_t total = 1;
    for (size_t i = 0; i < n_; ++i) {
      total *= q_;
      if (total > budget.max_scan)
        throw BudgetExceeded("vector table exceeds scan budget");
    }
    vectors_.reserve(total);
    Vec x(n_, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
      vectors_.push_back(x);
      q_values_.push_back(qs_.evaluate(x));
      for (size_t i = n_; i-- > 0;) {
        if (++x[i] < q_) break;
        x[i] = 0;
      }
    }

    basis_q_.resize(n_);
    basis_b_.assign(n_, Vec(n_, 0));
    for (size_t i = 0; i < n_; ++i) {
      basis_q_[i] = qs_.evaluate(basis_.row(i));
      for (size_t j = 0; j < n_; ++j)
        basis_b_[i][j] = bilinear(basis_.row(i), qs_.gram(), basis_.row(j));
    }

    for (size_t i = 0; i < fixed_; ++i) {
      images_.push_back(basis_.row(i));
      if (!push_independent(basis_.row(i)))
        throw Error("fixed basis rows are dependent");
    }
    basis_cols_inv_ = basis_.transpose().inverse();
  }

  std::vector<Mat> run() {
    recurse();
    std::sort(results_.begin(), results_.end(),
              [](const Mat& a, const Mat& b) { return a.lex_less(b); });
    return std::move(results_);
  }

 private:
  // Gaussian elimination state for the independence check
  bool push_independent(Vec v) {
    for (size_t r = 0; r < red_rows_.size(); ++r) {
      uint32_t c = v[red_pivots_[r]];
      if (c != 0)
        v = vec_add(f_, v, vec_scale(f_, f_->neg(c), red_rows_[r]));
    }
    size_t pivot = n_;
    for (size_t j = 0; j < n_; ++j)
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == n_) return false;
    red_rows_.push_back(vec_scale(f_, f_->inv(v[pivot]), v));
    red_pivots_.push_back(pivot);
    return true;
  }

  void pop_independent() {
    red_rows_.pop_back();
    red_pivots_.pop_back();
  }

  void recurse() {
    size_t level = images_.size();
    if (level == n_) {
      emit();
      return;
    }
    for (const Vec& cand : vectors_) {
      if (++nodes_ > budget_.max_nodes)
        throw BudgetExceeded("backtracking node budget exhausted");
      if (q_values_[&cand - vectors_.data()] != basis_q_[level]) continue;
      bool ok = true;
      for (size_t j = 0; j < level && ok; ++j)
        ok = bilinear(cand, qs_.gram(), images_[j]) == basis_b_[level][j];
      if (!ok) continue;
      if (!push_independent(cand)) continue;
      images_.push_back(cand);
      recurse();
      images_.pop_back();
      pop_independent();
    }
  }

  void emit() {
    // phi maps basis vector i to images_[i]; columns are images of the
    // standard basis: phi = IMG_cols * (basis rows)^-T
    Mat img_cols(f_, n_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t r = 0; r < n_; ++r) img_cols.at(r, i) = images_[i][r];
    results_.push_back(img_cols * basis_cols_inv_);
  }

  const QuadraticSpace& qs_;
  FieldPtr f_;
  size_t n_;
  uint64_t q_;
  Mat basis_;
  size_t fixed_;
  const Budget& budget_;

  std::vector<Vec> vectors_;
  std::vector<uint32_t> q_values_;
  std::vector<uint32_t> basis_q_;
  std::vector<Vec> basis_b_;
  Mat basis_cols_inv_{nullptr, 0, 0};

  std::vector<Vec> images_;
  std::vector<Vec> red_rows_;
  std::vector<size_t> red_pivots_;
  std::vector<Mat> results_;
  uint64_t nodes_ = 0;
};

Mat extend_to_full_basis(const Subspace& s) {
  const auto& f = s.field();
  size_t n = s.ambient_dim();
  std::vector<Vec> rows;
  for (size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
  Subspace span = s;
  for (size_t j = 0; j < n && rows.size() < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    if (span.contains(e)) continue;
    rows.push_back(e);
    span = span.sum(Subspace::from_rows(Mat::from_rows(f, {e}, n)));
  }
  return Mat::from_rows(f, rows, n);
}

}  // namespace

IsometrySet enumerate_isometries(const QuadraticSpace& qs,
                                 const Budget& budget) {
  check_enumeration_budget(qs, budget);
  IsometrySearch search(qs, Mat::identity(qs.field(), qs.dim()), 0, budget);
  IsometrySet out;
  out.elements = search.run();
  out.order = out.elements->size();
  out.method = IsometrySet::Method::Enumerated;
  return out;
}

IsometrySet enumerate_virtual_isometries(const VirtualQuadraticSpace& vqs,
                                         const Budget& budget) {
  check_enumeration_budget(vqs.ambient(), budget);
  Subspace u_perp = vqs.u_perp();
  IsometrySearch search(vqs.ambient(), extend_to_full_basis(u_perp),
                        u_perp.dim(), budget);
  IsometrySet out;
  out.elements = search.run();
  out.order = out.elements->size();
  out.method = IsometrySet::Method::Enumerated;
  return out;
}

BigInt order_formula(uint64_t q, size_t dim, int epsilon, bool classical) {
  if (dim == 0) throw ParityMismatch("dimension must be positive");
  BigInt bq = q;
  if (dim % 2 == 0) {
    if (epsilon != 1 && epsilon != -1)
      throw ParityMismatch("even dimension requires epsilon +1 or -1");
    size_t k = dim / 2;
    BigInt r = 2;
    r *= boost::multiprecision::pow(bq, static_cast<unsigned>(k * k - k));
    r *= boost::multiprecision::pow(bq, static_cast<unsigned>(k)) - epsilon;
    for (size_t i = 1; i < k; ++i)
      r *= boost::multiprecision::pow(bq, static_cast<unsigned>(2 * i)) - 1;
    return r;
  }
  if (epsilon != 0)
    throw ParityMismatch("odd dimension admits no epsilon type");
  size_t k = (dim - 1) / 2;
  BigInt r = 2;
  r *= boost::multiprecision::pow(bq, static_cast<unsigned>(k * k));
  for (size_t i = 1; i <= k; ++i)
    r *= boost::multiprecision::pow(bq, static_cast<unsigned>(2 * i)) - 1;
  if (classical && q % 2 == 0) r /= 2;
  return r;
}

RestrictionResult restriction_map(const VirtualQuadraticSpace& vqs,
                                  const IsometrySet& iso_set) {
  if (!vqs.is_minimal())
    throw NotMinimal("restriction_map requires a minimal virtual space");
  if (!is_nondegenerate_virtual(vqs))
    throw Degenerate("restriction_map requires a non-degenerate virtual space");
  if (!iso_set.elements)
    throw Error("restriction_map needs an enumerated isometry set");

  const auto& f = vqs.ambient().field();
  const Subspace& u = vqs.u_sub();
  QuadraticSpace u_form = vqs.restricted_form();
  Mat id = Mat::identity(f, u.dim());

  std::vector<Mat> image, kernel_elems;
  for (const Mat& phi : *iso_set.elements) {
    Mat phi_t = phi.transpose();
    std::vector<Vec> rows;
    for (size_t i = 0; i < u.dim(); ++i) {
      auto coords = u.coordinates(vec_mat(u.basis().row(i), phi_t));
      if (!coords) throw Error("restriction: U not preserved");
      rows.push_back(*coords);
    }
    Mat restricted = Mat::from_rows(f, rows, u.dim()).transpose();
    if (!u_form.is_isometry(restricted))
      throw Error("restriction: image is not an isometry of Q|_U");
    if (restricted == id) kernel_elems.push_back(phi);
    image.push_back(std::move(restricted));
  }
  auto lex = [](const Mat& a, const Mat& b) { return a.lex_less(b); };
  std::sort(image.begin(), image.end(), lex);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::sort(kernel_elems.begin(), kernel_elems.end(), lex);

  RestrictionResult out{std::move(u_form), {}, {}};
  out.image.elements = std::move(image);
  out.image.order = out.image.elements->size();
  out.kernel.elements = std::move(kernel_elems);
  out.kernel.order = out.kernel.elements->size();
  return out;
}

std::vector<GroupOrderReport> verify_orders(uint64_t q_max, size_t dim_max,
                                            const Budget& budget) {
  std::vector<GroupOrderReport> reports;
  for (uint64_t q = 2; q <= q_max; ++q) {
    // prime powers only
    uint64_t p = 0, rest = q;
    for (uint64_t c = 2; c * c <= rest; ++c)
      if (rest % c == 0) {
        p = c;
        while (rest % c == 0) rest /= c;
        break;
      }
    if (p == 0)
      p = q;  // q itself prime
    else if (rest != 1)
      continue;  // two distinct prime factors
    unsigned d = 0;
    for (uint64_t t = q; t > 1; t /= p) ++d;

    FieldPtr f = Field::make(p, d);
    for (size_t dim = 1; dim <= dim_max; ++dim) {
      std::vector<std::pair<int, bool>> cells;  // (epsilon, classical)
      if (dim % 2 == 0) {
        cells = {{1, true}, {-1, true}};
      } else {
        cells = {{0, true}, {0, false}};
      }
      for (auto [eps, classical] : cells) {
        GroupOrderReport rep;
        rep.q = q;
        rep.dim = dim;
        rep.epsilon = eps;
        rep.classical = classical;
        rep.formula_value = order_formula(q, dim, eps, classical);
        try {
          QuadraticSpace u_space = canonical_space(f, dim, eps);
          BigInt enumerated;
          if (classical) {
            enumerated = enumerate_isometries(u_space, budget).order;
          } else {
            VirtualQuadraticSpace vqs = embed_ambient(u_space);
            enumerated = enumerate_virtual_isometries(vqs, budget).order;
          }
          rep.enumerated_value = enumerated;
          rep.match = (enumerated == rep.formula_value);
        } catch (const BudgetExceeded& e) {
          rep.skipped = true;
          rep.note = e.what();
        }
        reports.push_back(std::move(rep));
      }
    }
  }
  return reports;
}

}  // namespace vqs
