#include "vqs/classify.hpp"

#include <algorithm>

namespace vqs {

namespace {

// odometer over GF(q)^n in coordinate-lexicographic order, last
// coordinate fastest; calls fn(vec) until it returns true
template <typename Fn>
void scan_vectors(uint64_t q, size_t n, Fn&& fn) {
  Vec x(n, 0);
  while (true) {
    if (fn(x)) return;
    size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < q) break;
      x[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

void check_scan_budget(uint64_t q, size_t n, const Budget& budget) {
  uint64_t total = 1;
  for (size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > budget.max_scan)
      throw BudgetExceeded("vector scan over q^n exceeds budget");
  }
}

}  // namespace

std::optional<Vec> find_singular_vector(const QuadraticSpace& qs,
                                        const Budget& budget) {
  if (qs.radical().dim() != 0)
    throw NonTrivialRadical("find_singular_vector requires trivial radical");
  check_scan_budget(qs.field()->q(), qs.dim(), budget);
  std::optional<Vec> found;
  scan_vectors(qs.field()->q(), qs.dim(), [&](const Vec& x) {
    if (!vec_is_zero(x) && qs.evaluate(x) == 0) {
      found = x;
      return true;
    }
    return false;
  });
  return found;
}

HyperbolicSplit split_hyperbolic(const QuadraticSpace& qs, const Vec& v) {
  const auto& f = qs.field();
  if (vec_is_zero(v) || qs.evaluate(v) != 0)
    throw NotSingular("split vector must be nonzero with Q(v)=0");
  Vec vg = vec_mat(v, qs.gram());
  if (vec_is_zero(vg)) throw InRadical("split vector lies in ker B");

  Mat eq = Mat::from_rows(f, {vg}, qs.dim());
  auto w0 = solve_lex_min(eq, {1});
  if (!w0) throw InRadical("no partner with B(v,w)=1");
  // w' = w - Q(w) v makes the plane carry exactly Q = x1 x2
  Vec w = vec_add(f, *w0, vec_scale(f, f->neg(qs.evaluate(*w0)), v));

  Mat plane_eqs = Mat::from_rows(f, {vg, vec_mat(w, qs.gram())}, qs.dim());
  Subspace complement = kernel(plane_eqs);
  if (complement.dim() != qs.dim() - 2)
    throw Error("split_hyperbolic: complement has wrong dimension");
  QuadraticSpace residual = qs.restrict_to(complement);
  return {v, w, complement, residual};
}

QuadraticSpace canonical_space(const FieldPtr& f, size_t dim, int epsilon) {
  if (dim == 0) throw Error("canonical_space: dimension must be positive");
  if ((dim % 2 == 0) != (epsilon != 0))
    throw ParityMismatch("epsilon must be +/-1 for even and 0 for odd dim");
  Mat c(f, dim, dim);
  size_t planes = (epsilon == -1) ? dim / 2 - 1 : dim / 2;
  for (size_t i = 0; i < planes; ++i) c.at(2 * i, 2 * i + 1) = 1;
  if (epsilon == -1) {
    uint32_t e = f->canonical_e();
    size_t r = dim - 2;
    if (f->char2()) {
      c.at(r, r) = 1;
      c.at(r, r + 1) = 1;
      c.at(r + 1, r + 1) = e;
    } else {
      c.at(r, r) = 1;
      c.at(r + 1, r + 1) = f->neg(e);
    }
  } else if (dim % 2 == 1) {
    c.at(dim - 1, dim - 1) = 1;
  }
  return QuadraticSpace(std::move(c));
}

namespace {

// the normal-form residual block of the minus type
Mat minus_target(const FieldPtr& f) {
  Mat t(f, 2, 2);
  uint32_t e = f->canonical_e();
  if (f->char2()) {
    t.at(0, 0) = 1;
    t.at(0, 1) = 1;
    t.at(1, 1) = e;
  } else {
    t.at(0, 0) = 1;
    t.at(1, 1) = f->neg(e);
  }
  return t;
}

// first invertible 2x2 matrix (entry-lexicographic order) carrying the
// residual coefficients onto the target block
Mat normalize_minus(const QuadraticSpace& residual, const Mat& target,
                    const Budget& budget) {
  const auto& f = residual.field();
  uint64_t q = f->q();
  if (q * q * q * q > budget.max_scan)
    throw BudgetExceeded("minus-type normalization scan exceeds budget");
  Mat m(f, 2, 2);
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b)
      for (uint64_t c = 0; c < q; ++c)
        for (uint64_t d = 0; d < q; ++d) {
          m.at(0, 0) = static_cast<uint32_t>(a);
          m.at(0, 1) = static_cast<uint32_t>(b);
          m.at(1, 0) = static_cast<uint32_t>(c);
          m.at(1, 1) = static_cast<uint32_t>(d);
          if (f->sub(f->mul(m.at(0, 0), m.at(1, 1)),
                     f->mul(m.at(0, 1), m.at(1, 0))) == 0)
            continue;
          if (residual.in_basis(m).coeffs() == target) return m;
        }
  throw Error("anisotropic 2-dim residual failed to normalize");
}

}  // namespace

ClassificationReport canonical_form(const QuadraticSpace& qs,
                                    const Budget& budget) {
  if (qs.radical().dim() != 0)
    throw NonTrivialRadical("canonical_form requires trivial radical");
  const auto& f = qs.field();
  size_t n = qs.dim();

  std::vector<Vec> rows;       // canonical basis, in input coordinates
  Mat pullback = Mat::identity(f, n);  // current coords -> input coords
  QuadraticSpace cur = qs;
  size_t witt = 0;
  while (true) {
    auto v = find_singular_vector(cur, budget);
    if (!v) break;
    HyperbolicSplit split = split_hyperbolic(cur, *v);
    rows.push_back(vec_mat(split.v, pullback));
    rows.push_back(vec_mat(split.w, pullback));
    pullback = split.complement.basis() * pullback;
    cur = split.residual;
    ++witt;
  }

  size_t r = cur.dim();
  if (r > 2) throw Error("anisotropic residual of dimension > 2");

  ClassificationReport rep{f,
                           n,
                           ClassificationReport::Kind::Plus,
                           witt,
                           Mat(f, n, n),
                           Mat(f, n, n),
                           Mat(f, n, n),
                           std::nullopt,
                           std::nullopt};
  for (size_t i = 0; i < witt; ++i) rep.canonical_coeffs.at(2 * i, 2 * i + 1) = 1;

  if (r == 1) {
    rep.kind = ClassificationReport::Kind::OddDim;
    uint32_t a = cur.coeffs().at(0, 0);
    uint32_t scale, canon;
    if (f->char2() || f->is_square(a)) {
      scale = f->inv(f->sqrt(a));
      canon = 1;
    } else {
      uint32_t e = f->canonical_e();
      scale = f->sqrt(f->div(e, a));
      canon = e;
    }
    if (!f->char2()) rep.residual_is_square = f->is_square(a);
    rows.push_back(vec_scale(f, scale, pullback.row(0)));
    rep.canonical_coeffs.at(n - 1, n - 1) = canon;
  } else if (r == 2) {
    rep.kind = ClassificationReport::Kind::Minus;
    Mat target = minus_target(f);
    Mat m = normalize_minus(cur, target, budget);
    Mat new_rows = m * pullback;
    rows.push_back(new_rows.row(0));
    rows.push_back(new_rows.row(1));
    rep.e_used = f->canonical_e();
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = i; j < 2; ++j)
        rep.canonical_coeffs.at(n - 2 + i, n - 2 + j) = target.at(i, j);
  }

  rep.canonical_basis = Mat::from_rows(f, rows, n);
  rep.transform = rep.canonical_basis.inverse();
  if (qs.in_basis(rep.canonical_basis).coeffs() != rep.canonical_coeffs)
    throw Error("canonical transform does not reproduce the normal form");
  return rep;
}

bool is_isomorphic(const QuadraticSpace& a, const QuadraticSpace& b,
                   const Budget& budget) {
  require_same_field(*a.field(), *b.field());
  if (a.dim() != b.dim()) return false;
  size_t rad_a = a.radical().dim(), rad_b = b.radical().dim();
  if (rad_a != rad_b) return false;
  if (rad_a == 0) {
    ClassificationReport ra = canonical_form(a, budget);
    ClassificationReport rb = canonical_form(b, budget);
    if (ra.kind != rb.kind || ra.witt_index != rb.witt_index) return false;
    if (ra.kind == ClassificationReport::Kind::OddDim && !a.field()->char2())
      return ra.residual_is_square == rb.residual_is_square;
    return true;
  }
  // brute-force matrix search
  const auto& f = a.field();
  uint64_t q = f->q();
  size_t n = a.dim();
  uint64_t total = 1;
  for (size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > budget.max_scan)
      throw BudgetExceeded("isomorphism matrix search exceeds budget");
  }
  Mat m(f, n, n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) = static_cast<uint32_t>(v % q);
        v /= q;
      }
    if (!m.invertible()) continue;
    if (fold_upper(m.transpose() * a.coeffs() * m) == b.coeffs()) return true;
  }
  return false;
}

CensusReport class_census(const FieldPtr& f, size_t n, const Budget& budget) {
  uint64_t q = f->q();
  size_t entries = n * (n + 1) / 2;
  uint64_t total = 1;
  for (size_t i = 0; i < entries; ++i) {
    total *= q;
    if (total > budget.max_scan)
      throw BudgetExceeded("census enumeration exceeds budget");
  }

  CensusReport report{f, n, total, 0, {}};
  std::map<std::pair<int, size_t>, size_t> bucket_index;
  Mat c(f, n, n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        c.at(i, j) = static_cast<uint32_t>(v % q);
        v /= q;
      }
    QuadraticSpace qs(c);
    if (qs.radical().dim() != 0) continue;
    ++report.forms_trivial_radical;
    ClassificationReport rep = canonical_form(qs, budget);
    // virtual-space classes: the square class of an odd-dimension
    // residual is not part of the key
    auto key = std::make_pair(static_cast<int>(rep.kind), rep.witt_index);
    auto it = bucket_index.find(key);
    if (it == bucket_index.end()) {
      bucket_index.emplace(key, report.classes.size());
      report.classes.push_back(CensusClass{rep.kind, rep.witt_index, c, 1});
    } else {
      ++report.classes[it->second].count;
    }
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const CensusClass& a, const CensusClass& b) {
              return std::make_pair(static_cast<int>(a.kind), a.witt_index) <
                     std::make_pair(static_cast<int>(b.kind), b.witt_index);
            });
  return report;
}

uint64_t count_singular_vectors(const QuadraticSpace& qs, const Budget& budget) {
  check_scan_budget(qs.field()->q(), qs.dim(), budget);
  uint64_t count = 0;
  scan_vectors(qs.field()->q(), qs.dim(), [&](const Vec& x) {
    if (qs.evaluate(x) == 0) ++count;
    return false;
  });
  return count;
}

}  // namespace vqs
