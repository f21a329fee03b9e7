#include "vqs/embedding.hpp"

#include <algorithm>

#include "vqs/iso_groups.hpp"

namespace vqs {

namespace {

// lex-min v in the subspace w with B(u,v)=1
Vec solve_pairing(const Mat& gram, const Subspace& w, const Vec& u) {
  const auto& f = gram.field();
  Vec r = vec_mat(u, gram);
  Mat eq(f, 1, w.dim());
  for (size_t j = 0; j < w.dim(); ++j) {
    Vec wj = w.basis().row(j);
    uint32_t c = 0;
    for (size_t t = 0; t < wj.size(); ++t) c = f->add(c, f->mul(r[t], wj[t]));
    eq.at(0, j) = c;
  }
  auto y = solve_lex_min(eq, {1});
  if (!y) throw Error("pairing partner not found in a non-degenerate space");
  return vec_mat(*y, w.basis());
}

}  // namespace

HyperbolicComplement hyperbolic_complement(const Mat& gram,
                                           const Subspace& n_sub) {
  if (!gram.invertible())
    throw DegenerateAmbient("hyperbolic_complement: gram is singular");
  for (size_t i = 0; i < n_sub.dim(); ++i)
    for (size_t j = 0; j < n_sub.dim(); ++j)
      if (bilinear(n_sub.basis().row(i), gram, n_sub.basis().row(j)) != 0)
        throw NotTotallyIsotropic("B does not vanish on N");

  const auto& f = gram.field();
  size_t n = gram.rows();
  Subspace w = Subspace::full(f, n);
  Subspace n_rem = n_sub;
  std::vector<Vec> sigma_rows, ntilde_rows;
  while (n_rem.dim() > 0) {
    Vec u = n_rem.basis().row(0);
    Vec v = solve_pairing(gram, w, u);
    sigma_rows.push_back(u);
    sigma_rows.push_back(v);
    ntilde_rows.push_back(v);
    Subspace plane =
        Subspace::from_rows(Mat::from_rows(f, {u, v}, n));
    w = w.intersect(perp(plane, gram));
    n_rem = n_sub.intersect(w);
  }
  HyperbolicComplement hc{
      Subspace::from_rows(Mat::from_rows(f, sigma_rows, n)),
      Subspace::from_rows(Mat::from_rows(f, ntilde_rows, n))};

  if (hc.sigma.dim() != 2 * n_sub.dim())
    throw Error("hyperbolic complement: wrong sigma dimension");
  if (perp(n_sub, gram).intersect(hc.sigma) != n_sub)
    throw Error("hyperbolic complement: N^perp cap Sigma != N");
  Mat sb = hc.sigma.basis();
  if (!(sb * gram * sb.transpose()).invertible())
    throw Error("hyperbolic complement: B degenerate on Sigma");
  return hc;
}

Mat symplectic_basis(const Mat& gram) {
  const auto& f = gram.field();
  if (!f->char2()) throw Error("symplectic_basis requires characteristic 2");
  if (gram.rows() != gram.cols() || !gram.is_symmetric())
    throw ShapeMismatch("symplectic_basis: gram must be square symmetric");
  size_t n = gram.rows();
  if (n % 2 == 1)
    throw OddDimension("alternating forms have even rank; no symplectic basis "
                       "in odd dimension");
  if (!gram.invertible()) throw DegenerateGram("gram is singular");

  Subspace w = Subspace::full(f, n);
  std::vector<Vec> rows;
  while (w.dim() > 0) {
    Vec u = w.basis().row(0);
    Vec v = solve_pairing(gram, w, u);
    rows.push_back(u);
    rows.push_back(v);
    Subspace plane = Subspace::from_rows(Mat::from_rows(f, {u, v}, n));
    w = w.intersect(perp(plane, gram));
  }
  Mat basis = Mat::from_rows(f, rows, n);

  Mat transformed = basis * gram * basis.transpose();
  Mat expected(f, n, n);
  for (size_t i = 0; i + 1 < n; i += 2) {
    expected.at(i, i + 1) = 1;
    expected.at(i + 1, i) = 1;
  }
  if (transformed != expected)
    throw Error("symplectic basis postcondition failed");
  return basis;
}

VirtualQuadraticSpace embed_ambient(const QuadraticSpace& u_space) {
  const auto& f = u_space.field();
  size_t m = u_space.dim();
  Subspace n = kernel(u_space.gram());
  size_t k = n.dim();

  Mat c(f, m + k, m + k);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) c.at(i, j) = u_space.coeffs().at(i, j);
  for (size_t i = 0; i < k; ++i) c.at(n.pivots()[i], m + i) = 1;

  Mat u_rows(f, m, m + k);
  for (size_t i = 0; i < m; ++i) u_rows.at(i, i) = 1;
  VirtualQuadraticSpace vqs(QuadraticSpace(std::move(c)),
                            Subspace::from_rows(u_rows));
  if (!vqs.is_minimal()) throw Error("embed_ambient produced non-minimal space");
  return vqs;
}

MinimalizeResult minimalize(const VirtualQuadraticSpace& vqs) {
  const auto& f = vqs.ambient().field();
  const Mat& gram = vqs.ambient().gram();
  const Subspace& u = vqs.u_sub();

  Subspace u_perp = perp(u, gram);
  Subspace n = u.intersect(u_perp);
  HyperbolicComplement hc = hyperbolic_complement(gram, n);
  Subspace sigma_perp = perp(hc.sigma, gram);
  Subspace m_sub = u.intersect(sigma_perp);
  Subspace m_hat = perp(m_sub, gram).intersect(sigma_perp);
  Subspace vm = u.sum(hc.sigma);

  MinimalDecomposition dec{n, m_sub, hc.sigma, hc.n_tilde, m_hat, vm};

  // Prop-3.3 structure checks
  if (n.sum(m_sub) != u) throw Error("minimalize: U != N + M");
  if (m_hat.sum(n) != u_perp) throw Error("minimalize: U^perp != M^hat + N");
  if (u.intersect(hc.sigma) != n || u_perp.intersect(hc.sigma) != n)
    throw Error("minimalize: Sigma meets U or U^perp outside N");
  if (vm.dim() != u.dim() + n.dim())
    throw Error("minimalize: dimension formula violated");

  Mat vm_basis = vm.basis();
  QuadraticSpace q_m = vqs.ambient().in_basis(vm_basis);
  std::vector<Vec> u_rows;
  for (size_t i = 0; i < u.dim(); ++i) {
    auto coords = vm.coordinates(u.basis().row(i));
    if (!coords) throw Error("minimalize: U not inside V_m");
    u_rows.push_back(*coords);
  }
  VirtualQuadraticSpace minimal(
      q_m, Subspace::from_rows(Mat::from_rows(f, u_rows, vm.dim())));
  if (!minimal.is_minimal())
    throw Error("minimalize: result does not satisfy U^perp <= U");
  return {std::move(minimal), std::move(dec), std::move(vm_basis)};
}

bool iso_preserving_restriction_check(const VirtualQuadraticSpace& vqs,
                                      const MinimalizeResult& minimal) {
  IsometrySet big = enumerate_virtual_isometries(vqs);
  IsometrySet small = enumerate_virtual_isometries(minimal.space);
  if (big.order != small.order) return false;

  const Subspace& vm = minimal.decomp.vm;
  std::vector<Mat> restricted;
  for (const Mat& phi : *big.elements) {
    Mat phi_t = phi.transpose();
    std::vector<Vec> rows;
    for (size_t i = 0; i < vm.dim(); ++i) {
      auto coords = vm.coordinates(vec_mat(vm.basis().row(i), phi_t));
      if (!coords) return false;  // V_m not preserved
      rows.push_back(*coords);
    }
    restricted.push_back(
        Mat::from_rows(vqs.ambient().field(), rows, vm.dim()).transpose());
  }
  auto lex = [](const Mat& a, const Mat& b) { return a.lex_less(b); };
  std::sort(restricted.begin(), restricted.end(), lex);
  std::vector<Mat> expected = *small.elements;
  std::sort(expected.begin(), expected.end(), lex);
  return restricted == expected;
}

}  // namespace vqs
