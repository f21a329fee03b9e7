#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "vqs/embedding.hpp"
#include "vqs/iso_groups.hpp"

using namespace vqs;
using oracle::make_form;
using oracle::make_mat;

namespace {

// hyperbolic gram of k planes over f
Mat hyperbolic_gram(const FieldPtr& f, size_t k) {
  Mat g(f, 2 * k, 2 * k);
  for (size_t i = 0; i < k; ++i) {
    g.at(2 * i, 2 * i + 1) = 1;
    g.at(2 * i + 1, 2 * i) = 1;
  }
  return g;
}

void check_lemma_postconditions(const Mat& gram, const Subspace& n_sub,
                                const HyperbolicComplement& hc) {
  CHECK(hc.sigma.dim() == 2 * n_sub.dim());
  CHECK(perp(n_sub, gram).intersect(hc.sigma) == n_sub);
  if (hc.sigma.dim() > 0) {
    Mat sb = hc.sigma.basis();
    CHECK((sb * gram * sb.transpose()).invertible());
  }
  CHECK(n_sub.sum(hc.n_tilde) == hc.sigma);
}

}  // namespace

TEST_CASE("hyperbolic complement examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  Mat g2 = hyperbolic_gram(f2, 2);
  HyperbolicComplement empty =
      hyperbolic_complement(g2, Subspace::zero(f2, 4));
  CHECK(empty.sigma.dim() == 0);
  CHECK(empty.n_tilde.dim() == 0);

  Subspace e1 = Subspace::from_rows(make_mat(f2, {{1, 0, 0, 0}}));
  HyperbolicComplement hc = hyperbolic_complement(g2, e1);
  CHECK(hc.sigma ==
        Subspace::from_rows(make_mat(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(hc.n_tilde == Subspace::from_rows(make_mat(f2, {{0, 1, 0, 0}})));

  Mat g3 = hyperbolic_gram(f3, 2);
  Subspace n13 =
      Subspace::from_rows(make_mat(f3, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  HyperbolicComplement hc3 = hyperbolic_complement(g3, n13);
  CHECK(hc3.sigma == Subspace::full(f3, 4));
  check_lemma_postconditions(g3, n13, hc3);
}

TEST_CASE("hyperbolic complement rejects bad inputs") {
  auto f2 = Field::make(2, 1);
  Mat g = hyperbolic_gram(f2, 1);
  Subspace nonisotropic = Subspace::full(f2, 2);  // B(e1,e2)=1
  CHECK_THROWS_AS(hyperbolic_complement(g, nonisotropic), NotTotallyIsotropic);
  CHECK_THROWS_AS(hyperbolic_complement(Mat(f2, 2, 2), Subspace::zero(f2, 2)),
                  DegenerateAmbient);
}

TEST_CASE("hyperbolic complement postconditions on randomized inputs") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 100) {
    uint64_t q = std::array<uint64_t, 3>{2, 3, 4}[rng() % 3];
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    size_t k = 1 + rng() % 3;  // ambient dim 2, 4 or 6
    Mat gram = hyperbolic_gram(f, k);
    Subspace n_sub = oracle::random_subspace(f, 2 * k, k, rng);
    bool isotropic = true;
    for (size_t i = 0; i < n_sub.dim() && isotropic; ++i)
      for (size_t j = 0; j < n_sub.dim() && isotropic; ++j)
        isotropic =
            bilinear(n_sub.basis().row(i), gram, n_sub.basis().row(j)) == 0;
    if (!isotropic) continue;
    HyperbolicComplement hc = hyperbolic_complement(gram, n_sub);
    check_lemma_postconditions(gram, n_sub, hc);
    ++done;
  }
}

TEST_CASE("symplectic basis") {
  auto f2 = Field::make(2, 1);

  CHECK(symplectic_basis(hyperbolic_gram(f2, 1)) == Mat::identity(f2, 2));

  // gram of x1x2 + x3x4 + x1x3
  QuadraticSpace qs = make_form(
      f2, {{0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  Mat basis = symplectic_basis(qs.gram());
  Mat transformed = basis * qs.gram() * basis.transpose();
  CHECK(transformed == hyperbolic_gram(f2, 2));

  Mat odd(f2, 3, 3);
  odd.at(0, 1) = odd.at(1, 0) = 1;
  CHECK_THROWS_AS(symplectic_basis(odd), OddDimension);
  CHECK_THROWS_AS(symplectic_basis(Mat(f2, 2, 2)), DegenerateGram);
}

TEST_CASE("embed examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  // xy + z^2 over GF(2) -> x1x2 + x3^2 + x3x4 in GF(2)^4
  QuadraticSpace xyz = make_form(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  VirtualQuadraticSpace v = embed_ambient(xyz);
  CHECK(v.ambient().coeffs() ==
        make_mat(f2, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}}));
  CHECK(v.u_sub() == Subspace::from_rows(make_mat(
                         f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
  CHECK(v.is_minimal());

  // already non-degenerate: the ambient is the space itself
  QuadraticSpace xy3 = make_form(f3, {{0, 1}, {0, 0}});
  VirtualQuadraticSpace v3 = embed_ambient(xy3);
  CHECK(v3.ambient() == xy3);
  CHECK(v3.u_sub() == Subspace::full(f3, 2));

  // x^2 over GF(2): N = U, one hyperbolic partner
  QuadraticSpace sq = make_form(f2, {{1}});
  VirtualQuadraticSpace vs = embed_ambient(sq);
  CHECK(vs.ambient().coeffs() == make_mat(f2, {{1, 1}, {0, 0}}));
  CHECK(vs.u_perp() == vs.u_sub());
  CHECK(vs.is_minimal());
}

TEST_CASE("embed properties on random forms") {
  std::mt19937_64 rng(41);
  for (uint64_t q : {2, 3, 4}) {
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    for (size_t n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        QuadraticSpace u = oracle::random_form(f, n, rng);
        size_t rad_b = kernel(u.gram()).dim();
        VirtualQuadraticSpace v = embed_ambient(u);
        CHECK(v.ambient().gram().invertible());
        CHECK(v.is_minimal());
        CHECK(v.ambient().dim() == n + rad_b);
        // the restriction of the ambient form to the embedded U is Q
        CHECK(v.restricted_form().coeffs() == u.coeffs());
      }
    }
  }
}

TEST_CASE("minimalize examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  // already minimal input: identity decomposition
  QuadraticSpace xyz = make_form(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  VirtualQuadraticSpace small = embed_ambient(xyz);
  MinimalizeResult same = minimalize(small);
  CHECK(same.space.ambient() == small.ambient());
  CHECK(same.space.u_sub() == small.u_sub());
  CHECK(same.decomp.m_hat.dim() == 0);

  // pad with an extra hyperbolic plane: minimalization strips it
  QuadraticSpace plane = make_form(f2, {{0, 1}, {0, 0}});
  QuadraticSpace big_form = small.ambient().direct_sum(plane);
  Mat u_rows(f2, 3, 6);
  for (size_t i = 0; i < 3; ++i) u_rows.at(i, i) = 1;
  VirtualQuadraticSpace big(big_form, Subspace::from_rows(u_rows));
  MinimalizeResult min = minimalize(big);
  CHECK(min.space.ambient().dim() == 4);
  CHECK(min.decomp.vm.dim() == 4);
  CHECK(min.decomp.m_hat ==
        Subspace::from_rows(make_mat(
            f2, {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}})));
  CHECK(min.space.is_minimal());

  // odd characteristic with trivial N: V_m = U
  QuadraticSpace hyp4 = make_form(f3, {{0, 1, 0, 0},
                                       {0, 0, 0, 0},
                                       {0, 0, 0, 1},
                                       {0, 0, 0, 0}});
  Subspace u12 =
      Subspace::from_rows(make_mat(f3, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  MinimalizeResult m3 = minimalize(VirtualQuadraticSpace(hyp4, u12));
  CHECK(m3.decomp.sigma.dim() == 0);
  CHECK(m3.decomp.vm == u12);
  CHECK(m3.space.ambient().dim() == 2);
}

TEST_CASE("minimalize decomposition invariants") {
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 40) {
    uint64_t q = std::array<uint64_t, 3>{2, 3, 4}[rng() % 3];
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    size_t n = 2 + rng() % 4;
    QuadraticSpace amb = oracle::random_form(f, n, rng);
    if (!amb.gram().invertible()) continue;
    Subspace u = oracle::random_subspace(f, n, n, rng);
    MinimalizeResult min = minimalize(VirtualQuadraticSpace(amb, u));
    const MinimalDecomposition& d = min.decomp;
    CHECK(d.n_sub.sum(d.m_sub) == u);
    CHECK(d.sigma.dim() == 2 * d.n_sub.dim());
    CHECK(d.vm.dim() == u.dim() + d.n_sub.dim());
    CHECK(u.sum(d.sigma) == d.vm);
    CHECK(min.space.is_minimal());
    // idempotence
    MinimalizeResult again = minimalize(min.space);
    CHECK(again.space.ambient() == min.space.ambient());
    CHECK(again.space.u_sub() == min.space.u_sub());
    ++done;
  }
}

TEST_CASE("minimalization preserves the isometry group") {
  auto f2 = Field::make(2, 1);
  QuadraticSpace xyz = make_form(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  VirtualQuadraticSpace small = embed_ambient(xyz);

  // minimal input compared against itself
  MinimalizeResult same = minimalize(small);
  CHECK(iso_preserving_restriction_check(small, same));

  // the padded dim-6 ambient from the example above
  QuadraticSpace plane = make_form(f2, {{0, 1}, {0, 0}});
  QuadraticSpace big_form = small.ambient().direct_sum(plane);
  Mat u_rows(f2, 3, 6);
  for (size_t i = 0; i < 3; ++i) u_rows.at(i, i) = 1;
  VirtualQuadraticSpace big(big_form, Subspace::from_rows(u_rows));
  CHECK(iso_preserving_restriction_check(big, minimalize(big)));
}
