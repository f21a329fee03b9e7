#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vqs/classify.hpp"

using namespace vqs;
using Kind = ClassificationReport::Kind;
using oracle::make_form;
using oracle::make_mat;

namespace {

// all forms on GF(q)^n as upper-triangular coefficient matrices
std::vector<QuadraticSpace> all_forms(const FieldPtr& f, size_t n) {
  uint64_t q = f->q();
  size_t entries = n * (n + 1) / 2;
  uint64_t total = 1;
  for (size_t i = 0; i < entries; ++i) total *= q;
  std::vector<QuadraticSpace> out;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    Mat c(f, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        c.at(i, j) = static_cast<uint32_t>(v % q);
        v /= q;
      }
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("find_singular_vector examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  auto v = find_singular_vector(make_form(f3, {{0, 1}, {0, 0}}));
  REQUIRE(v.has_value());
  CHECK(*v == Vec{0, 1});

  CHECK_FALSE(find_singular_vector(make_form(f2, {{1, 1}, {0, 1}})).has_value());
  CHECK_FALSE(find_singular_vector(make_form(f3, {{1}})).has_value());

  CHECK_THROWS_AS(find_singular_vector(make_form(f2, {{1, 0}, {0, 1}})),
                  NonTrivialRadical);
}

TEST_CASE("split_hyperbolic examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  QuadraticSpace xy = make_form(f3, {{0, 1}, {0, 0}});
  HyperbolicSplit s = split_hyperbolic(xy, {0, 1});
  CHECK(s.residual.dim() == 0);
  CHECK(xy.evaluate(s.w) == 0);
  CHECK(bilinear(s.v, xy.gram(), s.w) == 1);

  QuadraticSpace odd3 = make_form(f3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  HyperbolicSplit s3 = split_hyperbolic(odd3, {0, 1, 0});
  CHECK(s3.residual.dim() == 1);
  CHECK(s3.residual.coeffs().at(0, 0) != 0);

  // splitting one plane off the dim-4 minus form leaves the dim-2 minus form
  QuadraticSpace minus4 = make_form(
      f2, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  HyperbolicSplit s4 = split_hyperbolic(minus4, {0, 1, 0, 0});
  CHECK(s4.residual.dim() == 2);
  CHECK(is_isomorphic(s4.residual, make_form(f2, {{1, 1}, {0, 1}})));

  CHECK_THROWS_AS(split_hyperbolic(xy, Vec{1, 1}), NotSingular);
  QuadraticSpace degen = make_form(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(split_hyperbolic(degen, Vec{0, 0, 1}), InRadical);
}

TEST_CASE("canonical_form examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  ClassificationReport plus = canonical_form(make_form(
      f2, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  CHECK(plus.kind == Kind::Plus);
  CHECK(plus.witt_index == 2);

  ClassificationReport minus = canonical_form(make_form(f2, {{1, 1}, {0, 1}}));
  CHECK(minus.kind == Kind::Minus);
  CHECK(minus.witt_index == 0);
  REQUIRE(minus.e_used.has_value());
  CHECK(*minus.e_used == 1);

  ClassificationReport odd = canonical_form(
      make_form(f3, {{0, 2, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(odd.kind == Kind::OddDim);
  CHECK(odd.witt_index == 1);
}

TEST_CASE("canonical transform reproduces the normal form") {
  std::mt19937_64 rng(61);
  for (uint64_t q : {2, 3, 4}) {
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    int done = 0;
    while (done < 25) {
      size_t n = 1 + rng() % 4;
      QuadraticSpace qs = oracle::random_form(f, n, rng);
      if (qs.radical().dim() != 0) continue;
      ClassificationReport rep = canonical_form(qs);
      CHECK(qs.in_basis(rep.canonical_basis).coeffs() == rep.canonical_coeffs);
      CHECK(rep.canonical_basis.invertible());
      CHECK(rep.witt_index <= n / 2);
      if (n % 2 == 0) {
        CHECK((rep.kind == Kind::Plus || rep.kind == Kind::Minus));
        CHECK(n == 2 * rep.witt_index + (rep.kind == Kind::Minus ? 2 : 0));
      } else {
        CHECK(rep.kind == Kind::OddDim);
        CHECK(n == 2 * rep.witt_index + 1);
      }
      // the canonical space of the same class classifies identically
      int eps = rep.kind == Kind::Plus ? 1 : rep.kind == Kind::Minus ? -1 : 0;
      QuadraticSpace canon = canonical_space(f, n, eps);
      CHECK(canonical_form(canon).canonical_coeffs == canon.coeffs());
      ++done;
    }
  }
}

TEST_CASE("is_isomorphic examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  QuadraticSpace xy = make_form(f3, {{0, 1}, {0, 0}});
  QuadraticSpace xy2 = make_form(f3, {{0, 2}, {0, 0}});
  CHECK(is_isomorphic(xy, xy2));
  CHECK(is_isomorphic(xy, xy));

  QuadraticSpace plus2 = make_form(f2, {{0, 1}, {0, 0}});
  QuadraticSpace minus2 = make_form(f2, {{1, 1}, {0, 1}});
  CHECK_FALSE(is_isomorphic(plus2, minus2));

  // odd characteristic, odd dimension: square classes are distinct forms
  CHECK_FALSE(is_isomorphic(make_form(f3, {{1}}), make_form(f3, {{2}})));
  CHECK(is_isomorphic(make_form(f3, {{1}}), make_form(f3, {{4 % 3}})));

  CHECK_THROWS_AS(is_isomorphic(plus2, xy), MixedFields);
}

TEST_CASE("classification agrees with brute-force isomorphism") {
  struct Case { uint64_t q; size_t n; };
  for (auto [q, n] : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    auto f = Field::make(q, 1);
    auto forms = all_forms(f, n);
    for (size_t i = 0; i < forms.size(); ++i)
      for (size_t j = i; j < forms.size(); ++j) {
        bool brute = oracle::isomorphic_bruteforce(forms[i], forms[j]);
        bool structural = is_isomorphic(forms[i], forms[j]);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(structural == brute);
      }
  }
}

TEST_CASE("count_singular_vectors examples") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  CHECK(count_singular_vectors(make_form(f3, {{0, 1}, {0, 0}})) == 5);
  CHECK(count_singular_vectors(make_form(f2, {{1, 1}, {0, 1}})) == 1);
  CHECK(count_singular_vectors(make_form(
            f2, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}})) ==
        10);
}

TEST_CASE("singular-vector count is an isomorphism invariant") {
  auto f2 = Field::make(2, 1);
  for (size_t n : {2, 3}) {
    auto forms = all_forms(f2, n);
    for (const auto& a : forms) {
      if (a.radical().dim() != 0) continue;
      for (const auto& b : forms) {
        if (b.radical().dim() != 0) continue;
        if (is_isomorphic(a, b))
          CHECK(count_singular_vectors(a) == count_singular_vectors(b));
      }
    }
  }
}

TEST_CASE("class census") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);

  CensusReport c22 = class_census(f2, 2);
  CHECK(c22.forms_total == 8);
  CHECK(c22.classes.size() == 2);

  CensusReport c23 = class_census(f2, 3);
  CHECK(c23.forms_total == 64);
  CHECK(c23.classes.size() == 1);

  CensusReport c31 = class_census(f3, 1);
  CHECK(c31.classes.size() == 1);
  CHECK(c31.forms_trivial_radical == 2);  // x^2 and 2x^2, merged

  Budget tiny;
  tiny.max_scan = 10;
  CHECK_THROWS_AS(class_census(f3, 3, tiny), BudgetExceeded);
}

TEST_CASE("canonical_space shapes") {
  auto f2 = Field::make(2, 1);
  CHECK(canonical_space(f2, 4, 1).coeffs() ==
        make_mat(f2, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  CHECK(canonical_space(f2, 2, -1).coeffs() ==
        make_mat(f2, {{1, 1}, {0, 1}}));
  CHECK(canonical_space(f2, 3, 0).coeffs() ==
        make_mat(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(canonical_space(f2, 3, 1), ParityMismatch);
  CHECK_THROWS_AS(canonical_space(f2, 2, 0), ParityMismatch);
}
