#include "dgop/quotient.hpp"
#include "dgop/series.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

std::vector<Scalar> V(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.push_back(x);
  return v;
}

Scalar factorial(int n) {
  Scalar f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Scalar binom(int n, int k) {
  Scalar b = 1;
  for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
  return b;
}

}  // namespace

TEST_CASE("closed forms at small arity") {
  auto pasc = closed_form_coefficients("pasc", 5);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) CHECK(pasc.at(n, k) == binom(n, k + 1));
  CHECK(closed_form_coefficients("lambda", 3).row(3) == V({9, 9, 2}));
  auto dias = closed_form_coefficients("dias", 6);
  for (int n = 1; n <= 6; ++n) CHECK(dias.row(n) == V({n}));
  CHECK(closed_form_coefficients("pi", 4).row(4) == V({24, 36, 14, 1}));
  CHECK(closed_form_coefficients("kprime", 4).row(4) == V({14, 21, 9, 1}));
  CHECK(closed_form_coefficients("dend", 5).row(5) == V({42}));
  CHECK(closed_form_coefficients("coprod", 3).row(3) == V({6, 6, 2}));
  CHECK_THROWS_AS(table_entry("nope"), std::invalid_argument);
}

TEST_CASE("all fifteen table entries: closed form, sum form and computed truncation") {
  CHECK(table_entries().size() == 15);
  for (const auto& e : table_entries()) {
    const int N = (e.id == "pi" || e.id == "pasc") ? 7 : 4;
    INFO(e.id);
    auto closed = closed_form_coefficients(e.id, N);
    CHECK(closed == sum_form_coefficients(e.id, N));
    CHECK(series_truncate(e.id, N) == closed);
  }
}

TEST_CASE("suspension") {
  auto com = closed_form_coefficients("com", 5);
  auto s = suspension_series(com);
  for (int n = 1; n <= 5; ++n) {
    CHECK(s.at(n, n - 1) == 1);
    for (int k = 0; k < n - 1; ++k) CHECK(s.at(n, k) == 0);
  }
  CHECK(s.row(2) == V({0, 1}));
  CHECK(desuspension_series(s) == com);
  CHECK_THROWS_AS(desuspension_series(com), std::domain_error);
}

TEST_CASE("property: suspension agrees with -g(-tx,t)/t on series") {
  for (const auto& id : {"pasc", "pi", "lie", "perm"}) {
    auto g = closed_form_coefficients(id, 5);
    auto b = to_bi(g);
    // -g(-t x, t)/t
    auto sub = b.substitute_x({Rational(0), Rational(-1)});
    auto alt = (-sub).divided_by_poly({Rational(0), Rational(1)});
    CHECK(from_bi(alt, g.kind, g.name) == suspension_series(g));
  }
}

TEST_CASE("substitution") {
  auto id = truncation_from_dims("x", SeriesKind::exponential, {V({1}), V({0}), V({0}), V({0})});
  auto lie = closed_form_coefficients("lie", 4);
  CHECK(series_substitute(lie, id, 4) == lie);
  CHECK(series_substitute(id, lie, 4) == lie);
  auto as = closed_form_coefficients("as", 4);
  CHECK_THROWS_AS(series_substitute(lie, as, 4), std::invalid_argument);
  // Com(Lie) = As on the level of exponential series: n! in arity n
  auto com = closed_form_coefficients("com", 5);
  auto assoc = series_substitute(com, closed_form_coefficients("lie", 5), 5);
  for (int n = 1; n <= 5; ++n) CHECK(assoc.row(n) == std::vector<Scalar>{factorial(n)});
}

TEST_CASE("distributive law order and Koszul inverses") {
  auto d = distributive_law_order(6);
  CHECK(d.zin_outer);
  CHECK_FALSE(d.zin_inner);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"pi", "coprod"}, {"pasc", "lambda"}, {"kprime", "trias"}, {"com", "lie"}, {"as", "as"}}) {
    INFO(a << " " << b);
    CHECK(koszul_inverse_holds(a, b, 5));
  }
  CHECK_FALSE(koszul_inverse_literal("pi", "coprod", 5));
}

TEST_CASE("tensor-product dimension identities") {
  QuadraticQuotient t(presentation_by_id("trias-sym"), 4), c(presentation_coprod(), 4);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) {
      CHECK(t.dims(n)[k] == binom(n, k + 1) * factorial(n));
      CHECK(c.dims(n)[k] == binom(n, k + 1) * factorial(n - 1));
    }
}

TEST_CASE("from_bi rejects non-integral and negative coefficients") {
  BiSeries b(2);
  b[1] = {Rational(1, 2)};
  CHECK_THROWS_AS(from_bi(b, SeriesKind::ordinary, "half"), std::domain_error);
  b[1] = {Rational(0), Rational(1)};  // coefficient of t is -dim, so dim = -1
  CHECK_THROWS_AS(from_bi(b, SeriesKind::ordinary, "neg"), std::domain_error);
}
