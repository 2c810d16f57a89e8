#include "dgop/operad_core.hpp"
#include "dgop/pasc_operad.hpp"
#include "dgop/presentations.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

using C = SubsetCell;
LinComb<C> e(std::vector<Label> w) { return make_subset(w); }

long binom(int n, int k) {
  long b = 1;
  for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
  return b;
}

}  // namespace

TEST_CASE("θ derivations") {
  CHECK(pasc_theta(1, e({1})).is_zero());
  CHECK(pasc_theta(2, e({1, 2})) == -e({1}));
  CHECK(pasc_theta(1, e({1, 2, 3})) == e({2, 3}));
}

TEST_CASE("Pasc differential") {
  CHECK(pasc_d(C{{1}}).is_zero());
  CHECK(pasc_d(C{{1, 2}}) == e({1}) - e({2}));
  for (const auto& c : pasc_basis(4)) {
    LinComb<C> dd;
    for (const auto& [x, a] : pasc_d(c)) dd.add_scaled(pasc_d(x), a);
    CHECK(dd.is_zero());
  }
  CHECK(pasc_basis(4).size() == 15);
}

TEST_CASE("Pasc composition") {
  PascOperad op;
  CHECK(compose_std(op, e({1}), 2, 1, e({1}), 2) == e({1}));
  CHECK(compose_std(op, e({1}), 2, 2, e({1}), 2) == e({1}));
  CHECK(compose_std(op, e({1}), 2, 2, e({1, 2}), 2).is_zero());
}

TEST_CASE("Pasc relabel under the fixed τ") {
  CHECK(pasc_relabel(C{{3}}, tau_map(TauReading::cycle_321, 2)) == e({1}));
  CHECK(pasc_relabel(C{{1, 2}}, LabelMap::from_images(std::vector<Label>{2, 1})) == -e({1, 2}));
}

TEST_CASE("property: Pasc(n) dims are binomial") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<long> d(n, 0);
    for (const auto& c : pasc_basis(n)) d[c.dim()]++;
    for (int k = 0; k < n; ++k) CHECK(d[k] == binom(n, k + 1));
  }
}

TEST_CASE("property: degree-0 cells form a suboperad of dimension n") {
  PascOperad op;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int i = 1; i <= p; ++i)
        for (Label a = 1; a <= p; ++a)
          for (Label b = 1; b <= q; ++b) {
            auto r = compose_std(op, e({a}), p, i, e({b}), q);
            REQUIRE(r.size() == 1);
            CHECK(r.begin()->first.dim() == 0);
            CHECK(r.begin()->second == 1);
          }
}

TEST_CASE("Trias relations in the nonsymmetric Pasc") {
  auto rep = trias_realization_check(5);
  CHECK(rep.relations.size() == 12);
  for (const auto& r : rep.relations) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.holds);
  }
  CHECK(rep.dims_match);
  CHECK(rep.quotient_dims[2] == std::vector<Scalar>{3, 3, 1});
}
