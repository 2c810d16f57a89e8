#include "dgop/presentations.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

std::vector<int> degree_counts(const FreeOperad& F, const std::vector<TreeMonomial>& ts, int n) {
  std::vector<int> d(n, 0);
  for (const auto& t : ts) d[F.dim(t)]++;
  return d;
}

std::vector<int> relation_ranks(const QuadraticData& q) {
  FreeOperad F = q.free();
  std::vector<int> d(3, 0);
  for (const auto& r : q.relation_basis()) d[F.dim(r.begin()->first)]++;
  return d;
}

}  // namespace

TEST_CASE("free operad sizes") {
  auto k = presentation_kprime();
  auto F = k.free();
  auto b3 = free_basis(k.E, 3, false);
  CHECK(b3.size() == 18);
  CHECK(degree_counts(F, b3, 3) == std::vector<int>{8, 8, 2});
  CHECK(free_basis(presentation_pi().E, 3, true).size() == 27);
  CHECK(free_basis(k.E, 1, false).size() == 1);
  CHECK(free_basis(presentation_pi().E, 1, true).size() == 1);
}

TEST_CASE("property: free basis counts") {
  // (2n-3)!! shapes with labels (symmetric) or Catalan(n-1) planar shapes, times g^(n-1)
  for (const auto& id : presentation_ids()) {
    auto q = presentation_by_id(id);
    const int g = q.E.size();
    for (int n = 1; n <= 4; ++n) {
      long shapes = 1;
      if (q.symmetric)
        for (int k = 1; k <= 2 * n - 3; k += 2) shapes *= k;
      else {
        long c = 1;
        for (int j = 0; j < n - 1; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
        shapes = c;
      }
      long gp = 1;
      for (int j = 0; j < n - 1; ++j) gp *= g;
      CHECK(static_cast<long>(free_basis(q.E, n, q.symmetric).size()) == shapes * gp);
    }
  }
}

TEST_CASE("relation ranks at arity 3") {
  CHECK(relation_ranks(presentation_kprime()) == std::vector<int>{3, 3, 1});
  auto pi = relation_ranks(presentation_pi());
  CHECK(pi[0] + pi[1] + pi[2] == 14);
  auto pasc = relation_ranks(presentation_pasc());
  CHECK(pasc[0] + pasc[1] + pasc[2] == 20);
}

TEST_CASE("property: free differential squares to zero and is a derivation of grafting") {
  for (const auto& id : {"pi", "pasc", "kprime", "trias", "coprod", "lambda"}) {
    auto q = presentation_by_id(id);
    auto F = q.free();
    for (int n = 1; n <= 4; ++n) {
      auto labels = iota_labels(n);
      for (const auto& t : F.basis(labels)) {
        LinComb<TreeMonomial> x(t);
        CHECK(differential_terms(F, differential_terms(F, x)).is_zero());
      }
    }
    auto rep = check_operad_axioms(F, 4);
    INFO(id << ": " << rep.summary());
    CHECK(rep.all_passed());
  }
}

TEST_CASE("lookup and errors") {
  auto pi = presentation_pi();
  CHECK(pi.E.index_of("1∧2") == 2);
  CHECK_THROWS(pi.E.index_of("nope"));
  CHECK_THROWS_AS(presentation_by_id("nope"), std::invalid_argument);
  auto k = presentation_by_id("k-sym");
  CHECK(k.symmetric);
  CHECK(k.E.size() == 6);
  auto z = degree_zero_part(pi, "pi0");
  CHECK(z.E.size() == 2);
}
