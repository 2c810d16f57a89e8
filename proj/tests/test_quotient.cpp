#include "dgop/quotient.hpp"
#include "dgop/realization.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

std::vector<Scalar> V(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("quotient dimensions at small arity") {
  QuadraticQuotient kq(presentation_kprime(), 4);
  CHECK(kq.dims(3) == V({5, 5, 1}));
  CHECK(kq.dims(4) == V({14, 21, 9, 1}));
  CHECK(quotient_dims(presentation_lambda(), 3) == V({9, 9, 2}));
  CHECK(quotient_dims(presentation_coprod(), 3) == V({6, 6, 2}));
  CHECK(quotient_dims(presentation_trias(), 3) == V({3, 3, 1}));
  CHECK(quotient_dims(presentation_pi(), 4) == V({24, 36, 14, 1}));
}

TEST_CASE("property: quotient plus ideal is the free operad") {
  for (const auto& id : {"pi", "pasc", "kprime", "trias", "coprod", "lambda", "dend", "dias", "leib"}) {
    auto q = presentation_by_id(id);
    for (int n = 3; n <= 4; ++n) {
      auto a = quotient_dims(q, n), b = ideal_dimension(q, n), f = free_dims(q, n);
      for (std::size_t k = 0; k < f.size(); ++k) {
        INFO(id << " n=" << n << " k=" << k);
        CHECK(a[k] + b[k] == f[k]);
      }
    }
  }
}

TEST_CASE("property: K' dims are the planar-tree counts") {
  QuadraticQuotient kq(presentation_kprime(), 5);
  for (int n = 1; n <= 5; ++n) CHECK(kq.dims(n) == associahedron_faces(n));
}

TEST_CASE("representatives round-trip and the differential descends") {
  for (const auto& id : {"pi", "kprime", "trias", "coprod", "lambda"}) {
    QuadraticQuotient Q(presentation_by_id(id), 4);
    for (int n = 1; n <= 4; ++n)
      for (int b = 0; b < Q.level(n).size(); ++b) {
        SparseVec want{{b, Rational(1)}};
        CHECK(Q.coords(n, Q.representative(n, b)) == want);
      }
    auto rep = quotient_differential_check(Q);
    for (const auto& l : rep.lines) {
      INFO(id << " " << l.check << " " << l.params << ": " << l.actual);
      CHECK(l.passed);
    }
  }
}

TEST_CASE("property: d² = 0 on the quotient") {
  for (const auto& id : {"pi", "pasc", "kprime", "trias", "coprod", "lambda"}) {
    QuadraticQuotient Q(presentation_by_id(id), 4);
    for (int n = 1; n <= 4; ++n)
      for (int b = 0; b < Q.level(n).size(); ++b) CHECK(Q.apply_d(n, Q.apply_d(n, {{b, Rational(1)}})).empty());
  }
}

TEST_CASE("integral lattices") {
  for (const auto& id : {"pi", "pasc", "kprime"}) {
    QuadraticQuotient Q(presentation_by_id(id), 4);
    for (int n = 1; n <= 4; ++n) {
      auto L = lattice_report(Q, n);
      INFO(id << " n=" << n);
      CHECK(L.torsion_free());
      CHECK(Q.level(n).integral);
    }
  }
}

TEST_CASE("explicit models are isomorphic to the presentations") {
  auto pi = pi_presentation_check(4);
  CHECK(pi.passed());
  auto pasc = pasc_presentation_check(5);
  CHECK(pasc.passed());
}

TEST_CASE("format_dims") { CHECK(format_dims(V({6, 6, 1})) == "(6,6,1)"); }
