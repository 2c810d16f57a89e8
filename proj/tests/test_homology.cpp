#include "dgop/homology.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (long x : r) m.back().push_back(x);
  }
  return m;
}

}  // namespace

TEST_CASE("Smith normal form") {
  auto a = smith_normal_form(M({{2, 0}, {0, 0}}));
  CHECK(a.rank == 1);
  CHECK(a.factors == std::vector<Scalar>{2});
  auto b = smith_normal_form(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(b.factors == std::vector<Scalar>{1, 1, 1});
  auto c = smith_normal_form(M({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(c.factors == std::vector<Scalar>{2, 6, 12});
}

TEST_CASE("property: Smith factors divide and multiply to the gcd of minors") {
  // 2x2 case: d1 = gcd of entries, d1*d2 = |det|
  for (long a = -3; a <= 3; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long d = -3; d <= 3; d += 2) {
        auto s = smith_normal_form(M({{a, b}, {2 * b, d}}));
        Scalar det = abs(Scalar(a * d - 2 * b * b));
        if (det != 0) {
          REQUIRE(s.factors.size() == 2);
          CHECK(s.factors[0] * s.factors[1] == det);
          CHECK(s.factors[1] % s.factors[0] == 0);
        }
      }
}

TEST_CASE("interval complex") {
  ChainComplexData C;
  C.operad = "interval";
  C.arity = 1;
  C.direction = -1;
  C.labels = {{"a", "b"}, {"ab"}};
  C.d = {IntMatrix{}, M({{1}, {-1}})};
  auto H = homology(C);
  CHECK(H.concentrated_in_zero());
  CHECK(H.format() == "H0 = Z");
}

TEST_CASE("Π(2) complex") {
  auto C = build_complex("pi", 2);
  CHECK(C.dims() == std::vector<Scalar>{2, 1});
  REQUIRE(C.d[0].size() == 1);
  auto row = C.d[0][0];
  std::sort(row.begin(), row.end());
  CHECK(row == std::vector<Scalar>{-1, 1});
  CHECK(build_complex("pasc", 3).dims() == std::vector<Scalar>{3, 3, 1});
  CHECK(build_complex("kprime", 3).dims() == std::vector<Scalar>{5, 5, 1});
}

TEST_CASE("homology of the contractible families") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& id : {"pi", "pasc", "kprime", "trias"}) {
      auto C = build_complex(id, n);
      INFO(id << " n=" << n);
      CHECK(C.d_squared_zero());
      CHECK(C.euler_characteristic() == 1);
      CHECK(homology(C).concentrated_in_zero());
    }
}

TEST_CASE("degree-0 homology of the Lie column companions") {
  for (const auto& id : {"coprod", "lambda"}) {
    CHECK(homology(build_complex(id, 3)).format() == "H0 = Z^2");
    CHECK(homology(build_complex(id, 4)).format() == "H0 = Z^6");
  }
}

TEST_CASE("torsion is reported") {
  ChainComplexData C;
  C.operad = "rp2-like";
  C.direction = -1;
  C.labels = {{"v"}, {"e"}};
  C.d = {IntMatrix{}, M({{2}})};
  auto H = homology(C);
  CHECK(H.format() == "H0 = Z/2");
  CHECK_FALSE(H.concentrated_in_zero());
  CHECK_THROWS(build_complex("pi", 0));
}
