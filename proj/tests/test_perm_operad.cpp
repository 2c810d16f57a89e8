#include "dgop/perm_operad.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

using P = OrderedPartition;
LinComb<P> mk(const std::vector<std::vector<Label>>& b) { return make_partition(b); }
LinComb<P> cell(const std::vector<std::vector<Label>>& b) { return LinComb<P>(P{b}); }

// surjections [n] -> [b] by brute force: ordered partitions of [n] into b blocks
long surjections(int n, int b) {
  long total = 0, count = 1;
  for (int k = 0; k < n; ++k) count *= b;
  for (long code = 0; code < count; ++code) {
    std::vector<char> hit(b, 0);
    long c = code;
    for (int k = 0; k < n; ++k, c /= b) hit[c % b] = 1;
    total += std::all_of(hit.begin(), hit.end(), [](char h) { return h; });
  }
  return total;
}

}  // namespace

TEST_CASE("Π basis and dimensions") {
  CHECK(pi_basis(1).size() == 1);
  auto b2 = pi_basis(2);
  CHECK(b2.size() == 3);
  auto b3 = pi_basis(3);
  CHECK(b3.size() == 13);
  std::vector<int> d3(3, 0);
  for (const auto& c : b3) d3[c.dim()]++;
  CHECK(d3 == std::vector<int>{6, 6, 1});
}

TEST_CASE("property: Π(n) face counts against brute-force surjections") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> d(n, 0);
    for (const auto& c : pi_basis(n)) d[c.dim()]++;
    for (int k = 0; k < n; ++k) {
      CHECK(d[k] == surjections(n, n - k));
      CHECK(permutohedron_faces(n, k) == surjections(n, n - k));
    }
  }
}

TEST_CASE("Π differential") {
  CHECK(pi_d(P{{{1}, {2}}}) == cell({{1, 2}}));
  CHECK(pi_d(P{{{1, 2}}}).is_zero());
  CHECK(pi_d(P{{{1}, {2}, {3}}}) == cell({{1, 2}, {3}}) + cell({{1}, {2, 3}}));
  // 2∧1 = -1∧2
  CHECK(pi_d(P{{{2}, {1}}}) == mk({{2, 1}}));
  CHECK(mk({{2, 1}}) == -cell({{1, 2}}));
}

TEST_CASE("property: d² = 0 on Π(n), n ≤ 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : pi_basis(n)) {
      LinComb<P> dd;
      for (const auto& [x, a] : pi_d(c)) dd.add_scaled(pi_d(x), a);
      CHECK(dd.is_zero());
    }
}

TEST_CASE("Π composition") {
  CHECK(pi_compose(P{{{1}, {2}}}, 1, P{{{3}, {4}}}) == cell({{3}, {2}, {4}}) + cell({{3}, {4}, {2}}));
  CHECK(pi_compose(P{{{1, 2}}}, 2, P{{{3, 4}}}) == cell({{1, 3, 4}}));
  // unit
  CHECK(pi_compose(P{{{1}}}, 1, P{{{2}, {3}}}) == cell({{2}, {3}}));
  CHECK(pi_compose(P{{{2}, {3}}}, 3, P{{{3}}}) == cell({{2}, {3}}));
}

TEST_CASE("Π relabel") {
  LabelMap swap = LabelMap::from_images(std::vector<Label>{2, 1});
  CHECK(pi_relabel(P{{{1, 2}}}, swap) == -cell({{1, 2}}));
  CHECK(pi_relabel(P{{{1}, {2}}}, swap) == cell({{2}, {1}}));
}
