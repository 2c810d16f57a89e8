#include "dgop/exalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dgop;

TEST_CASE("normalize_word") {
  std::vector<Label> w21{2, 1}, w11{1, 1}, w312{3, 1, 2};
  auto a = normalize_word(w21);
  CHECK(a.labels == std::vector<Label>{1, 2});
  CHECK(a.sign == -1);
  CHECK(normalize_word(w11).is_zero());
  auto c = normalize_word(w312);
  CHECK(c.labels == std::vector<Label>{1, 2, 3});
  CHECK(c.sign == 1);
  CHECK(normalize_word(std::vector<Label>{}).sign == 1);
}

TEST_CASE("koszul_sign") {
  std::vector<int> swap{1, 0}, odd{1, 1}, even{0, 0};
  CHECK(koszul_sign(swap, odd) == -1);
  CHECK(koszul_sign(swap, even) == 1);
  std::vector<int> cyc{1, 2, 0}, deg{1, 1, 0};
  CHECK(koszul_sign(cyc, deg) == -1);
  std::vector<int> bad{0, 0};
  CHECK_THROWS(koszul_sign(bad, odd));
}

TEST_CASE("graded_shuffles") {
  std::vector<int> one{1}, zero{0}, two{0, 0};
  auto s = graded_shuffles(one, one);
  REQUIRE(s.size() == 2);
  CHECK(s[0].order == std::vector<int>{0, 1});
  CHECK(s[0].sign == 1);
  CHECK(s[1].order == std::vector<int>{1, 0});
  CHECK(s[1].sign == -1);
  auto z = graded_shuffles(zero, zero);
  CHECK(z.size() == 2);
  CHECK(z[1].sign == 1);
  CHECK(graded_shuffles(two, zero).size() == 3);
}

// sign of a permutation by cycle count, for comparison
static int parity_by_cycles(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return (p.size() - cycles) % 2 ? -1 : 1;
}

TEST_CASE("property: all-odd koszul sign is the permutation sign, all-even is +1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 7;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> odd(n, 1), even(n, 2);
    CHECK(koszul_sign(p, odd) == parity_by_cycles(p));
    CHECK(koszul_sign(p, even) == 1);
  }
}

TEST_CASE("property: koszul sign is a cocycle") {
  // sign(p then q) = sign(p) * sign(q on the permuted degrees)
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    std::vector<int> deg(n), p(n), q(n);
    for (auto& d : deg) d = rng() % 3;
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::vector<int> pdeg(n), pq(n);
    for (int j = 0; j < n; ++j) pdeg[j] = deg[p[j]];
    for (int j = 0; j < n; ++j) pq[j] = p[q[j]];
    CHECK(koszul_sign(pq, deg) == koszul_sign(p, deg) * koszul_sign(q, pdeg));
  }
}

TEST_CASE("property: word sign equals the sorting permutation sign") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    std::vector<Label> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j) p[j] = w[j] - 1;
    CHECK(normalize_word(w).sign == parity_by_cycles(p));
  }
}

TEST_CASE("property: shuffle count and signs") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      std::vector<int> l(p, 1), r(q, 1);
      auto s = graded_shuffles(l, r);
      long binom = 1;
      for (int k = 0; k < p; ++k) binom = binom * (p + q - k) / (k + 1);
      CHECK(static_cast<long>(s.size()) == binom);
      for (const auto& sh : s) CHECK(sh.sign == koszul_sign(sh.order, std::vector<int>(p + q, 1)));
    }
}

TEST_CASE("LinComb arithmetic") {
  LinComb<int> a(1, 2), b(1, -2);
  CHECK((a + b).is_zero());
  a.add(2, 3);
  CHECK(a.coefficient(2) == 3);
  CHECK((Scalar(2) * a).coefficient(1) == 4);
  CHECK((a - a).is_zero());
}
