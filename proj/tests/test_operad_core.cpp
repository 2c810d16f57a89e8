#include "dgop/pasc_operad.hpp"
#include "dgop/perm_operad.hpp"

#include <doctest.h>

using namespace dgop;

TEST_CASE("labeled elements") {
  PermOperad op;
  OperadElement<OrderedPartition> u{{1}, LinComb<OrderedPartition>(op.unit(1))};
  OperadElement<OrderedPartition> b{{1, 2}, make_partition({{1}, {2}})};
  CHECK(compose_std(op, u, 1, b) == b);
  CHECK(compose_std(op, b, 2, u) == b);
  CHECK(differential(op, u).terms.is_zero());
  CHECK_THROWS_AS(compose_std(op, b, 3, u), std::invalid_argument);
  auto id = LabelMap::from_images(std::vector<Label>{1, 2});
  CHECK(relabel(op, b, id) == b);
  auto clash = LabelMap::from_images(std::vector<Label>{1, 1});
  CHECK_THROWS_AS(relabel(op, b, clash), std::invalid_argument);
}

TEST_CASE("axiom suite: Π and Pasc at moderate bounds") {
  auto pi = check_operad_axioms(PermOperad{}, 5);
  INFO(pi.summary());
  CHECK(pi.all_passed());
  CHECK(pi.axioms.size() == 6);
  auto pasc = check_operad_axioms(PascOperad{}, 6);
  INFO(pasc.summary());
  CHECK(pasc.all_passed());
  auto ns = check_operad_axioms(PascOperad{true}, 5);
  CHECK(ns.all_passed());
}

TEST_CASE("parallel kernels agree with the serial reference") {
  auto a = check_operad_axioms(PermOperad{}, 4, Execution::serial);
  auto b = check_operad_axioms(PermOperad{}, 4, Execution::parallel);
  CHECK(a == b);
  auto c = check_operad_axioms(SignCorrupted<PascOperad>{}, 4, Execution::serial);
  auto d = check_operad_axioms(SignCorrupted<PascOperad>{}, 4, Execution::parallel);
  // the smallest witness wins in both, so the failure reports coincide too
  CHECK(c == d);
}

TEST_CASE("negative control: a sign-corrupted composition breaks the chain-map law") {
  auto rep = check_operad_axioms(SignCorrupted<PermOperad>{}, 4);
  CHECK_FALSE(rep.all_passed());
  const auto& cm = rep.status(Axiom::chain_map);
  CHECK_FALSE(cm.passed);
  REQUIRE(cm.witness.has_value());
  CHECK_FALSE(cm.witness->text.empty());
  CHECK(rep.status(Axiom::d_squared).passed);
}
