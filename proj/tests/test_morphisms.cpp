#include "dgop/morphisms.hpp"

#include <doctest.h>

using namespace dgop;

namespace {

void require_pass(const MorphismReport& r) {
  for (const auto& l : r.lines) {
    INFO(r.name << " / " << l.check << " " << l.params << ": expected " << l.expected << ", got " << l.actual);
    CHECK(l.passed);
  }
}

}  // namespace

TEST_CASE("the four generator-image morphisms are well defined") {
  auto ms = horizontal_morphisms();
  REQUIRE(ms.size() == 4);
  for (const auto& m : ms) require_pass(check_well_defined(m));
  require_pass(check_k_to_pi_explicit());
  require_pass(check_trias_to_pasc_explicit());
}

TEST_CASE("every arrow of the diagram is well defined") {
  for (int r = 1; r <= 5; ++r)
    for (int c = 2; c <= 3; ++c) require_pass(check_well_defined(row_arrow(r, c)));
  for (int r = 2; r <= 5; ++r)
    for (int c = 1; c <= 3; ++c) require_pass(check_well_defined(column_arrow(r, c)));
  CHECK_THROWS_AS(row_arrow(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(column_arrow(1, 1), std::invalid_argument);
  CHECK(diagram_nodes().size() == 15);
}

TEST_CASE("negative controls") {
  // 1>2 sent to 1⊗2 instead of 2⊗1
  auto bad = make_morphism("bad K → Π", "k-sym", "pi",
                           {{"1<2", {{1, "1⊗2"}}},
                            {"1>2", {{1, "1⊗2"}}},
                            {"1|2", {{1, "1∧2"}}},
                            {"2<1", {{1, "2⊗1"}}},
                            {"2>1", {{1, "2⊗1"}}},
                            {"2|1", {{1, "2∧1"}}}});
  CHECK_FALSE(check_well_defined(bad).passed());
  // the bracket image with the wrong sign no longer commutes with d
  auto bad_bracket = make_morphism("bad Λ → K", "lambda", "k-sym",
                                   {{"1↶2", {{1, "1<2"}, {-1, "2>1"}}},
                                    {"2↶1", {{1, "2<1"}, {-1, "1>2"}}},
                                    {"[1,2]", {{1, "1|2"}, {-1, "2|1"}}}});
  CHECK_FALSE(check_well_defined(bad_bracket).passed());
  CHECK_THROWS(make_morphism("x", "pi", "zin", {{"nope", {}}}));
}

TEST_CASE("composition of morphisms") {
  auto lie_as = row_arrow(3, 3), as_com = row_arrow(3, 2);
  auto zero = compose_morphisms(as_com, lie_as);
  REQUIRE(zero.images.size() == 1);
  CHECK(zero.images[0].empty());
  CHECK_THROWS_AS(compose_morphisms(lie_as, as_com), std::invalid_argument);
  auto g = presentation_lie().generator_element("[1,2]");
  CHECK(map_element(zero, g).is_zero());
}

TEST_CASE("all drawn squares commute") {
  auto sq = check_all_squares();
  CHECK(sq.size() == 8);
  for (const auto& r : sq) require_pass(r);
  CHECK_THROWS_AS(check_square(5, 1), std::invalid_argument);
}

TEST_CASE("degree-zero identifications") {
  auto cases = check_degree_zero_identifications(5);
  REQUIRE(cases.size() == 5);
  for (const auto& c : cases) {
    INFO(c.source_id << " -> " << c.classical_id);
    CHECK(c.dims_match);
    CHECK(c.relations_match);
  }
  CHECK(cases[0].expected[3] == 24);
  CHECK(cases[2].expected[3] == 14);
}

TEST_CASE("row exactness") {
  for (int row = 2; row <= 4; ++row) require_pass(check_row_exactness(row, 4));
  auto com = check_row_exactness(3, 3);
  bool found = false;
  for (const auto& l : com.lines)
    if (l.check == "quotient dims" && l.params.ends_with("n=3")) {
      found = true;
      CHECK(l.actual == "(1)");
    }
  CHECK(found);
  CHECK_THROWS_AS(check_row_exactness(1, 3), std::invalid_argument);
}
