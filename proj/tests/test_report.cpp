#include "dgop/realization.hpp"
#include "dgop/report.hpp"

#include <doctest.h>

using namespace dgop;

TEST_CASE("oracles agree with independent enumerations") {
  for (int n = 1; n <= 7; ++n) {
    auto op = oracle::ordered_partitions(n);
    for (int k = 0; k < n; ++k) CHECK(op[k] == permutohedron_faces(n, k));
    CHECK(oracle::planar_trees(n) == associahedron_faces(n));
  }
  CHECK(oracle::lambda_row(3) == std::vector<Scalar>{9, 9, 2});
  CHECK(oracle::coprod_row(3) == std::vector<Scalar>{6, 6, 2});
  CHECK_THROWS_AS(oracle::presentation_oracle("zin", 3), std::invalid_argument);
}

TEST_CASE("report schema") {
  RunReport rep;
  rep.command = "dual";
  rep.arguments = {{"pair", "pi-coprod"}};
  rep.append(duality_checks("pi-coprod"));
  auto j = rep.to_json();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j.contains("conventions"));
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    for (const char* f : {"check", "params", "status", "expected", "actual", "elapsed_ms"}) CHECK(c.contains(f));
    CHECK(c["status"] == "pass");
  }
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("reports are deterministic apart from timing") {
  auto run = [] {
    RunReport rep;
    rep.command = "verify";
    rep.append(verify_checks("kprime", 4));
    rep.append(homology_checks("lambda", 3));
    return rep.to_json(false).dump();
  };
  CHECK(run() == run());
}

TEST_CASE("statuses and exit codes") {
  RunReport rep;
  rep.append(homology_checks("coprod", 3));
  bool conj = false;
  for (const auto& c : rep.checks) conj |= c.status == Status::conjectural_pass;
  CHECK(conj);
  CHECK(rep.exit_code() == 0);
  CheckLine bad{"x", "", false, false, "1", "2"};
  rep.append({from_line(bad, {}, 0)});
  CHECK(rep.exit_code() == 1);
  CHECK(status_name(Status::conjectural_pass) == "conjectural-pass");
}

TEST_CASE("verify argument validation") {
  CHECK_THROWS_AS(verify_checks("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_checks("pi", 0), std::invalid_argument);
}

TEST_CASE("csv export") {
  auto csv = dimension_csv(3);
  CHECK(csv.rfind("operad,n,k,dim\n", 0) == 0);
  CHECK(csv.find("pi,3,1,6\n") != std::string::npos);
  CHECK(csv.find("pasc,3,2,1\n") != std::string::npos);
  CHECK(csv.find("lambda,3,2,2\n") != std::string::npos);
  auto text = table_text(3);
  CHECK(text.find("DIFFER") == std::string::npos);
}
