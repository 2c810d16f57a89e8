#pragma once

#include "dgop/operad_core.hpp"
#include "dgop/quotient.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dgop {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { pass, fail, conjectural_pass };
std::string status_name(Status s);

struct CheckResult {
  std::string check;
  nlohmann::ordered_json params;
  Status status = Status::fail;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0;
};

CheckResult from_line(const CheckLine& l, nlohmann::ordered_json params, double elapsed_ms);

struct RunReport {
  std::string command;
  nlohmann::ordered_json arguments;
  std::vector<CheckResult> checks;

  void append(std::vector<CheckResult> more);
  bool all_passed() const;  // conjectural-pass counts as passing
  int exit_code() const { return all_passed() ? 0 : 1; }
  // timing fields dropped when with_timing is false, so two runs compare byte for byte
  nlohmann::ordered_json to_json(bool with_timing = true) const;
  std::string text() const;  // one line per check
};

// sign and reading choices every report is computed under
nlohmann::ordered_json frozen_conventions();

// Independent counts used as expectations.
namespace oracle {
std::vector<Scalar> ordered_partitions(int n);      // by degree: (n-k)! S(n, n-k)
std::vector<Scalar> binomial_row(int n);            // C(n, k+1)
std::vector<Scalar> coprod_row(int n);              // C(n, k+1) (n-1)!
std::vector<Scalar> lambda_row(int n);              // |coeff of t^k| in prod_{k<n} (n - k t)
std::vector<Scalar> planar_trees(int n);            // faces of the associahedron
std::vector<Scalar> presentation_oracle(const std::string& id, int n);  // throws for unknown ids
}  // namespace oracle

// The checks, grouped the way the CLI and the acceptance binary consume them.
std::vector<CheckResult> axiom_checks(const std::string& id, int max_total_arity, Execution ex = Execution::parallel);
std::vector<CheckResult> presentation_dim_checks(const std::string& id, int max_arity);
std::vector<CheckResult> model_relation_checks();
std::vector<CheckResult> duality_checks(const std::string& pair_id);
std::vector<CheckResult> homology_checks(const std::string& id, int arity);
std::vector<CheckResult> table_checks(int max_arity);
std::vector<CheckResult> series_identity_checks();
std::vector<CheckResult> well_defined_checks();
std::vector<CheckResult> square_checks();
std::vector<CheckResult> degree_zero_checks(int max_arity);
std::vector<CheckResult> exactness_checks(int row, int max_arity);
std::vector<CheckResult> integrality_checks(const std::string& id, int max_arity);

// what `verify <id> --max-arity N` runs
std::vector<CheckResult> verify_checks(const std::string& id, int max_arity, Execution ex = Execution::parallel);
const std::vector<std::string>& verifiable_operads();

// operad,n,k,dim rows for every table entry up to max_arity
std::string dimension_csv(int max_arity);
// computed truncations next to the closed forms
std::string table_text(int max_arity);

}  // namespace dgop
