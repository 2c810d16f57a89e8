// One line per acceptance criterion; exit status 1 if any of them fails.

#include "dgop/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace dgop;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> concat(std::vector<std::vector<CheckResult>> parts) {
  std::vector<CheckResult> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axioms: Π up to total arity 6, Pasc up to 7",
       [] { return concat({axiom_checks("pi", 6), axiom_checks("pasc", 7)}); }},
      {2, "presentations: quotient dimensions against the oracles",
       [] {
         return concat({presentation_dim_checks("pi", 5), presentation_dim_checks("pasc", 6),
                        presentation_dim_checks("kprime", 5), presentation_dim_checks("trias", 5),
                        presentation_dim_checks("coprod", 4), presentation_dim_checks("lambda", 4)});
       }},
      {3, "relations hold in the explicit models", [] { return model_relation_checks(); }},
      {4, "Koszul duality at arity 3",
       [] {
         return concat({duality_checks("pi-coprod"), duality_checks("pasc-lambda"), duality_checks("kprime-trias")});
       }},
      {5, "integral homology",
       [] {
         std::vector<std::vector<CheckResult>> parts;
         for (int n = 1; n <= 5; ++n) parts.push_back(homology_checks("pi", n));
         for (int n = 1; n <= 7; ++n) parts.push_back(homology_checks("pasc", n));
         for (int n = 1; n <= 5; ++n) parts.push_back(homology_checks("kprime", n));
         for (int n = 1; n <= 4; ++n) {
           parts.push_back(homology_checks("coprod", n));
           parts.push_back(homology_checks("lambda", n));
         }
         return concat(std::move(parts));
       }},
      {6, "generating series", [] { return concat({table_checks(4), series_identity_checks()}); }},
      {7, "morphisms, squares, degree-0 parts, row exactness",
       [] {
         return concat({well_defined_checks(), square_checks(), degree_zero_checks(5), exactness_checks(2, 4),
                        exactness_checks(3, 4), exactness_checks(4, 4)});
       }},
      {8, "integrality of the quotient lattices",
       [] {
         return concat({integrality_checks("pi", 4), integrality_checks("pasc", 4), integrality_checks("kprime", 4)});
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string error;
    try {
      checks = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int fail = error.empty() ? 0 : 1, conj = 0;
    for (const auto& r : checks) {
      fail += r.status == Status::fail;
      conj += r.status == Status::conjectural_pass;
    }
    all = all && fail == 0;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", s);
    std::cout << "criterion " << c.number << ": " << (fail ? "FAIL" : "PASS") << "  " << c.title << " ("
              << checks.size() << " checks";
    if (conj) std::cout << ", " << conj << " conjectural";
    if (fail) std::cout << ", " << fail << " failed";
    std::cout << ", " << timing << ")\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& r : checks)
      if (r.status == Status::fail)
        std::cout << "    failed: " << r.check << " " << r.params.dump() << " expected " << r.expected << ", got "
                  << r.actual << "\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
