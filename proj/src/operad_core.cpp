#include "dgop/operad_core.hpp"

namespace dgop {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::sequential_associativity: return "sequential-associativity";
    case Axiom::parallel_associativity: return "parallel-associativity";
    case Axiom::equivariance: return "equivariance";
    case Axiom::chain_map: return "chain-map";
    case Axiom::d_squared: return "d-squared";
  }
  return "?";
}

const AxiomStatus& AxiomReport::status(Axiom a) const {
  for (const auto& s : axioms)
    if (s.axiom == a) return s;
  throw std::out_of_range("AxiomReport: axiom not checked");
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << operad << " (total arity <= " << max_total_arity << ")\n";
  for (const auto& s : axioms) {
    os << "  " << axiom_name(s.axiom) << ": " << (s.passed ? "pass" : "FAIL") << " (" << s.checked
       << " checks)";
    if (s.witness) os << "\n    witness: " << s.witness->text;
    os << "\n";
  }
  return os.str();
}

}  // namespace dgop
