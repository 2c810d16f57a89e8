#pragma once

#include "dgop/free_operad.hpp"
#include "dgop/linalg.hpp"

#include <map>

namespace dgop {

// coefficient * tau^power (outer o_slot inner), generators by printed name
struct PrintedTerm {
  int coefficient = 1;
  int tau_power = 0;
  std::string outer;
  int slot = 1;
  std::string inner;
};

// sides[0] = sides[1] = ...; a single side is an expression equal to zero
struct PrintedRelation {
  std::string name;
  std::vector<std::vector<PrintedTerm>> sides;
  std::string note;  // reading adopted where the printed form is ambiguous
};

// Which bijection the symbol tau denotes in a relation set.
enum class TauReading {
  cycle_321,  // tau(3)=2, tau(2)=1, tau(1)=3
  inverse     // tau(1)=2, tau(2)=3, tau(3)=1
};

struct QuadraticData {
  std::string id;
  std::string display;
  GeneratorSpace E;
  bool symmetric = true;
  std::vector<PrintedRelation> printed;
  std::map<std::string, std::pair<int, int>> aliases;  // printed name -> (generator, sign)
  TauReading tau = TauReading::cycle_321;
  std::vector<LinComb<TreeMonomial>> extra_relations;  // already in F(3), standard labels

  FreeOperad free() const { return FreeOperad(E, symmetric, id); }
  LinComb<TreeMonomial> generator_element(const std::string& name) const;  // leaves 1, 2
  LinComb<TreeMonomial> instantiate(const PrintedTerm& t) const;
  std::vector<LinComb<TreeMonomial>> relation_elements() const;  // one per printed equality
  // basis of the relation span in F(3), saturated under the symmetric group
  std::vector<LinComb<TreeMonomial>> relation_basis() const;
};

LabelMap tau_map(TauReading r, int power);

QuadraticData presentation_pi();
QuadraticData presentation_pasc();
QuadraticData presentation_kprime();
QuadraticData presentation_trias();
QuadraticData presentation_coprod();
QuadraticData presentation_lambda();

QuadraticData presentation_zin();
QuadraticData presentation_dend();
QuadraticData presentation_prelie();
QuadraticData presentation_com();
QuadraticData presentation_as();
QuadraticData presentation_lie();
QuadraticData presentation_perm();
QuadraticData presentation_dias();
QuadraticData presentation_leib();

// Symmetric operad attached to a nonsymmetric one: generators doubled, free action.
QuadraticData symmetrize(const QuadraticData& ns);

// Generators of degree 0 with the degree-0 part of the relation span.
QuadraticData degree_zero_part(const QuadraticData& q, const std::string& id);

QuadraticData presentation_by_id(const std::string& id);
std::vector<std::string> presentation_ids();

// dense coordinates of an element of F(n) on the free basis
struct FreeCoordinates {
  std::vector<TreeMonomial> basis;
  std::map<TreeMonomial, int> index;
  explicit FreeCoordinates(const FreeOperad& F, int n);
  SparseVec coords(const LinComb<TreeMonomial>& x) const;
};

}  // namespace dgop
