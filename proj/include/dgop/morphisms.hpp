#pragma once

#include "dgop/quotient.hpp"

namespace dgop {

// A morphism of presented operads given by images of generators (generator-linear).
struct MorphismSpec {
  std::string name;
  QuadraticData source;
  QuadraticData target;
  std::vector<SmallComb> images;  // per source generator, in target generators
};

// images by printed names: {source name, {{coefficient, target name}, ...}}
MorphismSpec make_morphism(const std::string& name, const std::string& source_id, const std::string& target_id,
                           const std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>>& images);

// Tree-wise image in the free operad of the target.
LinComb<TreeMonomial> map_element(const MorphismSpec& m, const LinComb<TreeMonomial>& x);
MorphismSpec compose_morphisms(const MorphismSpec& outer, const MorphismSpec& inner);  // outer o inner

struct MorphismReport {
  std::string name;
  std::vector<CheckLine> lines;
  bool passed() const;
};

// degrees, equivariance, d on generators and on F(3), relations to zero in the target at arity 3
MorphismReport check_well_defined(const MorphismSpec& m);

// the same morphisms landing in the explicit models: relations of K evaluate to 0 in Π, those of Trias in Pasc
MorphismReport check_k_to_pi_explicit();
MorphismReport check_trias_to_pasc_explicit();

// The four generator-image morphisms of the second and fourth rows.
std::vector<MorphismSpec> horizontal_morphisms();

// Diagram (1): rows 1..5, columns 1..3.
struct DiagramNode {
  int row, column;
  std::string id;
};
const std::vector<DiagramNode>& diagram_nodes();
MorphismSpec row_arrow(int row, int from_column);  // (row, from_column) -> (row, from_column - 1)
MorphismSpec column_arrow(int lower_row, int column);  // (lower_row, column) -> (lower_row - 1, column)

// Square with corners (r, c), (r, c+1), (r+1, c), (r+1, c+1), r = 1..4, c = 1..2.
MorphismReport check_square(int r, int c);
std::vector<MorphismReport> check_all_squares();

struct DegreeZeroCase {
  std::string source_id;
  std::string classical_id;
  std::vector<std::vector<Scalar>> dims;  // arities 1..max
  std::vector<Scalar> expected;           // per arity
  bool dims_match = false;
  bool relations_match = false;  // degree-0 relation span = classical relations
};

std::vector<DegreeZeroCase> check_degree_zero_identifications(int max_arity);

// Rows 2, 3, 4: the left operad is the middle one modulo the ideal generated by the image of the right one.
MorphismReport check_row_exactness(int row, int max_arity);

}  // namespace dgop
