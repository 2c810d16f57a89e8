#pragma once

#include "dgop/presentations.hpp"

#include <array>

namespace dgop {

// Block signs of the weight-2 pairing, plus an optional extra sign when both factors are odd.
struct SignConvention {
  std::array<int, 3> symmetric_blocks{1, 1, 1};
  std::array<int, 2> nonsymmetric_blocks{1, 1};
  bool odd_odd = false;

  std::string describe() const;
  friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

// Basis of F_E(3): tau^k(x o_1 y) for k = 0,1,2 (symmetric, tau(3)=2, tau(2)=1, tau(1)=3)
// or x o_1 y, x o_2 y (nonsymmetric). Index (block * g + x) * g + y.
struct Weight2Space {
  int g = 0;
  bool symmetric = true;
  std::vector<int> degrees;  // of the generators

  int blocks() const { return symmetric ? 3 : 2; }
  int size() const { return blocks() * g * g; }
  int index(int block, int x, int y) const { return (block * g + x) * g + y; }
};

Weight2Space weight2_space(const GeneratorSpace& E, bool symmetric);

// x and y are generator combinations of q
LinComb<TreeMonomial> weight2_element(const QuadraticData& q, int block, const SmallComb& x, const SmallComb& y);

// Coordinates in the weight-2 basis whose generators are the rows of J (identity when J is empty).
std::vector<SparseVec> weight2_coords(const QuadraticData& q, const std::vector<LinComb<TreeMonomial>>& xs,
                                      const IntMatrix& J = {});

struct PairingMatrix {
  IntMatrix m;
  int block_size = 0;
  bool nondegenerate() const;  // determinant +-1 on every diagonal block
};

PairingMatrix pairing_matrix(const Weight2Space& W, const SignConvention& c);

// E* with the transposed action twisted by the sign character and the transposed differential.
GeneratorSpace dual_generators(const GeneratorSpace& E);

// {y : <r, y> = 0 for all r}; throws std::invalid_argument on a degenerate pairing
std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& R, const PairingMatrix& P);
// same with the pairing read from the other side
std::vector<SparseVec> orthogonal_complement_left(const std::vector<SparseVec>& R, const PairingMatrix& P);

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, int columns);

struct DualPair {
  std::string id;  // e.g. "pi-coprod"
  QuadraticData p;
  QuadraticData dual;
  IntMatrix J;  // row x: the generator x* of dual_generators(p.E) in the generators of `dual`
};

std::vector<DualPair> dual_pairs();
DualPair dual_pair_by_id(const std::string& id);  // throws std::invalid_argument

struct DualPairReport {
  std::string pair;
  SignConvention convention;
  int weight2_dim = 0;
  int rank_r = 0;
  int rank_perp = 0;
  int rank_dual = 0;
  int rank_joint = 0;     // rank of R-perp together with the listed dual relations
  bool spans_equal = false;
  bool reverse_equal = false;  // (R_dual)-perp = R
  bool involutive = false;     // (R-perp)-perp = R
  bool degrees_match = false;
  bool action_matches = false;
  bool differential_matches = false;

  bool passed() const {
    return spans_equal && reverse_equal && involutive && degrees_match && action_matches && differential_matches;
  }
};

DualPairReport verify_dual_pair(const DualPair& pair, const SignConvention& c);

struct ConventionSearch {
  std::vector<SignConvention> candidates;  // enumeration order
  std::vector<bool> passes;                // all three pairs verify
  int accepted = -1;
};

// Tries every candidate (in parallel); the first one in enumeration order that verifies all pairs wins.
ConventionSearch search_conventions();
// Result of the search, computed once.
const SignConvention& accepted_convention();

}  // namespace dgop
