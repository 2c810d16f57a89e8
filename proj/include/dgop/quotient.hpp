#pragma once

#include "dgop/presentations.hpp"

namespace dgop {

// One arity of the quotient F/(R). V(n) is spanned by symbols (S, q, e) meaning
// q o_{min S} e, with S a pair of labels (consecutive when nonsymmetric), q a basis
// element of the quotient at arity n-1 on the labels ([n] - S) + {min S}, e a generator.
struct QuotientLevel {
  int arity = 0;
  std::vector<std::pair<int, int>> pairs;  // S as (a, b), a < b
  int dim_v = 0;
  std::vector<int> v_degree;         // per V index
  std::vector<int> basis_v;          // V index of each quotient basis element
  std::vector<int> degree;           // per quotient basis element
  std::vector<SparseVec> proj;       // V index -> quotient coordinates
  std::vector<SparseVec> d;          // quotient basis element -> coordinates of its differential
  std::vector<SparseVec> relations;  // spanning set of the kernel, V coordinates
  bool integral = true;              // proj has integer entries

  int size() const { return static_cast<int>(basis_v.size()); }
};

class QuadraticQuotient {
 public:
  QuadraticQuotient(const QuadraticData& q, int max_arity);

  const QuadraticData& data() const { return q_; }
  const FreeOperad& free() const { return F_; }
  int max_arity() const { return static_cast<int>(levels_.size()) - 1; }
  const QuotientLevel& level(int n) const;
  std::vector<Scalar> dims(int n) const;  // indexed by degree 0..n-1 (absolute value)

  int v_index(int n, int pair_idx, int q, int e) const;
  int pair_index(int n, int a, int b) const;

  // Quotient coordinates of an element of F(n) on the labels 1..n.
  SparseVec coords(int n, const LinComb<TreeMonomial>& x) const;
  SparseVec v_vector(int n, const LinComb<TreeMonomial>& x) const;
  // A tree combination representing quotient basis element b.
  LinComb<TreeMonomial> representative(int n, int b) const;
  SparseVec apply_d(int n, const SparseVec& x) const;
  SparseVec d_on_v(int n, const SparseVec& v) const;  // differential on V(n), before projection
  SparseVec project(int n, const SparseVec& v) const;

 private:
  void build_level(int n);
  SparseVec tree_v_vector(int n, const TreeMonomial& t) const;

  QuadraticData q_;
  FreeOperad F_;
  std::vector<LinComb<TreeMonomial>> rel_basis_;
  std::vector<QuotientLevel> levels_;
};

std::vector<Scalar> free_dims(const QuadraticData& q, int n);
std::vector<Scalar> quotient_dims(const QuadraticData& q, int n);
// rank per degree of the ideal inside F(n), from a direct span computation in the free operad
std::vector<Scalar> ideal_dimension(const QuadraticData& q, int n);

struct CheckLine {
  std::string check;
  std::string params;
  bool passed = false;
  bool conjectural = false;
  std::string expected;
  std::string actual;
};

struct QuotientDifferentialReport {
  std::vector<CheckLine> lines;
  bool passed() const;
};

QuotientDifferentialReport quotient_differential_check(const QuadraticQuotient& Q);

struct LatticeReport {
  int arity = 0;
  bool rref_integral = false;
  bool saturated = false;            // relation lattice is saturated in V(n)
  std::vector<Scalar> torsion;       // invariant factors > 1
  int hnf_rows = 0;
  bool hnf_unit_pivots = false;
  bool torsion_free() const { return torsion.empty() && saturated; }
};

// Integral structure of the quotient lattice at arity n (all lower arities must be integral).
LatticeReport lattice_report(const QuadraticQuotient& Q, int n);

std::string format_dims(const std::vector<Scalar>& d);

}  // namespace dgop
