#pragma once

#include "dgop/exalg.hpp"

#include <vector>

namespace dgop {

// sorted by column, no zero entries
using SparseVec = std::vector<std::pair<int, Rational>>;
using IntMatrix = std::vector<std::vector<Scalar>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x
SparseVec sparse_scaled(const SparseVec& x, const Rational& a);

// Incremental row echelon form over Q; pivots are leading columns.
class RowEchelon {
 public:
  explicit RowEchelon(int columns);

  SparseVec reduce(const SparseVec& v) const;
  bool insert(const SparseVec& v);  // true when the rank grows
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // back-substitution: afterwards every pivot column is zero outside its row
  void make_reduced();

  int rank() const { return static_cast<int>(rows_.size()); }
  int columns() const { return ncols_; }
  std::vector<int> pivot_columns() const;  // ascending
  std::vector<int> free_columns() const;   // ascending
  const SparseVec& row_for_pivot(int col) const { return rows_[pivot_row_[col]]; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  bool integral() const;  // every stored entry is an integer
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_of_row_;
};

// Basis of {x : M x = 0} for M given by sparse rows with `columns` columns.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int columns);
int rank_of(const std::vector<SparseVec>& rows, int columns);

struct SmithForm {
  std::vector<Scalar> factors;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_normal_form(IntMatrix m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_zero_matrix(const IntMatrix& m);

}  // namespace dgop
