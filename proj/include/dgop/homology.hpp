#pragma once

#include "dgop/quotient.hpp"

namespace dgop {

struct ChainComplexData {
  std::string operad;
  int arity = 0;
  int direction = 1;  // +1: d raises dimension, -1: d lowers it
  std::vector<std::vector<std::string>> labels;  // basis per dimension
  // d[k]: matrix of d on dimension k, rows indexed by dimension k + direction; empty at the ends
  std::vector<IntMatrix> d;

  int top() const { return static_cast<int>(labels.size()) - 1; }
  std::vector<Scalar> dims() const;
  Scalar euler_characteristic() const;
  bool d_squared_zero() const;
};

struct HomologyGroup {
  int dim = 0;
  Scalar rank = 0;
  std::vector<Scalar> torsion;  // invariant factors > 1
};

struct HomologySummary {
  std::string operad;
  int arity = 0;
  std::vector<HomologyGroup> groups;

  // one copy of Z in dimension 0, nothing else
  bool concentrated_in_zero() const;
  std::string format() const;
};

// Explicit models for pi and pasc; presented operads through the quotient engine.
ChainComplexData build_complex(const std::string& id, int n);
ChainComplexData complex_from_quotient(const QuadraticQuotient& Q, int n);

HomologySummary homology(const ChainComplexData& C);

}  // namespace dgop
