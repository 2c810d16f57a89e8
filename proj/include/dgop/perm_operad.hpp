#pragma once

#include "dgop/operad_core.hpp"

namespace dgop {

// Face of a permutohedron: sequence of sorted blocks.
struct OrderedPartition {
  std::vector<std::vector<Label>> blocks;

  int dim() const;
  std::vector<Label> labels() const;  // sorted
  auto operator<=>(const OrderedPartition&) const = default;
};

// Builds a cell from raw blocks, folding the sorting signs into the coefficient.
LinComb<OrderedPartition> make_partition(const std::vector<std::vector<Label>>& blocks);

std::vector<OrderedPartition> pi_basis(std::span<const Label> labels);
std::vector<OrderedPartition> pi_basis(int n);
LinComb<OrderedPartition> pi_d(const OrderedPartition& pi);
LinComb<OrderedPartition> pi_compose(const OrderedPartition& pi, Label i, const OrderedPartition& mu);
LinComb<OrderedPartition> pi_relabel(const OrderedPartition& pi, const LabelMap& f);
std::string format_partition(const OrderedPartition& pi);

// (n-k)! S(n, n-k); independent face-count oracle
Scalar permutohedron_faces(int n, int k);

struct PermOperad {
  using Cell = OrderedPartition;
  std::string name() const { return "pi"; }
  Grading grading() const { return Grading::cochain; }
  bool symmetric() const { return true; }
  std::vector<Cell> basis(std::span<const Label> labels) const { return pi_basis(labels); }
  int dim(const Cell& c) const { return c.dim(); }
  LinComb<Cell> compose(const Cell& a, Label i, const Cell& b) const { return pi_compose(a, i, b); }
  LinComb<Cell> differential(const Cell& c) const { return pi_d(c); }
  LinComb<Cell> relabel(const Cell& c, const LabelMap& f) const { return pi_relabel(c, f); }
  Cell unit(Label l) const { return {{{l}}}; }
  std::string format(const Cell& c) const { return format_partition(c); }
};

}  // namespace dgop
