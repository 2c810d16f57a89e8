#pragma once

#include "dgop/operad_core.hpp"

namespace dgop {

// Face of a simplex: the wedge of e_i over a nonempty subset, increasing order.
struct SubsetCell {
  std::vector<Label> subset;

  int dim() const { return static_cast<int>(subset.size()) - 1; }
  auto operator<=>(const SubsetCell&) const = default;
};

LinComb<SubsetCell> make_subset(const std::vector<Label>& word);
LinComb<SubsetCell> pasc_theta(Label i, const LinComb<SubsetCell>& x);
LinComb<SubsetCell> pasc_d(const SubsetCell& x);
LinComb<SubsetCell> pasc_compose(const SubsetCell& x, Label i, const SubsetCell& y);
LinComb<SubsetCell> pasc_relabel(const SubsetCell& x, const LabelMap& f);
std::vector<SubsetCell> pasc_basis(std::span<const Label> labels);
std::vector<SubsetCell> pasc_basis(int n);
std::string format_subset(const SubsetCell& x);

struct PascOperad {
  using Cell = SubsetCell;
  bool nonsymmetric = false;  // Pasc_notΣ: only order-preserving relabelings are meaningful

  std::string name() const { return nonsymmetric ? "pasc-ns" : "pasc"; }
  Grading grading() const { return Grading::chain; }
  bool symmetric() const { return !nonsymmetric; }
  std::vector<Cell> basis(std::span<const Label> labels) const { return pasc_basis(labels); }
  int dim(const Cell& c) const { return c.dim(); }
  LinComb<Cell> compose(const Cell& a, Label i, const Cell& b) const { return pasc_compose(a, i, b); }
  LinComb<Cell> differential(const Cell& c) const { return pasc_d(c); }
  LinComb<Cell> relabel(const Cell& c, const LabelMap& f) const { return pasc_relabel(c, f); }
  Cell unit(Label l) const { return {{l}}; }
  std::string format(const Cell& c) const { return format_subset(c); }
};

struct RelationOutcome {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TriasRealizationReport {
  std::vector<RelationOutcome> relations;  // relT1..relT11 and the differential rule
  std::vector<std::vector<Scalar>> quotient_dims;  // per arity 1..max, per degree
  bool dims_match = false;
  bool passed() const;
};

TriasRealizationReport trias_realization_check(int max_arity);

}  // namespace dgop
