#pragma once

#include "dgop/operad_core.hpp"

namespace dgop {

struct Generator {
  std::string name;  // as printed, e.g. "1⊗2"
  int dim = 0;
};

using SmallComb = std::vector<std::pair<int, int>>;  // (generator index, coefficient)

struct GeneratorSpace {
  std::vector<Generator> gens;
  std::vector<SmallComb> swap;  // (12)·g; empty in the nonsymmetric case
  std::vector<SmallComb> diff;  // d(g)
  Grading grading = Grading::cochain;

  int size() const { return static_cast<int>(gens.size()); }
  int index_of(const std::string& name) const;  // throws on unknown name
};

// Prefix code of a binary tree: an internal vertex labeled g is -(g+1), a leaf is its label.
struct TreeMonomial {
  std::vector<int> code;
  auto operator<=>(const TreeMonomial&) const = default;
};

class FreeOperad {
 public:
  using Cell = TreeMonomial;

  FreeOperad(GeneratorSpace E, bool symmetric, std::string name = "free");

  std::string name() const { return name_; }
  Grading grading() const { return E_.grading; }
  bool symmetric() const { return symmetric_; }
  std::vector<Cell> basis(std::span<const Label> labels) const;
  int dim(const Cell& c) const;
  LinComb<Cell> compose(const Cell& a, Label i, const Cell& b) const;
  LinComb<Cell> differential(const Cell& c) const;
  LinComb<Cell> relabel(const Cell& c, const LabelMap& f) const;
  Cell unit(Label l) const { return {{l}}; }
  std::string format(const Cell& c) const;

  const GeneratorSpace& generators() const { return E_; }
  LinComb<Cell> canonicalize(const std::vector<int>& code) const;
  LinComb<Cell> cherry(int g, Label left, Label right) const;
  // Standard-labeled o_i on [p] and [q]
  LinComb<Cell> compose_std(const LinComb<Cell>& a, int p, int i, const LinComb<Cell>& b, int q) const;
  std::vector<Label> leaves(const Cell& c) const;

 private:
  GeneratorSpace E_;
  bool symmetric_;
  std::string name_;
};

std::vector<TreeMonomial> free_basis(const GeneratorSpace& E, int n, bool symmetric);

// subtree helpers on prefix codes
std::size_t subtree_end(const std::vector<int>& code, std::size_t pos);

}  // namespace dgop
