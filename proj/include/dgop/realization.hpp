#pragma once

// Presented operads mapped into explicit models by generator images.

#include "dgop/pasc_operad.hpp"
#include "dgop/perm_operad.hpp"
#include "dgop/quotient.hpp"

namespace dgop {

// Value of a tree monomial once every vertex g is replaced by images[g] (an element on {1,2}).
// g(L, R) goes to (g o_a L) o_b R with a, b fresh; the free operad graft sign vanishes here.
template <DgOperad Op>
LinComb<typename Op::Cell> evaluate_tree(const Op& op, const std::vector<LinComb<typename Op::Cell>>& images,
                                         const TreeMonomial& t) {
  using C = LinComb<typename Op::Cell>;
  std::size_t pos = 0;
  auto rec = [&](auto&& self, int depth) -> C {
    int x = t.code[pos++];
    if (x >= 0) return C(op.unit(x));
    const Label a = 1000 + 2 * depth, b = a + 1;
    C v = relabel_terms(op, images[-x - 1], LabelMap::from_images(std::vector<Label>{a, b}));
    C left = self(self, depth + 1);
    v = compose_terms(op, v, a, left);
    C right = self(self, depth + 1);
    return compose_terms(op, v, b, right);
  };
  return rec(rec, 0);
}

template <DgOperad Op>
LinComb<typename Op::Cell> evaluate(const Op& op, const std::vector<LinComb<typename Op::Cell>>& images,
                                    const LinComb<TreeMonomial>& x) {
  LinComb<typename Op::Cell> out;
  for (const auto& [t, c] : x) out.add_scaled(evaluate_tree(op, images, t), c);
  return out;
}

// Every printed relation, evaluated in the model.
template <DgOperad Op>
std::vector<RelationOutcome> relations_in_model(const QuadraticData& q, const Op& op,
                                                const std::vector<LinComb<typename Op::Cell>>& images) {
  std::vector<RelationOutcome> out;
  for (const auto& rel : q.printed) {
    RelationOutcome r{rel.name, true, ""};
    std::vector<LinComb<typename Op::Cell>> vals;
    for (const auto& side : rel.sides) {
      LinComb<typename Op::Cell> s;
      for (const auto& term : side) s += evaluate(op, images, q.instantiate(term));
      vals.push_back(std::move(s));
    }
    if (vals.size() == 1) vals.emplace_back();
    for (std::size_t k = 0; k + 1 < vals.size(); ++k)
      if (!(vals[k] == vals[k + 1])) {
        r.holds = false;
        r.detail = format_terms(op, vals[k]) + " != " + format_terms(op, vals[k + 1]);
      }
    if (r.holds) r.detail = format_terms(op, vals[0]) + (rel.sides.size() == 1 ? " = 0" : "");
    out.push_back(std::move(r));
  }
  return out;
}

struct PresentationReport {
  std::string operad;
  std::vector<RelationOutcome> relations;
  bool generators_span = false;  // images span the model at arity 2
  bool d_on_generators = false;  // d(image) = image(d)
  std::vector<std::vector<Scalar>> quotient_dims;  // arities 1..max
  std::vector<std::vector<Scalar>> model_dims;
  std::vector<bool> bijective;  // induced map Quot(n) -> model(n) is an isomorphism
  std::vector<bool> chain_map;  // and commutes with d there
  bool passed() const;
};

namespace detail {

template <class Cell>
std::vector<Scalar> degree_profile(const std::vector<Cell>& basis, int n, auto&& dimfn) {
  std::vector<Scalar> d(n, 0);
  for (const auto& c : basis) d[dimfn(c)] += 1;
  return d;
}

template <class Cell>
SparseVec model_coords(const std::map<Cell, int>& index, const LinComb<Cell>& x) {
  SparseVec v;
  for (const auto& [c, a] : x) v.emplace_back(index.at(c), Rational(a));
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return v;
}

}  // namespace detail

// Relations hold, generators span, and Quot(n) -> model(n) is a chain isomorphism for n <= max_arity.
template <DgOperad Op>
PresentationReport presentation_check(const QuadraticData& q, const Op& op,
                                      const std::vector<LinComb<typename Op::Cell>>& images, int max_arity) {
  using Cell = typename Op::Cell;
  PresentationReport rep;
  rep.operad = q.id;
  rep.relations = relations_in_model(q, op, images);
  FreeOperad F = q.free();
  {
    auto l2 = iota_labels(2);
    auto b2 = op.basis(l2);
    std::map<Cell, int> idx;
    for (std::size_t k = 0; k < b2.size(); ++k) idx[b2[k]] = static_cast<int>(k);
    RowEchelon e(static_cast<int>(b2.size()));
    for (const auto& im : images) e.insert(detail::model_coords(idx, im));
    rep.generators_span = e.rank() == static_cast<int>(b2.size());
    rep.d_on_generators = true;
    for (int g = 0; g < q.E.size(); ++g) {
      LinComb<Cell> dg;
      for (const auto& [h, c] : q.E.diff[g]) dg.add_scaled(images[h], c);
      if (!(differential_terms(op, images[g]) == dg)) rep.d_on_generators = false;
    }
  }
  QuadraticQuotient Q(q, max_arity);
  for (int n = 1; n <= max_arity; ++n) {
    auto labels = iota_labels(n);
    auto basis = op.basis(labels);
    std::map<Cell, int> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = static_cast<int>(k);
    rep.quotient_dims.push_back(Q.dims(n));
    auto md = detail::degree_profile(basis, static_cast<int>(Q.dims(n).size()), [&](const Cell& c) { return op.dim(c); });
    rep.model_dims.push_back(md);
    const auto& L = Q.level(n);
    RowEchelon e(static_cast<int>(basis.size()));
    bool chain = true;
    std::vector<LinComb<Cell>> imgs;
    for (int b = 0; b < L.size(); ++b) imgs.push_back(evaluate(op, images, Q.representative(n, b)));
    for (int b = 0; b < L.size(); ++b) {
      e.insert(detail::model_coords(idx, imgs[b]));
      LinComb<Cell> viaq;
      for (const auto& [k, c] : L.d[b]) {
        if (denominator(c) != 1) throw std::logic_error("presentation_check: non-integral differential");
        viaq.add_scaled(imgs[k], numerator(c));
      }
      if (!(differential_terms(op, imgs[b]) == viaq)) chain = false;
    }
    rep.bijective.push_back(e.rank() == L.size() && L.size() == static_cast<int>(basis.size()));
    rep.chain_map.push_back(chain);
  }
  return rep;
}

std::vector<LinComb<OrderedPartition>> pi_generator_images();
std::vector<LinComb<SubsetCell>> pasc_generator_images();

PresentationReport pi_presentation_check(int max_arity);
PresentationReport pasc_presentation_check(int max_arity);

// K' dims against planar trees with n+1 leaves graded by n - (internal vertices)
std::vector<Scalar> associahedron_faces(int n);

}  // namespace dgop
