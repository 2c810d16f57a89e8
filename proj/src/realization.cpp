#include "dgop/realization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace dgop {

bool PresentationReport::passed() const {
  auto ok = [](const RelationOutcome& r) { return r.holds; };
  auto yes = [](bool b) { return b; };
  return std::all_of(relations.begin(), relations.end(), ok) && generators_span && d_on_generators &&
         quotient_dims == model_dims && std::all_of(bijective.begin(), bijective.end(), yes) &&
         std::all_of(chain_map.begin(), chain_map.end(), yes);
}

std::vector<LinComb<OrderedPartition>> pi_generator_images() {
  return {make_partition({{1}, {2}}), make_partition({{2}, {1}}), make_partition({{1, 2}})};
}

std::vector<LinComb<SubsetCell>> pasc_generator_images() {
  return {make_subset({1}), make_subset({2}), make_subset({1, 2})};
}

PresentationReport pi_presentation_check(int max_arity) {
  return presentation_check(presentation_pi(), PermOperad{}, pi_generator_images(), max_arity);
}

PresentationReport pasc_presentation_check(int max_arity) {
  return presentation_check(presentation_pasc(), PascOperad{}, pasc_generator_images(), max_arity);
}

std::vector<Scalar> associahedron_faces(int n) {
  // planar trees with n+1 leaves, internal vertices of arity >= 2, counted by internal vertices
  const int L = n + 1;
  std::map<std::pair<int, int>, Scalar> trees;
  std::map<std::tuple<int, int, int>, Scalar> forests;  // (trees, leaves, vertices)
  std::function<Scalar(int, int)> tree;
  std::function<Scalar(int, int, int)> forest = [&](int j, int m, int v) -> Scalar {
    if (j == 0) return (m == 0 && v == 0) ? 1 : 0;
    if (m < j || v < 0) return 0;
    auto key = std::make_tuple(j, m, v);
    if (auto it = forests.find(key); it != forests.end()) return it->second;
    Scalar s = 0;
    for (int m1 = 1; m1 <= m - j + 1; ++m1)
      for (int v1 = 0; v1 <= v; ++v1) {
        Scalar t = tree(m1, v1);
        if (t != 0) s += t * forest(j - 1, m - m1, v - v1);
      }
    return forests[key] = s;
  };
  tree = [&](int m, int v) -> Scalar {
    if (m == 1) return v == 0 ? 1 : 0;
    if (v < 1) return 0;
    auto key = std::make_pair(m, v);
    if (auto it = trees.find(key); it != trees.end()) return it->second;
    Scalar s = 0;
    for (int j = 2; j <= m; ++j) s += forest(j, m, v - 1);
    return trees[key] = s;
  };
  std::vector<Scalar> d(n, 0);
  for (int v = 1; v <= n; ++v) d[n - v] = tree(L, v);
  return d;
}

TriasRealizationReport trias_realization_check(int max_arity) {
  TriasRealizationReport rep;
  auto q = presentation_trias();
  PascOperad ns{true};
  auto images = pasc_generator_images();
  rep.relations = relations_in_model(q, ns, images);
  {
    auto lhs = differential_terms(ns, images[2]);
    auto rhs = images[0] - images[1];
    rep.relations.push_back({"d(1×2) = 1⊣2 - 1⊢2", lhs == rhs, format_terms(ns, lhs)});
  }
  QuadraticQuotient Q(q, max_arity);
  rep.dims_match = true;
  for (int n = 1; n <= max_arity; ++n) {
    auto d = Q.dims(n);
    rep.quotient_dims.push_back(d);
    for (int k = 0; k < static_cast<int>(d.size()); ++k) {
      Scalar binom = 1;
      for (int j = 0; j < k + 1; ++j) binom = binom * (n - j) / (j + 1);
      if (d[k] != binom) rep.dims_match = false;
    }
  }
  return rep;
}

bool TriasRealizationReport::passed() const {
  return dims_match && std::all_of(relations.begin(), relations.end(), [](const RelationOutcome& r) { return r.holds; });
}

}  // namespace dgop
