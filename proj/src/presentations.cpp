#include "dgop/presentations.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgop {

LabelMap tau_map(TauReading r, int power) {
  power = ((power % 3) + 3) % 3;
  // images of 1, 2, 3
  std::vector<Label> base = r == TauReading::cycle_321 ? std::vector<Label>{3, 1, 2} : std::vector<Label>{2, 3, 1};
  std::vector<Label> img{1, 2, 3};
  for (int k = 0; k < power; ++k)
    for (auto& x : img) x = base[x - 1];
  return LabelMap::from_images(img);
}

LinComb<TreeMonomial> QuadraticData::generator_element(const std::string& name) const {
  FreeOperad F = free();
  auto it = aliases.find(name);
  if (it != aliases.end()) {
    auto r = F.cherry(it->second.first, 1, 2);
    r *= Scalar(it->second.second);
    return r;
  }
  return F.cherry(E.index_of(name), 1, 2);
}

LinComb<TreeMonomial> QuadraticData::instantiate(const PrintedTerm& t) const {
  FreeOperad F = free();
  auto x = F.compose_std(generator_element(t.outer), 2, t.slot, generator_element(t.inner), 2);
  if (t.tau_power % 3 != 0) {
    if (!symmetric) throw std::invalid_argument("tau in a nonsymmetric relation");
    x = relabel_terms(F, x, tau_map(tau, t.tau_power));
  }
  x *= Scalar(t.coefficient);
  return x;
}

std::vector<LinComb<TreeMonomial>> QuadraticData::relation_elements() const {
  std::vector<LinComb<TreeMonomial>> out;
  for (const auto& rel : printed) {
    std::vector<LinComb<TreeMonomial>> sides;
    for (const auto& side : rel.sides) {
      LinComb<TreeMonomial> s;
      for (const auto& t : side) s += instantiate(t);
      sides.push_back(std::move(s));
    }
    if (sides.size() == 1) out.push_back(sides[0]);
    for (std::size_t k = 0; k + 1 < sides.size(); ++k) out.push_back(sides[k] - sides[k + 1]);
  }
  out.insert(out.end(), extra_relations.begin(), extra_relations.end());
  return out;
}

std::vector<LinComb<TreeMonomial>> QuadraticData::relation_basis() const {
  FreeOperad F = free();
  FreeCoordinates fc(F, 3);
  RowEchelon ech(static_cast<int>(fc.basis.size()));
  std::vector<std::vector<Label>> perms;
  if (symmetric) {
    std::vector<Label> p{1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    perms.push_back({1, 2, 3});
  }
  std::vector<LinComb<TreeMonomial>> out;
  for (const auto& r : relation_elements())
    for (const auto& p : perms) {
      auto v = relabel_terms(F, r, LabelMap::from_images(p));
      if (ech.insert(fc.coords(v))) out.push_back(std::move(v));
    }
  return out;
}

FreeCoordinates::FreeCoordinates(const FreeOperad& F, int n) {
  auto l = iota_labels(n);
  basis = F.basis(l);
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
}

SparseVec FreeCoordinates::coords(const LinComb<TreeMonomial>& x) const {
  SparseVec v;
  for (const auto& [t, c] : x) {
    auto it = index.find(t);
    if (it == index.end()) throw std::invalid_argument("FreeCoordinates: tree outside the basis");
    v.emplace_back(it->second, Rational(c));
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

namespace {

PrintedTerm T(int c, int k, const char* o, int slot, const char* i) { return {c, k, o, slot, i}; }
PrintedTerm T(const char* o, int slot, const char* i) { return {1, 0, o, slot, i}; }

GeneratorSpace space(std::vector<Generator> gens, std::vector<SmallComb> swap, std::vector<SmallComb> diff,
                     Grading g) {
  GeneratorSpace E;
  E.gens = std::move(gens);
  E.swap = std::move(swap);
  E.diff = std::move(diff);
  E.grading = g;
  return E;
}

// the standard (0,0,1)-graded space with swap 0 <-> 1 and 2 -> sign * 2
GeneratorSpace space3(const char* a, const char* b, const char* c, int csign, std::vector<SmallComb> diff,
                      Grading g, bool symmetric) {
  std::vector<SmallComb> swap;
  if (symmetric) swap = {{{1, 1}}, {{0, 1}}, {{2, csign}}};
  return space({{a, 0}, {b, 0}, {c, 1}}, std::move(swap), std::move(diff), g);
}

}  // namespace

QuadraticData presentation_pi() {
  QuadraticData q;
  q.id = "pi";
  q.display = "Π";
  q.E = space3("1⊗2", "2⊗1", "1∧2", -1, {{{2, 1}}, {{2, -1}}, {}}, Grading::cochain, true);
  q.aliases["2∧1"] = {2, -1};
  q.printed = {
      {"rel1", {{T("1⊗2", 1, "1⊗2")}, {T("1⊗2", 2, "1⊗2"), T("1⊗2", 2, "2⊗1")}}, ""},
      {"rel2", {{T("1∧2", 2, "1⊗2")}, {T("1⊗2", 1, "1∧2")}, {T(1, 1, "1∧2", 1, "2⊗1")}}, ""},
      {"rel3", {{T("2∧1", 1, "1∧2")}, {T("1∧2", 2, "1∧2")}}, ""},
  };
  return q;
}

QuadraticData presentation_pasc() {
  QuadraticData q;
  q.id = "pasc";
  q.display = "Pasc";
  q.E = space3("e1", "e2", "e1∧e2", -1, {{}, {}, {{0, 1}, {1, -1}}}, Grading::chain, true);
  const char* x = "e1∧e2";
  q.printed = {
      {"rela1", {{T("e1", 1, "e1")}, {T(1, 2, "e2", 1, "e1")}}, ""},
      {"rela2", {{T("e2", 1, "e1")}, {T("e2", 1, "e2")}}, ""},
      {"rela3", {{T("e1", 1, "e2")}, {T(1, 1, "e2", 1, "e2")}}, ""},
      {"rela4", {{T("e2", 1, x)}}, ""},
      {"rela5", {{T(1, 1, x, 1, "e2")}, {T("e1", 1, x)}}, ""},
      {"rela6", {{T(-1, 2, x, 1, "e1")}, {T("e1", 1, x)}}, ""},
      {"rela7", {{T(x, 1, x)}, {T(1, 1, x, 1, x)}}, ""},
  };
  return q;
}

QuadraticData presentation_kprime() {
  QuadraticData q;
  q.id = "kprime";
  q.display = "K′";
  q.symmetric = false;
  q.E = space3("1<2", "1>2", "1|2", 1, {{{2, 1}}, {{2, -1}}, {}}, Grading::cochain, false);
  q.printed = {
      {"relK1", {{T("1>2", 2, "1<2")}, {T("1<2", 1, "1>2")}}, ""},
      {"relK2", {{T("1>2", 2, "1>2")}, {T("1>2", 1, "1>2"), T("1>2", 1, "1<2")}}, ""},
      {"relK3", {{T("1<2", 1, "1<2")}, {T("1<2", 2, "1<2"), T("1<2", 2, "1>2")}}, ""},
      {"relK4", {{T("1>2", 2, "1|2")}, {T("1|2", 1, "1>2")}}, ""},
      {"relK5", {{T("1<2", 1, "1|2")}, {T("1|2", 2, "1<2")}}, ""},
      {"relK6", {{T("1|2", 1, "1<2")}, {T("1|2", 2, "1>2")}}, ""},
      {"relK7", {{T("1|2", 1, "1|2")}, {T(-1, 0, "1|2", 2, "1|2")}}, ""},
  };
  return q;
}

QuadraticData presentation_trias() {
  QuadraticData q;
  q.id = "trias";
  q.display = "Trias′";
  q.symmetric = false;
  q.E = space3("1⊣2", "1⊢2", "1×2", 1, {{}, {}, {{0, 1}, {1, -1}}}, Grading::chain, false);
  const char *L = "1⊣2", *R = "1⊢2", *X = "1×2";
  q.printed = {
      {"relT1", {{T(L, 1, R)}, {T(R, 2, L)}}, ""},
      {"relT2", {{T(L, 2, L)}, {T(L, 2, R)}}, ""},
      {"relT3", {{T(L, 1, L)}, {T(L, 2, R)}}, ""},
      {"relT4", {{T(R, 1, R)}, {T(R, 1, L)}}, ""},
      {"relT5", {{T(R, 2, R)}, {T(R, 1, L)}}, ""},
      {"relT6", {{T(X, 1, R)}, {T(R, 2, X)}}, ""},
      {"relT7", {{T(X, 2, L)}, {T(L, 1, X)}}, ""},
      {"relT8", {{T(X, 1, L)}, {T(X, 2, R)}}, ""},
      {"relT9", {{T(R, 1, X)}}, ""},
      {"relT10", {{T(L, 2, X)}}, ""},
      {"relT11", {{T(X, 1, X)}, {T(-1, 0, X, 2, X)}}, ""},
  };
  return q;
}

QuadraticData presentation_coprod() {
  QuadraticData q;
  q.id = "coprod";
  q.display = "⨿";
  q.E = space3("⟨1,2⟩", "⟨2,1⟩", "[1,2]", 1, {{}, {}, {{0, 1}, {1, 1}}}, Grading::chain, true);
  const char *a = "⟨1,2⟩", *b = "⟨2,1⟩", *c = "[1,2]";
  q.printed = {
      {"relU1", {{T(a, 1, a), T(-1, 1, a, 1, b), T(1, 2, b, 1, b)}}, ""},
      {"relU2", {{T(1, 2, c, 1, a), T(1, 1, c, 1, b)}, {T(a, 1, c)}}, ""},
      {"relU3", {{T(b, 1, c)}}, ""},
      {"relU4", {{T(c, 1, c), T(1, 1, c, 1, c), T(1, 2, c, 1, c)}}, ""},
  };
  return q;
}

QuadraticData presentation_lambda() {
  QuadraticData q;
  q.id = "lambda";
  q.display = "Λ";
  q.E = space3("1↶2", "2↶1", "[1,2]", 1, {{{2, 1}}, {{2, 1}}, {}}, Grading::cochain, true);
  // With tau = (3 2 1) these relations are not orthogonal to those of Pasc; the inverse
  // cycle turns relM1 into the right pre-Lie relation.
  q.tau = TauReading::inverse;
  const char *a = "1↶2", *b = "2↶1", *c = "[1,2]";
  q.printed = {
      {"relM1", {{T(1, 1, b, 1, a), T(-1, 0, a, 1, a)}, {T(1, 1, b, 1, b), T(-1, 2, a, 1, b)}}, "tau read as 1->2->3->1"},
      {"relM2",
       {{T(c, 1, a), T(1, 1, c, 1, b)}, {T(1, 2, a, 1, c)}},
       "tau read as 1->2->3->1; unindexed composition read as o_1; second term taken with sign +"},
      {"relM3", {{T(c, 1, c), T(1, 1, c, 1, c), T(1, 2, c, 1, c)}}, "tau read as 1->2->3->1"},
  };
  return q;
}

QuadraticData presentation_zin() {
  QuadraticData q;
  q.id = "zin";
  q.display = "Zin";
  q.E = space({{"1≺2", 0}, {"2≺1", 0}}, {{{1, 1}}, {{0, 1}}}, {{}, {}}, Grading::cochain);
  q.printed = {{"zin", {{T("1≺2", 1, "1≺2")}, {T("1≺2", 2, "1≺2"), T("1≺2", 2, "2≺1")}}, ""}};
  return q;
}

QuadraticData presentation_dend() {
  QuadraticData q;
  q.id = "dend";
  q.display = "Dend";
  q.symmetric = false;
  q.E = space({{"1<2", 0}, {"1>2", 0}}, {}, {{}, {}}, Grading::cochain);
  auto k = presentation_kprime();
  q.printed.assign(k.printed.begin(), k.printed.begin() + 3);
  return q;
}

QuadraticData presentation_prelie() {
  QuadraticData q;
  q.id = "prelie";
  q.display = "PreLie";
  q.E = space({{"1↶2", 0}, {"2↶1", 0}}, {{{1, 1}}, {{0, 1}}}, {{}, {}}, Grading::cochain);
  q.tau = TauReading::inverse;
  q.printed = {presentation_lambda().printed[0]};
  return q;
}

QuadraticData presentation_com() {
  QuadraticData q;
  q.id = "com";
  q.display = "Com";
  q.E = space({{"1·2", 0}}, {{{0, 1}}}, {{}}, Grading::cochain);
  q.printed = {{"assoc", {{T("1·2", 1, "1·2")}, {T("1·2", 2, "1·2")}}, ""}};
  return q;
}

QuadraticData presentation_as() {
  QuadraticData q;
  q.id = "as";
  q.display = "As";
  q.symmetric = false;
  q.E = space({{"1·2", 0}}, {}, {{}}, Grading::cochain);
  q.printed = {{"assoc", {{T("1·2", 1, "1·2")}, {T("1·2", 2, "1·2")}}, ""}};
  return q;
}

QuadraticData presentation_lie() {
  QuadraticData q;
  q.id = "lie";
  q.display = "Lie";
  q.E = space({{"[1,2]", 0}}, {{{0, -1}}}, {{}}, Grading::cochain);
  const char* c = "[1,2]";
  q.printed = {{"jacobi", {{T(c, 1, c), T(1, 1, c, 1, c), T(1, 2, c, 1, c)}}, ""}};
  return q;
}

QuadraticData presentation_perm() {
  QuadraticData q;
  q.id = "perm";
  q.display = "Perm";
  q.E = space({{"e1", 0}, {"e2", 0}}, {{{1, 1}}, {{0, 1}}}, {{}, {}}, Grading::chain);
  auto p = presentation_pasc();
  q.printed.assign(p.printed.begin(), p.printed.begin() + 3);
  return q;
}

QuadraticData presentation_dias() {
  QuadraticData q;
  q.id = "dias";
  q.display = "Dias";
  q.symmetric = false;
  q.E = space({{"1⊣2", 0}, {"1⊢2", 0}}, {}, {{}, {}}, Grading::chain);
  auto t = presentation_trias();
  q.printed.assign(t.printed.begin(), t.printed.begin() + 5);
  return q;
}

QuadraticData presentation_leib() {
  QuadraticData q;
  q.id = "leib";
  q.display = "Leib";
  q.E = space({{"⟨1,2⟩", 0}, {"⟨2,1⟩", 0}}, {{{1, 1}}, {{0, 1}}}, {{}, {}}, Grading::chain);
  q.printed = {presentation_coprod().printed[0]};
  return q;
}

namespace {

std::string swap_digits(const std::string& s) {
  std::string r = s;
  for (char& ch : r) {
    if (ch == '1') ch = '2';
    else if (ch == '2') ch = '1';
  }
  return r;
}

}  // namespace

QuadraticData symmetrize(const QuadraticData& ns) {
  if (ns.symmetric) throw std::invalid_argument("symmetrize: already symmetric");
  QuadraticData q = ns;
  q.id = ns.id + "-sym";
  q.symmetric = true;
  const int g = ns.E.size();
  GeneratorSpace E;
  E.grading = ns.E.grading;
  for (int k = 0; k < g; ++k) E.gens.push_back(ns.E.gens[k]);
  for (int k = 0; k < g; ++k) E.gens.push_back({swap_digits(ns.E.gens[k].name), ns.E.gens[k].dim});
  for (int k = 0; k < g; ++k) E.swap.push_back({{k + g, 1}});
  for (int k = 0; k < g; ++k) E.swap.push_back({{k, 1}});
  E.diff.resize(2 * g);
  for (int k = 0; k < g; ++k)
    for (auto [h, c] : ns.E.diff[k]) {
      E.diff[k].push_back({h, c});
      E.diff[k + g].push_back({h + g, c});
    }
  q.E = std::move(E);
  return q;
}

QuadraticData degree_zero_part(const QuadraticData& q, const std::string& id) {
  QuadraticData z;
  z.id = id;
  z.display = q.display + "₀";
  z.symmetric = q.symmetric;
  std::vector<int> keep, newidx(q.E.size(), -1);
  for (int g = 0; g < q.E.size(); ++g)
    if (q.E.gens[g].dim == 0) {
      newidx[g] = static_cast<int>(keep.size());
      keep.push_back(g);
    }
  z.E.grading = q.E.grading;
  for (int g : keep) {
    z.E.gens.push_back(q.E.gens[g]);
    z.E.diff.push_back({});
    if (q.symmetric) {
      SmallComb s;
      for (auto [h, c] : q.E.swap[g]) {
        if (newidx[h] < 0) throw std::logic_error("degree_zero_part: action leaves degree 0");
        s.push_back({newidx[h], c});
      }
      z.E.swap.push_back(std::move(s));
    }
  }
  FreeOperad F = q.free();
  FreeOperad Fz = z.free();
  FreeCoordinates fc(F, 3);
  // degree-0 relation span = kernel of the projection onto higher degrees, restricted
  auto rels = q.relation_basis();
  std::vector<int> deg0cols;
  for (std::size_t k = 0; k < fc.basis.size(); ++k)
    if (F.dim(fc.basis[k]) == 0) deg0cols.push_back(static_cast<int>(k));
  for (const auto& r : rels) {
    LinComb<TreeMonomial> keep0;
    bool pure = true;
    for (const auto& [t, c] : r) {
      if (F.dim(t) != 0) {
        pure = false;
        break;
      }
      std::vector<int> code = t.code;
      for (int& x : code)
        if (x < 0) x = -(newidx[-x - 1] + 1);
      keep0.add(TreeMonomial{code}, c);
    }
    // relations are homogeneous, so a relation is either pure degree 0 or has none
    if (pure && !keep0.is_zero()) z.extra_relations.push_back(std::move(keep0));
  }
  return z;
}

std::vector<std::string> presentation_ids() {
  return {"pi",  "pasc", "kprime", "trias", "coprod", "lambda", "zin",  "dend",     "prelie",
          "com", "as",   "lie",    "perm",  "dias",   "leib",   "k-sym", "trias-sym"};
}

QuadraticData presentation_by_id(const std::string& id) {
  if (id == "pi") return presentation_pi();
  if (id == "pasc") return presentation_pasc();
  if (id == "kprime") return presentation_kprime();
  if (id == "trias") return presentation_trias();
  if (id == "coprod") return presentation_coprod();
  if (id == "lambda") return presentation_lambda();
  if (id == "zin") return presentation_zin();
  if (id == "dend") return presentation_dend();
  if (id == "prelie") return presentation_prelie();
  if (id == "com") return presentation_com();
  if (id == "as") return presentation_as();
  if (id == "lie") return presentation_lie();
  if (id == "perm") return presentation_perm();
  if (id == "dias") return presentation_dias();
  if (id == "leib") return presentation_leib();
  if (id == "k-sym") {
    auto q = symmetrize(presentation_kprime());
    q.id = "k-sym";
    q.display = "K";
    return q;
  }
  if (id == "trias-sym") {
    auto q = symmetrize(presentation_trias());
    q.display = "Trias";
    return q;
  }
  const std::string suffix = "-sym";
  if (id.size() > suffix.size() && id.ends_with(suffix)) {
    auto base = presentation_by_id(id.substr(0, id.size() - suffix.size()));
    if (!base.symmetric) return symmetrize(base);
  }
  throw std::invalid_argument("unknown presentation " + id);
}

}  // namespace dgop
