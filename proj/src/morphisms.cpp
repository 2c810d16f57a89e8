#include "dgop/morphisms.hpp"

#include "dgop/realization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dgop {

namespace {

using Images = std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>>;

std::vector<Scalar> dense(const SmallComb& c, int g) {
  std::vector<Scalar> v(g, 0);
  for (auto [h, a] : c) v[h] += a;
  return v;
}

SmallComb sparse(const std::vector<Scalar>& v) {
  SmallComb c;
  for (std::size_t h = 0; h < v.size(); ++h)
    if (v[h] != 0) c.push_back({static_cast<int>(h), static_cast<int>(v[h])});
  return c;
}

// image of a combination of source generators
std::vector<Scalar> apply(const MorphismSpec& m, const SmallComb& c) {
  std::vector<Scalar> v(m.target.E.size(), 0);
  for (auto [g, a] : c)
    for (auto [h, b] : m.images[g]) v[h] += Scalar(a) * b;
  return v;
}

SmallComb act(const std::vector<SmallComb>& action, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(action.size(), 0);
  for (std::size_t g = 0; g < v.size(); ++g)
    if (v[g] != 0)
      for (auto [h, a] : action[g]) r[h] += v[g] * a;
  return sparse(r);
}

std::string comb_text(const QuadraticData& q, const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t h = 0; h < v.size(); ++h) {
    if (v[h] == 0) continue;
    if (!s.empty()) s += v[h] > 0 ? " + " : " - ";
    else if (v[h] < 0) s += "-";
    if (abs(v[h]) != 1) s += Scalar(abs(v[h])).str() + " ";
    s += q.E.gens[h].name;
  }
  return s.empty() ? "0" : s;
}

CheckLine line(const std::string& check, const std::string& params, bool ok, const std::string& expected,
               const std::string& actual) {
  return {check, params, ok, false, expected, actual};
}

}  // namespace

bool MorphismReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

MorphismSpec make_morphism(const std::string& name, const std::string& source_id, const std::string& target_id,
                           const Images& images) {
  MorphismSpec m;
  m.name = name;
  m.source = presentation_by_id(source_id);
  m.target = presentation_by_id(target_id);
  m.images.assign(m.source.E.size(), {});
  for (const auto& [src, terms] : images) {
    int g = m.source.E.index_of(src);
    std::vector<Scalar> v(m.target.E.size(), 0);
    for (const auto& [c, tgt] : terms) {
      auto al = m.target.aliases.find(tgt);
      if (al != m.target.aliases.end()) v[al->second.first] += c * al->second.second;
      else v[m.target.E.index_of(tgt)] += c;
    }
    m.images[g] = sparse(v);
  }
  return m;
}

LinComb<TreeMonomial> map_element(const MorphismSpec& m, const LinComb<TreeMonomial>& x) {
  FreeOperad Ft = m.target.free();
  LinComb<TreeMonomial> out;
  for (const auto& [t, c] : x) {
    std::vector<std::pair<Scalar, std::vector<int>>> partial{{c, t.code}};
    for (std::size_t k = 0; k < t.code.size(); ++k) {
      if (t.code[k] >= 0) continue;
      const auto& img = m.images[-t.code[k] - 1];
      std::vector<std::pair<Scalar, std::vector<int>>> next;
      for (const auto& [a, code] : partial)
        for (auto [h, b] : img) {
          auto cc = code;
          cc[k] = -(h + 1);
          next.emplace_back(a * b, std::move(cc));
        }
      partial = std::move(next);
    }
    for (const auto& [a, code] : partial) out.add_scaled(Ft.canonicalize(code), a);
  }
  return out;
}

MorphismSpec compose_morphisms(const MorphismSpec& outer, const MorphismSpec& inner) {
  if (inner.target.id != outer.source.id) throw std::invalid_argument("compose_morphisms: mismatched ends");
  MorphismSpec m;
  m.name = outer.name + " ∘ " + inner.name;
  m.source = inner.source;
  m.target = outer.target;
  for (const auto& img : inner.images) m.images.push_back(sparse(apply(outer, img)));
  return m;
}

MorphismReport check_well_defined(const MorphismSpec& m) {
  MorphismReport rep;
  rep.name = m.name;
  const auto& S = m.source;
  const auto& T = m.target;
  const int gs = S.E.size();
  {
    int bad = 0;
    for (int g = 0; g < gs; ++g)
      for (auto [h, c] : m.images[g])
        if (T.E.gens[h].dim != S.E.gens[g].dim) ++bad;
    rep.lines.push_back(line("degrees preserved", m.name, bad == 0, "0 mismatches", std::to_string(bad)));
  }
  if (S.symmetric) {
    int bad = 0;
    std::string detail;
    if (!T.symmetric) bad = 1;
    else
      for (int g = 0; g < gs; ++g) {
        auto lhs = apply(m, S.E.swap[g]);
        auto rhs = dense(act(T.E.swap, dense(m.images[g], T.E.size())), T.E.size());
        if (lhs != rhs) {
          ++bad;
          detail = S.E.gens[g].name + ": " + comb_text(T, lhs) + " vs " + comb_text(T, rhs);
        }
      }
    rep.lines.push_back(line("equivariant", m.name, bad == 0, "0 mismatches", bad ? detail : "0"));
  }
  {
    int bad = 0;
    std::string detail;
    for (int g = 0; g < gs; ++g) {
      auto lhs = apply(m, S.E.diff[g]);
      auto rhs = dense(act(T.E.diff, dense(m.images[g], T.E.size())), T.E.size());
      if (lhs != rhs) {
        ++bad;
        detail = "d " + S.E.gens[g].name + ": " + comb_text(T, lhs) + " vs " + comb_text(T, rhs);
      }
    }
    rep.lines.push_back(line("d on generators", m.name, bad == 0, "0 mismatches", bad ? detail : "0"));
  }
  QuadraticQuotient Q(T, 3);
  {
    int bad = 0;
    auto rels = S.relation_basis();
    for (const auto& r : rels)
      if (!Q.coords(3, map_element(m, r)).empty()) ++bad;
    rep.lines.push_back(line("relations vanish at arity 3", m.name + " (" + std::to_string(rels.size()) + " relations)",
                             bad == 0, "0 nonzero images", std::to_string(bad)));
  }
  {
    FreeOperad Fs = S.free(), Ft = T.free();
    auto labels = iota_labels(3);
    int bad = 0, total = 0;
    for (const auto& t : Fs.basis(labels)) {
      LinComb<TreeMonomial> x(t);
      auto a = map_element(m, differential_terms(Fs, x));
      auto b = differential_terms(Ft, map_element(m, x));
      if (!Q.coords(3, a - b).empty()) ++bad;
      ++total;
    }
    rep.lines.push_back(line("d commutes on F(3)", m.name + " (" + std::to_string(total) + " trees)", bad == 0,
                             "0 mismatches", std::to_string(bad)));
  }
  return rep;
}

std::vector<MorphismSpec> horizontal_morphisms() {
  return {row_arrow(2, 2), row_arrow(2, 3), row_arrow(4, 2), row_arrow(4, 3)};
}

const std::vector<DiagramNode>& diagram_nodes() {
  static const std::vector<DiagramNode> nodes = {
      {1, 1, "zin"},  {1, 2, "dend-sym"},  {1, 3, "prelie"}, {2, 1, "pi"},   {2, 2, "k-sym"},
      {2, 3, "lambda"}, {3, 1, "com"},     {3, 2, "as-sym"}, {3, 3, "lie"},  {4, 1, "pasc"},
      {4, 2, "trias-sym"}, {4, 3, "coprod"}, {5, 1, "perm"}, {5, 2, "dias-sym"}, {5, 3, "leib"},
  };
  return nodes;
}

MorphismSpec row_arrow(int row, int from_column) {
  const std::string key = std::to_string(row) + ":" + std::to_string(from_column);
  if (key == "1:2")
    return make_morphism("Dend → Zin", "dend-sym", "zin",
                         {{"1<2", {{1, "1≺2"}}}, {"1>2", {{1, "2≺1"}}}, {"2<1", {{1, "2≺1"}}}, {"2>1", {{1, "1≺2"}}}});
  if (key == "1:3")
    return make_morphism("PreLie → Dend", "prelie", "dend-sym",
                         {{"1↶2", {{1, "1<2"}, {-1, "2>1"}}}, {"2↶1", {{1, "2<1"}, {-1, "1>2"}}}});
  if (key == "2:2")
    // x≻y := (-1)^{xy} y≺x
    return make_morphism("K → Π", "k-sym", "pi",
                         {{"1<2", {{1, "1⊗2"}}},
                          {"1>2", {{1, "2⊗1"}}},
                          {"1|2", {{1, "1∧2"}}},
                          {"2<1", {{1, "2⊗1"}}},
                          {"2>1", {{1, "1⊗2"}}},
                          {"2|1", {{1, "2∧1"}}}});
  if (key == "2:3")
    // x↶y := x≺y - (-1)^{xy} y≻x,  [x,y] := x×y + (-1)^{xy+x+y} y×x
    return make_morphism("Λ → K", "lambda", "k-sym",
                         {{"1↶2", {{1, "1<2"}, {-1, "2>1"}}},
                          {"2↶1", {{1, "2<1"}, {-1, "1>2"}}},
                          {"[1,2]", {{1, "1|2"}, {1, "2|1"}}}});
  if (key == "3:2") return make_morphism("As → Com", "as-sym", "com", {{"1·2", {{1, "1·2"}}}, {"2·1", {{1, "1·2"}}}});
  if (key == "3:3") return make_morphism("Lie → As", "lie", "as-sym", {{"[1,2]", {{1, "1·2"}, {-1, "2·1"}}}});
  if (key == "4:2")
    // x⊢y := (-1)^{xy} y⊣x
    return make_morphism("Trias → Pasc", "trias-sym", "pasc",
                         {{"1⊣2", {{1, "e1"}}},
                          {"1⊢2", {{1, "e2"}}},
                          {"1×2", {{1, "e1∧e2"}}},
                          {"2⊣1", {{1, "e2"}}},
                          {"2⊢1", {{1, "e1"}}},
                          {"2×1", {{-1, "e1∧e2"}}}});
  if (key == "4:3")
    // <x,y> := x⊣y - (-1)^{xy} y⊢x,  [x,y] := x×y + (-1)^{xy+x+y} y×x
    return make_morphism("⨿ → Trias", "coprod", "trias-sym",
                         {{"⟨1,2⟩", {{1, "1⊣2"}, {-1, "2⊢1"}}},
                          {"⟨2,1⟩", {{1, "2⊣1"}, {-1, "1⊢2"}}},
                          {"[1,2]", {{1, "1×2"}, {1, "2×1"}}}});
  if (key == "5:2")
    return make_morphism("Dias → Perm", "dias-sym", "perm",
                         {{"1⊣2", {{1, "e1"}}}, {"1⊢2", {{1, "e2"}}}, {"2⊣1", {{1, "e2"}}}, {"2⊢1", {{1, "e1"}}}});
  if (key == "5:3")
    return make_morphism("Leib → Dias", "leib", "dias-sym",
                         {{"⟨1,2⟩", {{1, "1⊣2"}, {-1, "2⊢1"}}}, {"⟨2,1⟩", {{1, "2⊣1"}, {-1, "1⊢2"}}}});
  throw std::invalid_argument("no row arrow from " + key);
}

MorphismSpec column_arrow(int lower_row, int column) {
  const std::string key = std::to_string(lower_row) + ":" + std::to_string(column);
  // row 2 onto row 1: quotient by positive dimensions
  if (key == "2:1")
    return make_morphism("Π → Zin", "pi", "zin", {{"1⊗2", {{1, "1≺2"}}}, {"2⊗1", {{1, "2≺1"}}}});
  if (key == "2:2")
    return make_morphism("K → Dend", "k-sym", "dend-sym",
                         {{"1<2", {{1, "1<2"}}}, {"1>2", {{1, "1>2"}}}, {"2<1", {{1, "2<1"}}}, {"2>1", {{1, "2>1"}}}});
  if (key == "2:3")
    return make_morphism("Λ → PreLie", "lambda", "prelie", {{"1↶2", {{1, "1↶2"}}}, {"2↶1", {{1, "2↶1"}}}});
  // row 3 into row 2: the degree-0 cocycles
  if (key == "3:1") return make_morphism("Com → Π", "com", "pi", {{"1·2", {{1, "1⊗2"}, {1, "2⊗1"}}}});
  if (key == "3:2")
    return make_morphism("As → K", "as-sym", "k-sym",
                         {{"1·2", {{1, "1<2"}, {1, "1>2"}}}, {"2·1", {{1, "2<1"}, {1, "2>1"}}}});
  if (key == "3:3") return make_morphism("Lie → Λ", "lie", "lambda", {{"[1,2]", {{1, "1↶2"}, {-1, "2↶1"}}}});
  // row 4 onto row 3: degree-0 homology
  if (key == "4:1") return make_morphism("Pasc → Com", "pasc", "com", {{"e1", {{1, "1·2"}}}, {"e2", {{1, "1·2"}}}});
  if (key == "4:2")
    return make_morphism("Trias → As", "trias-sym", "as-sym",
                         {{"1⊣2", {{1, "1·2"}}}, {"1⊢2", {{1, "1·2"}}}, {"2⊣1", {{1, "2·1"}}}, {"2⊢1", {{1, "2·1"}}}});
  if (key == "4:3")
    return make_morphism("⨿ → Lie", "coprod", "lie", {{"⟨1,2⟩", {{1, "[1,2]"}}}, {"⟨2,1⟩", {{-1, "[1,2]"}}}});
  // row 5 into row 4: degree-0 parts
  if (key == "5:1") return make_morphism("Perm → Pasc", "perm", "pasc", {{"e1", {{1, "e1"}}}, {"e2", {{1, "e2"}}}});
  if (key == "5:2")
    return make_morphism("Dias → Trias", "dias-sym", "trias-sym",
                         {{"1⊣2", {{1, "1⊣2"}}}, {"1⊢2", {{1, "1⊢2"}}}, {"2⊣1", {{1, "2⊣1"}}}, {"2⊢1", {{1, "2⊢1"}}}});
  if (key == "5:3")
    return make_morphism("Leib → ⨿", "leib", "coprod", {{"⟨1,2⟩", {{1, "⟨1,2⟩"}}}, {"⟨2,1⟩", {{1, "⟨2,1⟩"}}}});
  throw std::invalid_argument("no column arrow from " + key);
}

namespace {

template <class Op>
MorphismReport explicit_check(const MorphismSpec& m, const Op& op, const std::vector<LinComb<typename Op::Cell>>& model) {
  MorphismReport rep;
  rep.name = m.name + " (explicit target)";
  std::vector<LinComb<typename Op::Cell>> images;
  for (const auto& img : m.images) {
    LinComb<typename Op::Cell> v;
    for (auto [h, c] : img) v.add_scaled(model[h], c);
    images.push_back(std::move(v));
  }
  for (const auto& r : relations_in_model(m.source, op, images))
    rep.lines.push_back(line("relation in model", m.name + " " + r.name, r.holds, "equal sides", r.detail));
  int bad = 0;
  for (int g = 0; g < m.source.E.size(); ++g) {
    LinComb<typename Op::Cell> dg;
    for (auto [h, c] : m.source.E.diff[g]) dg.add_scaled(images[h], c);
    if (!(differential_terms(op, images[g]) == dg)) ++bad;
  }
  rep.lines.push_back(line("d on generators", m.name, bad == 0, "0 mismatches", std::to_string(bad)));
  return rep;
}

}  // namespace

MorphismReport check_k_to_pi_explicit() { return explicit_check(row_arrow(2, 2), PermOperad{}, pi_generator_images()); }

MorphismReport check_trias_to_pasc_explicit() {
  return explicit_check(row_arrow(4, 2), PascOperad{}, pasc_generator_images());
}

MorphismReport check_square(int r, int c) {
  if (r < 1 || r > 4 || c < 1 || c > 2) throw std::invalid_argument("check_square: no such square");
  MorphismSpec bottom = row_arrow(r + 1, c + 1);
  MorphismSpec top = row_arrow(r, c + 1);
  MorphismSpec left = column_arrow(r + 1, c);
  MorphismSpec right = column_arrow(r + 1, c + 1);
  MorphismSpec p1 = compose_morphisms(left, bottom);
  MorphismSpec p2 = compose_morphisms(top, right);
  MorphismReport rep;
  rep.name = "square rows " + std::to_string(r) + "-" + std::to_string(r + 1) + ", columns " + std::to_string(c) +
             "-" + std::to_string(c + 1);
  const auto& A = bottom.source;
  const auto& D = top.target;
  {
    int bad = 0;
    std::string detail;
    for (int g = 0; g < A.E.size(); ++g)
      if (p1.images[g] != p2.images[g]) {
        ++bad;
        detail = A.E.gens[g].name + ": " + comb_text(D, dense(p1.images[g], D.E.size())) + " vs " +
                 comb_text(D, dense(p2.images[g], D.E.size()));
      }
    rep.lines.push_back(line("commutes on generators", p1.name + " = " + p2.name, bad == 0, "0 mismatches",
                             bad ? detail : "0"));
  }
  {
    QuadraticQuotient Q(D, 3);
    FreeOperad Fa = A.free();
    auto labels = iota_labels(3);
    int bad = 0, total = 0;
    for (const auto& t : Fa.basis(labels)) {
      LinComb<TreeMonomial> x(t);
      if (!Q.coords(3, map_element(p1, x) - map_element(p2, x)).empty()) ++bad;
      ++total;
    }
    rep.lines.push_back(line("commutes at arity 3", rep.name + " (" + std::to_string(total) + " trees)", bad == 0,
                             "0 mismatches", std::to_string(bad)));
  }
  return rep;
}

std::vector<MorphismReport> check_all_squares() {
  std::vector<MorphismReport> out;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 2; ++c) out.push_back(check_square(r, c));
  return out;
}

std::vector<DegreeZeroCase> check_degree_zero_identifications(int max_arity) {
  auto factorial = [](int n) {
    Scalar f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  auto catalan = [](int n) {
    Scalar b = 1;
    for (int j = 0; j < n; ++j) b = b * (2 * n - j) / (j + 1);
    return Scalar(b / (n + 1));
  };
  auto linear = [](int n) { return Scalar(n); };
  struct Case {
    std::string src, classical;
    std::vector<std::pair<std::string, std::string>> names;
    std::function<Scalar(int)> expected;
  };
  const std::vector<Case> cases = {
      {"pi", "zin", {{"1⊗2", "1≺2"}, {"2⊗1", "2≺1"}}, factorial},
      {"pasc", "perm", {{"e1", "e1"}, {"e2", "e2"}}, linear},
      {"kprime", "dend", {{"1<2", "1<2"}, {"1>2", "1>2"}}, catalan},
      {"trias", "dias", {{"1⊣2", "1⊣2"}, {"1⊢2", "1⊢2"}}, linear},
      {"coprod", "leib", {{"⟨1,2⟩", "⟨1,2⟩"}, {"⟨2,1⟩", "⟨2,1⟩"}}, factorial},
  };
  std::vector<DegreeZeroCase> out;
  for (const auto& cs : cases) {
    DegreeZeroCase r;
    r.source_id = cs.src;
    r.classical_id = cs.classical;
    auto src = presentation_by_id(cs.src);
    auto z = degree_zero_part(src, cs.src + "0");
    auto cl = presentation_by_id(cs.classical);
    QuadraticQuotient Qz(z, max_arity), Qc(cl, max_arity);
    r.dims_match = true;
    for (int n = 1; n <= max_arity; ++n) {
      r.dims.push_back(Qz.dims(n));
      r.expected.push_back(cs.expected(n));
      if (Qz.dims(n) != std::vector<Scalar>{cs.expected(n)} || Qc.dims(n) != Qz.dims(n)) r.dims_match = false;
    }
    // identify generators by name and compare relation spans
    MorphismSpec m;
    m.source = z;
    m.target = cl;
    m.images.assign(z.E.size(), {});
    for (const auto& [a, b] : cs.names) m.images[z.E.index_of(a)] = {{cl.E.index_of(b), 1}};
    FreeOperad Fc = cl.free();
    FreeCoordinates fc(Fc, 3);
    std::vector<SparseVec> mine, theirs;
    for (const auto& rel : z.relation_basis()) mine.push_back(fc.coords(map_element(m, rel)));
    for (const auto& rel : cl.relation_basis()) theirs.push_back(fc.coords(rel));
    const int cols = static_cast<int>(fc.basis.size());
    auto both = mine;
    both.insert(both.end(), theirs.begin(), theirs.end());
    int ra = rank_of(mine, cols), rb = rank_of(theirs, cols);
    r.relations_match = ra == rb && rank_of(both, cols) == ra;
    out.push_back(std::move(r));
  }
  return out;
}

MorphismReport check_row_exactness(int row, int max_arity) {
  if (row < 2 || row > 4) throw std::invalid_argument("check_row_exactness: rows 2, 3, 4 only");
  MorphismSpec psi = row_arrow(row, 2);  // middle -> left
  MorphismSpec phi = row_arrow(row, 3);  // right -> middle
  MorphismReport rep;
  rep.name = "row " + std::to_string(row) + ": " + psi.target.display + " ← " + psi.source.display + " ← " +
             phi.source.display;
  const auto& L = psi.target;
  const auto& M = psi.source;
  const int gl = L.E.size(), gm = M.E.size();
  {
    auto c = compose_morphisms(psi, phi);
    bool zero = std::all_of(c.images.begin(), c.images.end(), [](const SmallComb& s) { return s.empty(); });
    rep.lines.push_back(line("composite is zero on generators", c.name, zero, "0", zero ? "0" : "nonzero"));
  }
  auto rank_of_images = [](const std::vector<SmallComb>& imgs, int g) {
    std::vector<SparseVec> rows;
    for (const auto& s : imgs) {
      SparseVec v;
      for (auto [h, a] : s) v.emplace_back(h, Rational(a));
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(v);
    }
    return rank_of(rows, g);
  };
  int rpsi = rank_of_images(psi.images, gl);
  int rphi = rank_of_images(phi.images, gm);
  rep.lines.push_back(line("surjective on generators", psi.name, rpsi == gl, std::to_string(gl), std::to_string(rpsi)));
  rep.lines.push_back(line("kernel on generators = image", phi.name, rphi + gl == gm,
                           std::to_string(gm - gl), std::to_string(rphi)));
  // relations of the quotient: image of the middle relations
  QuadraticData quot = L;
  quot.id = L.id + "-from-row";
  quot.printed.clear();
  quot.extra_relations.clear();
  for (const auto& r : M.relation_basis()) {
    auto img = map_element(psi, r);
    if (!img.is_zero()) quot.extra_relations.push_back(std::move(img));
  }
  {
    FreeOperad Fl = L.free();
    FreeCoordinates fc(Fl, 3);
    std::vector<SparseVec> a, b;
    for (const auto& r : quot.extra_relations) a.push_back(fc.coords(r));
    for (const auto& r : L.relation_basis()) b.push_back(fc.coords(r));
    const int cols = static_cast<int>(fc.basis.size());
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    int ra = rank_of(a, cols), rb = rank_of(b, cols), rj = rank_of(both, cols);
    rep.lines.push_back(line("image of relations spans the relations", rep.name, ra == rb && rj == rb,
                             std::to_string(rb), std::to_string(ra) + " (joint " + std::to_string(rj) + ")"));
  }
  QuadraticQuotient Qq(quot, max_arity), Ql(L, max_arity);
  for (int n = 1; n <= max_arity; ++n) {
    auto a = Qq.dims(n), b = Ql.dims(n);
    rep.lines.push_back(line("quotient dims", rep.name + " n=" + std::to_string(n), a == b, format_dims(b), format_dims(a)));
  }
  return rep;
}

}  // namespace dgop
