#include "dgop/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dgop {

namespace {

std::vector<std::pair<int, int>> pairs_for(int n, bool symmetric) {
  std::vector<std::pair<int, int>> p;
  if (symmetric) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) p.push_back({a, b});
  } else {
    for (int a = 1; a < n; ++a) p.push_back({a, a + 1});
  }
  return p;
}

std::vector<std::vector<int>> triples_for(int n, bool symmetric) {
  std::vector<std::vector<int>> t;
  if (symmetric) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) t.push_back({a, b, c});
  } else {
    for (int a = 1; a + 2 <= n; ++a) t.push_back({a, a + 1, a + 2});
  }
  return t;
}

// position of l in [n] - {gone}, 1-based
int squeeze(int l, int gone) { return l < gone ? l : l - 1; }

void add_entry(std::vector<std::pair<int, Rational>>& v, int c, const Rational& a) {
  if (a != 0) v.emplace_back(c, a);
}

SparseVec normalize(std::vector<std::pair<int, Rational>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [c, a] : v) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += a;
      if (out.back().second == 0) out.pop_back();
    } else if (a != 0) {
      out.emplace_back(c, std::move(a));
    }
  }
  return out;
}

int max_gen_dim(const GeneratorSpace& E) {
  int m = 0;
  for (const auto& g : E.gens) m = std::max(m, g.dim);
  return m;
}

}  // namespace

QuadraticQuotient::QuadraticQuotient(const QuadraticData& q, int max_arity) : q_(q), F_(q.free()) {
  if (max_arity < 1) throw std::invalid_argument("QuadraticQuotient: max_arity < 1");
  rel_basis_ = q_.relation_basis();
  levels_.resize(max_arity + 1);
  QuotientLevel& one = levels_[1];
  one.arity = 1;
  one.dim_v = 1;
  one.v_degree = {0};
  one.basis_v = {0};
  one.degree = {0};
  one.proj = {{{0, Rational(1)}}};
  one.d = {{}};
  for (int n = 2; n <= max_arity; ++n) build_level(n);
}

const QuotientLevel& QuadraticQuotient::level(int n) const {
  if (n < 1 || n > max_arity()) throw std::out_of_range("QuadraticQuotient: arity " + std::to_string(n) + " not built");
  return levels_[n];
}

int QuadraticQuotient::pair_index(int n, int a, int b) const {
  const auto& P = levels_[n].pairs;
  auto it = std::lower_bound(P.begin(), P.end(), std::make_pair(a, b));
  if (it == P.end() || *it != std::make_pair(a, b)) throw std::logic_error("pair_index: not a valid pair");
  return static_cast<int>(it - P.begin());
}

int QuadraticQuotient::v_index(int n, int p, int q, int e) const {
  return (p * levels_[n - 1].size() + q) * F_.generators().size() + e;
}

SparseVec QuadraticQuotient::project(int n, const SparseVec& v) const {
  const auto& L = levels_[n];
  std::vector<std::pair<int, Rational>> out;
  for (const auto& [c, a] : v)
    for (const auto& [k, b] : L.proj[c]) out.emplace_back(k, a * b);
  return normalize(std::move(out));
}

SparseVec QuadraticQuotient::d_on_v(int n, const SparseVec& v) const {
  const auto& E = F_.generators();
  const int g = E.size();
  const auto& prev = levels_[n - 1];
  const int qn = prev.size();
  std::vector<std::pair<int, Rational>> out;
  for (const auto& [idx, a] : v) {
    int e = idx % g, q = (idx / g) % qn, p = idx / g / qn;
    for (const auto& [k, b] : prev.d[q]) out.emplace_back(v_index(n, p, k, e), a * b);
    Rational s = (prev.degree[q] & 1) ? -a : a;
    for (const auto& [h, c] : E.diff[e]) out.emplace_back(v_index(n, p, q, h), s * c);
  }
  return normalize(std::move(out));
}

SparseVec QuadraticQuotient::apply_d(int n, const SparseVec& x) const {
  const auto& L = level(n);
  std::vector<std::pair<int, Rational>> out;
  for (const auto& [b, a] : x)
    for (const auto& [k, c] : L.d[b]) out.emplace_back(k, a * c);
  return normalize(std::move(out));
}

void QuadraticQuotient::build_level(int n) {
  const auto& E = F_.generators();
  const int g = E.size();
  const bool sym = q_.symmetric;
  QuotientLevel& L = levels_[n];
  const QuotientLevel& prev = levels_[n - 1];
  L.arity = n;
  L.pairs = pairs_for(n, sym);
  L.dim_v = static_cast<int>(L.pairs.size()) * prev.size() * g;
  L.v_degree.resize(L.dim_v);
  for (int p = 0; p < static_cast<int>(L.pairs.size()); ++p)
    for (int q = 0; q < prev.size(); ++q)
      for (int e = 0; e < g; ++e) L.v_degree[v_index(n, p, q, e)] = prev.degree[q] + E.gens[e].dim;

  std::vector<std::vector<std::pair<int, Rational>>> rows;

  // two cherries cut in either order
  if (n >= 4) {
    const auto& two = levels_[n - 2];
    for (std::size_t p1 = 0; p1 < L.pairs.size(); ++p1)
      for (std::size_t p2 = p1 + 1; p2 < L.pairs.size(); ++p2) {
        auto [a1, b1] = L.pairs[p1];
        auto [a2, b2] = L.pairs[p2];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
        // (x o_{a1} e1) lives on [n] - {b2}; (x o_{a2} e2) on [n] - {b1}
        int s1 = pair_index(n - 1, squeeze(a1, b2), squeeze(b1, b2));
        int s2 = pair_index(n - 1, squeeze(a2, b1), squeeze(b2, b1));
        for (int x = 0; x < two.size(); ++x)
          for (int e1 = 0; e1 < g; ++e1)
            for (int e2 = 0; e2 < g; ++e2) {
              std::vector<std::pair<int, Rational>> row;
              for (const auto& [k, c] : prev.proj[v_index(n - 1, s1, x, e1)])
                add_entry(row, v_index(n, static_cast<int>(p2), k, e2), c);
              bool odd = (E.gens[e1].dim * E.gens[e2].dim) & 1;
              for (const auto& [k, c] : prev.proj[v_index(n - 1, s2, x, e2)])
                add_entry(row, v_index(n, static_cast<int>(p1), k, e1), odd ? c : -c);
              rows.push_back(std::move(row));
            }
      }
  }

  // relations grafted on arity n-2
  if (n >= 3) {
    const auto& two = levels_[n - 2];
    struct Piece {
      Scalar c;
      int ga, gb;
      int sb0, sb1;  // S_b inside {1,2,3}
    };
    std::vector<std::vector<Piece>> rels;
    for (const auto& r : rel_basis_) {
      std::vector<Piece> pieces;
      for (const auto& [t, c] : r) {
        const auto& code = t.code;
        Piece pc{c, -code[0] - 1, 0, 0, 0};
        if (code[1] >= 0) {  // ga(u, gb(v, w))
          pc.gb = -code[2] - 1;
          pc.sb0 = code[3];
          pc.sb1 = code[4];
        } else {  // ga(gb(u, v), w)
          pc.gb = -code[1] - 1;
          pc.sb0 = code[2];
          pc.sb1 = code[3];
        }
        if (pc.sb0 > pc.sb1) throw std::logic_error("relation tree not canonical");
        pieces.push_back(pc);
      }
      rels.push_back(std::move(pieces));
    }
    for (const auto& T : triples_for(n, sym))
      for (int x = 0; x < two.size(); ++x)
        for (const auto& pieces : rels) {
          std::vector<std::pair<int, Rational>> row;
          for (const auto& pc : pieces) {
            int sa = T[pc.sb0 - 1], sb = T[pc.sb1 - 1];
            int other = T[0] + T[1] + T[2] - sa - sb;
            int pa0 = std::min(other, sa), pa1 = std::max(other, sa);
            int pa = pair_index(n - 1, squeeze(pa0, sb), squeeze(pa1, sb));
            int pb = pair_index(n, sa, sb);
            for (const auto& [k, c] : prev.proj[v_index(n - 1, pa, x, pc.ga)])
              add_entry(row, v_index(n, pb, k, pc.gb), c * Rational(pc.c));
          }
          rows.push_back(std::move(row));
        }
  }

  // eliminate per degree
  int maxdeg = 0;
  for (int d : L.v_degree) maxdeg = std::max(maxdeg, d);
  std::vector<std::vector<int>> cols(maxdeg + 1);
  std::vector<int> local(L.dim_v);
  for (int v = 0; v < L.dim_v; ++v) {
    local[v] = static_cast<int>(cols[L.v_degree[v]].size());
    cols[L.v_degree[v]].push_back(v);
  }
  std::vector<RowEchelon> ech;
  for (int d = 0; d <= maxdeg; ++d) ech.emplace_back(static_cast<int>(cols[d].size()));
  for (auto& r : rows) {
    SparseVec v = normalize(std::move(r));
    if (v.empty()) continue;
    int d = L.v_degree[v.front().first];
    SparseVec lv;
    for (const auto& [c, a] : v) {
      if (L.v_degree[c] != d) throw std::logic_error("inhomogeneous relation row");
      lv.emplace_back(local[c], a);
    }
    std::sort(lv.begin(), lv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech[d].insert(lv);
    L.relations.push_back(std::move(v));
  }
  std::vector<int> basis_pos(L.dim_v, -1);
  for (int d = 0; d <= maxdeg; ++d) {
    ech[d].make_reduced();
    if (!ech[d].integral()) L.integral = false;
    for (int c : ech[d].free_columns()) {
      basis_pos[cols[d][c]] = static_cast<int>(L.basis_v.size());
      L.basis_v.push_back(cols[d][c]);
      L.degree.push_back(d);
    }
  }
  L.proj.assign(L.dim_v, {});
  for (int d = 0; d <= maxdeg; ++d) {
    for (std::size_t c = 0; c < cols[d].size(); ++c) {
      int v = cols[d][c];
      if (basis_pos[v] >= 0) {
        L.proj[v] = {{basis_pos[v], Rational(1)}};
        continue;
      }
      std::vector<std::pair<int, Rational>> out;
      for (const auto& [k, a] : ech[d].row_for_pivot(static_cast<int>(c)))
        if (k != static_cast<int>(c)) out.emplace_back(basis_pos[cols[d][k]], -a);
      L.proj[v] = normalize(std::move(out));
    }
  }
  L.d.resize(L.basis_v.size());
  for (std::size_t b = 0; b < L.basis_v.size(); ++b)
    L.d[b] = project(n, d_on_v(n, {{L.basis_v[b], Rational(1)}}));
}

std::vector<Scalar> QuadraticQuotient::dims(int n) const {
  const auto& L = level(n);
  std::vector<Scalar> d((n - 1) * max_gen_dim(F_.generators()) + 1, 0);
  for (int k : L.degree) d[k] += 1;
  return d;
}

SparseVec QuadraticQuotient::tree_v_vector(int n, const TreeMonomial& t) const {
  if (n == 1) return {{0, Rational(1)}};
  const auto& code = t.code;
  std::size_t k = 0;
  while (!(code[k] < 0 && code[k + 1] >= 0 && code[k + 2] >= 0)) ++k;
  int g = -code[k] - 1;
  int a = code[k + 1], b = code[k + 2];
  if (a > b) throw std::logic_error("tree_v_vector: cherry not canonical");
  int after = 0;
  for (std::size_t j = k + 3; j < code.size(); ++j)
    if (code[j] < 0) after += F_.generators().gens[-code[j] - 1].dim;
  bool neg = (after * F_.generators().gens[g].dim) & 1;
  std::vector<int> rest(code.begin(), code.begin() + k);
  rest.push_back(a);
  rest.insert(rest.end(), code.begin() + k + 3, code.end());
  for (int& x : rest)
    if (x >= 0) x = squeeze(x, b);
  SparseVec y = project(n - 1, tree_v_vector(n - 1, TreeMonomial{rest}));
  int p = pair_index(n, a, b);
  SparseVec out;
  for (const auto& [q, c] : y) out.emplace_back(v_index(n, p, q, g), neg ? -c : c);
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

SparseVec QuadraticQuotient::v_vector(int n, const LinComb<TreeMonomial>& x) const {
  level(n);
  std::vector<std::pair<int, Rational>> out;
  for (const auto& [t, c] : x)
    for (const auto& [k, a] : tree_v_vector(n, t)) out.emplace_back(k, a * Rational(c));
  return normalize(std::move(out));
}

SparseVec QuadraticQuotient::coords(int n, const LinComb<TreeMonomial>& x) const {
  return project(n, v_vector(n, x));
}

LinComb<TreeMonomial> QuadraticQuotient::representative(int n, int b) const {
  const auto& L = level(n);
  if (n == 1) return LinComb<TreeMonomial>(F_.unit(1));
  const int g = F_.generators().size();
  const int qn = levels_[n - 1].size();
  int v = L.basis_v[b];
  int e = v % g, q = (v / g) % qn, p = v / g / qn;
  auto [a, bb] = L.pairs[p];
  LabelMap up;  // [n-1] -> [n] - {bb}
  for (int l = 1; l < n; ++l) up.set(l, l < bb ? l : l + 1);
  auto rest = relabel_terms(F_, representative(n - 1, q), up);
  return compose_terms(F_, rest, a, F_.cherry(e, a, bb));
}

std::vector<Scalar> free_dims(const QuadraticData& q, int n) {
  // shapes times the degree distribution of n-1 independent generator labels
  Scalar shapes = 1;
  if (q.symmetric) {
    for (int k = 3; k <= 2 * n - 3; k += 2) shapes *= k;
  } else {
    // Catalan(n-1)
    Scalar c = 1;
    for (int k = 0; k < n - 1; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    shapes = c;
  }
  std::vector<Scalar> poly{1};
  for (int v = 0; v < n - 1; ++v) {
    std::vector<Scalar> next(poly.size() + max_gen_dim(q.E), 0);
    for (std::size_t k = 0; k < poly.size(); ++k)
      for (const auto& gen : q.E.gens) next[k + gen.dim] += poly[k];
    poly = std::move(next);
  }
  for (auto& x : poly) x *= shapes;
  return poly;
}

std::vector<Scalar> quotient_dims(const QuadraticData& q, int n) {
  QuadraticQuotient Q(q, n);
  return Q.dims(n);
}

std::vector<Scalar> ideal_dimension(const QuadraticData& q, int n) {
  if (n < 3) throw std::invalid_argument("ideal_dimension: n < 3");
  FreeOperad F = q.free();
  auto rels = q.relation_basis();
  std::vector<LinComb<TreeMonomial>> prev = rels;
  for (int m = 4; m <= n; ++m) {
    FreeCoordinates fc(F, m);
    RowEchelon ech(static_cast<int>(fc.basis.size()));
    std::vector<LinComb<TreeMonomial>> cur;
    auto try_add = [&](LinComb<TreeMonomial> v) {
      if (ech.insert(fc.coords(v))) cur.push_back(std::move(v));
    };
    for (auto [a, b] : pairs_for(m, q.symmetric)) {
      LabelMap up;
      for (int l = 1; l < m; ++l) up.set(l, l < b ? l : l + 1);
      for (const auto& y : prev) {
        auto yy = relabel_terms(F, y, up);
        for (int e = 0; e < q.E.size(); ++e) try_add(compose_terms(F, yy, a, F.cherry(e, a, b)));
      }
    }
    auto lower = iota_labels(m - 2);
    auto xs = F.basis(lower);
    for (const auto& T : triples_for(m, q.symmetric)) {
      LabelMap up;  // [m-2] -> [m] - T + {min T}
      std::vector<int> target;
      for (int l = 1; l <= m; ++l)
        if (l == T[0] || (l != T[1] && l != T[2])) target.push_back(l);
      for (int l = 1; l <= m - 2; ++l) up.set(l, target[l - 1]);
      LabelMap onT = LabelMap::from_images(T);
      for (const auto& x : xs) {
        auto xx = relabel_terms(F, LinComb<TreeMonomial>(x), up);
        for (const auto& r : rels) try_add(compose_terms(F, xx, T[0], relabel_terms(F, r, onT)));
      }
    }
    prev = std::move(cur);
  }
  auto fd = free_dims(q, n);
  std::vector<Scalar> out(fd.size(), 0);
  for (const auto& r : prev) out[F.dim(r.begin()->first)] += 1;
  return out;
}

bool QuotientDifferentialReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

QuotientDifferentialReport quotient_differential_check(const QuadraticQuotient& Q) {
  QuotientDifferentialReport rep;
  const auto& q = Q.data();
  const FreeOperad& F = Q.free();
  {
    // free route at arity 3: d(R) inside span(R)
    FreeCoordinates fc(F, 3);
    RowEchelon ech(static_cast<int>(fc.basis.size()));
    auto rels = q.relation_basis();
    for (const auto& r : rels) ech.insert(fc.coords(r));
    int bad = 0;
    for (const auto& r : rels)
      if (!ech.contains(fc.coords(differential_terms(F, r)))) ++bad;
    rep.lines.push_back({"d(R) in span(R)", q.id + " n=3", bad == 0, false, "0 outside", std::to_string(bad) + " outside"});
  }
  for (int n = 2; n <= Q.max_arity(); ++n) {
    const auto& L = Q.level(n);
    int bad = 0;
    for (const auto& r : L.relations)
      if (!Q.project(n, Q.d_on_v(n, r)).empty()) ++bad;
    rep.lines.push_back({"d descends", q.id + " n=" + std::to_string(n), bad == 0, false, "0 relation rows leave the ideal",
                         std::to_string(bad)});
    int nz = 0;
    for (int b = 0; b < L.size(); ++b)
      if (!Q.apply_d(n, L.d[b]).empty()) ++nz;
    rep.lines.push_back({"d^2 = 0 on quotient", q.id + " n=" + std::to_string(n), nz == 0, false, "0", std::to_string(nz)});
  }
  for (int n = 2; n <= std::min(Q.max_arity(), 4); ++n) {
    auto labels = iota_labels(n);
    int nz = 0;
    for (const auto& t : F.basis(labels)) {
      auto dd = differential_terms(F, differential_terms(F, LinComb<TreeMonomial>(t)));
      if (!Q.coords(n, dd).empty()) ++nz;
    }
    rep.lines.push_back({"d^2(x) in ideal for free basis", q.id + " n=" + std::to_string(n), nz == 0, false, "0",
                         std::to_string(nz)});
  }
  return rep;
}

LatticeReport lattice_report(const QuadraticQuotient& Q, int n) {
  const auto& L = Q.level(n);
  LatticeReport rep;
  rep.arity = n;
  rep.rref_integral = L.integral;
  rep.saturated = true;
  rep.hnf_unit_pivots = true;
  int maxdeg = 0;
  for (int d : L.v_degree) maxdeg = std::max(maxdeg, d);
  for (int d = 0; d <= maxdeg; ++d) {
    std::vector<int> cols;
    std::vector<int> local(L.dim_v, -1);
    for (int v = 0; v < L.dim_v; ++v)
      if (L.v_degree[v] == d) {
        local[v] = static_cast<int>(cols.size());
        cols.push_back(v);
      }
    IntMatrix m;
    for (const auto& r : L.relations) {
      if (r.empty() || L.v_degree[r.front().first] != d) continue;
      std::vector<Scalar> row(cols.size(), 0);
      for (const auto& [c, a] : r) {
        if (denominator(a) != 1) {
          rep.saturated = false;  // the lattice is not even integral
          return rep;
        }
        row[local[c]] = numerator(a);
      }
      m.push_back(std::move(row));
    }
    if (m.empty()) continue;
    IntMatrix h = hermite_normal_form(m);
    rep.hnf_rows += static_cast<int>(h.size());
    for (const auto& row : h)
      for (const auto& x : row)
        if (x != 0) {
          if (x != 1) rep.hnf_unit_pivots = false;
          break;
        }
    SmithForm sf = smith_normal_form(h);
    for (const auto& f : sf.factors)
      if (f != 1) {
        rep.torsion.push_back(f);
        rep.saturated = false;
      }
  }
  return rep;
}

std::string format_dims(const std::vector<Scalar>& d) {
  std::ostringstream os;
  os << "(";
  std::size_t last = d.size();
  while (last > 1 && d[last - 1] == 0) --last;
  for (std::size_t k = 0; k < last; ++k) os << (k ? "," : "") << d[k];
  os << ")";
  return os.str();
}

}  // namespace dgop
