#include "dgop/free_operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgop {

int GeneratorSpace::index_of(const std::string& name) const {
  for (int g = 0; g < size(); ++g)
    if (gens[g].name == name) return g;
  throw std::invalid_argument("unknown generator " + name);
}

std::size_t subtree_end(const std::vector<int>& code, std::size_t pos) {
  int need = 1;
  while (need > 0) {
    need += code[pos] < 0 ? 1 : -1;
    ++pos;
  }
  return pos;
}

namespace {

using Coded = std::vector<std::pair<long long, std::vector<int>>>;

int code_degree(const GeneratorSpace& E, const std::vector<int>& code, std::size_t b, std::size_t e) {
  int d = 0;
  for (std::size_t k = b; k < e; ++k)
    if (code[k] < 0) d += E.gens[-code[k] - 1].dim;
  return d;
}

int min_leaf(const std::vector<int>& code) {
  int m = INT32_MAX;
  for (int c : code)
    if (c >= 0) m = std::min(m, c);
  return m;
}

Coded canon_rec(const GeneratorSpace& E, bool sym, const std::vector<int>& code, std::size_t pos) {
  if (code[pos] >= 0) return {{1, {code[pos]}}};
  int g = -code[pos] - 1;
  std::size_t mid = subtree_end(code, pos + 1);
  Coded L = canon_rec(E, sym, code, pos + 1);
  Coded R = canon_rec(E, sym, code, mid);
  Coded out;
  for (const auto& [cl, l] : L)
    for (const auto& [cr, r] : R) {
      if (sym && min_leaf(l) > min_leaf(r)) {
        // g(l, r) = ± ((12)·g)(r, l); the two vertex blocks trade places
        int dl = code_degree(E, l, 0, l.size()), dr = code_degree(E, r, 0, r.size());
        long long s = ((dl * dr) & 1) ? -1 : 1;
        for (const auto& [h, ch] : E.swap[g]) {
          std::vector<int> c{-(h + 1)};
          c.insert(c.end(), r.begin(), r.end());
          c.insert(c.end(), l.begin(), l.end());
          out.emplace_back(cl * cr * ch * s, std::move(c));
        }
      } else {
        std::vector<int> c{code[pos]};
        c.insert(c.end(), l.begin(), l.end());
        c.insert(c.end(), r.begin(), r.end());
        out.emplace_back(cl * cr, std::move(c));
      }
    }
  return out;
}

void trees_rec(const GeneratorSpace& E, bool sym, const std::vector<Label>& labels,
               std::vector<std::vector<int>>& out) {
  if (labels.size() == 1) {
    out.push_back({labels[0]});
    return;
  }
  auto emit = [&](const std::vector<Label>& A, const std::vector<Label>& B) {
    std::vector<std::vector<int>> ta, tb;
    trees_rec(E, sym, A, ta);
    trees_rec(E, sym, B, tb);
    for (int g = 0; g < E.size(); ++g)
      for (const auto& x : ta)
        for (const auto& y : tb) {
          std::vector<int> c{-(g + 1)};
          c.insert(c.end(), x.begin(), x.end());
          c.insert(c.end(), y.begin(), y.end());
          out.push_back(std::move(c));
        }
  };
  const std::size_t n = labels.size();
  if (sym) {
    // the smallest label stays in the left subtree
    const std::size_t m = n - 1;
    for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) {
      std::vector<Label> A{labels[0]}, B;
      for (std::size_t k = 0; k < m; ++k) ((mask >> k) & 1 ? A : B).push_back(labels[k + 1]);
      emit(A, B);
    }
  } else {
    for (std::size_t k = 1; k < n; ++k)
      emit(std::vector<Label>(labels.begin(), labels.begin() + k), std::vector<Label>(labels.begin() + k, labels.end()));
  }
}

}  // namespace

FreeOperad::FreeOperad(GeneratorSpace E, bool symmetric, std::string name)
    : E_(std::move(E)), symmetric_(symmetric), name_(std::move(name)) {
  if (symmetric_ && static_cast<int>(E_.swap.size()) != E_.size())
    throw std::invalid_argument("FreeOperad: symmetric generator space needs a swap action");
  if (static_cast<int>(E_.diff.size()) != E_.size()) E_.diff.resize(E_.size());
}

std::vector<TreeMonomial> FreeOperad::basis(std::span<const Label> labels) const {
  std::vector<Label> s(labels.begin(), labels.end());
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> codes;
  trees_rec(E_, symmetric_, s, codes);
  std::vector<TreeMonomial> out;
  out.reserve(codes.size());
  for (auto& c : codes) out.push_back({std::move(c)});
  std::sort(out.begin(), out.end(), [&](const TreeMonomial& a, const TreeMonomial& b) {
    int da = dim(a), db = dim(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

std::vector<TreeMonomial> free_basis(const GeneratorSpace& E, int n, bool symmetric) {
  if (n < 1) throw std::invalid_argument("free_basis: n < 1");
  GeneratorSpace e = E;
  if (symmetric && e.swap.empty()) throw std::invalid_argument("free_basis: missing swap action");
  FreeOperad F(std::move(e), symmetric);
  auto l = iota_labels(n);
  return F.basis(l);
}

int FreeOperad::dim(const Cell& c) const { return code_degree(E_, c.code, 0, c.code.size()); }

std::vector<Label> FreeOperad::leaves(const Cell& c) const {
  std::vector<Label> v;
  for (int x : c.code)
    if (x >= 0) v.push_back(x);
  return v;
}

LinComb<TreeMonomial> FreeOperad::canonicalize(const std::vector<int>& code) const {
  LinComb<TreeMonomial> out;
  for (auto& [c, t] : canon_rec(E_, symmetric_, code, 0)) out.add(TreeMonomial{std::move(t)}, c);
  return out;
}

LinComb<TreeMonomial> FreeOperad::cherry(int g, Label left, Label right) const {
  return canonicalize({-(g + 1), left, right});
}

LinComb<TreeMonomial> FreeOperad::compose(const Cell& a, Label i, const Cell& b) const {
  auto it = std::find(a.code.begin(), a.code.end(), i);
  if (it == a.code.end()) throw std::invalid_argument("FreeOperad::compose: slot not a leaf");
  std::size_t pos = it - a.code.begin();
  std::vector<int> c(a.code.begin(), it);
  c.insert(c.end(), b.code.begin(), b.code.end());
  c.insert(c.end(), it + 1, a.code.end());
  int after = code_degree(E_, a.code, pos + 1, a.code.size());
  int s = ((after * dim(b)) & 1) ? -1 : 1;
  auto r = canonicalize(c);
  if (s < 0) r *= Scalar(-1);
  return r;
}

LinComb<TreeMonomial> FreeOperad::differential(const Cell& c) const {
  LinComb<TreeMonomial> out;
  int before = 0;
  for (std::size_t k = 0; k < c.code.size(); ++k) {
    if (c.code[k] >= 0) continue;
    int g = -c.code[k] - 1;
    for (const auto& [h, ch] : E_.diff[g]) {
      TreeMonomial t = c;
      t.code[k] = -(h + 1);
      out.add(t, (before & 1) ? -ch : ch);
    }
    before += E_.gens[g].dim;
  }
  return out;
}

LinComb<TreeMonomial> FreeOperad::relabel(const Cell& c, const LabelMap& f) const {
  std::vector<int> code = c.code;
  for (int& x : code)
    if (x >= 0) x = f(x);
  return canonicalize(code);
}

LinComb<TreeMonomial> FreeOperad::compose_std(const LinComb<Cell>& a, int p, int i, const LinComb<Cell>& b,
                                              int q) const {
  return dgop::compose_std(*this, a, p, i, b, q);
}

std::string FreeOperad::format(const Cell& c) const {
  std::string s;
  // prefix code back to nested notation
  std::vector<int> pending;  // children still to print per open vertex
  for (int x : c.code) {
    if (x < 0) {
      s += E_.gens[-x - 1].name + "(";
      pending.push_back(2);
      continue;
    }
    s += std::to_string(x);
    while (!pending.empty()) {
      if (--pending.back() > 0) {
        s += ",";
        break;
      }
      pending.pop_back();
      s += ")";
    }
  }
  return s;
}

}  // namespace dgop
