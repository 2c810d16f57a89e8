#include "dgop/koszul_dual.hpp"

#include <sstream>
#include <stdexcept>

namespace dgop {

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense invert(Dense a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("weight-2 basis is not a basis of F(3)");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

SmallComb row_comb(const IntMatrix& J, int x) {
  if (J.empty()) return {{x, 1}};
  SmallComb c;
  for (std::size_t y = 0; y < J[x].size(); ++y)
    if (J[x][y] != 0) c.push_back({static_cast<int>(y), static_cast<int>(J[x][y])});
  return c;
}

// combination of generators as a dense vector
std::vector<Scalar> apply_rows(const IntMatrix& J, const SmallComb& c, int g) {
  std::vector<Scalar> v(g, 0);
  for (auto [z, a] : c)
    for (int y = 0; y < g; ++y) v[y] += a * J[z][y];
  return v;
}

std::vector<Scalar> image_of(const std::vector<SmallComb>& action, const IntMatrix& J, int x, int g) {
  std::vector<Scalar> v(g, 0);
  for (int y = 0; y < g; ++y) {
    if (J[x][y] == 0) continue;
    for (auto [h, a] : action[y]) v[h] += J[x][y] * a;
  }
  return v;
}

}  // namespace

std::string SignConvention::describe() const {
  auto s = [](int x) { return x > 0 ? "+" : "-"; };
  std::ostringstream os;
  os << "symmetric blocks (" << s(symmetric_blocks[0]) << "," << s(symmetric_blocks[1]) << ","
     << s(symmetric_blocks[2]) << "); nonsymmetric blocks (o1:" << s(nonsymmetric_blocks[0])
     << ", o2:" << s(nonsymmetric_blocks[1]) << "); odd-odd sign " << (odd_odd ? "on" : "off");
  return os.str();
}

Weight2Space weight2_space(const GeneratorSpace& E, bool symmetric) {
  Weight2Space W;
  W.g = E.size();
  W.symmetric = symmetric;
  for (const auto& gen : E.gens) W.degrees.push_back(gen.dim);
  return W;
}

LinComb<TreeMonomial> weight2_element(const QuadraticData& q, int block, const SmallComb& x, const SmallComb& y) {
  FreeOperad F = q.free();
  LinComb<TreeMonomial> X, Y;
  for (auto [g, c] : x) X.add_scaled(F.cherry(g, 1, 2), c);
  for (auto [g, c] : y) Y.add_scaled(F.cherry(g, 1, 2), c);
  if (!q.symmetric) return F.compose_std(X, 2, block + 1, Y, 2);
  auto r = F.compose_std(X, 2, 1, Y, 2);
  if (block != 0) r = relabel_terms(F, r, tau_map(TauReading::cycle_321, block));
  return r;
}

std::vector<SparseVec> weight2_coords(const QuadraticData& q, const std::vector<LinComb<TreeMonomial>>& xs,
                                      const IntMatrix& J) {
  FreeOperad F = q.free();
  FreeCoordinates fc(F, 3);
  Weight2Space W = weight2_space(q.E, q.symmetric);
  const int n = W.size();
  if (static_cast<int>(fc.basis.size()) != n) throw std::logic_error("weight2_coords: dimension mismatch");
  Dense B(n, std::vector<Rational>(n, 0));
  for (int k = 0; k < W.blocks(); ++k)
    for (int a = 0; a < W.g; ++a)
      for (int b = 0; b < W.g; ++b)
        for (const auto& [c, v] : fc.coords(weight2_element(q, k, row_comb(J, a), row_comb(J, b))))
          B[W.index(k, a, b)][c] = v;
  Dense inv = invert(B);
  std::vector<SparseVec> out;
  for (const auto& x : xs) {
    std::vector<Rational> w(n, 0);
    for (const auto& [c, v] : fc.coords(x))
      for (int j = 0; j < n; ++j) w[j] += v * inv[c][j];
    out.push_back(sparse_from_dense(w));
  }
  return out;
}

bool PairingMatrix::nondegenerate() const {
  if (block_size <= 0 || m.size() % block_size != 0) return false;
  for (std::size_t b = 0; b < m.size(); b += block_size) {
    IntMatrix blk;
    for (int i = 0; i < block_size; ++i) {
      if (m[b + i].size() != m.size()) return false;
      for (std::size_t j = 0; j < m.size(); ++j)
        if ((j < b || j >= b + block_size) && m[b + i][j] != 0) return false;
      blk.emplace_back(m[b + i].begin() + b, m[b + i].begin() + b + block_size);
    }
    SmithForm sf = smith_normal_form(blk);
    if (sf.rank != block_size) return false;
    for (const auto& f : sf.factors)
      if (f != 1) return false;
  }
  return true;
}

PairingMatrix pairing_matrix(const Weight2Space& W, const SignConvention& c) {
  PairingMatrix P;
  P.block_size = W.g * W.g;
  const int n = W.size();
  P.m.assign(n, std::vector<Scalar>(n, 0));
  for (int k = 0; k < W.blocks(); ++k)
    for (int a = 0; a < W.g; ++a)
      for (int b = 0; b < W.g; ++b) {
        int s = W.symmetric ? c.symmetric_blocks[k] : c.nonsymmetric_blocks[k];
        if (c.odd_odd && (W.degrees[a] & 1) && (W.degrees[b] & 1)) s = -s;
        int i = W.index(k, a, b);
        P.m[i][i] = s;
      }
  return P;
}

GeneratorSpace dual_generators(const GeneratorSpace& E) {
  GeneratorSpace D;
  const int g = E.size();
  for (const auto& gen : E.gens) D.gens.push_back({gen.name + "*", gen.dim});
  if (!E.swap.empty()) {
    D.swap.assign(g, {});
    for (int z = 0; z < g; ++z)
      for (auto [x, c] : E.swap[z]) D.swap[x].push_back({z, -c});
  }
  D.diff.assign(g, {});
  for (int z = 0; z < g; ++z)
    for (auto [x, c] : E.diff[z]) D.diff[x].push_back({z, c});
  D.grading = E.grading == Grading::cochain ? Grading::chain : Grading::cochain;
  return D;
}

namespace {

std::vector<SparseVec> times(const std::vector<SparseVec>& R, const PairingMatrix& P, bool transpose) {
  if (!P.nondegenerate()) throw std::invalid_argument("orthogonal_complement: degenerate pairing");
  const int n = static_cast<int>(P.m.size());
  std::vector<SparseVec> rows;
  for (const auto& r : R) {
    std::vector<Rational> v(n, 0);
    for (const auto& [i, a] : r)
      for (int j = 0; j < n; ++j) {
        const Scalar& p = transpose ? P.m[j][i] : P.m[i][j];
        if (p != 0) v[j] += a * Rational(p);
      }
    rows.push_back(sparse_from_dense(v));
  }
  return rows;
}

}  // namespace

std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& R, const PairingMatrix& P) {
  return kernel_basis(times(R, P, false), static_cast<int>(P.m.size()));
}

std::vector<SparseVec> orthogonal_complement_left(const std::vector<SparseVec>& R, const PairingMatrix& P) {
  return kernel_basis(times(R, P, true), static_cast<int>(P.m.size()));
}

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, int columns) {
  std::vector<SparseVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = rank_of(a, columns), rb = rank_of(b, columns);
  return ra == rb && rank_of(both, columns) == ra;
}

std::vector<DualPair> dual_pairs() {
  IntMatrix id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix flip{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  return {
      {"pi-coprod", presentation_pi(), presentation_coprod(), flip},
      {"pasc-lambda", presentation_pasc(), presentation_lambda(), flip},
      {"kprime-trias", presentation_kprime(), presentation_trias(), id3},
  };
}

DualPair dual_pair_by_id(const std::string& id) {
  for (auto& p : dual_pairs())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown dual pair " + id);
}

DualPairReport verify_dual_pair(const DualPair& pair, const SignConvention& c) {
  DualPairReport rep;
  rep.pair = pair.id;
  rep.convention = c;
  const QuadraticData& p = pair.p;
  const QuadraticData& d = pair.dual;
  const int g = p.E.size();
  Weight2Space W = weight2_space(p.E, p.symmetric);
  PairingMatrix P = pairing_matrix(W, c);
  const int n = W.size();
  rep.weight2_dim = n;

  auto R = weight2_coords(p, p.relation_basis());
  auto Rd = weight2_coords(d, d.relation_basis(), pair.J);
  auto perp = orthogonal_complement(R, P);
  rep.rank_r = rank_of(R, n);
  rep.rank_perp = static_cast<int>(perp.size());
  rep.rank_dual = rank_of(Rd, n);
  {
    auto both = perp;
    both.insert(both.end(), Rd.begin(), Rd.end());
    rep.rank_joint = rank_of(both, n);
  }
  rep.spans_equal = rep.rank_perp == rep.rank_dual && rep.rank_joint == rep.rank_perp;
  rep.reverse_equal = same_span(orthogonal_complement_left(Rd, P), R, n);
  rep.involutive = same_span(orthogonal_complement_left(perp, P), R, n);

  rep.degrees_match = d.E.size() == g && d.symmetric == p.symmetric &&
                      d.E.grading == (p.E.grading == Grading::cochain ? Grading::chain : Grading::cochain);
  for (int x = 0; x < g && rep.degrees_match; ++x)
    for (int y = 0; y < g; ++y)
      if (pair.J[x][y] != 0 && d.E.gens[y].dim != p.E.gens[x].dim) rep.degrees_match = false;

  GeneratorSpace Es = dual_generators(p.E);
  rep.action_matches = true;
  if (p.symmetric)
    for (int x = 0; x < g; ++x)
      if (apply_rows(pair.J, Es.swap[x], g) != image_of(d.E.swap, pair.J, x, g)) rep.action_matches = false;
  rep.differential_matches = true;
  for (int x = 0; x < g; ++x)
    if (apply_rows(pair.J, Es.diff[x], g) != image_of(d.E.diff, pair.J, x, g)) rep.differential_matches = false;
  return rep;
}

ConventionSearch search_conventions() {
  ConventionSearch s;
  for (int odd = 0; odd < 2; ++odd)
    for (int sb = 0; sb < 8; ++sb)
      for (int nb = 0; nb < 4; ++nb) {
        SignConvention c;
        for (int k = 0; k < 3; ++k) c.symmetric_blocks[k] = (sb >> (2 - k)) & 1 ? -1 : 1;
        for (int k = 0; k < 2; ++k) c.nonsymmetric_blocks[k] = (nb >> (1 - k)) & 1 ? -1 : 1;
        c.odd_odd = odd;
        s.candidates.push_back(c);
      }
  const auto pairs = dual_pairs();
  const int m = static_cast<int>(s.candidates.size());
  std::vector<char> ok(m, 0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    bool all = true;
    for (const auto& pr : pairs) all = all && verify_dual_pair(pr, s.candidates[i]).passed();
    ok[i] = all;
  }
  for (int i = 0; i < m; ++i) {
    s.passes.push_back(ok[i]);
    if (ok[i] && s.accepted < 0) s.accepted = i;
  }
  return s;
}

const SignConvention& accepted_convention() {
  static const SignConvention c = [] {
    auto s = search_conventions();
    if (s.accepted < 0) throw std::runtime_error("no sign convention verifies the three dual pairs");
    return s.candidates[s.accepted];
  }();
  return c;
}

}  // namespace dgop
