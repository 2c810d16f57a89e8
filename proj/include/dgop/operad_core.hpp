#pragma once

#include "dgop/exalg.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgop {

// +1: d raises dimension, -1: d lowers it
enum class Grading { cochain = 1, chain = -1 };

template <class Op>
concept DgOperad = requires(const Op& op, const typename Op::Cell& c, Label l,
                            std::span<const Label> labels, const LabelMap& f) {
  typename Op::Cell;
  { op.name() } -> std::convertible_to<std::string>;
  { op.grading() } -> std::same_as<Grading>;
  { op.symmetric() } -> std::same_as<bool>;
  { op.basis(labels) } -> std::same_as<std::vector<typename Op::Cell>>;
  { op.dim(c) } -> std::same_as<int>;
  // labeled partial composition; labels of the two cells are disjoint apart from l
  { op.compose(c, l, c) } -> std::same_as<LinComb<typename Op::Cell>>;
  { op.differential(c) } -> std::same_as<LinComb<typename Op::Cell>>;
  { op.relabel(c, f) } -> std::same_as<LinComb<typename Op::Cell>>;
  { op.unit(l) } -> std::same_as<typename Op::Cell>;
  { op.format(c) } -> std::same_as<std::string>;
};

template <class Cell>
struct OperadElement {
  std::vector<Label> labels;  // sorted
  LinComb<Cell> terms;

  int arity() const { return static_cast<int>(labels.size()); }
  friend bool operator==(const OperadElement&, const OperadElement&) = default;
};

inline std::vector<Label> iota_labels(int n, Label first = 1) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), first);
  return v;
}

template <DgOperad Op>
LinComb<typename Op::Cell> compose_terms(const Op& op, const LinComb<typename Op::Cell>& a, Label i,
                                         const LinComb<typename Op::Cell>& b) {
  LinComb<typename Op::Cell> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(op.compose(x, i, y), cx * cy);
  return out;
}

template <DgOperad Op>
LinComb<typename Op::Cell> differential_terms(const Op& op, const LinComb<typename Op::Cell>& a) {
  LinComb<typename Op::Cell> out;
  for (const auto& [x, c] : a) out.add_scaled(op.differential(x), c);
  return out;
}

template <DgOperad Op>
LinComb<typename Op::Cell> relabel_terms(const Op& op, const LinComb<typename Op::Cell>& a,
                                         const LabelMap& f) {
  LinComb<typename Op::Cell> out;
  for (const auto& [x, c] : a) out.add_scaled(op.relabel(x, f), c);
  return out;
}

template <DgOperad Op>
OperadElement<typename Op::Cell> make_element(const Op&, std::vector<Label> labels,
                                              LinComb<typename Op::Cell> terms) {
  std::sort(labels.begin(), labels.end());
  return {std::move(labels), std::move(terms)};
}

template <DgOperad Op>
OperadElement<typename Op::Cell> unit_element(const Op& op, Label l = 1) {
  return {{l}, LinComb<typename Op::Cell>(op.unit(l))};
}

template <DgOperad Op>
OperadElement<typename Op::Cell> compose(const Op& op, const OperadElement<typename Op::Cell>& a,
                                         Label i, const OperadElement<typename Op::Cell>& b) {
  if (!std::binary_search(a.labels.begin(), a.labels.end(), i))
    throw std::invalid_argument("compose: slot " + std::to_string(i) + " not in label set");
  std::vector<Label> labels;
  for (Label l : a.labels)
    if (l != i) labels.push_back(l);
  for (Label l : b.labels) {
    if (std::binary_search(labels.begin(), labels.end(), l))
      throw std::invalid_argument("compose: label collision on " + std::to_string(l));
  }
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  std::sort(labels.begin(), labels.end());
  return {std::move(labels), compose_terms(op, a.terms, i, b.terms)};
}

template <DgOperad Op>
OperadElement<typename Op::Cell> differential(const Op& op, const OperadElement<typename Op::Cell>& a) {
  return {a.labels, differential_terms(op, a.terms)};
}

template <DgOperad Op>
OperadElement<typename Op::Cell> relabel(const Op& op, const OperadElement<typename Op::Cell>& a,
                                         const LabelMap& f) {
  if (!f.injective_on(a.labels)) throw std::invalid_argument("relabel: map is not a bijection");
  std::vector<Label> labels;
  for (Label l : a.labels) labels.push_back(f(l));
  std::sort(labels.begin(), labels.end());
  return {std::move(labels), relabel_terms(op, a.terms, f)};
}

// Places a over [p] and b over [q] for a standard o_i; slot i becomes 0.
inline LabelMap std_outer_map(int p, int i, int q) {
  LabelMap f;
  for (int j = 1; j <= p; ++j) f.set(j, j < i ? j : (j == i ? 0 : j + q - 1));
  return f;
}
inline LabelMap std_inner_map(int q, int i) {
  LabelMap f;
  for (int k = 1; k <= q; ++k) f.set(k, k + i - 1);
  return f;
}

// a over [p], b over [q]; result over [p+q-1]
template <DgOperad Op>
LinComb<typename Op::Cell> compose_std(const Op& op, const LinComb<typename Op::Cell>& a, int p,
                                       int i, const LinComb<typename Op::Cell>& b, int q) {
  auto ra = relabel_terms(op, a, std_outer_map(p, i, q));
  auto rb = relabel_terms(op, b, std_inner_map(q, i));
  return compose_terms(op, ra, 0, rb);
}

template <DgOperad Op>
OperadElement<typename Op::Cell> compose_std(const Op& op, const OperadElement<typename Op::Cell>& a,
                                             int i, const OperadElement<typename Op::Cell>& b) {
  int p = a.arity(), q = b.arity();
  if (i < 1 || i > p) throw std::invalid_argument("compose_std: slot out of range");
  return {iota_labels(p + q - 1), compose_std(op, a.terms, p, i, b.terms, q)};
}

template <DgOperad Op>
std::string format_terms(const Op& op, const LinComb<typename Op::Cell>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : x) {
    if (k < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    Scalar a = abs(k);
    if (a != 1) os << a << "*";
    os << op.format(c);
    first = false;
  }
  return os.str();
}

// ---- axiom harness ----

enum class Axiom { unit, sequential_associativity, parallel_associativity, equivariance, chain_map, d_squared };
inline constexpr Axiom kAllAxioms[] = {Axiom::unit, Axiom::sequential_associativity,
                                       Axiom::parallel_associativity, Axiom::equivariance,
                                       Axiom::chain_map, Axiom::d_squared};
std::string axiom_name(Axiom a);

enum class Execution { serial, parallel };

struct Witness {
  std::vector<int> key;  // arities, basis indices and slots; orders witnesses
  std::string text;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomStatus {
  Axiom axiom;
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<Witness> witness;
  friend bool operator==(const AxiomStatus&, const AxiomStatus&) = default;
};

struct AxiomReport {
  std::string operad;
  int max_total_arity = 0;
  std::vector<AxiomStatus> axioms;

  bool all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomStatus& s) { return s.passed; });
  }
  const AxiomStatus& status(Axiom a) const;
  std::string summary() const;
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

namespace detail {

struct Tally {
  std::uint64_t checked = 0;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (!witness || w.key < witness->key) witness = std::move(w);
  }
  void merge(const Tally& o) {
    checked += o.checked;
    if (o.witness) fail(*o.witness);
  }
};

// fn(index, tally) runs one work item
template <class Fn>
Tally run_items(std::size_t n, Execution ex, Fn&& fn) {
  Tally total;
  if (ex == Execution::serial) {
    for (std::size_t k = 0; k < n; ++k) fn(k, total);
    return total;
  }
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 4)
    for (long long k = 0; k < static_cast<long long>(n); ++k) fn(static_cast<std::size_t>(k), local);
#pragma omp critical(dgop_tally)
    total.merge(local);
  }
  return total;
}

inline void next_permutation_list(int n, std::vector<std::vector<Label>>& out) {
  std::vector<Label> v = iota_labels(n);
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace detail

template <DgOperad Op>
AxiomReport check_operad_axioms(const Op& op, int max_total_arity, Execution ex = Execution::parallel) {
  using Cell = typename Op::Cell;
  using LC = LinComb<Cell>;
  const int N = max_total_arity;
  std::vector<std::vector<Cell>> B(N + 1);
  for (int n = 1; n <= N; ++n) {
    auto labels = iota_labels(n);
    B[n] = op.basis(labels);
  }
  auto fmt = [&](const Cell& c) { return op.format(c); };
  auto dimsign = [&](int d) { return (d & 1) ? Scalar(-1) : Scalar(1); };

  AxiomReport rep;
  rep.operad = op.name();
  rep.max_total_arity = N;
  auto record = [&](Axiom ax, const detail::Tally& t) {
    AxiomStatus s;
    s.axiom = ax;
    s.checked = t.checked;
    s.witness = t.witness;
    s.passed = !t.witness.has_value();
    rep.axioms.push_back(std::move(s));
  };

  struct Pair {
    int p, q, ia, ib;
  };
  std::vector<Pair> pairs;  // all (a, b) with p + q - 1 <= N
  for (int p = 1; p <= N; ++p)
    for (int q = 1; p + q - 1 <= N; ++q)
      for (int ia = 0; ia < static_cast<int>(B[p].size()); ++ia)
        for (int ib = 0; ib < static_cast<int>(B[q].size()); ++ib) pairs.push_back({p, q, ia, ib});

  // unit
  {
    std::vector<std::pair<int, int>> cells;
    for (int n = 1; n <= N; ++n)
      for (int k = 0; k < static_cast<int>(B[n].size()); ++k) cells.push_back({n, k});
    LC u(op.unit(1));
    auto t = detail::run_items(cells.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
      auto [n, k] = cells[idx];
      LC a(B[n][k]);
      ++tl.checked;
      if (compose_std(op, u, 1, 1, a, n) != a)
        tl.fail({{n, k, 0}, "unit o_1 " + fmt(B[n][k]) + " != " + fmt(B[n][k])});
      for (int i = 1; i <= n; ++i) {
        ++tl.checked;
        if (compose_std(op, a, n, i, u, 1) != a)
          tl.fail({{n, k, i}, fmt(B[n][k]) + " o_" + std::to_string(i) + " unit != itself"});
      }
    });
    record(Axiom::unit, t);
  }

  // sequential: (a o_i b) o_{i+j-1} c = a o_i (b o_j c)
  {
    auto t = detail::run_items(pairs.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
      const auto& pr = pairs[idx];
      LC a(B[pr.p][pr.ia]), b(B[pr.q][pr.ib]);
      for (int r = 1; pr.p + pr.q + r - 2 <= N; ++r) {
        for (int ic = 0; ic < static_cast<int>(B[r].size()); ++ic) {
          LC c(B[r][ic]);
          for (int j = 1; j <= pr.q; ++j) {
            LC bc = compose_std(op, b, pr.q, j, c, r);
            for (int i = 1; i <= pr.p; ++i) {
              ++tl.checked;
              LC lhs = compose_std(op, compose_std(op, a, pr.p, i, b, pr.q), pr.p + pr.q - 1, i + j - 1, c, r);
              LC rhs = compose_std(op, a, pr.p, i, bc, pr.q + r - 1);
              if (lhs != rhs)
                tl.fail({{pr.p, pr.q, r, pr.ia, pr.ib, ic, i, j},
                         "(" + fmt(B[pr.p][pr.ia]) + " o_" + std::to_string(i) + " " + fmt(B[pr.q][pr.ib]) +
                             ") o_" + std::to_string(i + j - 1) + " " + fmt(B[r][ic]) + ": " +
                             format_terms(op, lhs) + " vs " + format_terms(op, rhs)});
            }
          }
        }
      }
    });
    record(Axiom::sequential_associativity, t);
  }

  // parallel: for i < j, (a o_i b) o_{j+q-1} c = (-1)^{|b||c|} (a o_j c) o_i b
  {
    auto t = detail::run_items(pairs.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
      const auto& pr = pairs[idx];
      const int p = pr.p, q = pr.q;
      if (p < 2) return;
      LC a(B[p][pr.ia]), b(B[q][pr.ib]);
      int db = op.dim(B[q][pr.ib]);
      for (int r = 1; p + q + r - 2 <= N; ++r) {
        for (int ic = 0; ic < static_cast<int>(B[r].size()); ++ic) {
          LC c(B[r][ic]);
          Scalar s = dimsign(db * op.dim(B[r][ic]));
          for (int i = 1; i <= p; ++i) {
            LC ab = compose_std(op, a, p, i, b, q);
            for (int j = i + 1; j <= p; ++j) {
              ++tl.checked;
              LC lhs = compose_std(op, ab, p + q - 1, j + q - 1, c, r);
              LC rhs = s * compose_std(op, compose_std(op, a, p, j, c, r), p + r - 1, i, b, q);
              if (lhs != rhs)
                tl.fail({{p, q, r, pr.ia, pr.ib, ic, i, j},
                         "(" + fmt(B[p][pr.ia]) + " o_" + std::to_string(i) + " " + fmt(B[q][pr.ib]) + ") o_" +
                             std::to_string(j + q - 1) + " " + fmt(B[r][ic]) + ": " + format_terms(op, lhs) +
                             " vs " + format_terms(op, rhs)});
            }
          }
        }
      }
    });
    record(Axiom::parallel_associativity, t);
  }

  // equivariance: labeled naturality of composition, relabel functoriality, d commutes with relabel
  {
    detail::Tally t;
    if (op.symmetric()) {
      std::vector<std::vector<std::vector<Label>>> perms(N + 1);
      for (int n = 1; n <= N; ++n) {
        if (n <= 4) {
          detail::next_permutation_list(n, perms[n]);
        } else {
          for (int s = 1; s < n; ++s) {
            auto v = iota_labels(n);
            std::swap(v[s - 1], v[s]);
            perms[n].push_back(v);
          }
        }
      }
      t = detail::run_items(pairs.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
        const auto& pr = pairs[idx];
        const int p = pr.p, q = pr.q, n = p + q - 1;
        for (int i = 1; i <= p; ++i) {
          LC A = relabel_terms(op, LC(B[p][pr.ia]), std_outer_map(p, i, q));
          LC Bb = relabel_terms(op, LC(B[q][pr.ib]), std_inner_map(q, i));
          LC whole = compose_terms(op, A, 0, Bb);
          for (std::size_t ip = 0; ip < perms[n].size(); ++ip) {
            for (int slot : {0, n + 1}) {
              LabelMap phi = LabelMap::from_images(perms[n][ip]);
              LabelMap phia, phib;
              for (int l = 1; l <= n; ++l) {
                if (l >= i && l < i + q) phib.set(l, phi(l));
                else phia.set(l, phi(l));
              }
              phia.set(0, slot);
              ++tl.checked;
              LC lhs = relabel_terms(op, whole, phi);
              LC rhs = compose_terms(op, relabel_terms(op, A, phia), slot, relabel_terms(op, Bb, phib));
              if (lhs != rhs)
                tl.fail({{p, q, pr.ia, pr.ib, i, static_cast<int>(ip), slot},
                         "relabel by [" + format_word(perms[n][ip], ",") + "] of " + fmt(B[p][pr.ia]) + " o_" +
                             std::to_string(i) + " " + fmt(B[q][pr.ib]) + ": " + format_terms(op, lhs) + " vs " +
                             format_terms(op, rhs)});
            }
          }
        }
      });
      // functoriality and compatibility with d, on every cell and every generator pair
      std::vector<std::pair<int, int>> cells;
      for (int n = 1; n <= N; ++n)
        for (int k = 0; k < static_cast<int>(B[n].size()); ++k) cells.push_back({n, k});
      auto t2 = detail::run_items(cells.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
        auto [n, k] = cells[idx];
        LC x(B[n][k]);
        for (std::size_t a = 0; a < perms[n].size(); ++a) {
          LabelMap f = LabelMap::from_images(perms[n][a]);
          ++tl.checked;
          LC fx = relabel_terms(op, x, f);
          if (differential_terms(op, fx) != relabel_terms(op, differential_terms(op, x), f))
            tl.fail({{n, k, static_cast<int>(a), -1}, "d does not commute with relabel on " + fmt(B[n][k])});
          for (std::size_t b = 0; b < std::min<std::size_t>(perms[n].size(), n); ++b) {
            LabelMap g = LabelMap::from_images(perms[n][b]);
            ++tl.checked;
            if (relabel_terms(op, fx, g) != relabel_terms(op, x, g.after(f)))
              tl.fail({{n, k, static_cast<int>(a), static_cast<int>(b)},
                       "relabel is not functorial on " + fmt(B[n][k])});
          }
        }
      });
      t.merge(t2);
    }
    record(Axiom::equivariance, t);
  }

  // chain map: d(a o_i b) = da o_i b + (-1)^{|a|} a o_i db
  {
    auto t = detail::run_items(pairs.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
      const auto& pr = pairs[idx];
      LC a(B[pr.p][pr.ia]), b(B[pr.q][pr.ib]);
      LC da = differential_terms(op, a), db = differential_terms(op, b);
      Scalar s = dimsign(op.dim(B[pr.p][pr.ia]));
      for (int i = 1; i <= pr.p; ++i) {
        ++tl.checked;
        LC lhs = differential_terms(op, compose_std(op, a, pr.p, i, b, pr.q));
        LC rhs = compose_std(op, da, pr.p, i, b, pr.q) + s * compose_std(op, a, pr.p, i, db, pr.q);
        if (lhs != rhs)
          tl.fail({{pr.p, pr.q, pr.ia, pr.ib, i},
                   "d(" + fmt(B[pr.p][pr.ia]) + " o_" + std::to_string(i) + " " + fmt(B[pr.q][pr.ib]) +
                       "): " + format_terms(op, lhs) + " vs " + format_terms(op, rhs)});
      }
    });
    record(Axiom::chain_map, t);
  }

  // d^2 = 0
  {
    std::vector<std::pair<int, int>> cells;
    for (int n = 1; n <= N; ++n)
      for (int k = 0; k < static_cast<int>(B[n].size()); ++k) cells.push_back({n, k});
    auto t = detail::run_items(cells.size(), ex, [&](std::size_t idx, detail::Tally& tl) {
      auto [n, k] = cells[idx];
      ++tl.checked;
      LC dd = differential_terms(op, differential_terms(op, LC(B[n][k])));
      if (!dd.is_zero()) tl.fail({{n, k}, "d^2(" + fmt(B[n][k]) + ") = " + format_terms(op, dd)});
    });
    record(Axiom::d_squared, t);
  }
  return rep;
}

// Wraps an operad and twists every composition by (-1)^{dim b}; breaks the chain-map law.
template <DgOperad Op>
struct SignCorrupted {
  using Cell = typename Op::Cell;
  Op base;

  std::string name() const { return base.name() + "-corrupted"; }
  Grading grading() const { return base.grading(); }
  bool symmetric() const { return base.symmetric(); }
  std::vector<Cell> basis(std::span<const Label> l) const { return base.basis(l); }
  int dim(const Cell& c) const { return base.dim(c); }
  LinComb<Cell> compose(const Cell& a, Label i, const Cell& b) const {
    auto r = base.compose(a, i, b);
    if (base.dim(b) & 1) r *= Scalar(-1);
    return r;
  }
  LinComb<Cell> differential(const Cell& c) const { return base.differential(c); }
  LinComb<Cell> relabel(const Cell& c, const LabelMap& f) const { return base.relabel(c, f); }
  Cell unit(Label l) const { return base.unit(l); }
  std::string format(const Cell& c) const { return base.format(c); }
};

}  // namespace dgop
