#include "dgop/homology.hpp"

#include "dgop/pasc_operad.hpp"
#include "dgop/perm_operad.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dgop {

std::vector<Scalar> ChainComplexData::dims() const {
  std::vector<Scalar> v;
  for (const auto& l : labels) v.push_back(static_cast<long>(l.size()));
  return v;
}

Scalar ChainComplexData::euler_characteristic() const {
  Scalar e = 0;
  for (int k = 0; k <= top(); ++k) e += (k & 1 ? -1 : 1) * Scalar(static_cast<long>(labels[k].size()));
  return e;
}

bool ChainComplexData::d_squared_zero() const {
  for (int k = 0; k <= top(); ++k) {
    int j = k + direction;
    if (j < 0 || j > top() || d[k].empty() || d[j].empty()) continue;
    if (!is_zero_matrix(multiply(d[j], d[k]))) return false;
  }
  return true;
}

namespace {

template <DgOperad Op>
ChainComplexData explicit_complex(const Op& op, int n) {
  ChainComplexData C;
  C.operad = op.name();
  C.arity = n;
  C.direction = static_cast<int>(op.grading());
  auto labels = iota_labels(n);
  auto basis = op.basis(labels);
  int top = 0;
  for (const auto& c : basis) top = std::max(top, op.dim(c));
  std::vector<std::vector<typename Op::Cell>> by_dim(top + 1);
  for (const auto& c : basis) by_dim[op.dim(c)].push_back(c);
  std::vector<std::map<typename Op::Cell, int>> index(top + 1);
  for (int k = 0; k <= top; ++k) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
      index[k][by_dim[k][j]] = static_cast<int>(j);
      names.push_back(op.format(by_dim[k][j]));
    }
    C.labels.push_back(std::move(names));
  }
  C.d.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    int t = k + C.direction;
    if (t < 0 || t > top) continue;
    IntMatrix m(by_dim[t].size(), std::vector<Scalar>(by_dim[k].size(), 0));
    for (std::size_t j = 0; j < by_dim[k].size(); ++j)
      for (const auto& [c, a] : op.differential(by_dim[k][j])) m[index[t].at(c)][j] += a;
    C.d[k] = std::move(m);
  }
  return C;
}

}  // namespace

ChainComplexData complex_from_quotient(const QuadraticQuotient& Q, int n) {
  const auto& L = Q.level(n);
  if (!L.integral) throw std::runtime_error("complex_from_quotient: quotient basis is not integral");
  ChainComplexData C;
  C.operad = Q.data().id;
  C.arity = n;
  C.direction = static_cast<int>(Q.data().E.grading);
  int top = 0;
  for (int k : L.degree) top = std::max(top, k);
  std::vector<std::vector<int>> by_dim(top + 1);
  std::vector<int> pos(L.size());
  for (int b = 0; b < L.size(); ++b) {
    pos[b] = static_cast<int>(by_dim[L.degree[b]].size());
    by_dim[L.degree[b]].push_back(b);
  }
  const FreeOperad& F = Q.free();
  for (int k = 0; k <= top; ++k) {
    std::vector<std::string> names;
    for (int b : by_dim[k]) names.push_back(format_terms(F, Q.representative(n, b)));
    C.labels.push_back(std::move(names));
  }
  C.d.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    int t = k + C.direction;
    if (t < 0 || t > top) continue;
    IntMatrix m(by_dim[t].size(), std::vector<Scalar>(by_dim[k].size(), 0));
    for (std::size_t j = 0; j < by_dim[k].size(); ++j)
      for (const auto& [c, a] : L.d[by_dim[k][j]]) {
        if (denominator(a) != 1) throw std::runtime_error("complex_from_quotient: non-integral differential");
        if (L.degree[c] != t) throw std::logic_error("complex_from_quotient: differential changes degree wrongly");
        m[pos[c]][j] += numerator(a);
      }
    C.d[k] = std::move(m);
  }
  return C;
}

ChainComplexData build_complex(const std::string& id, int n) {
  if (n < 1) throw std::invalid_argument("build_complex: arity must be >= 1");
  if (id == "pi") return explicit_complex(PermOperad{}, n);
  if (id == "pasc") return explicit_complex(PascOperad{}, n);
  QuadraticQuotient Q(presentation_by_id(id), n);
  return complex_from_quotient(Q, n);
}

HomologySummary homology(const ChainComplexData& C) {
  if (!C.d_squared_zero()) throw std::invalid_argument("homology: d^2 != 0");
  HomologySummary h;
  h.operad = C.operad;
  h.arity = C.arity;
  const int top = C.top();
  std::vector<SmithForm> snf(top + 1);
  for (int k = 0; k <= top; ++k)
    if (!C.d[k].empty() && !C.d[k][0].empty()) snf[k] = smith_normal_form(C.d[k]);
  for (int k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.dim = k;
    int in = k - C.direction;
    int rank_in = (in >= 0 && in <= top) ? snf[in].rank : 0;
    g.rank = Scalar(static_cast<long>(C.labels[k].size())) - snf[k].rank - rank_in;
    if (in >= 0 && in <= top)
      for (const auto& f : snf[in].factors)
        if (f != 1) g.torsion.push_back(f);
    h.groups.push_back(std::move(g));
  }
  return h;
}

bool HomologySummary::concentrated_in_zero() const {
  for (const auto& g : groups) {
    if (!g.torsion.empty()) return false;
    if (g.rank != (g.dim == 0 ? 1 : 0)) return false;
  }
  return !groups.empty();
}

std::string HomologySummary::format() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : groups) {
    if (g.rank == 0 && g.torsion.empty()) continue;
    os << (first ? "" : ", ") << "H" << g.dim << " = ";
    first = false;
    bool any = false;
    if (g.rank != 0) {
      os << "Z";
      if (g.rank != 1) os << "^" << g.rank;
      any = true;
    }
    for (const auto& t : g.torsion) {
      os << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dgop
