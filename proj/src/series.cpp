#include "dgop/series.hpp"

#include "dgop/pasc_operad.hpp"
#include "dgop/perm_operad.hpp"
#include "dgop/quotient.hpp"

#include <stdexcept>

namespace dgop {

namespace {

using Poly = BiSeries::Poly;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly padd(const Poly& a, const Poly& b, const Rational& s = 1) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) r[j] += s * b[j];
  trim(r);
  return r;
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly pdiv(Poly a, Poly d) {
  trim(a);
  trim(d);
  if (d.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < d.size()) throw std::domain_error("inexact polynomial division");
  Poly q(a.size() - d.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + d.size() - 1] / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) a[i + j] -= q[i] * d[j];
  }
  trim(a);
  if (!a.empty()) throw std::domain_error("inexact polynomial division");
  trim(q);
  return q;
}

Scalar factorial(int n) {
  Scalar f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Scalar binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Scalar b = 1;
  for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
  return b;
}

BiSeries one(int N) { return BiSeries::constant(N, {Rational(1)}); }

BiSeries truncated(const BiSeries& s, int N) {
  BiSeries r(N);
  for (int n = 0; n <= N; ++n) r[n] = s[n];
  return r;
}

}  // namespace

BiSeries BiSeries::x(int N) {
  BiSeries s(N);
  if (N >= 1) s[1] = {Rational(1)};
  return s;
}

BiSeries BiSeries::constant(int N, Poly p) {
  BiSeries s(N);
  trim(p);
  s[0] = std::move(p);
  return s;
}

Rational BiSeries::coeff(int n, int j) const {
  if (n < 0 || n > order() || j < 0 || j >= static_cast<int>(c_[n].size())) return 0;
  return c_[n][j];
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  for (int n = 0; n <= order() && n <= o.order(); ++n) c_[n] = padd(c_[n], o.c_[n]);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  for (int n = 0; n <= order() && n <= o.order(); ++n) c_[n] = padd(c_[n], o.c_[n], -1);
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int N = std::min(a.order(), b.order());
  BiSeries r(N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) r[i + j] = padd(r[i + j], pmul(a[i], b[j]));
  return r;
}

BiSeries BiSeries::scaled(const Poly& p) const {
  BiSeries r(order());
  for (int n = 0; n <= order(); ++n) r[n] = pmul(c_[n], p);
  return r;
}

BiSeries BiSeries::divided_by_poly(const Poly& p) const {
  BiSeries r(order());
  for (int n = 0; n <= order(); ++n) r[n] = pdiv(c_[n], p);
  return r;
}

BiSeries BiSeries::divided_by_x() const {
  Poly c0 = c_[0];
  trim(c0);
  if (!c0.empty()) throw std::domain_error("divided_by_x: nonzero constant term");
  BiSeries r(order() - 1);
  for (int n = 1; n <= order(); ++n) r[n - 1] = c_[n];
  return r;
}

BiSeries BiSeries::substitute_x(const Poly& p) const {
  BiSeries r(order());
  Poly pw{Rational(1)};
  for (int n = 0; n <= order(); ++n) {
    r[n] = pmul(c_[n], pw);
    pw = pmul(pw, p);
  }
  return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  if (a.order() != b.order()) return false;
  for (int n = 0; n <= a.order(); ++n) {
    Poly x = a[n], y = b[n];
    trim(x);
    trim(y);
    if (x != y) return false;
  }
  return true;
}

BiSeries series_exp(const BiSeries& s) {
  if (!s[0].empty() && !(s[0].size() == 1 && s[0][0] == 0)) throw std::domain_error("series_exp: s(0) != 0");
  BiSeries e(s.order());
  e[0] = {Rational(1)};
  for (int n = 1; n <= s.order(); ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k) acc = padd(acc, pmul(s[k], e[n - k]), Rational(k));
    e[n] = pmul(acc, {Rational(1, n)});
  }
  return e;
}

BiSeries series_log1p(const BiSeries& s) {
  Poly c0 = s[0];
  trim(c0);
  if (!c0.empty()) throw std::domain_error("series_log1p: s(0) != 0");
  BiSeries l(s.order());
  for (int n = 1; n <= s.order(); ++n) {
    Poly acc = pmul(s[n], {Rational(n)});
    for (int k = 1; k < n; ++k) acc = padd(acc, pmul(l[k], s[n - k]), Rational(-k));
    l[n] = pmul(acc, {Rational(1, n)});
  }
  return l;
}

BiSeries series_sqrt(const BiSeries& s) {
  Poly c0 = s[0];
  trim(c0);
  if (c0 != Poly{Rational(1)}) throw std::domain_error("series_sqrt: s(0) != 1");
  BiSeries q(s.order());
  q[0] = {Rational(1)};
  for (int n = 1; n <= s.order(); ++n) {
    Poly acc = s[n];
    for (int k = 1; k < n; ++k) acc = padd(acc, pmul(q[k], q[n - k]), -1);
    q[n] = pmul(acc, {Rational(1, 2)});
  }
  return q;
}

BiSeries series_divide(const BiSeries& a, const BiSeries& b) {
  const int N = std::min(a.order(), b.order());
  BiSeries c(N);
  for (int n = 0; n <= N; ++n) {
    Poly acc = a[n];
    for (int k = 1; k <= n; ++k) acc = padd(acc, pmul(b[k], c[n - k]), -1);
    c[n] = pdiv(acc, b[0]);
  }
  return c;
}

BiSeries series_compose(const BiSeries& outer, const BiSeries& inner) {
  Poly c0 = inner[0];
  trim(c0);
  if (!c0.empty()) throw std::invalid_argument("series_compose: inner series has a constant term");
  const int N = std::min(outer.order(), inner.order());
  BiSeries r(N);
  for (int n = N; n >= 0; --n) {
    r = truncated(r * truncated(inner, N), N);
    r[0] = padd(r[0], outer[n]);
  }
  return r;
}

Scalar SeriesTruncation::at(int n, int k) const {
  auto it = coeff.find({n, k});
  return it == coeff.end() ? Scalar(0) : it->second;
}

std::vector<Scalar> SeriesTruncation::row(int n) const {
  int last = -1;
  for (const auto& [nk, v] : coeff)
    if (nk.first == n) last = std::max(last, nk.second);
  std::vector<Scalar> r;
  for (int k = 0; k <= last; ++k) r.push_back(at(n, k));
  return r;
}

BiSeries to_bi(const SeriesTruncation& s) {
  BiSeries b(s.N);
  for (const auto& [nk, v] : s.coeff) {
    auto [n, k] = nk;
    if (n > s.N) continue;
    Rational c(v);
    if (s.kind == SeriesKind::exponential) c /= Rational(factorial(n));
    if (k & 1) c = -c;
    Poly p(k + 1, 0);
    p[k] = c;
    b[n] = padd(b[n], p);
  }
  return b;
}

SeriesTruncation from_bi(const BiSeries& b, SeriesKind kind, const std::string& name) {
  SeriesTruncation s;
  s.name = name;
  s.kind = kind;
  s.N = b.order();
  Poly c0 = b[0];
  trim(c0);
  if (!c0.empty()) throw std::domain_error(name + ": operad series with a constant term");
  for (int n = 1; n <= b.order(); ++n)
    for (std::size_t k = 0; k < b[n].size(); ++k) {
      Rational v = b[n][k];
      if (k & 1) v = -v;
      if (kind == SeriesKind::exponential) v *= Rational(factorial(n));
      if (denominator(v) != 1 || v < 0)
        throw std::domain_error(name + ": coefficient at (" + std::to_string(n) + "," + std::to_string(k) +
                                ") is not a dimension");
      if (v != 0) s.coeff[{n, static_cast<int>(k)}] = numerator(v);
    }
  return s;
}

SeriesTruncation truncation_from_dims(const std::string& name, SeriesKind kind,
                                      const std::vector<std::vector<Scalar>>& dims) {
  SeriesTruncation s;
  s.name = name;
  s.kind = kind;
  s.N = static_cast<int>(dims.size());
  for (std::size_t n = 0; n < dims.size(); ++n)
    for (std::size_t k = 0; k < dims[n].size(); ++k)
      if (dims[n][k] != 0) s.coeff[{static_cast<int>(n) + 1, static_cast<int>(k)}] = dims[n][k];
  return s;
}

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> t = {
      {"zin", "Zin", SeriesKind::exponential, 1, 1, false},
      {"dend", "Dend", SeriesKind::ordinary, 1, 2, false},
      {"prelie", "PreLie", SeriesKind::exponential, 1, 3, false},
      {"pi", "Π", SeriesKind::exponential, 2, 1, false},
      {"kprime", "K", SeriesKind::ordinary, 2, 2, false},
      {"lambda", "Λ", SeriesKind::exponential, 2, 3, true},
      {"com", "Com", SeriesKind::exponential, 3, 1, false},
      {"as", "As", SeriesKind::ordinary, 3, 2, false},
      {"lie", "Lie", SeriesKind::exponential, 3, 3, false},
      {"pasc", "Pasc", SeriesKind::exponential, 4, 1, false},
      {"trias", "Trias", SeriesKind::ordinary, 4, 2, false},
      {"coprod", "⨿", SeriesKind::exponential, 4, 3, false},
      {"perm", "Perm", SeriesKind::exponential, 5, 1, false},
      {"dias", "Dias", SeriesKind::ordinary, 5, 2, false},
      {"leib", "Leib", SeriesKind::exponential, 5, 3, false},
  };
  return t;
}

const TableEntry& table_entry(const std::string& id) {
  for (const auto& e : table_entries())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown table entry " + id);
}

SeriesTruncation closed_form_coefficients(const std::string& id, int N) {
  const TableEntry& e = table_entry(id);
  const int M = N + 1;  // one spare order for the forms divided by x
  BiSeries X = BiSeries::x(M), I = one(M);
  const Poly t{Rational(0), Rational(1)};
  BiSeries g(M);
  if (id == "zin" || id == "as" || id == "leib") {
    g = series_divide(X, I - X);
  } else if (id == "dend") {
    g = (I - X.scaled({Rational(2)}) - series_sqrt(I - X.scaled({Rational(4)}))).divided_by_x().scaled({Rational(1, 2)});
  } else if (id == "pi") {
    BiSeries E = series_exp(X.substitute_x(t));
    g = series_divide(E - I, I + E.scaled({Rational(-1), Rational(1)}));
  } else if (id == "kprime") {
    BiSeries lin = I + X.scaled({Rational(-2), Rational(1)});
    BiSeries rad = I + X.scaled({Rational(-4), Rational(2)}) + (X * X).scaled({Rational(0), Rational(0), Rational(1)});
    g = (lin - series_sqrt(rad)).divided_by_x().divided_by_poly({Rational(2), Rational(-2)});
  } else if (id == "com") {
    g = series_exp(X) - I;
  } else if (id == "lie") {
    g = -series_log1p(-X);
  } else if (id == "pasc") {
    g = (series_exp(X) - series_exp(X.substitute_x({Rational(1), Rational(-1)}))).divided_by_poly(t);
  } else if (id == "trias") {
    g = (series_divide(X, I - X) - series_divide(X.scaled({Rational(1), Rational(-1)}), I + X.scaled({Rational(-1), Rational(1)})))
            .divided_by_poly(t);
  } else if (id == "coprod") {
    g = (-series_log1p(-X) + series_log1p(X.scaled({Rational(-1), Rational(1)}))).divided_by_poly(t);
  } else if (id == "perm") {
    g = X * series_exp(X);
  } else if (id == "dias") {
    g = series_divide(X, (I - X) * (I - X));
  } else {
    // PreLie and Λ: the table prints only the sum
    return sum_form_coefficients(id, N);
  }
  BiSeries r(N);
  for (int n = 0; n <= N; ++n) r[n] = g[n];
  return from_bi(r, e.kind, e.display);
}

SeriesTruncation sum_form_coefficients(const std::string& id, int N) {
  const TableEntry& e = table_entry(id);
  std::vector<std::vector<Scalar>> dims;
  for (int n = 1; n <= N; ++n) {
    std::vector<Scalar> d;
    if (id == "zin" || id == "leib") {
      d = {factorial(n)};
    } else if (id == "dend") {
      d = {binom(2 * n, n) / (n + 1)};
    } else if (id == "prelie") {
      Scalar p = 1;
      for (int k = 0; k < n - 1; ++k) p *= n;
      d = {p};
    } else if (id == "pi") {
      // faces of dimension k: ordered partitions into n - k blocks
      for (int k = 0; k < n; ++k) {
        int b = n - k;
        Scalar surj = 0;  // surjections [n] -> [b]
        for (int j = 0; j <= b; ++j) {
          Scalar pw = 1;
          for (int r = 0; r < n; ++r) pw *= (b - j);
          surj += ((j & 1) ? -1 : 1) * binom(b, j) * pw;
        }
        d.push_back(surj);
      }
    } else if (id == "kprime") {
      int l = n + 1;
      for (int k = 0; k < n; ++k) {
        int j = n - k;
        d.push_back(binom(l - 2, j - 1) * binom(l + j - 1, j - 1) / j);
      }
    } else if (id == "lambda") {
      // prod_{k=1}^{n-1} (n - k t), read in powers of -t
      std::vector<Scalar> p{1};
      for (int k = 1; k < n; ++k) {
        std::vector<Scalar> q(p.size() + 1, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
          q[j] += n * p[j];
          q[j + 1] -= k * p[j];
        }
        p = std::move(q);
      }
      for (std::size_t j = 0; j < p.size(); ++j) d.push_back((j & 1) ? -p[j] : p[j]);
    } else if (id == "com" || id == "as") {
      d = {1};
    } else if (id == "lie") {
      d = {factorial(n - 1)};
    } else if (id == "pasc" || id == "trias") {
      for (int k = 0; k < n; ++k) d.push_back(binom(n, k + 1));
    } else if (id == "coprod") {
      for (int k = 0; k < n; ++k) d.push_back(binom(n, k + 1) * factorial(n - 1));
    } else if (id == "perm" || id == "dias") {
      d = {Scalar(n)};
    }
    dims.push_back(std::move(d));
  }
  return truncation_from_dims(e.display, e.kind, dims);
}

SeriesTruncation series_truncate(const std::string& id, int N) {
  std::vector<std::vector<Scalar>> dims;
  SeriesKind kind = SeriesKind::exponential;
  std::string display = id;
  if (id == "pi" || id == "pasc") {
    for (int n = 1; n <= N; ++n) {
      std::vector<Scalar> d(n, 0);
      if (id == "pi")
        for (const auto& c : pi_basis(n)) d[c.dim()] += 1;
      else
        for (const auto& c : pasc_basis(n)) d[c.dim()] += 1;
      dims.push_back(std::move(d));
    }
    display = id == "pi" ? "Π" : "Pasc";
  } else {
    auto q = presentation_by_id(id);
    kind = q.symmetric ? SeriesKind::exponential : SeriesKind::ordinary;
    display = q.display;
    QuadraticQuotient Q(q, N);
    for (int n = 1; n <= N; ++n) dims.push_back(Q.dims(n));
  }
  return truncation_from_dims(display, kind, dims);
}

SeriesTruncation suspension_series(const SeriesTruncation& s) {
  SeriesTruncation r = s;
  r.name = "Σ" + s.name;
  r.coeff.clear();
  for (const auto& [nk, v] : s.coeff) r.coeff[{nk.first, nk.second + nk.first - 1}] = v;
  return r;
}

SeriesTruncation desuspension_series(const SeriesTruncation& s) {
  SeriesTruncation r = s;
  r.name = "Σ⁻¹" + s.name;
  r.coeff.clear();
  for (const auto& [nk, v] : s.coeff) {
    int k = nk.second - nk.first + 1;
    if (k < 0) throw std::domain_error("desuspension: negative degree at arity " + std::to_string(nk.first));
    r.coeff[{nk.first, k}] = v;
  }
  return r;
}

SeriesTruncation series_substitute(const SeriesTruncation& outer, const SeriesTruncation& inner, int N) {
  if (outer.kind != inner.kind) throw std::invalid_argument("series_substitute: mixed conventions");
  if (outer.N < N || inner.N < N) throw std::invalid_argument("series_substitute: truncation too short");
  BiSeries o = truncated(to_bi(outer), N), i = truncated(to_bi(inner), N);
  return from_bi(series_compose(o, i), outer.kind, outer.name + "∘" + inner.name);
}

std::string DistributiveLawReport::order() const {
  if (zin_outer && !zin_inner) return "g_Zin(g_ΣCom(x,t),t)";
  if (zin_inner && !zin_outer) return "g_ΣCom(g_Zin(x,t),t)";
  if (zin_outer && zin_inner) return "both";
  return "neither";
}

DistributiveLawReport distributive_law_order(int N) {
  DistributiveLawReport r;
  r.N = N;
  auto zin = series_truncate("zin", N);
  auto scom = suspension_series(series_truncate("com", N));
  auto pi = series_truncate("pi", N);
  auto same = [&](const SeriesTruncation& a) { return a.coeff == pi.coeff; };
  auto attempt = [&](const SeriesTruncation& o, const SeriesTruncation& i) {
    try {
      return same(series_substitute(o, i, N));
    } catch (const std::domain_error&) {
      return false;  // not even a dimension series
    }
  };
  r.zin_outer = attempt(zin, scom);
  r.zin_inner = attempt(scom, zin);
  return r;
}

namespace {

bool inverse_check(const std::string& id, const std::string& dual_id, int N, bool literal) {
  BiSeries g = to_bi(series_truncate(id, N));
  BiSeries gd = to_bi(series_truncate(dual_id, N));
  BiSeries inner = literal ? g : -g.substitute_x({Rational(-1)});
  return series_compose(gd, inner) == BiSeries::x(N);
}

}  // namespace

bool koszul_inverse_holds(const std::string& id, const std::string& dual_id, int N) {
  return inverse_check(id, dual_id, N, false);
}

bool koszul_inverse_literal(const std::string& id, const std::string& dual_id, int N) {
  return inverse_check(id, dual_id, N, true);
}

}  // namespace dgop
