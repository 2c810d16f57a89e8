#pragma once

#include "dgop/exalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgop {

enum class SeriesKind { exponential, ordinary };

// Power series in x truncated at x^N, coefficients polynomials in t over Q.
// c[n][j] is the raw coefficient of x^n t^j (the 1/n! of the exponential convention included).
class BiSeries {
 public:
  using Poly = std::vector<Rational>;

  explicit BiSeries(int N) : c_(N + 1) {}
  static BiSeries x(int N);
  static BiSeries constant(int N, Poly p);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& operator[](int n) const { return c_[n]; }
  Poly& operator[](int n) { return c_[n]; }
  Rational coeff(int n, int j) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(BiSeries a) { return a.scaled({Rational(-1)}); }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  BiSeries scaled(const Poly& p) const;
  // exact division of every coefficient by p; throws if some remainder is nonzero
  BiSeries divided_by_poly(const Poly& p) const;
  BiSeries divided_by_x() const;            // constant term must vanish
  BiSeries substitute_x(const Poly& p) const;  // x -> p(t) x

  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  std::vector<Poly> c_;
};

BiSeries series_exp(const BiSeries& s);    // exp(s), s(0) = 0
BiSeries series_log1p(const BiSeries& s);  // log(1 + s), s(0) = 0
BiSeries series_sqrt(const BiSeries& s);   // s(0) = 1
BiSeries series_divide(const BiSeries& a, const BiSeries& b);  // exact; b(0) a nonzero polynomial
// outer(inner(x, t), t); inner must have zero constant term
BiSeries series_compose(const BiSeries& outer, const BiSeries& inner);

// coefficient of (-t)^k x^n/n! (exponential) or (-t)^k x^n (ordinary), n = 1..N
struct SeriesTruncation {
  std::string name;
  SeriesKind kind = SeriesKind::exponential;
  int N = 0;
  std::map<std::pair<int, int>, Scalar> coeff;  // zero entries omitted

  Scalar at(int n, int k) const;
  std::vector<Scalar> row(int n) const;  // k = 0..last nonzero
  friend bool operator==(const SeriesTruncation& a, const SeriesTruncation& b) {
    return a.kind == b.kind && a.N == b.N && a.coeff == b.coeff;
  }
};

BiSeries to_bi(const SeriesTruncation& s);
// throws std::domain_error on a negative or non-integral dimension
SeriesTruncation from_bi(const BiSeries& b, SeriesKind kind, const std::string& name);
SeriesTruncation truncation_from_dims(const std::string& name, SeriesKind kind,
                                      const std::vector<std::vector<Scalar>>& dims);  // dims[n-1][k]

struct TableEntry {
  std::string id;       // presentation id where the operad is computable
  std::string display;
  SeriesKind kind;
  int row = 0, column = 0;  // position in diagram (1)
  bool conjectural = false;
};

const std::vector<TableEntry>& table_entries();
const TableEntry& table_entry(const std::string& id);  // throws std::invalid_argument

// Expansion of the closed form printed in the table; exact.
SeriesTruncation closed_form_coefficients(const std::string& id, int N);
// The sum form printed under it (binomials, products, factorials).
SeriesTruncation sum_form_coefficients(const std::string& id, int N);
// Dimensions of the operad itself: explicit models for pi and pasc, the quotient engine otherwise.
SeriesTruncation series_truncate(const std::string& id, int N);

// -g(-tx, t)/t and its inverse; desuspension throws std::domain_error when a degree would be negative
SeriesTruncation suspension_series(const SeriesTruncation& s);
SeriesTruncation desuspension_series(const SeriesTruncation& s);

// g_outer(g_inner(x, t), t) truncated at N; throws std::invalid_argument if inner has a constant term
SeriesTruncation series_substitute(const SeriesTruncation& outer, const SeriesTruncation& inner, int N);

struct DistributiveLawReport {
  int N = 0;
  bool zin_outer = false;    // g_Zin(g_SigmaCom) = g_Pi
  bool zin_inner = false;    // g_SigmaCom(g_Zin) = g_Pi
  std::string order() const;
};
DistributiveLawReport distributive_law_order(int N);

// g_dual(-g(-x, t), t) = x up to x^N, from computed dimensions of both operads
bool koszul_inverse_holds(const std::string& id, const std::string& dual_id, int N);
// the identity read literally as g_dual(g(x, t), t) = x
bool koszul_inverse_literal(const std::string& id, const std::string& dual_id, int N);

}  // namespace dgop
