#include "dgop/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dgop {

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s.emplace_back(static_cast<int>(k), v[k]);
  return s;
}

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + a * x[j].second;
      if (v != 0) out.emplace_back(y[i].first, std::move(v));
      ++i, ++j;
    }
  }
  y = std::move(out);
}

SparseVec sparse_scaled(const SparseVec& x, const Rational& a) {
  SparseVec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (const auto& [c, v] : x) out.emplace_back(c, a * v);
  return out;
}

RowEchelon::RowEchelon(int columns) : ncols_(columns), pivot_row_(columns, -1) {}

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  std::map<int, Rational> acc;
  for (const auto& [c, a] : v) {
    if (c < 0 || c >= ncols_) throw std::out_of_range("RowEchelon: column out of range");
    if (a != 0) acc[c] += a;
  }
  SparseVec out;
  while (!acc.empty()) {
    auto it = acc.begin();
    int c = it->first;
    Rational a = std::move(it->second);
    acc.erase(it);
    if (a == 0) continue;
    int r = pivot_row_[c];
    if (r < 0) {
      out.emplace_back(c, std::move(a));
      continue;
    }
    const SparseVec& row = rows_[r];
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto [jt, fresh] = acc.try_emplace(row[k].first, 0);
      jt->second -= a * row[k].second;
      if (jt->second == 0) acc.erase(jt);
    }
  }
  return out;
}

bool RowEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  for (auto& e : r) e.second /= lead;
  int c = r.front().first;
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivot_of_row_.push_back(c);
  rows_.push_back(std::move(r));
  return true;
}

void RowEchelon::make_reduced() {
  std::vector<int> order(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_of_row_[a] > pivot_of_row_[b]; });
  // rows with larger pivots are finished first, so one pass per row suffices
  for (int r : order) {
    SparseVec& row = rows_[r];
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        int c = row[k].first;
        int s = pivot_row_[c];
        if (s >= 0 && s != r) {
          Rational a = row[k].second;
          sparse_axpy(row, -a, rows_[s]);
          again = true;
          break;
        }
      }
    }
  }
}

std::vector<int> RowEchelon::pivot_columns() const {
  std::vector<int> p;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) p.push_back(c);
  return p;
}

std::vector<int> RowEchelon::free_columns() const {
  std::vector<int> p;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_row_[c] < 0) p.push_back(c);
  return p;
}

bool RowEchelon::integral() const {
  for (const auto& row : rows_)
    for (const auto& e : row)
      if (denominator(e.second) != 1) return false;
  return true;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int columns) {
  RowEchelon e(columns);
  for (const auto& r : rows) e.insert(r);
  e.make_reduced();
  std::vector<SparseVec> out;
  for (int f : e.free_columns()) {
    // x_f = 1, x_p = -R[p][f]
    std::vector<std::pair<int, Rational>> v;
    v.emplace_back(f, Rational(1));
    for (int p : e.pivot_columns()) {
      const auto& row = e.row_for_pivot(p);
      for (const auto& [c, a] : row)
        if (c == f) v.emplace_back(p, -a);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

int rank_of(const std::vector<SparseVec>& rows, int columns) {
  RowEchelon e(columns);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm sf;
  const std::size_t R = m.size();
  const std::size_t C = R ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (pi == R || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
    if (pi == R) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);
    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        Scalar q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          swap_rows(m, t, i);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        Scalar q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          swap_cols(m, t, j);
          done = false;
        }
      }
      if (!done) continue;
      // divisibility of the rest of the block
      for (std::size_t i = t + 1; i < R && done; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
            done = false;
            break;
          }
    }
    sf.factors.push_back(abs(m[t][t]));
    ++t;
  }
  sf.rank = static_cast<int>(sf.factors.size());
  return sf;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  const std::size_t R = m.size();
  const std::size_t C = R ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    // gcd-reduce column c among rows r..R-1
    while (true) {
      std::size_t best = R;
      for (std::size_t i = r; i < R; ++i)
        if (m[i][c] != 0 && (best == R || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == R) break;
      swap_rows(m, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (m[i][c] == 0) continue;
        Scalar q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < C; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (std::size_t j = c; j < C; ++j) m[r][j] = -m[r][j];
    // entries above the pivot in [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Scalar q = m[i][c] / m[r][c];
      if (m[i][c] - q * m[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < C; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t R = a.size(), K = b.size(), C = b[0].size();
  if (a[0].size() != K) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out(R, std::vector<Scalar>(C, 0));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < C; ++j)
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool is_zero_matrix(const IntMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

}  // namespace dgop
