#include "dgop/perm_operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgop {

int OrderedPartition::dim() const {
  int d = 0;
  for (const auto& b : blocks) d += static_cast<int>(b.size()) - 1;
  return d;
}

std::vector<Label> OrderedPartition::labels() const {
  std::vector<Label> v;
  for (const auto& b : blocks) v.insert(v.end(), b.begin(), b.end());
  std::sort(v.begin(), v.end());
  return v;
}

LinComb<OrderedPartition> make_partition(const std::vector<std::vector<Label>>& blocks) {
  OrderedPartition pi;
  int sign = 1;
  for (const auto& b : blocks) {
    SignedWord w = normalize_word(b);
    if (w.is_zero()) return {};
    sign *= w.sign;
    pi.blocks.push_back(std::move(w.labels));
  }
  return LinComb<OrderedPartition>(std::move(pi), sign);
}

namespace {

void partitions_rec(std::vector<Label>& rest, std::vector<std::vector<Label>>& prefix,
                    std::vector<OrderedPartition>& out) {
  if (rest.empty()) {
    out.push_back({prefix});
    return;
  }
  const int m = static_cast<int>(rest.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Label> block, others;
    for (int k = 0; k < m; ++k) ((mask >> k) & 1 ? block : others).push_back(rest[k]);
    prefix.push_back(block);
    partitions_rec(others, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> pi_basis(std::span<const Label> labels) {
  if (labels.empty()) throw std::invalid_argument("pi_basis: empty label set");
  std::vector<Label> rest(labels.begin(), labels.end());
  std::sort(rest.begin(), rest.end());
  std::vector<std::vector<Label>> prefix;
  std::vector<OrderedPartition> out;
  partitions_rec(rest, prefix, out);
  std::sort(out.begin(), out.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
    int da = a.dim(), db = b.dim();
    return da != db ? da < db : a < b;
  });
  return out;
}

std::vector<OrderedPartition> pi_basis(int n) {
  if (n < 1) throw std::invalid_argument("pi_basis: n < 1");
  auto l = iota_labels(n);
  return pi_basis(l);
}

LinComb<OrderedPartition> pi_d(const OrderedPartition& pi) {
  LinComb<OrderedPartition> out;
  int acc = 0;
  for (std::size_t j = 0; j + 1 < pi.blocks.size(); ++j) {
    acc += static_cast<int>(pi.blocks[j].size()) - 1;
    std::vector<Label> merged = pi.blocks[j];
    merged.insert(merged.end(), pi.blocks[j + 1].begin(), pi.blocks[j + 1].end());
    SignedWord w = normalize_word(merged);
    OrderedPartition r;
    r.blocks.assign(pi.blocks.begin(), pi.blocks.begin() + j);
    r.blocks.push_back(std::move(w.labels));
    r.blocks.insert(r.blocks.end(), pi.blocks.begin() + j + 2, pi.blocks.end());
    out.add(r, (acc & 1) ? -w.sign : w.sign);
  }
  return out;
}

LinComb<OrderedPartition> pi_compose(const OrderedPartition& pi, Label i, const OrderedPartition& mu) {
  std::size_t l = 0;
  std::ptrdiff_t m = -1;
  for (; l < pi.blocks.size(); ++l) {
    auto it = std::find(pi.blocks[l].begin(), pi.blocks[l].end(), i);
    if (it != pi.blocks[l].end()) {
      m = it - pi.blocks[l].begin();
      break;
    }
  }
  if (m < 0) throw std::invalid_argument("pi_compose: label " + std::to_string(i) + " not in partition");
  const auto& blk = pi.blocks[l];
  // moving i to the end of its block
  int sign = ((blk.size() - 1 - m) & 1) ? -1 : 1;
  std::vector<Label> merged;
  for (std::size_t k = 0; k < blk.size(); ++k)
    if (static_cast<std::ptrdiff_t>(k) != m) merged.push_back(blk[k]);
  merged.insert(merged.end(), mu.blocks[0].begin(), mu.blocks[0].end());
  SignedWord w = normalize_word(merged);
  if (w.is_zero()) throw std::invalid_argument("pi_compose: label collision");
  sign *= w.sign;

  std::vector<int> tail_deg, rest_deg;
  int tail_total = 0;
  for (std::size_t k = l + 1; k < pi.blocks.size(); ++k) {
    tail_deg.push_back(static_cast<int>(pi.blocks[k].size()) - 1);
    tail_total += tail_deg.back();
  }
  for (std::size_t k = 1; k < mu.blocks.size(); ++k) rest_deg.push_back(static_cast<int>(mu.blocks[k].size()) - 1);
  // first block of mu travels past the tail of pi
  if (((static_cast<int>(mu.blocks[0].size()) - 1) * tail_total) & 1) sign = -sign;

  LinComb<OrderedPartition> out;
  const std::size_t p = tail_deg.size();
  for (const Shuffle& s : graded_shuffles(tail_deg, rest_deg)) {
    OrderedPartition r;
    r.blocks.assign(pi.blocks.begin(), pi.blocks.begin() + l);
    r.blocks.push_back(w.labels);
    for (int idx : s.order)
      r.blocks.push_back(static_cast<std::size_t>(idx) < p ? pi.blocks[l + 1 + idx] : mu.blocks[1 + idx - p]);
    out.add(r, sign * s.sign);
  }
  return out;
}

LinComb<OrderedPartition> pi_relabel(const OrderedPartition& pi, const LabelMap& f) {
  std::vector<std::vector<Label>> blocks;
  for (const auto& b : pi.blocks) {
    std::vector<Label> nb;
    for (Label x : b) nb.push_back(f(x));
    blocks.push_back(std::move(nb));
  }
  return make_partition(blocks);
}

std::string format_partition(const OrderedPartition& pi) {
  std::string s;
  for (std::size_t k = 0; k < pi.blocks.size(); ++k) {
    if (k) s += "⊗";
    s += format_word(pi.blocks[k], "∧");
  }
  return s;
}

Scalar permutohedron_faces(int n, int k) {
  int b = n - k;
  if (b < 1 || b > n) return 0;
  // Stirling numbers of the second kind by the triangle recurrence
  std::vector<std::vector<Scalar>> S(n + 1, std::vector<Scalar>(n + 1, 0));
  S[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= a; ++c) S[a][c] = c * S[a - 1][c] + S[a - 1][c - 1];
  Scalar f = 1;
  for (int j = 2; j <= b; ++j) f *= j;
  return f * S[n][b];
}

}  // namespace dgop
