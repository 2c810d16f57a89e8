#include "dgop/pasc_operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgop {

LinComb<SubsetCell> make_subset(const std::vector<Label>& word) {
  SignedWord w = normalize_word(word);
  if (w.is_zero()) return {};
  return LinComb<SubsetCell>(SubsetCell{std::move(w.labels)}, w.sign);
}

namespace {

// left derivation on one canonical cell; the unit of the exterior algebra is killed
void theta_cell(Label i, const SubsetCell& x, const Scalar& c, LinComb<SubsetCell>& out) {
  if (x.subset.size() < 2) return;
  auto it = std::find(x.subset.begin(), x.subset.end(), i);
  if (it == x.subset.end()) return;
  auto m = it - x.subset.begin();  // 0-based, so the sign is (-1)^m
  SubsetCell r;
  r.subset.assign(x.subset.begin(), it);
  r.subset.insert(r.subset.end(), it + 1, x.subset.end());
  out.add(r, (m & 1) ? -c : c);
}

}  // namespace

LinComb<SubsetCell> pasc_theta(Label i, const LinComb<SubsetCell>& x) {
  LinComb<SubsetCell> out;
  for (const auto& [cell, c] : x) theta_cell(i, cell, c, out);
  return out;
}

// Sign chosen so that d(e1∧e2) = e1 - e2.
LinComb<SubsetCell> pasc_d(const SubsetCell& x) {
  LinComb<SubsetCell> out;
  for (Label i : x.subset) theta_cell(i, x, Scalar(-1), out);
  return out;
}

LinComb<SubsetCell> pasc_compose(const SubsetCell& x, Label i, const SubsetCell& y) {
  if (std::binary_search(x.subset.begin(), x.subset.end(), i)) {
    std::vector<Label> word = x.subset;
    word.insert(word.end(), y.subset.begin(), y.subset.end());
    auto xy = make_subset(word);
    if (xy.is_zero()) throw std::invalid_argument("pasc_compose: label collision");
    auto r = pasc_theta(i, xy);
    if (x.dim() & 1) r *= Scalar(-1);
    return r;
  }
  if (y.dim() == 0) return LinComb<SubsetCell>(x);
  return {};
}

LinComb<SubsetCell> pasc_relabel(const SubsetCell& x, const LabelMap& f) {
  std::vector<Label> word;
  for (Label l : x.subset) word.push_back(f(l));
  return make_subset(word);
}

std::vector<SubsetCell> pasc_basis(std::span<const Label> labels) {
  if (labels.empty()) throw std::invalid_argument("pasc_basis: empty label set");
  std::vector<Label> s(labels.begin(), labels.end());
  std::sort(s.begin(), s.end());
  const int n = static_cast<int>(s.size());
  std::vector<SubsetCell> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SubsetCell c;
    for (int k = 0; k < n; ++k)
      if ((mask >> k) & 1) c.subset.push_back(s[k]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SubsetCell& a, const SubsetCell& b) {
    return a.subset.size() != b.subset.size() ? a.subset.size() < b.subset.size() : a < b;
  });
  return out;
}

std::vector<SubsetCell> pasc_basis(int n) {
  if (n < 1) throw std::invalid_argument("pasc_basis: n < 1");
  auto l = iota_labels(n);
  return pasc_basis(l);
}

std::string format_subset(const SubsetCell& x) {
  std::string s;
  for (std::size_t k = 0; k < x.subset.size(); ++k) {
    if (k) s += "∧";
    s += "e" + std::to_string(x.subset[k]);
  }
  return s;
}

}  // namespace dgop
