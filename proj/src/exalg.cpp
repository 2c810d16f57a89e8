#include "dgop/exalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgop {

SignedWord normalize_word(std::span<const Label> labels) {
  SignedWord w;
  w.labels.assign(labels.begin(), labels.end());
  int inversions = 0;
  // insertion sort; counts transpositions and spots repeats on the way
  for (std::size_t i = 1; i < w.labels.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (w.labels[j - 1] == w.labels[j]) return {};
      if (w.labels[j - 1] < w.labels[j]) break;
      std::swap(w.labels[j - 1], w.labels[j]);
      ++inversions;
    }
  }
  w.sign = inversions % 2 ? -1 : 1;
  return w;
}

int koszul_sign(std::span<const int> permutation, std::span<const int> degrees) {
  const std::size_t n = degrees.size();
  if (permutation.size() != n) throw std::invalid_argument("koszul_sign: size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : permutation) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p])
      throw std::invalid_argument("koszul_sign: not a bijection");
    seen[p] = 1;
  }
  int m = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (permutation[a] > permutation[b] && (degrees[permutation[a]] & 1) &&
          (degrees[permutation[b]] & 1))
        ++m;
  return m % 2 ? -1 : 1;
}

std::vector<Shuffle> graded_shuffles(std::span<const int> left_degrees,
                                     std::span<const int> right_degrees) {
  const int p = static_cast<int>(left_degrees.size());
  const int q = static_cast<int>(right_degrees.size());
  std::vector<Shuffle> out;
  // positions of the left items, as a strictly increasing p-subset of [0, p+q)
  std::vector<int> pos(p);
  for (int k = 0; k < p; ++k) pos[k] = k;
  while (true) {
    Shuffle s;
    s.order.reserve(p + q);
    int li = 0, ri = 0, right_odd = 0;
    for (int k = 0; k < p + q; ++k) {
      if (li < p && pos[li] == k) {
        if ((left_degrees[li] & 1) && (right_odd & 1)) s.sign = -s.sign;
        s.order.push_back(li++);
      } else {
        right_odd += right_degrees[ri] & 1;
        s.order.push_back(p + ri++);
      }
    }
    out.push_back(std::move(s));
    int k = p - 1;
    while (k >= 0 && pos[k] == q + k) --k;
    if (k < 0) break;
    ++pos[k];
    for (int j = k + 1; j < p; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

void LabelMap::set(Label from, Label to) {
  if (from < 0) throw std::invalid_argument("LabelMap: negative label");
  if (static_cast<std::size_t>(from) >= image_.size()) image_.resize(from + 1, -1);
  image_[from] = to;
}

bool LabelMap::defined(Label l) const {
  return l >= 0 && static_cast<std::size_t>(l) < image_.size() && image_[l] >= 0;
}

Label LabelMap::operator()(Label l) const {
  if (!defined(l)) throw std::invalid_argument("LabelMap: label outside domain");
  return image_[l];
}

LabelMap LabelMap::from_images(std::span<const Label> images) {
  LabelMap f;
  for (std::size_t k = 0; k < images.size(); ++k) f.set(static_cast<Label>(k + 1), images[k]);
  return f;
}

LabelMap LabelMap::standardize(std::span<const Label> labels) {
  std::vector<Label> s(labels.begin(), labels.end());
  std::sort(s.begin(), s.end());
  LabelMap f;
  for (std::size_t k = 0; k < s.size(); ++k) f.set(s[k], static_cast<Label>(k + 1));
  return f;
}

LabelMap LabelMap::after(const LabelMap& inner) const {
  LabelMap f;
  for (std::size_t l = 0; l < inner.image_.size(); ++l)
    if (inner.image_[l] >= 0) f.set(static_cast<Label>(l), (*this)(inner.image_[l]));
  return f;
}

bool LabelMap::injective_on(std::span<const Label> labels) const {
  std::vector<Label> img;
  for (Label l : labels) {
    if (!defined(l)) return false;
    img.push_back((*this)(l));
  }
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

std::string format_word(std::span<const Label> labels, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(labels[k]);
  }
  return s;
}

}  // namespace dgop
