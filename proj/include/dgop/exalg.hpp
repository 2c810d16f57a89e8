#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dgop {

using Scalar = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Label = int;

// Sorted exterior monomial with its sign; sign == 0 is the zero word.
struct SignedWord {
  std::vector<Label> labels;
  int sign = 0;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

SignedWord normalize_word(std::span<const Label> labels);

// permutation[j] is the index of the item placed at position j.
int koszul_sign(std::span<const int> permutation, std::span<const int> degrees);

struct Shuffle {
  std::vector<int> order;  // indices into left ++ right
  int sign = 1;
};

std::vector<Shuffle> graded_shuffles(std::span<const int> left_degrees,
                                     std::span<const int> right_degrees);

template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(Key k, Scalar c = 1) { add(std::move(k), c); }

  void add(const Key& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  void add_scaled(const LinComb& o, const Scalar& s) {
    if (s == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

// Injective map on small labels; unset entries are -1.
class LabelMap {
 public:
  LabelMap() = default;
  void set(Label from, Label to);
  Label operator()(Label l) const;
  bool defined(Label l) const;
  // images[k] is the image of label k+1
  static LabelMap from_images(std::span<const Label> images);
  // sends the sorted labels to 1..n
  static LabelMap standardize(std::span<const Label> labels);
  LabelMap after(const LabelMap& inner) const;  // this o inner
  bool injective_on(std::span<const Label> labels) const;

 private:
  std::vector<Label> image_;
};

std::string format_word(std::span<const Label> labels, const char* sep);

}  // namespace dgop
