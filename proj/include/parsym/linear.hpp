#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parsym/integer.hpp"

namespace parsym {

// A finite formal sum of basis keys with exact integer coefficients. Zero
// coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Integer>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination basis(Key key, Integer coefficient = 1) {
    LinearCombination out;
    out.add(std::move(key), coefficient);
    return out;
  }

  void add(const Key& key, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Integer(-1); }
  friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Integer& s) { return a *= s; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  map_type terms_;
};

// Linear extension of a basis map.
template <class Key, class F>
auto apply_linear(const LinearCombination<Key>& x, F&& on_basis) {
  using Result = decltype(on_basis(std::declval<const Key&>()));
  Result out;
  for (const auto& [k, c] : x) {
    auto image = on_basis(k);
    image *= c;
    out += image;
  }
  return out;
}

// Linear extension of a basis functional.
template <class Key, class F>
Integer evaluate_linear(const LinearCombination<Key>& x, F&& on_basis) {
  Integer out = 0;
  for (const auto& [k, c] : x) out += c * on_basis(k);
  return out;
}

}  // namespace parsym
