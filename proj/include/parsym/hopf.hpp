#pragma once

// Generic graded connected Hopf algebra machinery over a basis given by a
// traits type. A traits type A supplies
//
//   A::key_type                     basis index
//   A::unit()                       index of the unit
//   A::product(k, k)                index of a basis product (monomial bases)
//   A::coproduct(k)                 Delta of a basis element
//   A::antipode(k)                  S of a basis element (closed form)
//   A::degree(k)                    grading
//   A::name(k)                      text form for reports
//
// and everything here is derived from those: products, tensor powers,
// Takeuchi's alternating sum, and the axiom harness used by both ParSym and
// NSym.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parsym/linear.hpp"

namespace parsym::hopf {

template <class A>
concept HopfBasis = requires(const typename A::key_type& k) {
  { A::unit() } -> std::convertible_to<typename A::key_type>;
  { A::product(k, k) } -> std::convertible_to<typename A::key_type>;
  { A::coproduct(k) } -> std::convertible_to<LinearCombination<std::pair<typename A::key_type, typename A::key_type>>>;
  { A::antipode(k) } -> std::convertible_to<LinearCombination<typename A::key_type>>;
  { A::degree(k) } -> std::convertible_to<std::size_t>;
  { A::name(k) } -> std::convertible_to<std::string>;
};

template <class A>
using Element = LinearCombination<typename A::key_type>;
template <class A>
using Tensor2 = LinearCombination<std::pair<typename A::key_type, typename A::key_type>>;
template <class A>
using TensorN = LinearCombination<std::vector<typename A::key_type>>;

template <HopfBasis A>
Element<A> unit_element() {
  return Element<A>::basis(A::unit());
}

template <HopfBasis A>
Element<A> multiply(const Element<A>& x, const Element<A>& y) {
  Element<A> out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add(A::product(a, b), c * d);
  return out;
}

template <HopfBasis A>
Tensor2<A> multiply(const Tensor2<A>& x, const Tensor2<A>& y) {
  Tensor2<A> out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add({A::product(a.first, b.first), A::product(a.second, b.second)}, c * d);
  return out;
}

template <HopfBasis A>
Tensor2<A> coproduct(const Element<A>& x) {
  return apply_linear(x, [](const auto& k) { return Tensor2<A>(A::coproduct(k)); });
}

template <HopfBasis A>
Integer counit(const Element<A>& x) {
  return x.coefficient(A::unit());
}

template <HopfBasis A>
Element<A> antipode(const Element<A>& x) {
  return apply_linear(x, [](const auto& k) { return Element<A>(A::antipode(k)); });
}

// Multiplication map on the tensor square.
template <HopfBasis A>
Element<A> multiply_legs(const Tensor2<A>& t) {
  Element<A> out;
  for (const auto& [p, c] : t) out.add(A::product(p.first, p.second), c);
  return out;
}

template <HopfBasis A>
Element<A> multiply_legs(const TensorN<A>& t) {
  Element<A> out;
  for (const auto& [legs, c] : t) {
    auto w = A::unit();
    for (const auto& l : legs) w = A::product(w, l);
    out.add(w, c);
  }
  return out;
}

// (f ⊗ g) applied to a tensor square, f and g linear on basis keys.
template <HopfBasis A, class F, class G>
Tensor2<A> map_legs(const Tensor2<A>& t, F&& f, G&& g) {
  Tensor2<A> out;
  for (const auto& [p, c] : t) {
    Element<A> left = f(p.first);
    Element<A> right = g(p.second);
    for (const auto& [l, lc] : left)
      for (const auto& [r, rc] : right) out.add({l, r}, c * lc * rc);
  }
  return out;
}

// ∇(S ⊗ id)Δ x.
template <HopfBasis A>
Element<A> antipode_left_convolution(const Element<A>& x) {
  auto basis = [](const auto& k) { return Element<A>::basis(k); };
  auto s = [](const auto& k) { return Element<A>(A::antipode(k)); };
  return multiply_legs<A>(map_legs<A>(coproduct<A>(x), s, basis));
}

// ∇(id ⊗ S)Δ x.
template <HopfBasis A>
Element<A> antipode_right_convolution(const Element<A>& x) {
  auto basis = [](const auto& k) { return Element<A>::basis(k); };
  auto s = [](const auto& k) { return Element<A>(A::antipode(k)); };
  return multiply_legs<A>(map_legs<A>(coproduct<A>(x), basis, s));
}

// (Δ ⊗ id)Δ x as three-leg tensors.
template <HopfBasis A>
TensorN<A> coproduct_then_left(const Element<A>& x) {
  TensorN<A> out;
  for (const auto& [p, c] : coproduct<A>(x))
    for (const auto& [q, d] : A::coproduct(p.first)) out.add({q.first, q.second, p.second}, c * d);
  return out;
}

// (id ⊗ Δ)Δ x as three-leg tensors.
template <HopfBasis A>
TensorN<A> coproduct_then_right(const Element<A>& x) {
  TensorN<A> out;
  for (const auto& [p, c] : coproduct<A>(x))
    for (const auto& [q, d] : A::coproduct(p.second)) out.add({p.first, q.first, q.second}, c * d);
  return out;
}

// Left-nested iterated coproduct with the given number of legs (>= 1).
template <HopfBasis A>
TensorN<A> iterated_coproduct(const Element<A>& x, std::size_t legs) {
  TensorN<A> current;
  for (const auto& [k, c] : x) current.add({k}, c);
  for (std::size_t n = 1; n < legs; ++n) {
    TensorN<A> next;
    for (const auto& [tuple, c] : current) {
      for (const auto& [p, d] : A::coproduct(tuple.front())) {
        std::vector<typename A::key_type> split;
        split.reserve(tuple.size() + 1);
        split.push_back(p.first);
        split.push_back(p.second);
        split.insert(split.end(), tuple.begin() + 1, tuple.end());
        next.add(split, c * d);
      }
    }
    current = std::move(next);
  }
  return current;
}

// All left-nested iterated coproduct terms with every leg different from the
// unit, grouped by number of legs: result[l-1] has l legs. Stops when a level
// is empty; graded connectedness makes that happen by l = degree + 1.
template <HopfBasis A>
std::vector<TensorN<A>> reduced_iterated_coproducts(const Element<A>& x) {
  std::vector<TensorN<A>> levels;
  TensorN<A> current;
  for (const auto& [k, c] : x) {
    if (k != A::unit()) current.add({k}, c);
  }
  while (!current.is_zero()) {
    TensorN<A> next;
    for (const auto& [tuple, c] : current) {
      for (const auto& [p, d] : A::coproduct(tuple.back())) {
        if (p.first == A::unit() || p.second == A::unit()) continue;
        auto split = tuple;
        split.back() = p.first;
        split.push_back(p.second);
        next.add(split, c * d);
      }
    }
    levels.push_back(std::move(current));
    current = std::move(next);
  }
  return levels;
}

// Takeuchi: S = sum_{k>=0} (-1)^k ∇^{k-1} (id - ηε)^{⊗k} Δ^{k-1}.
template <HopfBasis A>
Element<A> takeuchi_antipode(const Element<A>& x) {
  Element<A> result;
  result.add(A::unit(), counit<A>(x));
  bool negative = true;
  for (const auto& level : reduced_iterated_coproducts<A>(x)) {
    auto term = multiply_legs<A>(level);
    if (negative) {
      result -= term;
    } else {
      result += term;
    }
    negative = !negative;
  }
  return result;
}

template <HopfBasis A>
std::string describe(const Element<A>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*H[" + std::string(A::name(k)) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom harness.

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

struct HopfReport {
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.name == name) return &a;
    return nullptr;
  }
};

struct HopfCheckOptions {
  std::size_t random_samples = 64;
  std::uint64_t seed = 0x9a25;
  bool check_takeuchi = true;
  bool all_pairs = true;  // every ordered basis pair, before the random ones
};

namespace axiom {
inline constexpr const char* kCoassociativity = "coassociativity";
inline constexpr const char* kCounit = "counit";
inline constexpr const char* kCompatibility = "bialgebra compatibility";
inline constexpr const char* kAntipodeLeft = "antipode (S*id)";
inline constexpr const char* kAntipodeRight = "antipode (id*S)";
inline constexpr const char* kAntimorphism = "antimorphism";
inline constexpr const char* kTakeuchi = "closed-form S = Takeuchi";
}  // namespace axiom

namespace detail {

template <HopfBasis A>
bool coassociative(const Element<A>& x) {
  return coproduct_then_left<A>(x) == coproduct_then_right<A>(x);
}

template <HopfBasis A>
bool counital(const Element<A>& x) {
  Element<A> left, right;
  for (const auto& [p, c] : coproduct<A>(x)) {
    if (p.first == A::unit()) left.add(p.second, c);
    if (p.second == A::unit()) right.add(p.first, c);
  }
  return left == x && right == x;
}

template <HopfBasis A>
Element<A> unit_times_counit(const Element<A>& x) {
  Element<A> out;
  out.add(A::unit(), counit<A>(x));
  return out;
}

// Evaluates check(i) for i in [0, n) in parallel and returns the first
// failing index, or n.
template <class Check>
std::size_t first_failure(std::size_t n, Check&& check) {
  std::vector<char> failed(n, 0);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) failed[i] = check(static_cast<std::size_t>(i)) ? 0 : 1;
  return static_cast<std::size_t>(std::find(failed.begin(), failed.end(), 1) - failed.begin());
}

}  // namespace detail

// Checks the Hopf axioms on every element of `basis`, on random integer
// combinations of it, and on basis pairs (all of them when options.all_pairs,
// then random ones). Deterministic for a fixed seed.
template <HopfBasis A>
HopfReport verify_hopf_axioms(const std::vector<typename A::key_type>& basis, const HopfCheckOptions& options = {}) {
  using Key = typename A::key_type;
  std::vector<Element<A>> singles;
  std::vector<std::string> single_names;
  for (const auto& b : basis) {
    singles.push_back(Element<A>::basis(b));
    single_names.push_back(A::name(b));
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Element<A>> combos;
  std::vector<std::pair<Key, Key>> pairs;
  if (options.all_pairs)
    for (const auto& a : basis)
      for (const auto& b : basis) pairs.emplace_back(a, b);
  if (!basis.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t s = 0; s < options.random_samples; ++s) {
      Element<A> x;
      for (int t = 0; t < 4; ++t) x.add(basis[pick(rng)], coeff(rng));
      combos.push_back(std::move(x));
      pairs.emplace_back(basis[pick(rng)], basis[pick(rng)]);
    }
  }

  HopfReport report;
  auto run = [&](const char* name, std::size_t n, auto&& check, auto&& label) {
    AxiomResult r;
    r.name = name;
    auto bad = detail::first_failure(n, check);
    r.checked = n;
    if (bad < n) {
      r.passed = false;
      r.counterexample = label(bad);
    }
    return r;
  };
  // Every element-wise axiom runs on the basis first, then on combinations.
  auto on_elements = [&](const char* name, auto&& check) {
    auto all = singles;
    all.insert(all.end(), combos.begin(), combos.end());
    return run(name, all.size(), [&](std::size_t i) { return check(all[i]); },
               [&](std::size_t i) { return i < single_names.size() ? single_names[i] : describe<A>(all[i]); });
  };
  auto pair_label = [&](std::size_t i) { return A::name(pairs[i].first) + " , " + A::name(pairs[i].second); };

  report.axioms.push_back(on_elements(axiom::kCoassociativity, [](const Element<A>& x) { return detail::coassociative<A>(x); }));
  report.axioms.push_back(on_elements(axiom::kCounit, [](const Element<A>& x) { return detail::counital<A>(x); }));
  report.axioms.push_back(run(
      axiom::kCompatibility, pairs.size(),
      [&](std::size_t i) {
        auto a = Element<A>::basis(pairs[i].first);
        auto b = Element<A>::basis(pairs[i].second);
        return coproduct<A>(multiply<A>(a, b)) == multiply<A>(coproduct<A>(a), coproduct<A>(b));
      },
      pair_label));
  report.axioms.push_back(on_elements(axiom::kAntipodeLeft, [](const Element<A>& x) {
    return antipode_left_convolution<A>(x) == detail::unit_times_counit<A>(x);
  }));
  report.axioms.push_back(on_elements(axiom::kAntipodeRight, [](const Element<A>& x) {
    return antipode_right_convolution<A>(x) == detail::unit_times_counit<A>(x);
  }));
  report.axioms.push_back(run(
      axiom::kAntimorphism, pairs.size(),
      [&](std::size_t i) {
        auto a = Element<A>::basis(pairs[i].first);
        auto b = Element<A>::basis(pairs[i].second);
        return antipode<A>(multiply<A>(a, b)) == multiply<A>(antipode<A>(b), antipode<A>(a));
      },
      pair_label));
  if (options.check_takeuchi) {
    report.axioms.push_back(on_elements(axiom::kTakeuchi, [](const Element<A>& x) {
      return antipode<A>(x) == takeuchi_antipode<A>(x);
    }));
  }
  return report;
}

}  // namespace parsym::hopf
