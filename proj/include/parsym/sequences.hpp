#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "parsym/diagram.hpp"
#include "parsym/integer.hpp"

namespace parsym {

// A finite, 1-indexed prefix of an integer sequence.
class IntSeq {
 public:
  IntSeq() = default;
  explicit IntSeq(std::vector<Integer> terms) : terms_(std::move(terms)) {}
  IntSeq(std::initializer_list<long> terms) {
    for (auto t : terms) terms_.emplace_back(t);
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // n-th term, n >= 1.
  const Integer& operator[](std::size_t n) const { return terms_.at(n - 1); }
  Integer& operator[](std::size_t n) { return terms_.at(n - 1); }

  const std::vector<Integer>& terms() const noexcept { return terms_; }
  void push_back(Integer v) { terms_.push_back(std::move(v)); }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;

 private:
  std::vector<Integer> terms_;
};

// Power series c_0 + c_1 x + ... + c_N x^N, exact modulo x^{N+1}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t precision) : coeffs_(precision + 1) {}
  TruncatedSeries(std::size_t precision, std::vector<Integer> coeffs);

  std::size_t precision() const noexcept { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  Integer& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse; the constant term must be +1 or -1.
  TruncatedSeries reciprocal() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

Integer factorial(std::size_t n);
Integer double_factorial_odd(std::size_t k);  // (2k-1)!!, with (-1)!! = 1
Integer binomial(std::size_t n, std::size_t k);

// Bell number via the Bell triangle; B_0 = 1.
Integer bell(std::size_t n);
IntSeq bell_sequence(std::size_t terms);       // B_1 .. B_N
IntSeq bell_even_sequence(std::size_t terms);  // B_2, B_4, .., B_2N

// b_n = a_n - sum_{i<n} b_i a_{n-i}, the Boolean transform.
IntSeq boolean_transform(const IntSeq& a);
// a_n = sum over compositions of n of products of b-parts.
IntSeq boolean_inverse(const IntSeq& b);
// Boolean transform read off the series 1 - 1/(1 + sum a_n x^n).
IntSeq boolean_transform_series(const IntSeq& a);

// Largest n for which compositions of n are walked directly.
inline constexpr std::size_t kMaxCompositionWeight = 20;

// a_k = B_{2k} - sum over compositions alpha != (k) of a_{alpha_1}...a_{alpha_l}.
Integer irreducible_count(std::size_t k);
IntSeq irreducible_counts(std::size_t terms);

struct GfReport {
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
  std::vector<Integer> lhs;  // coefficients of sum a_k x^k
  std::vector<Integer> rhs;  // coefficients of 1 - 1/(1 + sum B_2k x^k)
};

// Compares sum a_k x^k with 1 - 1/(1 + sum B_{2k} x^k) to order N.
GfReport verify_gf_identity(std::size_t truncation);
// Same comparison with caller-supplied a_1..a_N on the left.
GfReport verify_gf_identity(const IntSeq& lhs_terms);

// Closed dimension formulas; throws std::invalid_argument for families with
// no formula (the composite planar tags).
Integer family_dimension(Family f, std::size_t k);
bool has_dimension_formula(Family f);
IntSeq family_dimension_sequence(Family f, std::size_t terms);

}  // namespace parsym
