#include "parsym/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "parsym/errors.hpp"

namespace parsym {

TruncatedSeries::TruncatedSeries(std::size_t precision, std::vector<Integer> coeffs) : coeffs_(precision + 1) {
  for (std::size_t i = 0; i < coeffs.size() && i <= precision; ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.precision() != precision()) throw std::invalid_argument("series precision mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.precision() != precision()) throw std::invalid_argument("series precision mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.precision() != b.precision()) throw std::invalid_argument("series precision mismatch");
  TruncatedSeries out(a.precision());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series reciprocal needs a unit constant term");
  TruncatedSeries inv(precision());
  inv.coeffs_[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * inv.coeffs_[n - i];
    inv.coeffs_[n] = -acc * c0;
  }
  return inv;
}

Integer factorial(std::size_t n) {
  Integer r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

Integer double_factorial_odd(std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 1; i + 1 <= 2 * k; i += 2) r *= static_cast<unsigned long>(i);
  return r;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer bell(std::size_t n) {
  // Row r of the triangle starts with the last entry of row r-1; B_r is the
  // first entry of row r.
  std::vector<Integer> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<Integer> next{row.back()};
    next.reserve(row.size() + 1);
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

IntSeq bell_sequence(std::size_t terms) {
  IntSeq s;
  for (std::size_t n = 1; n <= terms; ++n) s.push_back(bell(n));
  return s;
}

IntSeq bell_even_sequence(std::size_t terms) {
  IntSeq s;
  for (std::size_t n = 1; n <= terms; ++n) s.push_back(bell(2 * n));
  return s;
}

IntSeq boolean_transform(const IntSeq& a) {
  IntSeq b;
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer v = a[n];
    for (std::size_t i = 1; i < n; ++i) v -= b[i] * a[n - i];
    b.push_back(std::move(v));
  }
  return b;
}

IntSeq boolean_inverse(const IntSeq& b) {
  IntSeq a;
  for (std::size_t n = 1; n <= b.size(); ++n) {
    Integer v = b[n];
    for (std::size_t i = 1; i < n; ++i) v += b[i] * a[n - i];
    a.push_back(std::move(v));
  }
  return a;
}

IntSeq boolean_transform_series(const IntSeq& a) {
  const std::size_t n = a.size();
  TruncatedSeries one(n);
  one[0] = 1;
  TruncatedSeries f = one;
  for (std::size_t i = 1; i <= n; ++i) f[i] = a[i];
  auto g = one - f.reciprocal();
  IntSeq b;
  for (std::size_t i = 1; i <= n; ++i) b.push_back(g[i]);
  return b;
}

namespace {

std::mutex irreducible_mutex;
std::vector<Integer> irreducible_memo{Integer(0)};  // index 0 unused

}  // namespace

Integer irreducible_count(std::size_t k) {
  if (k == 0) throw std::invalid_argument("irreducible_count is defined for k >= 1");
  check_cap("composition weight", k, kMaxCompositionWeight);
  std::lock_guard lock(irreducible_mutex);
  auto& a = irreducible_memo;
  while (a.size() <= k) {
    const std::size_t n = a.size();
    Integer reducible = 0;
    // Bit j of mask set = a bar after position j+1; mask 0 is the composition (n).
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      Integer product = 1;
      std::size_t part = 1;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (mask & (1u << j)) {
          product *= a[part];
          part = 1;
        } else {
          ++part;
        }
      }
      product *= a[part];
      reducible += product;
    }
    a.push_back(bell(2 * n) - reducible);
  }
  return a[k];
}

IntSeq irreducible_counts(std::size_t terms) {
  IntSeq s;
  for (std::size_t k = 1; k <= terms; ++k) s.push_back(irreducible_count(k));
  return s;
}

GfReport verify_gf_identity(const IntSeq& lhs_terms) {
  const std::size_t n = lhs_terms.size();
  if (n == 0) throw std::invalid_argument("generating-function check needs at least one term");
  TruncatedSeries one(n);
  one[0] = 1;
  TruncatedSeries bells = one;
  for (std::size_t k = 1; k <= n; ++k) bells[k] = bell(2 * k);
  auto rhs = one - bells.reciprocal();
  TruncatedSeries lhs(n);
  for (std::size_t k = 1; k <= n; ++k) lhs[k] = lhs_terms[k];

  GfReport report;
  report.lhs = lhs.coefficients();
  report.rhs = rhs.coefficients();
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs[i] != rhs[i]) {
      report.first_mismatch = i;
      break;
    }
  }
  report.equal = !report.first_mismatch.has_value();
  return report;
}

GfReport verify_gf_identity(std::size_t truncation) { return verify_gf_identity(irreducible_counts(truncation)); }

bool has_dimension_formula(Family f) {
  switch (f) {
    case Family::All:
    case Family::Permutation:
    case Family::Planar:
    case Family::Matching:
    case Family::PerfectMatching:
    case Family::PartialPermutation:
      return true;
    default:
      return false;
  }
}

Integer family_dimension(Family f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("family_dimension is defined for k >= 1");
  switch (f) {
    case Family::All:
      return bell(2 * k);
    case Family::Permutation:
      return factorial(k);
    case Family::Planar: {
      Integer c = binomial(4 * k, 2 * k);
      return c / static_cast<unsigned long>(2 * k + 1);
    }
    case Family::Matching: {
      Integer sum = 0;
      for (std::size_t i = 0; i <= k; ++i) sum += binomial(2 * k, 2 * i) * double_factorial_odd(i);
      return sum;
    }
    case Family::PerfectMatching:
      return double_factorial_odd(k);
    case Family::PartialPermutation: {
      Integer sum = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        Integer c = binomial(k, i);
        sum += c * c * factorial(i);
      }
      return sum;
    }
    default:
      throw std::invalid_argument("no closed dimension formula for family '" + std::string(family_name(f)) +
                                  "'; count it by enumeration");
  }
}

IntSeq family_dimension_sequence(Family f, std::size_t terms) {
  IntSeq s;
  for (std::size_t k = 1; k <= terms; ++k) s.push_back(family_dimension(f, k));
  return s;
}

}  // namespace parsym
