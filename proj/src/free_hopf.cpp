#include "parsym/free_hopf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parsym/composition.hpp"
#include "parsym/enumerate.hpp"
#include "parsym/errors.hpp"

namespace parsym {

namespace {

// Bullet-folds of consecutive runs of thetas, one per part of alpha.
std::vector<PartitionDiagram> grouped_folds(const std::vector<PartitionDiagram>& thetas, const Composition& alpha) {
  std::vector<PartitionDiagram> groups;
  groups.reserve(alpha.length());
  std::size_t start = 0;
  for (auto part : alpha.parts) {
    groups.push_back(fold_bullet(std::span(thetas).subspan(start, part)));
    start += part;
  }
  return groups;
}

// Sum over compositions of m of sign(l) * (tensor of grouped folds), for a
// tensor-irreducible pi. Shared by S and E.
ParSymElement irreducible_alternating_sum(const PartitionDiagram& pi, bool extra_sign) {
  auto thetas = bullet_decompose(pi);
  ParSymElement out;
  for (const auto& alpha : compositions_of(thetas.size())) {
    auto groups = grouped_folds(thetas, alpha);
    bool negative = (alpha.length() % 2 == 1) != extra_sign;
    out.add(fold_tensor(groups), negative ? -1 : 1);
  }
  return out;
}

}  // namespace

std::vector<DiagramPair> coproduct_splits(const PartitionDiagram& pi) {
  if (pi.empty()) return {{PartitionDiagram{}, PartitionDiagram{}}};
  auto thetas = bullet_decompose(pi);
  std::vector<DiagramPair> out;
  out.reserve(thetas.size() + 1);
  std::span all(thetas);
  for (std::size_t j = 0; j <= thetas.size(); ++j) {
    out.emplace_back(fold_bullet(all.first(j)), fold_bullet(all.subspan(j)));
  }
  return out;
}

TensorElement ParSym::coproduct(const PartitionDiagram& d) {
  if (d.empty()) return TensorElement::basis({d, d});
  TensorElement out = TensorElement::basis({PartitionDiagram{}, PartitionDiagram{}});
  for (const auto& factor : tensor_factorize(d)) {
    TensorElement piece;
    for (auto& split : coproduct_splits(factor)) piece.add(split, 1);
    out = hopf::multiply<ParSym>(out, piece);
  }
  return out;
}

ParSymElement ParSym::antipode(const PartitionDiagram& d) {
  if (d.empty()) return H(d);
  auto factors = tensor_factorize(d);
  std::reverse(factors.begin(), factors.end());
  ParSymElement out = H(PartitionDiagram{});
  for (const auto& f : factors) out = hopf::multiply<ParSym>(out, irreducible_alternating_sum(f, false));
  return out;
}

ParSymElement multiply(const ParSymElement& a, const ParSymElement& b) { return hopf::multiply<ParSym>(a, b); }
TensorElement coproduct(const ParSymElement& a) { return hopf::coproduct<ParSym>(a); }
Integer counit(const ParSymElement& a) { return hopf::counit<ParSym>(a); }
ParSymElement antipode(const ParSymElement& a) { return hopf::antipode<ParSym>(a); }

ParSymElement homogeneous_component(const ParSymElement& a, std::size_t n) {
  ParSymElement out;
  for (const auto& [d, c] : a) {
    if (d.order() == n) out.add(d, c);
  }
  return out;
}

std::vector<DiagramPair> coproduct_pairs_oracle(const PartitionDiagram& pi, std::size_t max_order) {
  check_cap("coproduct oracle order", pi.order(), max_order);
  if (!pi.empty() && !is_tensor_irreducible(pi)) {
    throw std::invalid_argument("coproduct oracle needs a tensor-irreducible diagram, got " + render(pi));
  }
  const std::size_t n = pi.order();
  std::vector<DiagramPair> out;
  for (std::size_t left = 0; left <= n; ++left) {
    auto lefts = enumerate_diagrams(left, max_order);
    auto rights = enumerate_diagrams(n - left, max_order);
    for (const auto& g1 : lefts) {
      for (const auto& g2 : rights) {
        if (bullet(g1, g2) == pi) out.emplace_back(g1, g2);
      }
    }
  }
  return out;
}

ParSymElement takeuchi_antipode(const ParSymElement& a, std::size_t max_degree) {
  for (const auto& [d, c] : a) check_cap("Takeuchi degree", d.order(), max_degree);
  return hopf::takeuchi_antipode<ParSym>(a);
}

ParSymElement e_basis_expand(const PartitionDiagram& pi) {
  ParSymElement out = H(PartitionDiagram{});
  if (pi.empty()) return out;
  for (const auto& f : tensor_factorize(pi)) {
    out = multiply(out, irreducible_alternating_sum(f, f.order() % 2 == 1));
  }
  return out;
}

Integer EHMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& [col, v] : rows.at(i)) {
    if (col == j) return v;
  }
  return 0;
}

std::vector<std::vector<Integer>> EHMatrix::dense() const {
  std::vector<std::vector<Integer>> m(size(), std::vector<Integer>(size(), Integer(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) m[i][j] = v;
  return m;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

EHMatrix e_h_matrix(std::size_t n, std::size_t max_degree) {
  check_cap("E/H matrix degree", n, max_degree);
  EHMatrix out;
  out.basis = enumerate_diagrams(n, std::max(n, max_degree));
  std::map<PartitionDiagram, std::size_t> index;
  std::vector<std::size_t> factor_count(out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    index.emplace(out.basis[i], i);
    factor_count[i] = n == 0 ? 0 : tensor_factorize(out.basis[i]).size();
  }
  out.rows.resize(out.basis.size());
  bool triangular = true;
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    auto e = e_basis_expand(out.basis[i]);
    for (const auto& [d, c] : e) {
      std::size_t j = index.at(d);
      out.rows[i].emplace_back(j, c);
      if (j != i && factor_count[j] <= factor_count[i]) triangular = false;
    }
    std::sort(out.rows[i].begin(), out.rows[i].end());
  }
  out.triangular = triangular;
  if (triangular) {
    out.determinant = 1;
    for (std::size_t i = 0; i < out.basis.size(); ++i) out.determinant *= out.entry(i, i);
  } else {
    out.determinant = bareiss_determinant(out.dense());
  }
  return out;
}

PartitionDiagram zeta_support_diagram() { return parse_diagram("1/1'"); }

Integer character_zeta(const ParSymElement& a) {
  return evaluate_linear(a, [](const PartitionDiagram& d) {
    return Integer(d.block_count() == 2 * d.order() ? 1 : 0);
  });
}

std::vector<PartitionDiagram> basis_up_to(std::size_t max_degree, std::size_t max_order) {
  std::vector<PartitionDiagram> out;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    auto level = enumerate_diagrams(k, max_order);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

hopf::HopfReport verify_hopf_axioms(std::size_t max_degree, const hopf::HopfCheckOptions& options,
                                    std::size_t max_order) {
  check_cap("Hopf check degree", max_degree, max_order);
  return hopf::verify_hopf_axioms<ParSym>(basis_up_to(max_degree, max_order), options);
}

}  // namespace parsym
