#pragma once

// The Hopf algebra ParSym on the H-basis {H_pi : pi a partition diagram}.
//
// The product is H_pi H_rho = H_{pi ⊗ rho}, so basis words are diagrams and
// the tensor-irreducible diagrams are free generators. On a generator pi with
// bullet decomposition theta_1 ● ... ● theta_m,
//
//   Delta H_pi = sum_{j=0..m} H_{theta_1..theta_j} ⊗ H_{theta_{j+1}..theta_m}
//   S H_pi     = sum_{alpha |= m} (-1)^{l(alpha)} prod_i H_{group_i}
//
// where each group is the ●-fold of consecutive thetas; both extend
// multiplicatively (S as an antimorphism).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parsym/diagram.hpp"
#include "parsym/hopf.hpp"
#include "parsym/integer.hpp"
#include "parsym/linear.hpp"

namespace parsym {

using ParSymElement = LinearCombination<PartitionDiagram>;
using TensorElement = LinearCombination<std::pair<PartitionDiagram, PartitionDiagram>>;
using DiagramPair = std::pair<PartitionDiagram, PartitionDiagram>;

inline constexpr std::size_t kDefaultTakeuchiCap = 4;
inline constexpr std::size_t kDefaultHopfDegreeCap = 4;
inline constexpr std::size_t kDefaultOracleCap = 4;

// Traits for the generic machinery in hopf.hpp.
struct ParSym {
  using key_type = PartitionDiagram;
  static PartitionDiagram unit() { return {}; }
  static PartitionDiagram product(const PartitionDiagram& a, const PartitionDiagram& b) { return tensor(a, b); }
  static TensorElement coproduct(const PartitionDiagram& d);
  static ParSymElement antipode(const PartitionDiagram& d);
  static std::size_t degree(const PartitionDiagram& d) { return d.order(); }
  static std::string name(const PartitionDiagram& d) { return render(d); }
};

inline ParSymElement H(const PartitionDiagram& d, const Integer& c = 1) { return ParSymElement::basis(d, c); }
inline ParSymElement H(std::string_view text, const Integer& c = 1) { return H(parse_diagram(text), c); }

ParSymElement multiply(const ParSymElement& a, const ParSymElement& b);
TensorElement coproduct(const ParSymElement& a);
Integer counit(const ParSymElement& a);
ParSymElement antipode(const ParSymElement& a);

// Degree-n part: only diagrams of order n are kept.
ParSymElement homogeneous_component(const ParSymElement& a, std::size_t n);

// The (G1, G2) index pairs of Delta H_pi for a tensor-irreducible pi, in
// order of increasing left length. For the empty diagram: {(∅, ∅)}.
std::vector<DiagramPair> coproduct_splits(const PartitionDiagram& pi);

// Brute force: every (G1, G2) with order(G1) + order(G2) = order(pi) and
// G1 ● G2 = pi, the empty diagram included. Requires pi tensor-irreducible
// (or empty) and order(pi) <= max_order.
std::vector<DiagramPair> coproduct_pairs_oracle(const PartitionDiagram& pi, std::size_t max_order = kDefaultOracleCap);

// Takeuchi's formula evaluated directly from the coproduct. Refuses terms of
// degree above max_degree.
ParSymElement takeuchi_antipode(const ParSymElement& a, std::size_t max_degree = kDefaultTakeuchiCap);

// E-basis element expanded in the H-basis.
ParSymElement e_basis_expand(const PartitionDiagram& pi);

struct EHMatrix {
  using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

  std::vector<PartitionDiagram> basis;  // enumeration order of A_n
  // rows[i] lists the nonzero (j, [H_basis[j]] E_basis[i]) by increasing j.
  std::vector<SparseRow> rows;
  Integer determinant;
  // True when the determinant came from the triangular shape (ordering the
  // basis by number of tensor factors); false when Bareiss was needed.
  bool triangular = false;

  std::size_t size() const { return basis.size(); }
  Integer entry(std::size_t i, std::size_t j) const;
  std::vector<std::vector<Integer>> dense() const;
};

EHMatrix e_h_matrix(std::size_t n, std::size_t max_degree = kDefaultHopfDegreeCap);

// Fraction-free Gaussian elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

// The canonical character: zeta(H_{1|1'}) = 1 on the order-one diagram
// {1},{1'}, zeta = 0 on every other tensor-irreducible diagram, extended
// multiplicatively and linearly. So zeta(H_pi) = 1 exactly when every block
// of pi is a singleton (pi = ∅ included).
Integer character_zeta(const ParSymElement& a);
PartitionDiagram zeta_support_diagram();

// All diagrams of order <= max_degree, by degree then enumeration order.
std::vector<PartitionDiagram> basis_up_to(std::size_t max_degree, std::size_t max_order = kDefaultHopfDegreeCap);

hopf::HopfReport verify_hopf_axioms(std::size_t max_degree, const hopf::HopfCheckOptions& options = {},
                                    std::size_t max_order = kDefaultHopfDegreeCap);

}  // namespace parsym
