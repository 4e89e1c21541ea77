#pragma once

// NSym on the complete basis H_alpha, the morphisms Phi: NSym -> ParSym and
// chi: ParSym -> NSym, the two characters, and the universal morphism into
// QSym (as M-basis coefficient tables).

#include <cstddef>
#include <string>

#include "parsym/composition.hpp"
#include "parsym/free_hopf.hpp"
#include "parsym/hopf.hpp"
#include "parsym/linear.hpp"

namespace parsym {

using NSymElement = LinearCombination<Composition>;
using NSymTensor = LinearCombination<std::pair<Composition, Composition>>;
// Coefficients on the monomial basis M_alpha.
using QSymImage = LinearCombination<Composition>;

inline constexpr std::size_t kDefaultQSymDegreeCap = 4;

struct NSym {
  using key_type = Composition;
  static Composition unit() { return {}; }
  static Composition product(const Composition& a, const Composition& b) { return concat(a, b); }
  static NSymTensor coproduct(const Composition& a);
  static NSymElement antipode(const Composition& a);
  static std::size_t degree(const Composition& a) { return a.weight(); }
  static std::string name(const Composition& a) { return render(a); }
};

inline NSymElement HN(const Composition& a, const Integer& c = 1) { return NSymElement::basis(a, c); }

NSymElement nsym_multiply(const NSymElement& a, const NSymElement& b);
NSymTensor nsym_coproduct(const NSymElement& a);
Integer nsym_counit(const NSymElement& a);
NSymElement nsym_antipode(const NSymElement& a);

// E_n = sum_{beta |= n} (-1)^{l(beta)+n} H_beta.
NSymElement nsym_e(std::size_t n);
// E_n = sum_{i=1..n} (-1)^{i+1} H_i E_{n-i}, E_0 = 1.
NSymElement nsym_e_recursive(std::size_t n);

// Phi(H_n) = H of {1},..,{n},{1',..,n'}; multiplicative.
ParSymElement phi(const NSymElement& a);
// chi(H_pi) = H_(m(pi_1),..,m(pi_p)) over the tensor factors of pi.
NSymElement chi(const ParSymElement& a);
Composition chi_index(const PartitionDiagram& d);

// The canonical character: zeta(H_1) = 1, zeta(H_n) = 0 for n >= 2,
// multiplicative. So zeta(H_alpha) = 1 iff every part of alpha is 1.
Integer zeta_nsym(const NSymElement& a);

hopf::HopfReport verify_nsym_hopf_axioms(std::size_t max_degree, const hopf::HopfCheckOptions& options = {});

// ---------------------------------------------------------------------------
// Universal morphism to QSym.

// Grading of ParSym used for the QSym image. BulletLength (sum of m over the
// tensor factors) is the one chi preserves; Order is the diagram order.
enum class ParSymGrading { BulletLength, Order };

std::size_t parsym_grade(const PartitionDiagram& d, ParSymGrading grading);

// The coefficient of M_alpha is zeta^{⊗l} applied to the alpha-graded part of
// the (l-1)-fold iterated coproduct. Inputs must be homogeneous for the
// grading; diagrams of order above max_degree are refused.
QSymImage qsym_image(const ParSymElement& a, ParSymGrading grading = ParSymGrading::BulletLength,
                     std::size_t max_degree = kDefaultQSymDegreeCap);
QSymImage qsym_image(const NSymElement& a, std::size_t max_degree = kDefaultQSymDegreeCap);

}  // namespace parsym
