#include "parsym/nsym.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "parsym/errors.hpp"
#include "parsym/sequences.hpp"

namespace parsym {

namespace {

NSymTensor coproduct_of_part(std::uint32_t n) {
  NSymTensor out;
  for (std::uint32_t i = 0; i <= n; ++i) {
    Composition left = i == 0 ? Composition{} : Composition{i};
    Composition right = i == n ? Composition{} : Composition{n - i};
    out.add({left, right}, 1);
  }
  return out;
}

NSymElement antipode_of_part(std::uint32_t n) {
  NSymElement out;
  for (auto& alpha : compositions_of(n)) {
    out.add(alpha, alpha.length() % 2 == 1 ? -1 : 1);
  }
  return out;
}

// Shared body of the two qsym_image overloads.
template <class A, class Grade, class Zeta>
QSymImage universal_image(const hopf::Element<A>& x, Grade&& grade, Zeta&& zeta) {
  std::optional<std::size_t> n;
  for (const auto& [k, c] : x) {
    auto g = grade(k);
    if (n && *n != g) throw std::invalid_argument("qsym_image needs a homogeneous element");
    n = g;
  }
  QSymImage out;
  out.add(Composition{}, hopf::counit<A>(x));
  for (const auto& level : hopf::reduced_iterated_coproducts<A>(x)) {
    for (const auto& [legs, c] : level) {
      Integer value = c;
      Composition alpha;
      for (const auto& leg : legs) {
        value *= zeta(leg);
        if (value == 0) break;
        alpha.parts.push_back(static_cast<std::uint32_t>(grade(leg)));
      }
      if (value != 0) out.add(alpha, value);
    }
  }
  return out;
}

}  // namespace

NSymTensor NSym::coproduct(const Composition& a) {
  NSymTensor out = NSymTensor::basis({Composition{}, Composition{}});
  for (auto part : a.parts) out = hopf::multiply<NSym>(out, coproduct_of_part(part));
  return out;
}

NSymElement NSym::antipode(const Composition& a) {
  NSymElement out = HN({});
  for (auto it = a.parts.rbegin(); it != a.parts.rend(); ++it) {
    out = hopf::multiply<NSym>(out, antipode_of_part(*it));
  }
  return out;
}

NSymElement nsym_multiply(const NSymElement& a, const NSymElement& b) { return hopf::multiply<NSym>(a, b); }
NSymTensor nsym_coproduct(const NSymElement& a) { return hopf::coproduct<NSym>(a); }
Integer nsym_counit(const NSymElement& a) { return hopf::counit<NSym>(a); }
NSymElement nsym_antipode(const NSymElement& a) { return hopf::antipode<NSym>(a); }

NSymElement nsym_e(std::size_t n) {
  if (n == 0) throw std::invalid_argument("E_n is defined for n >= 1");
  NSymElement out;
  for (auto& beta : compositions_of(n)) out.add(beta, (beta.length() + n) % 2 == 0 ? 1 : -1);
  return out;
}

NSymElement nsym_e_recursive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("E_n is defined for n >= 1");
  check_cap("composition weight", n, kMaxCompositionWeight);
  std::vector<NSymElement> e{HN({})};
  for (std::size_t k = 1; k <= n; ++k) {
    NSymElement next;
    for (std::size_t i = 1; i <= k; ++i) {
      auto term = nsym_multiply(HN({static_cast<std::uint32_t>(i)}), e[k - i]);
      if (i % 2 == 0) term *= -1;
      next += term;
    }
    e.push_back(std::move(next));
  }
  return e[n];
}

ParSymElement phi(const NSymElement& a) {
  return apply_linear(a, [](const Composition& alpha) {
    PartitionDiagram d;
    for (auto part : alpha.parts) d = tensor(d, bottom_block_diagram(part));
    return H(d);
  });
}

Composition chi_index(const PartitionDiagram& d) {
  Composition alpha;
  if (d.empty()) return alpha;
  for (const auto& f : tensor_factorize(d)) alpha.parts.push_back(static_cast<std::uint32_t>(m_statistic(f)));
  return alpha;
}

NSymElement chi(const ParSymElement& a) {
  return apply_linear(a, [](const PartitionDiagram& d) { return HN(chi_index(d)); });
}

Integer zeta_nsym(const NSymElement& a) {
  return evaluate_linear(a, [](const Composition& alpha) {
    bool ones = std::all_of(alpha.parts.begin(), alpha.parts.end(), [](auto p) { return p == 1; });
    return Integer(ones ? 1 : 0);
  });
}

hopf::HopfReport verify_nsym_hopf_axioms(std::size_t max_degree, const hopf::HopfCheckOptions& options) {
  std::vector<Composition> basis;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto level = compositions_of(n);
    basis.insert(basis.end(), level.begin(), level.end());
  }
  return hopf::verify_hopf_axioms<NSym>(basis, options);
}

std::size_t parsym_grade(const PartitionDiagram& d, ParSymGrading grading) {
  if (grading == ParSymGrading::Order) return d.order();
  return chi_index(d).weight();
}

QSymImage qsym_image(const ParSymElement& a, ParSymGrading grading, std::size_t max_degree) {
  for (const auto& [d, c] : a) check_cap("QSym image degree", d.order(), max_degree);
  return universal_image<ParSym>(
      a, [grading](const PartitionDiagram& d) { return parsym_grade(d, grading); },
      [](const PartitionDiagram& d) { return character_zeta(H(d)); });
}

QSymImage qsym_image(const NSymElement& a, std::size_t max_degree) {
  for (const auto& [alpha, c] : a) check_cap("QSym image degree", alpha.weight(), max_degree);
  return universal_image<NSym>(
      a, [](const Composition& alpha) { return alpha.weight(); },
      [](const Composition& alpha) { return zeta_nsym(HN(alpha)); });
}

}  // namespace parsym
