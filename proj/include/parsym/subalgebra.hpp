#pragma once

// Closure checks for the subspaces of ParSym spanned by a diagram family.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parsym/diagram.hpp"
#include "parsym/kernels.hpp"
#include "parsym/sequences.hpp"

namespace parsym {

inline constexpr std::size_t kClosureDegreeCap = 4;
inline constexpr std::size_t kClosureDegreeCapLarge = 3;  // All, Planar
inline constexpr std::size_t kFormulaCountCap = 6;
inline constexpr std::size_t kEnumerationCountCap = 4;
inline constexpr std::size_t kDistributionCap = 4;

std::size_t closure_degree_cap(Family f);

struct DegreeCheck {
  std::size_t degree = 0;
  std::size_t members = 0;
  bool tensor_closed = true;
  bool delta_closed = true;
  bool antipode_closed = true;
  std::size_t primitive_count = 0;
};

struct ClosureCounterexample {
  PartitionDiagram diagram;
  std::string check;  // "tensor", "delta" or "antipode"
  std::string detail;
};

struct ClosureReport {
  Family family = Family::All;
  std::size_t max_degree = 0;
  std::vector<DegreeCheck> checks;  // degrees 1..max_degree
  std::optional<ClosureCounterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

// Checks every member of order 1..max_degree. The first failing member (by
// degree, then enumeration order) is reported.
ClosureReport closure_report(Family f, std::size_t max_degree);

// Same checks for an arbitrary membership predicate. The family field of the
// result is left at All. Capped at kClosureDegreeCapLarge.
ClosureReport closure_report(const kernels::DiagramPredicate& in, std::size_t max_degree);

// Members of order k, counted by enumeration.
std::uint64_t family_count(Family f, std::size_t k, std::size_t max_order = kDefaultMaxOrder);

// Term k = number of tensor-irreducible members of order k.
IntSeq family_generator_counts(Family f, std::size_t max_k);

// Histogram of m over the members of order k.
kernels::Histogram m_distribution(std::size_t k, Family f);

// True iff Delta H_d = H_∅ ⊗ H_d + H_d ⊗ H_∅.
bool is_primitive(const PartitionDiagram& d);

}  // namespace parsym
