#include "parsym/subalgebra.hpp"

#include <algorithm>

#include "parsym/errors.hpp"
#include "parsym/free_hopf.hpp"

namespace parsym {

namespace {

struct MemberResult {
  bool tensor = true;
  bool delta = true;
  bool antipode = true;
  bool primitive = false;
  std::string detail;
};

bool all_factors_in(const PartitionDiagram& d, const kernels::DiagramPredicate& in) {
  if (d.empty()) return true;
  for (const auto& g : tensor_factorize(d)) {
    if (!in(g)) return false;
  }
  return true;
}

MemberResult check_member(const PartitionDiagram& d, const kernels::DiagramPredicate& in) {
  MemberResult r;
  if (!all_factors_in(d, in)) {
    r.tensor = false;
    r.detail = "a tensor factor leaves the family";
  }
  for (const auto& [pair, c] : ParSym::coproduct(d)) {
    for (const auto* side : {&pair.first, &pair.second}) {
      if (!side->empty() && !in(*side)) {
        r.delta = false;
        if (r.detail.empty()) r.detail = "coproduct component " + render(*side);
      }
    }
  }
  for (const auto& [word, c] : ParSym::antipode(d)) {
    if (!in(word) || !all_factors_in(word, in)) {
      r.antipode = false;
      if (r.detail.empty()) r.detail = "antipode term " + render(word);
    }
  }
  r.primitive = is_primitive(d);
  return r;
}

ClosureReport closure_impl(const kernels::DiagramPredicate& in, std::size_t max_degree);

}  // namespace

std::size_t closure_degree_cap(Family f) {
  return f == Family::All || f == Family::Planar ? kClosureDegreeCapLarge : kClosureDegreeCap;
}

bool is_primitive(const PartitionDiagram& d) {
  if (d.empty()) return false;
  TensorElement expected;
  expected.add({PartitionDiagram{}, d}, 1);
  expected.add({d, PartitionDiagram{}}, 1);
  return ParSym::coproduct(d) == expected;
}

ClosureReport closure_report(Family f, std::size_t max_degree) {
  check_cap("closure degree", max_degree, closure_degree_cap(f));
  auto report = closure_impl([f](const PartitionDiagram& d) { return family_member(d, f); }, max_degree);
  report.family = f;
  return report;
}

ClosureReport closure_report(const kernels::DiagramPredicate& in, std::size_t max_degree) {
  check_cap("closure degree", max_degree, kClosureDegreeCapLarge);
  return closure_impl(in, max_degree);
}

namespace {

ClosureReport closure_impl(const kernels::DiagramPredicate& in, std::size_t max_degree) {
  ClosureReport report;
  report.max_degree = max_degree;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    auto members = kernels::omp::filter(n, in);
    std::vector<MemberResult> results(members.size());
    const auto count = static_cast<long>(members.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) results[i] = check_member(members[i], in);

    DegreeCheck dc;
    dc.degree = n;
    dc.members = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& r = results[i];
      dc.tensor_closed = dc.tensor_closed && r.tensor;
      dc.delta_closed = dc.delta_closed && r.delta;
      dc.antipode_closed = dc.antipode_closed && r.antipode;
      if (r.primitive) ++dc.primitive_count;
      if (!report.counterexample && !(r.tensor && r.delta && r.antipode)) {
        const char* which = !r.tensor ? "tensor" : !r.delta ? "delta" : "antipode";
        report.counterexample = ClosureCounterexample{members[i], which, r.detail};
      }
    }
    report.checks.push_back(dc);
  }
  return report;
}

}  // namespace

std::uint64_t family_count(Family f, std::size_t k, std::size_t max_order) {
  return kernels::omp::count_if(k, [f](const PartitionDiagram& d) { return family_member(d, f); }, max_order);
}

IntSeq family_generator_counts(Family f, std::size_t max_k) {
  check_cap("generator count order", max_k, has_dimension_formula(f) ? kFormulaCountCap : kEnumerationCountCap);
  IntSeq out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto n = kernels::omp::count_if(
        k, [f](const PartitionDiagram& d) { return family_member(d, f) && is_tensor_irreducible(d); },
        std::max(kDefaultMaxOrder, max_k));
    out.push_back(Integer(static_cast<unsigned long>(n)));
  }
  return out;
}

kernels::Histogram m_distribution(std::size_t k, Family f) {
  check_cap("m distribution order", k, kDistributionCap);
  return kernels::omp::histogram(k, m_statistic, [f](const PartitionDiagram& d) { return family_member(d, f); });
}

}  // namespace parsym
