#include <algorithm>
#include <iterator>

#include "parsym/errors.hpp"
#include "parsym/kernels.hpp"

namespace parsym::kernels::omp {

std::size_t split_depth(std::size_t order) {
  // Six slots give B_6 = 203 subtrees, plenty for dynamic scheduling.
  return std::min<std::size_t>(2 * order, 6);
}

std::uint64_t count_if(std::size_t order, const DiagramPredicate& pred, std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  const auto prefixes = rgs_prefixes(split_depth(order));
  const auto tasks = static_cast<long>(prefixes.size());
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (long t = 0; t < tasks; ++t) {
    DiagramEnumerator e(order, prefixes[t]);
    while (e.next()) {
      if (pred(e.current())) ++count;
    }
  }
  return count;
}

Histogram histogram(std::size_t order, const DiagramStatistic& stat, const DiagramPredicate& pred,
                    std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  const auto prefixes = rgs_prefixes(split_depth(order));
  const auto tasks = static_cast<long>(prefixes.size());
  std::vector<Histogram> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    DiagramEnumerator e(order, prefixes[t]);
    while (e.next()) {
      auto d = e.current();
      if (!pred || pred(d)) ++partial[t][stat(d)];
    }
  }
  Histogram h;
  for (const auto& p : partial)
    for (auto [key, n] : p) h[key] += n;
  return h;
}

std::vector<PartitionDiagram> filter(std::size_t order, const DiagramPredicate& pred, std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  const auto prefixes = rgs_prefixes(split_depth(order));
  const auto tasks = static_cast<long>(prefixes.size());
  std::vector<std::vector<PartitionDiagram>> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    DiagramEnumerator e(order, prefixes[t]);
    while (e.next()) {
      auto d = e.current();
      if (pred(d)) partial[t].push_back(std::move(d));
    }
  }
  // Prefix subtrees are contiguous and ordered, so concatenation keeps the
  // serial stream order.
  std::vector<PartitionDiagram> out;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

}  // namespace parsym::kernels::omp
