#include "parsym/errors.hpp"
#include "parsym/kernels.hpp"

namespace parsym::kernels::serial {

std::uint64_t count_if(std::size_t order, const DiagramPredicate& pred, std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  std::uint64_t count = 0;
  DiagramEnumerator e(order);
  while (e.next()) {
    if (pred(e.current())) ++count;
  }
  return count;
}

Histogram histogram(std::size_t order, const DiagramStatistic& stat, const DiagramPredicate& pred,
                    std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  Histogram h;
  DiagramEnumerator e(order);
  while (e.next()) {
    auto d = e.current();
    if (!pred || pred(d)) ++h[stat(d)];
  }
  return h;
}

std::vector<PartitionDiagram> filter(std::size_t order, const DiagramPredicate& pred, std::size_t max_order) {
  check_cap("diagram enumeration order", order, max_order);
  std::vector<PartitionDiagram> out;
  DiagramEnumerator e(order);
  while (e.next()) {
    auto d = e.current();
    if (pred(d)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace parsym::kernels::serial
