#include "parsym/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "parsym/errors.hpp"

namespace parsym {

DiagramEnumerator::DiagramEnumerator(std::size_t order, std::span<const std::uint32_t> prefix)
    : order_(order), fixed_(prefix.size()), labels_(2 * order, 0), blocks_before_(2 * order + 1, 0) {
  if (prefix.size() > labels_.size()) throw std::invalid_argument("prefix longer than the label string");
  std::uint32_t blocks = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i < prefix.size()) {
      if (prefix[i] > blocks) throw std::invalid_argument("prefix is not a restricted growth string");
      labels_[i] = prefix[i];
    }
    blocks_before_[i] = blocks;
    blocks = std::max(blocks, labels_[i] + 1);
  }
  blocks_before_[labels_.size()] = blocks;
}

bool DiagramEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const std::size_t n = labels_.size();
  for (std::size_t i = n; i-- > fixed_;) {
    if (labels_[i] < blocks_before_[i]) {
      ++labels_[i];
      std::uint32_t blocks = std::max(blocks_before_[i], labels_[i] + 1);
      for (std::size_t j = i + 1; j < n; ++j) {
        labels_[j] = 0;
        blocks_before_[j] = blocks;
      }
      blocks_before_[n] = blocks;
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<PartitionDiagram> enumerate_diagrams(std::size_t k, std::size_t max_order) {
  std::vector<PartitionDiagram> out;
  for_each_diagram(k, [&](const PartitionDiagram& d) { out.push_back(d); }, max_order);
  return out;
}

void for_each_diagram(std::size_t k, const std::function<void(const PartitionDiagram&)>& visit,
                      std::size_t max_order) {
  check_cap("diagram enumeration order", k, max_order);
  DiagramEnumerator e(k);
  while (e.next()) visit(e.current());
}

std::vector<std::vector<std::uint32_t>> rgs_prefixes(std::size_t length) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  auto recurse = [&](auto&& self, std::uint32_t blocks) -> void {
    if (current.size() == length) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t l = 0; l <= blocks; ++l) {
      current.push_back(l);
      self(self, std::max(blocks, l + 1));
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace parsym
