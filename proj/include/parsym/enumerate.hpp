#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parsym/diagram.hpp"

namespace parsym {

// Largest order accepted for full enumeration unless the caller raises it.
// B_12 = 4,213,597 diagrams at order 6.
inline constexpr std::size_t kDefaultMaxOrder = 6;

// Streams the set partitions of the 2k slots as restricted growth strings in
// lexicographic order. An optional prefix pins the first labels, which
// restricts the stream to one contiguous subtree of the full order.
class DiagramEnumerator {
 public:
  explicit DiagramEnumerator(std::size_t order, std::span<const std::uint32_t> prefix = {});

  // Advances to the next diagram; false once the stream is exhausted.
  bool next();

  // Label string of the current diagram (valid after next() returned true).
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  PartitionDiagram current() const { return PartitionDiagram::from_labels(order_, labels_); }

 private:
  std::size_t order_;
  std::size_t fixed_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> labels_;
  // blocks_before_[i] = number of distinct labels among labels_[0..i-1].
  std::vector<std::uint32_t> blocks_before_;
};

// All diagrams of order k in enumeration order. Throws CapExceeded if
// k > max_order.
std::vector<PartitionDiagram> enumerate_diagrams(std::size_t k, std::size_t max_order = kDefaultMaxOrder);

void for_each_diagram(std::size_t k, const std::function<void(const PartitionDiagram&)>& visit,
                      std::size_t max_order = kDefaultMaxOrder);

// All valid restricted growth strings of the given length, in lex order.
std::vector<std::vector<std::uint32_t>> rgs_prefixes(std::size_t length);

}  // namespace parsym
