#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace parsym {

enum class Row : std::uint8_t { Top, Bottom };

// A vertex of a partition diagram. Top i is written "i", Bottom i is "i'".
// Ordered Top 1 < ... < Top k < Bottom 1 < ... < Bottom k.
struct Node {
  Row row = Row::Top;
  std::uint32_t index = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
};

inline Node top(std::uint32_t i) { return {Row::Top, i}; }
inline Node bottom(std::uint32_t i) { return {Row::Bottom, i}; }

using Block = std::vector<Node>;

// A set partition of {1..k, 1'..k'} stored canonically.
//
// Nodes are addressed by slot: Top i is slot i-1 and Bottom i is slot k+i-1,
// so slot order is node order. The partition is kept as a restricted growth
// string over slots: labels()[s] is the block number of slot s, and blocks are
// numbered in order of their minimal node. Two diagrams are equal iff their
// orders and label strings agree.
class PartitionDiagram {
 public:
  // The empty diagram of order 0.
  PartitionDiagram() = default;

  // Builds a diagram from an arbitrary block labelling of the 2k slots.
  static PartitionDiagram from_labels(std::size_t order, std::span<const std::uint32_t> labels);

  // Builds a diagram from explicit blocks; throws ParseError if the blocks do
  // not partition the 2k nodes exactly.
  static PartitionDiagram from_blocks(std::size_t order, const std::vector<Block>& blocks);

  std::size_t order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ == 0; }
  std::size_t block_count() const noexcept { return block_count_; }

  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  std::uint32_t block_of(Node n) const { return labels_[slot(n)]; }
  std::size_t slot(Node n) const {
    return n.row == Row::Top ? n.index - 1 : order_ + n.index - 1;
  }
  Node node_at(std::size_t slot) const {
    return slot < order_ ? top(static_cast<std::uint32_t>(slot + 1))
                         : bottom(static_cast<std::uint32_t>(slot - order_ + 1));
  }
  std::size_t column_of_slot(std::size_t slot) const {
    return slot < order_ ? slot + 1 : slot - order_ + 1;
  }

  // Blocks in canonical order, nodes sorted inside each block.
  std::vector<Block> blocks() const;

  friend bool operator==(const PartitionDiagram&, const PartitionDiagram&) = default;
  friend auto operator<=>(const PartitionDiagram& a, const PartitionDiagram& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  std::size_t order_ = 0;
  std::size_t block_count_ = 0;
  std::vector<std::uint32_t> labels_;
};

// ---------------------------------------------------------------------------
// Text and JSON forms.
//
//   diagram := "()" | block ("/" block)*
//   block   := node ("," node)*
//   node    := INT | INT "'"
//
// Whitespace is ignored on input. JSON is {"order": k, "blocks": [[...], ...]}
// with Bottom i written as -i.

PartitionDiagram parse_diagram(std::string_view text);
std::string render(const PartitionDiagram& d);

nlohmann::json to_json(const PartitionDiagram& d);
PartitionDiagram diagram_from_json(const nlohmann::json& j);

// Accepts either the text grammar or a JSON object.
PartitionDiagram read_diagram(std::string_view text_or_json);

// ---------------------------------------------------------------------------
// Diagram operations.

// Horizontal concatenation: b placed to the right of a.
PartitionDiagram tensor(const PartitionDiagram& a, const PartitionDiagram& b);

// Concatenation followed by joining Bottom order(a) with Bottom order(a)+1.
// The empty diagram is a two-sided identity.
PartitionDiagram bullet(const PartitionDiagram& a, const PartitionDiagram& b);

PartitionDiagram fold_tensor(std::span<const PartitionDiagram> factors);
PartitionDiagram fold_bullet(std::span<const PartitionDiagram> factors);

struct VerticalComposition {
  PartitionDiagram diagram;
  // Components that lived entirely in the removed middle row.
  std::size_t removed = 0;
};

// Stacks a over b (Bottom i of a glued to Top i of b) and deletes the middle
// row. Throws std::invalid_argument on an order mismatch.
VerticalComposition vertical_compose(const PartitionDiagram& a, const PartitionDiagram& b);

// Positions i in 1..k-1 with no block meeting both columns <= i and > i.
std::vector<std::size_t> tensor_cuts(const PartitionDiagram& d);

// Positions i where Bottom i and Bottom i+1 share a block that is the only
// block meeting both sides of the line between columns i and i+1.
std::vector<std::size_t> bullet_cuts(const PartitionDiagram& d);

// The induced partition on columns first..last (1-based, inclusive).
PartitionDiagram restrict_columns(const PartitionDiagram& d, std::size_t first, std::size_t last);

// Unique factorization into tensor-irreducible diagrams. Throws on the empty
// diagram.
std::vector<PartitionDiagram> tensor_factorize(const PartitionDiagram& d);

// Unique decomposition into bullet-irreducible diagrams. Throws on the empty
// diagram.
std::vector<PartitionDiagram> bullet_decompose(const PartitionDiagram& d);

bool is_tensor_irreducible(const PartitionDiagram& d);
bool is_bullet_irreducible(const PartitionDiagram& d);

// Length of the bullet decomposition; 0 for the empty diagram.
std::size_t m_statistic(const PartitionDiagram& d);

// Number of blocks meeting both rows.
std::size_t propagation_number(const PartitionDiagram& d);

// ---------------------------------------------------------------------------
// Diagram families.

enum class Family : std::uint8_t {
  All,
  Permutation,
  Planar,
  Matching,
  PerfectMatching,
  PartialPermutation,
  PlanarPerfectMatching,
  PlanarMatching,
  PlanarPartialPermutation,
};

inline constexpr Family kAllFamilies[] = {
    Family::All,
    Family::Permutation,
    Family::Planar,
    Family::Matching,
    Family::PerfectMatching,
    Family::PartialPermutation,
    Family::PlanarPerfectMatching,
    Family::PlanarMatching,
    Family::PlanarPartialPermutation,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

bool is_planar(const PartitionDiagram& d);
bool family_member(const PartitionDiagram& d, Family f);

// The identity diagram {i, i'} of order k, and the diagram with isolated top
// nodes over a single bottom block.
PartitionDiagram identity_diagram(std::size_t k);
PartitionDiagram bottom_block_diagram(std::size_t k);

}  // namespace parsym

template <>
struct std::hash<parsym::PartitionDiagram> {
  std::size_t operator()(const parsym::PartitionDiagram& d) const noexcept {
    std::size_t h = d.order() * 0x9e3779b97f4a7c15ULL;
    for (auto l : d.labels()) h = (h ^ l) * 0x100000001b3ULL;
    return h;
  }
};
