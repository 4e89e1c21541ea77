#include "parsym/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "parsym/errors.hpp"

namespace parsym {

namespace {

constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

// Relabels in order of first occurrence.
std::pair<std::vector<std::uint32_t>, std::size_t> canonicalize(std::span<const std::uint32_t> raw) {
  std::vector<std::uint32_t> out(raw.size());
  std::uint32_t top_label = 0;
  for (auto l : raw) top_label = std::max(top_label, l);
  std::vector<std::uint32_t> renamed(raw.empty() ? 0 : std::size_t{top_label} + 1, kUnset);
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < raw.size(); ++s) {
    auto& r = renamed[raw[s]];
    if (r == kUnset) r = next++;
    out[s] = r;
  }
  return {std::move(out), next};
}

// Column span [lo, hi] of each block.
std::vector<std::pair<std::size_t, std::size_t>> block_spans(const PartitionDiagram& d) {
  std::vector<std::pair<std::size_t, std::size_t>> spans(d.block_count(), {d.order() + 1, 0});
  auto labels = d.labels();
  for (std::size_t s = 0; s < labels.size(); ++s) {
    auto c = d.column_of_slot(s);
    auto& sp = spans[labels[s]];
    sp.first = std::min(sp.first, c);
    sp.second = std::max(sp.second, c);
  }
  return spans;
}

// crossings[i] = number of blocks meeting columns <= i and > i, for i in 1..k-1.
std::vector<std::size_t> crossing_counts(const PartitionDiagram& d) {
  std::vector<std::size_t> diff(d.order() + 2, 0);
  for (auto [lo, hi] : block_spans(d)) {
    if (lo < hi) {
      ++diff[lo];
      --diff[hi];
    }
  }
  std::vector<std::size_t> crossings(d.order() + 1, 0);
  std::size_t running = 0;
  for (std::size_t i = 1; i <= d.order(); ++i) {
    running += diff[i];
    crossings[i] = running;
  }
  return crossings;
}

std::vector<PartitionDiagram> split_at(const PartitionDiagram& d, const std::vector<std::size_t>& cuts) {
  std::vector<PartitionDiagram> parts;
  parts.reserve(cuts.size() + 1);
  std::size_t first = 1;
  for (auto c : cuts) {
    parts.push_back(restrict_columns(d, first, c));
    first = c + 1;
  }
  parts.push_back(restrict_columns(d, first, d.order()));
  return parts;
}

// Raw labels of a ⊗ b (not canonical): b's labels are offset past a's.
std::vector<std::uint32_t> concatenated_labels(const PartitionDiagram& a, const PartitionDiagram& b) {
  const std::size_t ka = a.order();
  const std::size_t kb = b.order();
  const auto offset = static_cast<std::uint32_t>(a.block_count());
  std::vector<std::uint32_t> raw(2 * (ka + kb));
  auto la = a.labels();
  auto lb = b.labels();
  for (std::size_t i = 0; i < ka; ++i) {
    raw[i] = la[i];
    raw[ka + kb + i] = la[ka + i];
  }
  for (std::size_t i = 0; i < kb; ++i) {
    raw[ka + i] = lb[i] + offset;
    raw[2 * ka + kb + i] = lb[kb + i] + offset;
  }
  return raw;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

PartitionDiagram PartitionDiagram::from_labels(std::size_t order, std::span<const std::uint32_t> labels) {
  if (labels.size() != 2 * order) {
    throw std::invalid_argument("label string length " + std::to_string(labels.size()) +
                                " does not match order " + std::to_string(order));
  }
  PartitionDiagram d;
  d.order_ = order;
  auto [canon, count] = canonicalize(labels);
  d.labels_ = std::move(canon);
  d.block_count_ = count;
  return d;
}

PartitionDiagram PartitionDiagram::from_blocks(std::size_t order, const std::vector<Block>& blocks) {
  auto name = [](Node n) {
    return std::to_string(n.index) + (n.row == Row::Bottom ? "'" : "");
  };
  std::vector<std::uint32_t> raw(2 * order, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("empty block");
    for (auto n : blocks[b]) {
      if (n.index == 0 || n.index > order) {
        throw ParseError("node " + name(n) + " is outside 1.." + std::to_string(order));
      }
      auto s = n.row == Row::Top ? n.index - 1 : order + n.index - 1;
      if (raw[s] != kUnset) throw ParseError("duplicate node " + name(n));
      raw[s] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t s = 0; s < raw.size(); ++s) {
    if (raw[s] == kUnset) {
      Node n = s < order ? top(static_cast<std::uint32_t>(s + 1))
                         : bottom(static_cast<std::uint32_t>(s - order + 1));
      throw ParseError("missing node " + name(n));
    }
  }
  return from_labels(order, raw);
}

std::vector<Block> PartitionDiagram::blocks() const {
  std::vector<Block> out(block_count_);
  for (std::size_t s = 0; s < labels_.size(); ++s) out[labels_[s]].push_back(node_at(s));
  return out;
}

PartitionDiagram tensor(const PartitionDiagram& a, const PartitionDiagram& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return PartitionDiagram::from_labels(a.order() + b.order(), concatenated_labels(a, b));
}

PartitionDiagram bullet(const PartitionDiagram& a, const PartitionDiagram& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto raw = concatenated_labels(a, b);
  const std::size_t k = a.order() + b.order();
  const std::uint32_t left = raw[k + a.order() - 1];  // Bottom order(a)
  const std::uint32_t right = raw[k + a.order()];     // Bottom order(a)+1
  for (auto& l : raw) {
    if (l == right) l = left;
  }
  return PartitionDiagram::from_labels(k, raw);
}

PartitionDiagram fold_tensor(std::span<const PartitionDiagram> factors) {
  PartitionDiagram acc;
  for (const auto& f : factors) acc = tensor(acc, f);
  return acc;
}

PartitionDiagram fold_bullet(std::span<const PartitionDiagram> factors) {
  PartitionDiagram acc;
  for (const auto& f : factors) acc = bullet(acc, f);
  return acc;
}

VerticalComposition vertical_compose(const PartitionDiagram& a, const PartitionDiagram& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("vertical composition needs equal orders, got " +
                                std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
  const std::size_t k = a.order();
  // Vertices 0..k-1: top of a; k..2k-1: middle row; 2k..3k-1: bottom of b.
  DisjointSets sets(3 * k);
  auto join_blocks = [&](const PartitionDiagram& d, std::size_t top_base, std::size_t bottom_base) {
    std::vector<std::size_t> first(d.block_count(), kUnset);
    auto labels = d.labels();
    for (std::size_t s = 0; s < labels.size(); ++s) {
      std::size_t v = s < k ? top_base + s : bottom_base + (s - k);
      if (first[labels[s]] == kUnset) {
        first[labels[s]] = v;
      } else {
        sets.unite(first[labels[s]], v);
      }
    }
  };
  join_blocks(a, 0, k);
  join_blocks(b, k, 2 * k);

  std::vector<std::uint32_t> raw(2 * k);
  std::vector<bool> outer(3 * k, false);
  for (std::size_t i = 0; i < k; ++i) {
    raw[i] = static_cast<std::uint32_t>(sets.find(i));
    raw[k + i] = static_cast<std::uint32_t>(sets.find(2 * k + i));
    outer[sets.find(i)] = true;
    outer[sets.find(2 * k + i)] = true;
  }
  std::size_t removed = 0;
  for (std::size_t v = k; v < 2 * k; ++v) {
    if (sets.find(v) == v && !outer[v]) ++removed;
  }
  return {PartitionDiagram::from_labels(k, raw), removed};
}

std::vector<std::size_t> tensor_cuts(const PartitionDiagram& d) {
  std::vector<std::size_t> cuts;
  if (d.order() < 2) return cuts;
  auto crossings = crossing_counts(d);
  for (std::size_t i = 1; i < d.order(); ++i) {
    if (crossings[i] == 0) cuts.push_back(i);
  }
  return cuts;
}

std::vector<std::size_t> bullet_cuts(const PartitionDiagram& d) {
  std::vector<std::size_t> cuts;
  if (d.order() < 2) return cuts;
  auto crossings = crossing_counts(d);
  for (std::size_t i = 1; i < d.order(); ++i) {
    auto bi = static_cast<std::uint32_t>(i);
    if (crossings[i] == 1 && d.block_of(bottom(bi)) == d.block_of(bottom(bi + 1))) cuts.push_back(i);
  }
  return cuts;
}

PartitionDiagram restrict_columns(const PartitionDiagram& d, std::size_t first, std::size_t last) {
  if (first < 1 || last > d.order() || first > last) {
    throw std::out_of_range("column range " + std::to_string(first) + ".." + std::to_string(last) +
                            " invalid for order " + std::to_string(d.order()));
  }
  const std::size_t w = last - first + 1;
  auto labels = d.labels();
  std::vector<std::uint32_t> raw(2 * w);
  for (std::size_t j = 0; j < w; ++j) {
    raw[j] = labels[first - 1 + j];
    raw[w + j] = labels[d.order() + first - 1 + j];
  }
  return PartitionDiagram::from_labels(w, raw);
}

std::vector<PartitionDiagram> tensor_factorize(const PartitionDiagram& d) {
  if (d.empty()) throw std::invalid_argument("the empty diagram has no tensor factorization");
  return split_at(d, tensor_cuts(d));
}

std::vector<PartitionDiagram> bullet_decompose(const PartitionDiagram& d) {
  if (d.empty()) throw std::invalid_argument("the empty diagram has no bullet decomposition");
  return split_at(d, bullet_cuts(d));
}

bool is_tensor_irreducible(const PartitionDiagram& d) { return !d.empty() && tensor_cuts(d).empty(); }

bool is_bullet_irreducible(const PartitionDiagram& d) { return !d.empty() && bullet_cuts(d).empty(); }

std::size_t m_statistic(const PartitionDiagram& d) { return d.empty() ? 0 : bullet_cuts(d).size() + 1; }

std::size_t propagation_number(const PartitionDiagram& d) {
  std::vector<std::uint8_t> rows(d.block_count(), 0);
  auto labels = d.labels();
  for (std::size_t s = 0; s < labels.size(); ++s) rows[labels[s]] |= s < d.order() ? 1 : 2;
  return static_cast<std::size_t>(std::count(rows.begin(), rows.end(), 3));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::All: return "all";
    case Family::Permutation: return "permutation";
    case Family::Planar: return "planar";
    case Family::Matching: return "matching";
    case Family::PerfectMatching: return "perfect-matching";
    case Family::PartialPermutation: return "partial-permutation";
    case Family::PlanarPerfectMatching: return "planar-perfect-matching";
    case Family::PlanarMatching: return "planar-matching";
    case Family::PlanarPartialPermutation: return "planar-partial-permutation";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  if (name == "temperley-lieb") return Family::PlanarPerfectMatching;
  if (name == "motzkin") return Family::PlanarMatching;
  if (name == "planar-rook") return Family::PlanarPartialPermutation;
  if (name == "brauer") return Family::PerfectMatching;
  if (name == "rook-brauer") return Family::Matching;
  if (name == "rook") return Family::PartialPermutation;
  throw ParseError("unknown family '" + std::string(name) + "'");
}

bool is_planar(const PartitionDiagram& d) {
  // Walk the boundary Top 1..k, Bottom k..1. A partition of a cyclic sequence
  // is noncrossing iff every revisited block is the innermost open one.
  const std::size_t k = d.order();
  std::vector<std::size_t> remaining(d.block_count(), 0);
  for (auto l : d.labels()) ++remaining[l];
  std::vector<bool> open(d.block_count(), false);
  std::vector<std::uint32_t> stack;
  for (std::size_t p = 0; p < 2 * k; ++p) {
    std::size_t s = p < k ? p : 2 * k - 1 - (p - k);
    auto b = d.labels()[s];
    if (open[b]) {
      if (stack.back() != b) return false;
    }
    if (--remaining[b] == 0) {
      if (open[b]) {
        stack.pop_back();
        open[b] = false;
      }
    } else if (!open[b]) {
      open[b] = true;
      stack.push_back(b);
    }
  }
  return true;
}

namespace {

struct BlockShape {
  std::size_t tops = 0;
  std::size_t bottoms = 0;
  std::size_t size() const { return tops + bottoms; }
};

std::vector<BlockShape> block_shapes(const PartitionDiagram& d) {
  std::vector<BlockShape> shapes(d.block_count());
  auto labels = d.labels();
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (s < d.order()) {
      ++shapes[labels[s]].tops;
    } else {
      ++shapes[labels[s]].bottoms;
    }
  }
  return shapes;
}

}  // namespace

bool family_member(const PartitionDiagram& d, Family f) {
  auto shapes = block_shapes(d);
  auto all_blocks = [&](auto pred) { return std::all_of(shapes.begin(), shapes.end(), pred); };
  switch (f) {
    case Family::All:
      return true;
    case Family::Permutation:
      return all_blocks([](const BlockShape& b) { return b.tops == 1 && b.bottoms == 1; });
    case Family::Planar:
      return is_planar(d);
    case Family::Matching:
      return all_blocks([](const BlockShape& b) { return b.size() <= 2; });
    case Family::PerfectMatching:
      return all_blocks([](const BlockShape& b) { return b.size() == 2; });
    case Family::PartialPermutation:
      return all_blocks([](const BlockShape& b) {
        return b.size() == 1 || (b.tops == 1 && b.bottoms == 1);
      });
    case Family::PlanarPerfectMatching:
      return family_member(d, Family::PerfectMatching) && is_planar(d);
    case Family::PlanarMatching:
      return family_member(d, Family::Matching) && is_planar(d);
    case Family::PlanarPartialPermutation:
      return family_member(d, Family::PartialPermutation) && is_planar(d);
  }
  return false;
}

PartitionDiagram identity_diagram(std::size_t k) {
  std::vector<std::uint32_t> raw(2 * k);
  for (std::size_t i = 0; i < k; ++i) raw[i] = raw[k + i] = static_cast<std::uint32_t>(i);
  return PartitionDiagram::from_labels(k, raw);
}

PartitionDiagram bottom_block_diagram(std::size_t k) {
  std::vector<std::uint32_t> raw(2 * k, static_cast<std::uint32_t>(k));
  for (std::size_t i = 0; i < k; ++i) raw[i] = static_cast<std::uint32_t>(i);
  return PartitionDiagram::from_labels(k, raw);
}

}  // namespace parsym
