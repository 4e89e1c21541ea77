#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace parsym {

// An integer composition; the empty composition () has weight 0.
struct Composition {
  std::vector<std::uint32_t> parts;

  Composition() = default;
  Composition(std::initializer_list<std::uint32_t> p) : parts(p) {}
  explicit Composition(std::vector<std::uint32_t> p) : parts(std::move(p)) {}

  std::size_t weight() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Concatenation.
Composition concat(const Composition& a, const Composition& b);

// All compositions of n in lexicographic order of their parts; {()} for n = 0.
// Throws CapExceeded above kMaxCompositionWeight.
std::vector<Composition> compositions_of(std::size_t n);

// "(3,1,4)"; the empty composition is "()".
std::string render(const Composition& c);
Composition parse_composition(std::string_view text);

}  // namespace parsym
