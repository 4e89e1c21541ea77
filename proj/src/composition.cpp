#include "parsym/composition.hpp"

#include <cctype>
#include <charconv>

#include "parsym/errors.hpp"
#include "parsym/sequences.hpp"

namespace parsym {

Composition concat(const Composition& a, const Composition& b) {
  Composition out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

std::vector<Composition> compositions_of(std::size_t n) {
  check_cap("composition weight", n, kMaxCompositionWeight);
  std::vector<Composition> out;
  Composition current;
  auto recurse = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t p = 1; p <= remaining; ++p) {
      current.parts.push_back(p);
      self(self, remaining - p);
      current.parts.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

std::string render(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(c.parts[i]);
  }
  out.push_back(')');
  return out;
}

Composition parse_composition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("composition must look like (3,1,4), got '" + std::string(text) + "'");
  }
  Composition c;
  std::string_view body(s.data() + 1, s.size() - 2);
  if (body.empty()) return c;
  while (true) {
    auto comma = body.find(',');
    auto token = body.substr(0, comma);
    std::uint32_t part = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), part);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || part == 0) {
      throw ParseError("malformed composition part '" + std::string(token) + "'");
    }
    c.parts.push_back(part);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return c;
}

}  // namespace parsym
