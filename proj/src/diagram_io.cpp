#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "parsym/diagram.hpp"
#include "parsym/errors.hpp"

namespace parsym {

namespace {

std::string node_text(Node n) { return std::to_string(n.index) + (n.row == Row::Bottom ? "'" : ""); }

Node parse_node(std::string_view token) {
  if (token.empty()) throw ParseError("malformed token: empty node");
  bool primed = token.back() == '\'';
  auto digits = primed ? token.substr(0, token.size() - 1) : token;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  std::uint32_t index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || index == 0) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  return {primed ? Row::Bottom : Row::Top, index};
}

PartitionDiagram build(const std::vector<Block>& blocks) {
  std::uint32_t order = 0;
  for (const auto& b : blocks)
    for (auto n : b) order = std::max(order, n.index);
  // Report duplicates before missing nodes so the message names the real fault.
  std::vector<Node> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw ParseError("duplicate node " + node_text(*dup));
  return PartitionDiagram::from_blocks(order, blocks);
}

}  // namespace

PartitionDiagram parse_diagram(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "()") return {};
  if (s.empty()) throw ParseError("malformed token: empty diagram text (use \"()\" for the empty diagram)");

  std::vector<Block> blocks;
  std::string_view rest = s;
  while (true) {
    auto slash = rest.find('/');
    auto block_text = rest.substr(0, slash);
    Block block;
    while (true) {
      auto comma = block_text.find(',');
      block.push_back(parse_node(block_text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      block_text.remove_prefix(comma + 1);
    }
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos) break;
    rest.remove_prefix(slash + 1);
  }
  return build(blocks);
}

std::string render(const PartitionDiagram& d) {
  if (d.empty()) return "()";
  std::string out;
  bool first_block = true;
  for (const auto& block : d.blocks()) {
    if (!first_block) out.push_back('/');
    first_block = false;
    bool first_node = true;
    for (auto n : block) {
      if (!first_node) out.push_back(',');
      first_node = false;
      out += node_text(n);
    }
  }
  return out;
}

nlohmann::json to_json(const PartitionDiagram& d) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : d.blocks()) {
    nlohmann::json b = nlohmann::json::array();
    for (auto n : block) b.push_back(n.row == Row::Top ? static_cast<long>(n.index) : -static_cast<long>(n.index));
    blocks.push_back(std::move(b));
  }
  return {{"order", d.order()}, {"blocks", std::move(blocks)}};
}

PartitionDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("blocks") || !j["order"].is_number_integer() ||
      !j["blocks"].is_array()) {
    throw ParseError("diagram JSON must be an object with integer \"order\" and array \"blocks\"");
  }
  auto order = j["order"].get<long>();
  if (order < 0) throw ParseError("diagram JSON has negative order");
  std::vector<Block> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array()) throw ParseError("diagram JSON block must be an array");
    Block block;
    for (const auto& n : b) {
      if (!n.is_number_integer() || n.get<long>() == 0) throw ParseError("malformed token " + n.dump());
      auto v = n.get<long>();
      block.push_back(v > 0 ? top(static_cast<std::uint32_t>(v)) : bottom(static_cast<std::uint32_t>(-v)));
    }
    blocks.push_back(std::move(block));
  }
  std::vector<Node> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw ParseError("duplicate node " + node_text(*dup));
  return PartitionDiagram::from_blocks(static_cast<std::size_t>(order), blocks);
}

PartitionDiagram read_diagram(std::string_view text_or_json) {
  auto pos = text_or_json.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text_or_json[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text_or_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid diagram JSON: ") + e.what());
    }
    return diagram_from_json(j);
  }
  return parse_diagram(text_or_json);
}

}  // namespace parsym
