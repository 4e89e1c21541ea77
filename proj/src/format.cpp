#include "parsym/format.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace parsym {

namespace {

struct Row {
  std::size_t degree;
  std::string key;
  Integer coefficient;
};

void sort_rows(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.degree, a.key) < std::tie(b.degree, b.key); });
}

std::string rows_text(std::vector<Row> rows) {
  if (rows.empty()) return "0\n";
  sort_rows(rows);
  std::string out;
  for (const auto& r : rows) out += r.coefficient.get_str() + " " + r.key + "\n";
  return out;
}

nlohmann::ordered_json rows_json(std::vector<Row> rows) {
  sort_rows(rows);
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& r : rows) j[r.key] = r.coefficient.get_str();
  return j;
}

std::vector<Row> rows_of(const ParSymElement& a) {
  std::vector<Row> rows;
  for (const auto& [d, c] : a) rows.push_back({d.order(), render(d), c});
  return rows;
}

std::vector<Row> rows_of(const TensorElement& t) {
  std::vector<Row> rows;
  for (const auto& [p, c] : t) rows.push_back({p.first.order() + p.second.order(), render(p.first) + kTensorSeparator + render(p.second), c});
  return rows;
}

std::vector<Row> rows_of(const NSymElement& a, const std::string& prefix) {
  std::vector<Row> rows;
  for (const auto& [alpha, c] : a) rows.push_back({alpha.weight(), prefix + render(alpha), c});
  return rows;
}

}  // namespace

std::string format_text(const ParSymElement& a) { return rows_text(rows_of(a)); }
std::string format_text(const TensorElement& t) { return rows_text(rows_of(t)); }
std::string format_text(const NSymElement& a) { return rows_text(rows_of(a, "H")); }
std::string format_qsym_text(const QSymImage& q) { return rows_text(rows_of(q, "M")); }

nlohmann::ordered_json format_json(const ParSymElement& a) { return rows_json(rows_of(a)); }
nlohmann::ordered_json format_json(const TensorElement& t) { return rows_json(rows_of(t)); }
nlohmann::ordered_json format_json(const NSymElement& a) { return rows_json(rows_of(a, "H")); }
nlohmann::ordered_json format_qsym_json(const QSymImage& q) { return rows_json(rows_of(q, "M")); }

std::string format_text(const hopf::HopfReport& r) {
  std::string out;
  for (const auto& a : r.axioms) {
    out += a.name + ": " + (a.passed ? "PASS" : "FAIL") + " (" + std::to_string(a.checked) + " checked)";
    if (!a.passed) out += " counterexample: " + a.counterexample;
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json format_json(const hopf::HopfReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& a : r.axioms) {
    nlohmann::ordered_json item{{"axiom", a.name}, {"passed", a.passed}, {"checked", a.checked}};
    if (!a.passed) item["counterexample"] = a.counterexample;
    j.push_back(item);
  }
  return {{"axioms", j}, {"passed", r.all_passed()}};
}

std::string format_text(const ClosureReport& r) {
  auto flag = [](bool b) { return b ? "yes" : "NO"; };
  std::string out = "family " + std::string(family_name(r.family)) + ", degrees 1.." + std::to_string(r.max_degree) + "\n";
  out += "degree members tensor delta antipode primitive\n";
  for (const auto& c : r.checks) {
    out += std::to_string(c.degree) + " " + std::to_string(c.members) + " " + flag(c.tensor_closed) + " " +
           flag(c.delta_closed) + " " + flag(c.antipode_closed) + " " + std::to_string(c.primitive_count) + "\n";
  }
  if (r.counterexample) {
    out += "counterexample: " + render(r.counterexample->diagram) + " fails " + r.counterexample->check + " (" +
           r.counterexample->detail + ")\n";
  }
  out += std::string("closure: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::ordered_json format_json(const ClosureReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"degree", c.degree},
                      {"members", c.members},
                      {"tensor_closed", c.tensor_closed},
                      {"delta_closed", c.delta_closed},
                      {"antipode_closed", c.antipode_closed},
                      {"primitive_count", c.primitive_count}});
  }
  nlohmann::ordered_json j{{"family", family_name(r.family)}, {"max_degree", r.max_degree}, {"checks", checks},
                   {"passed", r.passed()}};
  if (r.counterexample) {
    j["counterexample"] = {{"diagram", render(r.counterexample->diagram)},
                           {"check", r.counterexample->check},
                           {"detail", r.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace parsym
