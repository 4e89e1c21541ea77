// parsym: command-line front end.
//
//   parsym op <name> <inputs...>
//   parsym enumerate|count --order K [--family F] [--irreducible]
//   parsym seq {a|bell|bell-even|boolean|dim} --terms N [--family F] [--input "a1 a2 .."]
//   parsym verify {hopf|gf|closure|counts} [--family F] [--max-degree D]
//   parsym hist m --order K [--family F]
//
// Exit status: 0 success, 1 a verification failed, 2 usage or limit error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parsym/diagram.hpp"
#include "parsym/enumerate.hpp"
#include "parsym/errors.hpp"
#include "parsym/format.hpp"
#include "parsym/free_hopf.hpp"
#include "parsym/kernels.hpp"
#include "parsym/nsym.hpp"
#include "parsym/sequences.hpp"
#include "parsym/subalgebra.hpp"

namespace {

using namespace parsym;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_degree = 0;  // 0: command default

  std::string op;
  std::vector<std::string> inputs;
  bool nsym = false;
  std::string grading = "m";

  std::size_t order = 0;
  std::string family = "all";
  bool irreducible = false;

  std::string seq_kind;
  std::size_t terms = 0;
  std::string input;

  std::string verify_kind;
  std::string hist_kind;
};

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read input file '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<PartitionDiagram> diagrams(const Options& o) {
  std::vector<PartitionDiagram> out;
  for (const auto& arg : o.inputs) out.push_back(read_diagram(read_input(arg)));
  return out;
}

std::vector<Composition> compositions(const Options& o) {
  std::vector<Composition> out;
  for (const auto& arg : o.inputs) out.push_back(parse_composition(read_input(arg)));
  return out;
}

void need_inputs(const Options& o, std::size_t min, std::size_t max) {
  if (o.inputs.size() < min || o.inputs.size() > max) {
    std::string want = min == max ? std::to_string(min) : std::to_string(min) + ".." + std::to_string(max);
    throw UsageError("op " + o.op + " takes " + want + " input(s), got " + std::to_string(o.inputs.size()));
  }
}

std::size_t degree_or(const Options& o, std::size_t fallback) { return o.max_degree ? o.max_degree : fallback; }

void print_diagram_list(const Options& o, const std::vector<PartitionDiagram>& ds) {
  if (o.json) {
    ojson j = ojson::array();
    for (const auto& d : ds) j.push_back(render(d));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& d : ds) std::cout << render(d) << "\n";
  }
}

void print_scalar(const Options& o, const std::string& key, const std::string& value) {
  if (o.json) {
    std::cout << ojson{{key, value}}.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void print_seq(const Options& o, const IntSeq& s) {
  if (o.json) {
    ojson j = ojson::array();
    for (const auto& v : s.terms()) j.push_back(v.get_str());
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& v : s.terms()) std::cout << v.get_str() << "\n";
  }
}

template <class E>
void print_element(const Options& o, const E& e) {
  if (o.json) {
    std::cout << format_json(e).dump() << "\n";
  } else {
    std::cout << format_text(e);
  }
}

ParSymGrading parse_grading(const std::string& g) {
  if (g == "m") return ParSymGrading::BulletLength;
  if (g == "order") return ParSymGrading::Order;
  throw UsageError("--grading must be 'm' or 'order', got '" + g + "'");
}

int run_op(const Options& o) {
  const std::string& op = o.op;
  if (o.nsym) {
    need_inputs(o, 1, 1);
    auto alpha = compositions(o).front();
    auto h = HN(alpha);
    if (op == "render") {
      std::cout << render(alpha) << "\n";
    } else if (op == "coproduct") {
      const auto t = nsym_coproduct(h);
      // NSym tensors print like ParSym ones, with composition keys.
      if (o.json) {
        ojson j = ojson::object();
        for (const auto& [p, c] : t) j["H" + render(p.first) + kTensorSeparator + "H" + render(p.second)] = c.get_str();
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& [p, c] : t)
          std::cout << c.get_str() << " H" << render(p.first) << kTensorSeparator << "H" << render(p.second) << "\n";
      }
    } else if (op == "antipode") {
      print_element(o, nsym_antipode(h));
    } else if (op == "phi") {
      print_element(o, phi(h));
    } else if (op == "zeta") {
      print_scalar(o, "zeta", zeta_nsym(h).get_str());
    } else if (op == "qsym-image") {
      auto q = qsym_image(h, degree_or(o, kDefaultQSymDegreeCap));
      if (o.json) {
        std::cout << format_qsym_json(q).dump() << "\n";
      } else {
        std::cout << format_qsym_text(q);
      }
    } else {
      throw UsageError("op " + op + " does not take --nsym input");
    }
    return kExitOk;
  }

  if (op == "phi") {
    need_inputs(o, 1, 1);
    print_element(o, phi(HN(compositions(o).front())));
    return kExitOk;
  }

  if (op == "parse") {
    need_inputs(o, 1, 1);
    std::cout << to_json(diagrams(o).front()).dump() << "\n";
  } else if (op == "render") {
    need_inputs(o, 1, 1);
    print_scalar(o, "diagram", render(diagrams(o).front()));
  } else if (op == "tensor" || op == "bullet") {
    need_inputs(o, 1, 64);
    auto ds = diagrams(o);
    print_scalar(o, "diagram", render(op == "tensor" ? fold_tensor(ds) : fold_bullet(ds)));
  } else if (op == "vcompose") {
    need_inputs(o, 2, 2);
    auto ds = diagrams(o);
    auto v = vertical_compose(ds[0], ds[1]);
    if (o.json) {
      std::cout << ojson{{"diagram", render(v.diagram)}, {"removed", v.removed}}.dump() << "\n";
    } else {
      std::cout << render(v.diagram) << "\nremoved " << v.removed << "\n";
    }
  } else if (op == "factorize" || op == "bullet-decompose") {
    need_inputs(o, 1, 1);
    auto d = diagrams(o).front();
    if (d.empty()) throw UsageError("the empty diagram has no factors");
    print_diagram_list(o, op == "factorize" ? tensor_factorize(d) : bullet_decompose(d));
  } else if (op == "m") {
    need_inputs(o, 1, 1);
    print_scalar(o, "m", std::to_string(m_statistic(diagrams(o).front())));
  } else if (op == "propagation") {
    need_inputs(o, 1, 1);
    print_scalar(o, "propagation", std::to_string(propagation_number(diagrams(o).front())));
  } else if (op == "coproduct") {
    need_inputs(o, 1, 1);
    print_element(o, coproduct(H(diagrams(o).front())));
  } else if (op == "antipode") {
    need_inputs(o, 1, 1);
    print_element(o, antipode(H(diagrams(o).front())));
  } else if (op == "e-expand") {
    need_inputs(o, 1, 1);
    print_element(o, e_basis_expand(diagrams(o).front()));
  } else if (op == "chi") {
    need_inputs(o, 1, 1);
    print_element(o, chi(H(diagrams(o).front())));
  } else if (op == "zeta") {
    need_inputs(o, 1, 1);
    print_scalar(o, "zeta", character_zeta(H(diagrams(o).front())).get_str());
  } else if (op == "qsym-image") {
    need_inputs(o, 1, 1);
    auto q = qsym_image(H(diagrams(o).front()), parse_grading(o.grading), degree_or(o, kDefaultQSymDegreeCap));
    if (o.json) {
      std::cout << format_qsym_json(q).dump() << "\n";
    } else {
      std::cout << format_qsym_text(q);
    }
  } else {
    throw UsageError("unknown op '" + op + "'");
  }
  return kExitOk;
}

kernels::DiagramPredicate member_predicate(const Options& o) {
  Family f = parse_family(o.family);
  bool irreducible = o.irreducible;
  return [f, irreducible](const PartitionDiagram& d) {
    return family_member(d, f) && (!irreducible || is_tensor_irreducible(d));
  };
}

int run_enumerate(const Options& o) {
  print_diagram_list(o, kernels::omp::filter(o.order, member_predicate(o), o.max_order));
  return kExitOk;
}

int run_count(const Options& o) {
  print_scalar(o, "count", std::to_string(kernels::omp::count_if(o.order, member_predicate(o), o.max_order)));
  return kExitOk;
}

IntSeq dimension_sequence(const Options& o, std::size_t terms) {
  Family f = parse_family(o.family);
  if (has_dimension_formula(f)) return family_dimension_sequence(f, terms);
  IntSeq s;
  for (std::size_t k = 1; k <= terms; ++k) s.push_back(Integer(static_cast<unsigned long>(family_count(f, k, o.max_order))));
  return s;
}

int run_seq(const Options& o) {
  if (o.terms == 0) throw UsageError("--terms must be at least 1");
  const auto& kind = o.seq_kind;
  if (kind == "a") {
    print_seq(o, irreducible_counts(o.terms));
  } else if (kind == "bell") {
    print_seq(o, bell_sequence(o.terms));
  } else if (kind == "bell-even") {
    print_seq(o, bell_even_sequence(o.terms));
  } else if (kind == "dim") {
    print_seq(o, dimension_sequence(o, o.terms));
  } else if (kind == "boolean") {
    IntSeq a;
    if (!o.input.empty()) {
      std::istringstream in(o.input);
      std::string tok;
      while (in >> tok) {
        Integer v;
        if (v.set_str(tok, 10) != 0) throw UsageError("--input term '" + tok + "' is not an integer");
        a.push_back(v);
      }
      if (a.size() < o.terms) throw UsageError("--input has fewer than --terms values");
      a = IntSeq(std::vector<Integer>(a.terms().begin(), a.terms().begin() + static_cast<long>(o.terms)));
    } else {
      a = dimension_sequence(o, o.terms);
    }
    print_seq(o, boolean_transform(a));
  } else {
    throw UsageError("unknown sequence '" + kind + "'");
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  const auto& kind = o.verify_kind;
  bool passed = true;
  if (kind == "hopf") {
    auto r = verify_hopf_axioms(degree_or(o, 2), {}, kDefaultHopfDegreeCap);
    passed = r.all_passed();
    if (o.json) {
      std::cout << format_json(r).dump() << "\n";
    } else {
      std::cout << format_text(r);
    }
  } else if (kind == "gf") {
    std::size_t n = o.terms ? o.terms : degree_or(o, 7);
    auto r = verify_gf_identity(n);
    passed = r.equal;
    if (o.json) {
      ojson lhs = ojson::array(), rhs = ojson::array();
      for (const auto& v : r.lhs) lhs.push_back(v.get_str());
      for (const auto& v : r.rhs) rhs.push_back(v.get_str());
      std::cout << ojson{{"passed", r.equal}, {"terms", n}, {"lhs", lhs}, {"rhs", rhs}}.dump() << "\n";
    } else {
      for (std::size_t i = 1; i <= n; ++i) std::cout << i << " " << r.lhs[i].get_str() << " " << r.rhs[i].get_str() << "\n";
      std::cout << "gf identity: " << (r.equal ? "PASS" : "FAIL") << "\n";
    }
  } else if (kind == "closure") {
    Family f = parse_family(o.family);
    auto r = closure_report(f, degree_or(o, 3));
    passed = r.passed();
    if (o.json) {
      std::cout << format_json(r).dump() << "\n";
    } else {
      std::cout << format_text(r);
    }
  } else if (kind == "counts") {
    Family f = parse_family(o.family);
    std::size_t n = degree_or(o, 4);
    auto generators = family_generator_counts(f, n);
    auto expected = boolean_transform(dimension_sequence(o, n));
    passed = generators == expected;
    if (o.json) {
      ojson rows = ojson::array();
      for (std::size_t k = 1; k <= n; ++k)
        rows.push_back({{"order", k}, {"generators", generators[k].get_str()}, {"boolean_transform", expected[k].get_str()}});
      std::cout << ojson{{"family", family_name(f)}, {"rows", rows}, {"passed", passed}}.dump() << "\n";
    } else {
      std::cout << "order generators boolean-transform\n";
      for (std::size_t k = 1; k <= n; ++k)
        std::cout << k << " " << generators[k].get_str() << " " << expected[k].get_str() << "\n";
      std::cout << "counts: " << (passed ? "PASS" : "FAIL") << "\n";
    }
  } else {
    throw UsageError("unknown verification '" + kind + "'");
  }
  return passed ? kExitOk : kExitFailed;
}

int run_hist(const Options& o) {
  if (o.hist_kind != "m") throw UsageError("unknown histogram '" + o.hist_kind + "'");
  check_cap("m distribution order", o.order, o.max_order);
  auto h = kernels::omp::histogram(o.order, m_statistic, member_predicate(o), o.max_order);
  if (o.json) {
    ojson j = ojson::object();
    for (const auto& [m, c] : h) j[std::to_string(m)] = c;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [m, c] : h) std::cout << m << " " << c << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("PARSYM_MAX_ORDER")) {
    try {
      o.max_order = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: PARSYM_MAX_ORDER must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Exact computations in the Hopf algebra of partition diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--max-order", o.max_order, "Largest order accepted for enumeration");
  app.add_option("--max-degree", o.max_degree, "Degree bound for verification and image commands");

  auto* op = app.add_subcommand("op", "Single-element computations");
  op->add_option("name", o.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"parse", "render", "tensor", "bullet", "vcompose", "factorize", "bullet-decompose", "m",
                             "propagation", "coproduct", "antipode", "e-expand", "chi", "phi", "zeta", "qsym-image"}));
  op->add_option("inputs", o.inputs, "Diagrams (text, JSON or @file); compositions for phi and --nsym");
  op->add_flag("--nsym", o.nsym, "Inputs are NSym compositions such as (2,1)");
  op->add_option("--grading", o.grading, "QSym image grading: m or order")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List the diagrams of one order");
  auto* count = app.add_subcommand("count", "Count the diagrams of one order");
  for (auto* sub : {enumerate, count}) {
    sub->add_option("--order", o.order, "Diagram order")->required();
    sub->add_option("--family", o.family, "Diagram family")->capture_default_str();
    sub->add_flag("--irreducible", o.irreducible, "Only tensor-irreducible diagrams");
  }

  auto* seq = app.add_subcommand("seq", "Integer sequences");
  seq->add_option("kind", o.seq_kind, "a, bell, bell-even, boolean or dim")
      ->required()
      ->check(CLI::IsMember({"a", "bell", "bell-even", "boolean", "dim"}));
  seq->add_option("--terms", o.terms, "Number of terms")->required();
  seq->add_option("--family", o.family, "Family for dim and boolean")->capture_default_str();
  seq->add_option("--input", o.input, "Whitespace-separated input terms for boolean");

  auto* verify = app.add_subcommand("verify", "Verification certificates");
  verify->add_option("kind", o.verify_kind, "hopf, gf, closure or counts")
      ->required()
      ->check(CLI::IsMember({"hopf", "gf", "closure", "counts"}));
  verify->add_option("--family", o.family, "Family for closure and counts")->capture_default_str();
  verify->add_option("--max-degree", o.max_degree, "Degree bound");
  verify->add_option("--terms", o.terms, "Truncation for gf");

  auto* hist = app.add_subcommand("hist", "Histograms over one order");
  hist->add_option("kind", o.hist_kind, "m")->required()->check(CLI::IsMember({"m"}));
  hist->add_option("--order", o.order, "Diagram order")->required();
  hist->add_option("--family", o.family, "Diagram family")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*op) return run_op(o);
    if (*enumerate) return run_enumerate(o);
    if (*count) return run_count(o);
    if (*seq) return run_seq(o);
    if (*verify) return run_verify(o);
    if (*hist) return run_hist(o);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
