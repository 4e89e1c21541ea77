// Acceptance run: one PASS/FAIL line per criterion. Criterion 9 also prints
// one line per sub-claim.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "parsym/enumerate.hpp"
#include "parsym/format.hpp"
#include "parsym/free_hopf.hpp"
#include "parsym/kernels.hpp"
#include "parsym/nsym.hpp"
#include "parsym/sequences.hpp"
#include "parsym/subalgebra.hpp"

using namespace parsym;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Multi-line renderings go on one line.
std::string flat(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (std::size_t i = 0; (i = s.find('\n', i)) != std::string::npos;) s.replace(i, 1, "; ");
  return s;
}

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail = why;
  o.passed = false;
}

std::vector<Composition> compositions_up_to(std::size_t n) {
  std::vector<Composition> out;
  for (std::size_t w = 0; w <= n; ++w)
    for (auto& c : compositions_of(w)) out.push_back(c);
  return out;
}

std::string seq_text(const IntSeq& s) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= s.size(); ++i) out << (i > 1 ? "," : "") << s[i].get_str();
  return "(" + out.str() + ")";
}

Outcome c1() {
  Outcome o;
  auto a = irreducible_counts(7);
  if (a != IntSeq{2, 11, 151, 3267, 96663, 3663123, 171131871}) fail(o, "got " + seq_text(a));
  else o.detail = seq_text(a);
  return o;
}

Outcome c2() {
  Outcome o;
  for (std::size_t k = 1; k <= 4; ++k) {
    auto n = kernels::omp::count_if(k, [](const PartitionDiagram& d) { return is_tensor_irreducible(d); });
    if (Integer(static_cast<unsigned long>(n)) != irreducible_count(k))
      fail(o, "k=" + std::to_string(k) + ": enumeration " + std::to_string(n));
  }
  if (o.passed) o.detail = "k = 1..4";
  return o;
}

Outcome c3() {
  Outcome o;
  auto r = verify_gf_identity(7);
  if (!r.equal) fail(o, "first mismatch at x^" + std::to_string(*r.first_mismatch));
  else o.detail = "exact to x^7";
  return o;
}

Outcome c4() {
  Outcome o;
  const PartitionDiagram empty;
  auto pi = parse_diagram("1,2,3/4/1',2'/3',4'");
  TensorElement expected;
  expected.add({empty, pi}, 1);
  expected.add({parse_diagram("1,2,3/1',2'/3'"), parse_diagram("1/1'")}, 1);
  expected.add({pi, empty}, 1);
  auto got = coproduct(H(pi));
  if (got != expected) fail(o, format_text(got));
  else o.detail = format_text(got);
  return o;
}

Outcome c5() {
  Outcome o;
  struct Case {
    const char *a, *b, *want;
  };
  const Case cases[] = {
      {"1,1'", "1/1'", "1,1',2'/2"},
      {"1,1'", "1,1'", "1,2,1',2'"},
      {"1,2/3,1'/2',3'", "1,2,3,1',3',4'/4,2'", "1,2/3,1'/2',3',4',4,5,6,6',7'/7,5'"},
  };
  for (const auto& c : cases) {
    auto got = bullet(parse_diagram(c.a), parse_diagram(c.b));
    if (got != parse_diagram(c.want)) fail(o, std::string(c.a) + " ● " + c.b + " gave " + render(got));
  }
  if (o.passed) o.detail = "3 products";
  return o;
}

Outcome c6() {
  Outcome o;
  auto r = verify_hopf_axioms(3);
  std::size_t names = 0;
  for (const auto& a : r.axioms) {
    ++names;
    if (!a.passed) fail(o, a.name + " at " + a.counterexample);
  }
  if (basis_up_to(3).size() != 2 + 15 + 203 + 1) fail(o, "basis size");
  if (o.passed) o.detail = std::to_string(names) + " axioms over 221 basis diagrams";
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& pi : enumerate_diagrams(k)) {
      if (!is_tensor_irreducible(pi)) continue;
      auto a = coproduct_splits(pi);
      auto b = coproduct_pairs_oracle(pi);
      if (std::set(a.begin(), a.end()) != std::set(b.begin(), b.end()) || a.size() != b.size())
        fail(o, "mismatch at " + render(pi));
      ++checked;
    }
  if (o.passed) o.detail = std::to_string(checked) + " irreducibles, 0 mismatches";
  return o;
}

Outcome c8() {
  Outcome o;
  std::ostringstream dets;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto m = e_h_matrix(n);
    dets << (n > 1 ? "," : "") << m.determinant.get_str();
    if (abs(m.determinant) != 1) fail(o, "n=" + std::to_string(n) + " det " + m.determinant.get_str());
  }
  if (o.passed) o.detail = "determinants " + dets.str();
  return o;
}

// Criterion 9 prints its parts and fails if any part fails.
Outcome c9() {
  Outcome total;
  auto part = [&](const char* name, Outcome o) {
    std::printf("  9.%s: %s  %s\n", name, o.passed ? "PASS" : "FAIL", flat(o.detail).c_str());
    if (!o.passed) total.detail += std::string(total.detail.empty() ? "failed parts: " : ",") + name;
    total.passed = total.passed && o.passed;
  };
  auto basis = basis_up_to(3);

  {
    Outcome o;
    for (const auto& a : compositions_up_to(5))
      if (chi(phi(HN(a))) != HN(a)) fail(o, "at " + render(a));
    if (o.passed) o.detail = "chi o phi = id, weight <= 5";
    part("a", o);
  }
  {
    Outcome o;
    for (const auto& d : basis) {
      NSymTensor lhs;
      for (const auto& [p, c] : coproduct(H(d))) lhs.add({chi_index(p.first), chi_index(p.second)}, c);
      if (lhs != nsym_coproduct(chi(H(d)))) fail(o, "at " + render(d));
    }
    if (o.passed) o.detail = "(chi x chi) o Delta = Delta o chi, degree <= 3";
    part("b", o);
  }
  {
    Outcome o;
    std::size_t bad = 0;
    std::string first;
    for (const auto& d : basis)
      if (zeta_nsym(chi(H(d))) != character_zeta(H(d))) {
        if (bad++ == 0) first = render(d);
      }
    if (bad) fail(o, std::to_string(bad) + " of " + std::to_string(basis.size()) + " differ, first " + first);
    else o.detail = "zeta_NSym o chi = zeta_ParSym, degree <= 3";
    part("c", o);
  }
  {
    Outcome o;
    for (const auto& a : compositions_up_to(3))
      if (character_zeta(phi(HN(a))) != zeta_nsym(HN(a))) fail(o, "at " + render(a));
    if (o.passed) o.detail = "zeta_ParSym o phi = zeta_NSym, weight <= 3";
    part("d", o);
  }
  {
    Outcome o;
    auto got = qsym_image(H("1,2,3/4/1',2'/3',4'"));
    auto want = QSymImage::basis(Composition{2}) + QSymImage::basis(Composition{1, 1});
    if (got != want) fail(o, "image of pi* is " + flat(format_qsym_text(got)));
    else o.detail = "M(2) + M(1,1)";
    part("e", o);
  }
  {
    Outcome o;
    std::size_t bad = 0;
    std::string first;
    for (const auto& d : basis)
      if (qsym_image(H(d)) != qsym_image(chi(H(d)))) {
        if (bad++ == 0)
          first = render(d) + ": " + flat(format_qsym_text(qsym_image(H(d)))) + " vs " + flat(format_qsym_text(qsym_image(chi(H(d)))));
      }
    if (bad) fail(o, std::to_string(bad) + " of " + std::to_string(basis.size()) + " differ, first " + first);
    else o.detail = "qsym o id = qsym o chi, degree <= 3";
    part("f", o);
  }
  return total;
}

Outcome c10() {
  Outcome o;
  const Family families[] = {
      Family::Permutation,   Family::Planar,         Family::Matching,
      Family::PerfectMatching, Family::PartialPermutation, Family::PlanarPerfectMatching,
      Family::PlanarMatching,  Family::PlanarPartialPermutation,
  };
  for (auto f : families) {
    auto r = closure_report(f, 3);
    if (!r.passed())
      fail(o, std::string(family_name(f)) + ": " + r.counterexample->check + " at " + render(r.counterexample->diagram));
  }
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& d : enumerate_diagrams(k))
      if (family_member(d, Family::PerfectMatching) && is_tensor_irreducible(d) && !is_primitive(d))
        fail(o, "not primitive: " + render(d));
  if (o.passed) o.detail = "8 families to degree 3; PM generators primitive";
  return o;
}

Outcome c11() {
  Outcome o;
  const std::map<Family, IntSeq> expected = {
      {Family::Planar, {2, 14, 132}},          {Family::Matching, {2, 10, 76}},
      {Family::PerfectMatching, {1, 3, 15}},   {Family::PartialPermutation, {2, 7, 34}},
      {Family::Permutation, {1, 2, 6}},
  };
  for (const auto& [f, want] : expected) {
    IntSeq counted;
    for (std::size_t k = 1; k <= 3; ++k) counted.push_back(Integer(static_cast<unsigned long>(family_count(f, k))));
    if (counted != want || family_dimension_sequence(f, 3) != want)
      fail(o, std::string(family_name(f)) + " counted " + seq_text(counted));
  }
  for (auto f : kAllFamilies) {
    if (!has_dimension_formula(f)) continue;
    if (family_generator_counts(f, 4) != boolean_transform(family_dimension_sequence(f, 4)))
      fail(o, std::string(family_name(f)) + " generators");
  }
  if (o.passed) o.detail = "5 formulas for k <= 3; Boolean transforms for k <= 4";
  return o;
}

Outcome c12() {
  Outcome o;
  std::vector<PartitionDiagram> upto2, nonempty2, nonempty4;
  for (std::size_t k = 0; k <= 4; ++k)
    for (const auto& d : enumerate_diagrams(k)) {
      if (k <= 2) upto2.push_back(d);
      if (k >= 1 && k <= 2) nonempty2.push_back(d);
      if (k >= 1) nonempty4.push_back(d);
    }
  for (const auto& a : upto2)
    for (const auto& b : upto2)
      for (const auto& c : upto2)
        if (bullet(bullet(a, b), c) != bullet(a, bullet(b, c))) fail(o, "bullet associativity");
  for (const auto& a : nonempty2)
    for (const auto& b : nonempty2)
      for (const auto& c : nonempty2) {
        if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c))) fail(o, "tensor/tensor identity");
        if (bullet(bullet(a, b), c) != bullet(a, bullet(b, c))) fail(o, "bullet/bullet identity");
        if (tensor(bullet(a, b), c) != bullet(a, tensor(b, c))) fail(o, "bullet/tensor identity");
        if (bullet(tensor(a, b), c) != tensor(a, bullet(b, c))) fail(o, "tensor/bullet identity");
      }
  for (const auto& a : nonempty4)
    for (const auto& b : nonempty4) {
      if (a.order() + b.order() > 4) continue;
      if (is_tensor_irreducible(bullet(a, b)) != (is_tensor_irreducible(a) && is_tensor_irreducible(b)))
        fail(o, "irreducibility equivalence at " + render(a) + " ● " + render(b));
    }
  // Unique tensor factorization: the oracle cut set determines the factors.
  for (const auto& d : nonempty4) {
    auto factors = tensor_factorize(d);
    if (fold_tensor(factors) != d || factors.size() != oracle::tensor_cuts(d).size() + 1) fail(o, "tensor factorization");
    for (const auto& f : factors)
      if (!oracle::is_tensor_irreducible(f)) fail(o, "reducible tensor factor in " + render(d));
  }
  // Unique bullet decomposition: brute-force every pair with a ● b = d.
  for (std::size_t k = 0; k <= 3; ++k)
    for (const auto& d : enumerate_diagrams(k)) {
      std::size_t pairs = 0;
      for (std::size_t left = 0; left <= k; ++left)
        for (const auto& x : enumerate_diagrams(left))
          for (const auto& y : enumerate_diagrams(k - left)) pairs += oracle::bullet(x, y) == d;
      std::size_t expected = d.empty() ? 1 : m_statistic(d) + 1;
      if (pairs != expected) fail(o, "bullet decomposition at " + render(d));
      if (!d.empty() && fold_bullet(bullet_decompose(d)) != d) fail(o, "bullet fold at " + render(d));
    }
  if (o.passed) o.detail = "exhaustive to order 2 (identities), 4 (factorization), 3 (decomposition)";
  return o;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> table = {
      {1, {"irreducible-generator sequence", c1}},
      {2, {"recursion equals enumeration", c2}},
      {3, {"generating-function identity", c3}},
      {4, {"coproduct of pi*", c4}},
      {5, {"worked bullet products", c5}},
      {6, {"Hopf axioms to degree 3", c6}},
      {7, {"coproduct oracle equivalence", c7}},
      {8, {"E/H determinants", c8}},
      {9, {"morphism suite", c9}},
      {10, {"subalgebra closures", c10}},
      {11, {"family dimensions", c11}},
      {12, {"property suites", c12}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (const auto& [n, c] : criteria()) selected.push_back(n);

  int failures = 0;
  for (int n : selected) {
    const auto& [name, run] = criteria().at(n);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s: %s (%.2fs)\n", n, o.passed ? "PASS" : "FAIL", name, flat(o.detail).c_str(), secs);
    std::fflush(stdout);
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
