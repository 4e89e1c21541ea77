#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "parsym/diagram.hpp"
#include "parsym/enumerate.hpp"
#include "parsym/errors.hpp"

using namespace parsym;

namespace {

const char* kPiStar = "1,2,3/4/1',2'/3',4'";

PartitionDiagram D(const char* text) { return parse_diagram(text); }

std::vector<PartitionDiagram> up_to(std::size_t k) {
  std::vector<PartitionDiagram> out;
  for (std::size_t n = 0; n <= k; ++n) {
    auto level = enumerate_diagrams(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<PartitionDiagram> nonempty_up_to(std::size_t k) {
  auto all = up_to(k);
  all.erase(all.begin());
  return all;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("parse and render") {
  auto d = D("5,5'/4'/1,2,3,4,3'/2'/1'");
  CHECK(d.order() == 5);
  CHECK(d.block_count() == 5);
  CHECK(render(d) == "1,2,3,4,3'/5,5'/1'/2'/4'");
  CHECK(D("()").empty());
  CHECK(render(PartitionDiagram{}) == "()");
  CHECK(D("1'/1") == D("1/1'"));
  CHECK(render(D("2,2' / 1,1'")) == "1,1'/2,2'");
}

TEST_CASE("parse errors name the node") {
  CHECK_THROWS_WITH_AS(D("1,1'/1"), doctest::Contains("duplicate node 1"), ParseError);
  CHECK_THROWS_WITH_AS(D("1,2/1'"), doctest::Contains("missing node 2'"), ParseError);
  CHECK_THROWS_WITH_AS(D("1,x"), doctest::Contains("malformed token 'x'"), ParseError);
  CHECK_THROWS_AS(D(""), ParseError);
  CHECK_THROWS_AS(D("1,,1'"), ParseError);
}

TEST_CASE("JSON form") {
  auto d = D("1,2'/2/1'");
  auto j = to_json(d);
  CHECK(j["order"] == 2);
  CHECK(j["blocks"] == nlohmann::json::parse("[[1,-2],[2],[-1]]"));
  CHECK(diagram_from_json(j) == d);
  CHECK(read_diagram(j.dump()) == d);
  CHECK(read_diagram(R"({"order":0,"blocks":[]})").empty());
  CHECK_THROWS_AS(read_diagram(R"({"order":1,"blocks":[[1]]})"), ParseError);
}

TEST_CASE("round trip on every diagram of order <= 3") {
  for (const auto& d : up_to(3)) {
    CHECK(parse_diagram(render(d)) == d);
    CHECK(diagram_from_json(to_json(d)) == d);
  }
}

TEST_CASE("enumeration matches the set-partition oracle") {
  for (std::size_t k = 0; k <= 4; ++k) {
    auto ours = enumerate_diagrams(k);
    CHECK(ours.size() == oracle::bell(2 * k));
    CHECK(std::is_sorted(ours.begin(), ours.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end());
    }));
    std::set<PartitionDiagram> mine(ours.begin(), ours.end());
    auto theirs = oracle::all_diagrams(k);
    std::set<PartitionDiagram> ref(theirs.begin(), theirs.end());
    CHECK(mine.size() == ours.size());
    CHECK(mine == ref);
  }
  CHECK(enumerate_diagrams(1).size() == 2);
  CHECK_THROWS_AS(enumerate_diagrams(7), CapExceeded);
}

TEST_CASE("prefix enumeration partitions the stream") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto full = enumerate_diagrams(k);
    std::vector<PartitionDiagram> pieced;
    for (const auto& prefix : rgs_prefixes(std::min<std::size_t>(2 * k, 3))) {
      DiagramEnumerator e(k, prefix);
      while (e.next()) pieced.push_back(e.current());
    }
    CHECK(pieced == full);
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(D("1,1'"), D("1,1'")) == D("1,1'/2,2'"));
  CHECK(tensor(D(kPiStar), PartitionDiagram{}) == D(kPiStar));
  CHECK(tensor(PartitionDiagram{}, D(kPiStar)) == D(kPiStar));
  CHECK(tensor(D("1,2,1',2'"), D("1/1'")) == D("1,2,1',2'/3/3'"));
  for (const auto& a : up_to(2))
    for (const auto& b : up_to(2)) {
      CHECK(tensor(a, b) == oracle::tensor(a, b));
      CHECK(tensor(a, b).order() == a.order() + b.order());
    }
}

TEST_CASE("bullet") {
  CHECK(bullet(D("1,1'"), D("1/1'")) == D("1,1',2'/2"));
  CHECK(bullet(D("1,1'"), D("1,1'")) == D("1,2,1',2'"));
  CHECK(bullet(D("1,2/3,1'/2',3'"), D("1,2,3,1',3',4'/4,2'")) == D("1,2/3,1'/2',3',4',4,5,6,6',7'/7,5'"));
  CHECK(bullet(PartitionDiagram{}, D(kPiStar)) == D(kPiStar));
  CHECK(bullet(D(kPiStar), PartitionDiagram{}) == D(kPiStar));
  for (const auto& a : up_to(2))
    for (const auto& b : up_to(2)) CHECK(bullet(a, b) == oracle::bullet(a, b));
}

TEST_CASE("vertical composition") {
  auto v = vertical_compose(D("1,1'"), D("1,1'"));
  CHECK(v.diagram == D("1,1'"));
  CHECK(v.removed == 0);
  v = vertical_compose(D("1/1'"), D("1/1'"));
  CHECK(v.diagram == D("1/1'"));
  CHECK(v.removed == 1);
  v = vertical_compose(D("1,1'/2,2'"), D("1,2'/2,1'"));
  CHECK(v.diagram == D("1,2'/2,1'"));
  CHECK(v.removed == 0);
  CHECK_THROWS_AS(vertical_compose(D("1,1'"), D("1,1'/2,2'")), std::invalid_argument);
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& a : enumerate_diagrams(k))
      for (const auto& b : enumerate_diagrams(k)) {
        auto ours = vertical_compose(a, b);
        auto ref = oracle::vertical_compose(a, b);
        CHECK(ours.diagram == ref.first);
        CHECK(ours.removed == ref.second);
      }
}

TEST_CASE("cuts") {
  CHECK(tensor_cuts(D("1,1'/2,2'")) == std::vector<std::size_t>{1});
  CHECK(tensor_cuts(D(kPiStar)).empty());
  CHECK(tensor_cuts(D("1,2,1',2'/3/3'")) == std::vector<std::size_t>{2});
  CHECK(bullet_cuts(D(kPiStar)) == std::vector<std::size_t>{3});
  CHECK(bullet_cuts(D("1/2/3/1',2',3'")) == std::vector<std::size_t>{1, 2});
  CHECK(bullet_cuts(D("1,1'/2,2'")).empty());
  for (const auto& d : up_to(4)) CHECK(tensor_cuts(d) == oracle::tensor_cuts(d));
}

TEST_CASE("factorizations") {
  CHECK(tensor_factorize(D("1,1'/2,2'")) == std::vector{D("1,1'"), D("1,1'")});
  CHECK(tensor_factorize(D(kPiStar)) == std::vector{D(kPiStar)});
  CHECK(tensor_factorize(D("1,2,1',2'/3/3'")) == std::vector{D("1,2,1',2'"), D("1/1'")});
  CHECK(bullet_decompose(D(kPiStar)) == std::vector{D("1,2,3/1',2'/3'"), D("1/1'")});
  CHECK(bullet_decompose(D("1,1'")) == std::vector{D("1,1'")});
  CHECK(bullet_decompose(D("1/2/3/1',2',3'")) == std::vector{D("1/1'"), D("1/1'"), D("1/1'")});
  CHECK_THROWS(tensor_factorize(PartitionDiagram{}));
  CHECK_THROWS(bullet_decompose(PartitionDiagram{}));
}

TEST_CASE("statistics") {
  CHECK(m_statistic(PartitionDiagram{}) == 0);
  CHECK(m_statistic(D(kPiStar)) == 2);
  CHECK(m_statistic(D("1,1'")) == 1);
  CHECK(propagation_number(D("1,1'/2,2'")) == 2);
  CHECK(propagation_number(D(kPiStar)) == 0);
  CHECK(propagation_number(D("1,1',2'/2")) == 1);
}

TEST_CASE("irreducibility") {
  CHECK(is_tensor_irreducible(D("1,1'")));
  CHECK_FALSE(is_tensor_irreducible(D("1,1'/2,2'")));
  CHECK_FALSE(is_tensor_irreducible(PartitionDiagram{}));
  std::size_t count = 0;
  for (const auto& d : enumerate_diagrams(2)) count += is_tensor_irreducible(d);
  CHECK(count == 11);
}

TEST_CASE("families") {
  CHECK_FALSE(family_member(D("1,2'/2,1'"), Family::Planar));
  CHECK(family_member(D("1,1'/2,2'"), Family::PerfectMatching));
  for (auto f : kAllFamilies) {
    CHECK(family_member(PartitionDiagram{}, f));
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK(parse_family("temperley-lieb") == Family::PlanarPerfectMatching);
  CHECK(parse_family("motzkin") == Family::PlanarMatching);
  CHECK(parse_family("planar-rook") == Family::PlanarPartialPermutation);
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
  std::size_t matchings = 0;
  for (const auto& d : enumerate_diagrams(2)) matchings += family_member(d, Family::Matching);
  CHECK(matchings == 10);
  for (const auto& d : up_to(3))
    for (auto f : kAllFamilies) CHECK(family_member(d, f) == oracle::member(d, f));
}

TEST_CASE("special diagrams") {
  CHECK(identity_diagram(2) == D("1,1'/2,2'"));
  CHECK(bottom_block_diagram(3) == D("1/2/3/1',2',3'"));
  CHECK(bottom_block_diagram(1) == D("1/1'"));
}

// --- properties ---

TEST_CASE("tensor associativity") {
  auto small = up_to(2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_diagram(rng, rng() % 4), b = oracle::random_diagram(rng, rng() % 4),
         c = oracle::random_diagram(rng, rng() % 4);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
}

TEST_CASE("bullet associativity") {
  auto small = up_to(2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) CHECK(bullet(bullet(a, b), c) == bullet(a, bullet(b, c)));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_diagram(rng, rng() % 4), b = oracle::random_diagram(rng, rng() % 4),
         c = oracle::random_diagram(rng, rng() % 4);
    CHECK(bullet(bullet(a, b), c) == bullet(a, bullet(b, c)));
  }
}

TEST_CASE("matching-associative identities on nonempty diagrams") {
  auto small = nonempty_up_to(2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(bullet(bullet(a, b), c) == bullet(a, bullet(b, c)));
        CHECK(tensor(bullet(a, b), c) == bullet(a, tensor(b, c)));
        CHECK(bullet(tensor(a, b), c) == tensor(a, bullet(b, c)));
      }
  // With an empty middle argument the mixed identities break.
  auto x = D("1,1'");
  CHECK(tensor(bullet(x, PartitionDiagram{}), x) != bullet(x, tensor(PartitionDiagram{}, x)));
}

TEST_CASE("bullet preserves tensor-irreducibility exactly") {
  auto small = nonempty_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.order() + b.order() > 4) continue;
      CHECK(is_tensor_irreducible(bullet(a, b)) == (is_tensor_irreducible(a) && is_tensor_irreducible(b)));
    }
}

TEST_CASE("unique tensor factorization") {
  // Fold every ordered list of irreducibles with total order <= 4 and count
  // how often each diagram is reached.
  std::vector<std::vector<PartitionDiagram>> irreducibles(5);
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& d : enumerate_diagrams(k))
      if (oracle::is_tensor_irreducible(d)) irreducibles[k].push_back(d);
  std::map<PartitionDiagram, std::vector<std::vector<PartitionDiagram>>> reached;
  std::vector<PartitionDiagram> word;
  auto extend = [&](auto&& self, std::size_t remaining, const PartitionDiagram& acc) -> void {
    if (!word.empty()) reached[acc].push_back(word);
    for (std::size_t k = 1; k <= remaining; ++k)
      for (const auto& g : irreducibles[k]) {
        word.push_back(g);
        self(self, remaining - k, oracle::tensor(acc, g));
        word.pop_back();
      }
  };
  extend(extend, 4, PartitionDiagram{});
  for (const auto& d : nonempty_up_to(4)) {
    auto factors = tensor_factorize(d);
    CHECK(fold_tensor(factors) == d);
    for (const auto& f : factors) CHECK(is_tensor_irreducible(f));
    REQUIRE(reached.count(d) == 1);
    CHECK(reached[d].size() == 1);
    CHECK(reached[d].front() == factors);
  }
}

TEST_CASE("unique bullet decomposition") {
  for (const auto& d : up_to(3)) {
    std::set<std::pair<PartitionDiagram, PartitionDiagram>> brute;
    for (std::size_t left = 0; left <= d.order(); ++left)
      for (const auto& x : enumerate_diagrams(left))
        for (const auto& y : enumerate_diagrams(d.order() - left))
          if (oracle::bullet(x, y) == d) brute.emplace(x, y);
    std::set<std::pair<PartitionDiagram, PartitionDiagram>> expected;
    expected.emplace(PartitionDiagram{}, d);
    expected.emplace(d, PartitionDiagram{});
    if (!d.empty()) {
      auto thetas = bullet_decompose(d);
      CHECK(fold_bullet(thetas) == d);
      CHECK(thetas.size() == m_statistic(d));
      for (const auto& t : thetas) CHECK(is_bullet_irreducible(t));
      for (std::size_t j = 1; j < thetas.size(); ++j)
        expected.emplace(fold_bullet(std::span(thetas).first(j)), fold_bullet(std::span(thetas).subspan(j)));
    }
    CHECK(brute == expected);
  }
}

TEST_CASE("odot has no unique decomposition") {
  // Both products land on the same diagram, so odot-factors are not determined.
  auto a = oracle::odot(D("1,1'"), D("1/1'"));
  auto b = oracle::odot(D("1,1'"), D("1,1'"));
  CHECK(a == D("1,2,1',2'"));
  CHECK(a == b);
  // The bullet products of the same pairs stay distinct.
  CHECK(bullet(D("1,1'"), D("1/1'")) != bullet(D("1,1'"), D("1,1'")));
}

TEST_CASE("planar counts") {
  const std::size_t expected[] = {1, 2, 14, 132};
  for (std::size_t k = 0; k <= 3; ++k) {
    std::size_t n = 0;
    for (const auto& d : enumerate_diagrams(k)) n += is_planar(d);
    CHECK(n == expected[k]);
  }
}

}  // TEST_SUITE
