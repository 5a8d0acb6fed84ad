#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "multipath/field.hpp"
#include "multipath/morse.hpp"
#include "oracles.hpp"

using namespace multipath;

namespace {

const Digraph kY1 = parse_edge_list("vertices 4\n0 1\n1 2\n1 3\n");
const Digraph kY2 = parse_edge_list("vertices 4\n0 1\n2 1\n3 1\n");

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

BettiTable direct(const Digraph& g) {
  Rationals q;
  auto [k, m] = ground_field();
  return betti(q, build_multipath_complex(q, g, Coefficients<Rationals>(q, k, m)));
}

}  // namespace

TEST_CASE("first-edge matching on coherent lines") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = enumerate_path_poset(line_graph(n));
    Matching m;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p.element(i).contains(0)) m.emplace_back(i, *p.index_of(p.element(i).with(0)));
    }
    CHECK(verify_matching(p, m).ok);
    CHECK(critical_cells(p, m) == std::vector<std::size_t>(n + 1, 0));
    auto s = shortcut_homology(p, m);
    REQUIRE(s);
    CHECK(s->empty());
  }
}

TEST_CASE("greedy finds the first-edge matching on coherent lines") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = enumerate_path_poset(line_graph(n));
    auto m = greedy_matching(p);
    CHECK(verify_matching(p, m).ok);
    CHECK(critical_cells(p, m) == std::vector<std::size_t>(n + 1, 0));
    for (const auto& [lo, hi] : m) CHECK((p.element(hi).bits() ^ p.element(lo).bits()) == 1);
  }
}

TEST_CASE("matchings on the two Y graphs") {
  auto p1 = enumerate_path_poset(kY1);
  auto m1 = parse_matching(p1, "0 2\n1 3\n4 5\n");
  CHECK(verify_matching(p1, m1).ok);
  CHECK(critical_cells(p1, m1) == std::vector<std::size_t>{0, 0, 0});
  CHECK(shortcut_homology(p1, m1) == BettiTable{});
  CHECK(direct(kY1).empty());

  auto p2 = enumerate_path_poset(kY2);
  auto m2 = parse_matching(p2, "0 1\n");
  CHECK(verify_matching(p2, m2).ok);
  CHECK(critical_cells(p2, m2) == std::vector<std::size_t>{0, 2});
  CHECK(shortcut_homology(p2, m2) == BettiTable{{1, 2}});
  CHECK(critical_cells(p2, greedy_matching(p2)) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("H graph matching") {
  const auto g = read_edge_list_file(FIXTURES_DIR "/h_graph.edges");
  auto p = enumerate_path_poset(g);
  auto m = parse_matching(p, slurp(FIXTURES_DIR "/h_graph.matching"));
  CHECK(m.size() == 5);
  CHECK(verify_matching(p, m).ok);
  CHECK(critical_cells(p, m) == std::vector<std::size_t>{0, 0, 2});
  auto s = shortcut_homology(p, m);
  REQUIRE(s);
  CHECK(*s == BettiTable{{2, 2}});
  CHECK(*s == direct(g));
}

TEST_CASE("single vertex and inconclusive cases") {
  auto p0 = enumerate_path_poset(Digraph(1, {}));
  auto m0 = greedy_matching(p0);
  CHECK(m0.empty());
  CHECK(critical_cells(p0, m0) == std::vector<std::size_t>{1});
  CHECK(shortcut_homology(p0, m0) == BettiTable{{0, 1}});

  auto p = enumerate_path_poset(polygon_graph(2));
  for (const auto& c : p.coverings()) {
    Matching m{{c.lower, c.upper}};
    REQUIRE(verify_matching(p, m).ok);
    CHECK_FALSE(shortcut_homology(p, m).has_value());
  }
}

TEST_CASE("invalid matchings") {
  auto p = enumerate_path_poset(line_graph(3));
  auto at = [&](std::uint64_t bits) { return *p.index_of(EdgeSet(bits)); };
  Matching shared{{at(0), at(1)}, {at(0), at(2)}};
  auto r = verify_matching(p, shared);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("twice") != std::string::npos);

  Matching cyclic{{at(1), at(3)}, {at(2), at(6)}, {at(4), at(5)}};
  auto c = verify_matching(p, cyclic);
  CHECK_FALSE(c.ok);
  CHECK(c.reason.find("cycle") != std::string::npos);

  CHECK_THROWS_AS(verify_matching(p, Matching{{at(0), at(3)}}), std::invalid_argument);
}

TEST_CASE("cycle detection agrees with transitive closure") {
  std::mt19937 rng(5);
  std::vector<Digraph> graphs{line_graph(4), polygon_graph(3), kY1, kY2,
                              read_edge_list_file(FIXTURES_DIR "/h_graph.edges")};
  for (const auto& g : enumerate_digraphs(3)) graphs.push_back(g);
  for (const auto& g : graphs) {
    auto p = enumerate_path_poset(g);
    if (p.size() > 32) continue;
    for (int trial = 0; trial < 40; ++trial) {
      Matching m;
      std::vector<std::pair<std::size_t, std::size_t>> arcs;
      for (const auto& c : p.coverings()) {
        if (rng() % 3 == 0) {
          m.emplace_back(c.lower, c.upper);
          arcs.emplace_back(c.upper, c.lower);
        } else {
          arcs.emplace_back(c.lower, c.upper);
        }
      }
      CHECK(reversed_hasse_has_cycle(p, m) == oracle::has_cycle_by_closure(p.size(), arcs));
    }
  }
}

TEST_CASE("conclusive greedy matchings agree with direct cohomology") {
  std::size_t conclusive = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_digraphs(n)) {
      auto p = enumerate_path_poset(g);
      auto m = greedy_matching(p);
      REQUIRE(verify_matching(p, m).ok);
      if (auto s = shortcut_homology(p, m)) {
        CHECK(*s == direct(g));
        ++conclusive;
      }
    }
  }
  CHECK(conclusive > 0);
}

TEST_CASE("matching files") {
  auto p = enumerate_path_poset(kY1);
  auto m = parse_matching(p, "# Y1\n0x0 2\n\n1 3  # second\n4 5\n");
  CHECK(m.size() == 3);
  CHECK(serialize_matching(p, m) == "0 2\n1 3\n4 5\n");
  CHECK(parse_matching(p, serialize_matching(p, m)) == m);
  auto line_of = [&](std::string_view text) -> std::size_t {
    try {
      parse_matching(p, text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 2\nzz 3\n") == 2);
  CHECK(line_of("0 2\n1 3\n6 7\n") == 3);  // not an element
  CHECK(line_of("0 5\n") == 1);           // not a covering
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("0 2 4\n") == 1);
}
