#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "multipath/complex.hpp"
#include "multipath/field.hpp"
#include "multipath/homology.hpp"

using namespace multipath;

namespace {

template <class F>
Coefficients<F> coeffs(const F& f, const FiniteAlgebra& a) {
  return {f, a, Bimodule::regular(a)};
}

std::vector<Digraph> small_digraphs(std::size_t max_n = 4) {
  std::vector<Digraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto gs = enumerate_digraphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

const Digraph kNonCoherent = parse_edge_list("vertices 3\n0 1\n2 1\n");
const Digraph kH = parse_edge_list("vertices 6\n0 1\n1 4\n2 1\n3 4\n5 4\n");

}  // namespace

TEST_CASE("single vertex") {
  Rationals q;
  auto c = build_multipath_complex(q, Digraph(1, {}), coeffs(q, ground_field().first));
  CHECK(c.offset == 0);
  CHECK(c.dims == std::vector<std::size_t>{1});
  CHECK(c.differentials.empty());
  CHECK(betti(q, c) == BettiTable{{0, 1}});
}

TEST_CASE("non-coherent line over the ground field") {
  Rationals q;
  auto c = build_multipath_complex(q, kNonCoherent, coeffs(q, ground_field().first));
  CHECK(c.dims == std::vector<std::size_t>{1, 2});
  REQUIRE(c.differentials.size() == 1);
  const auto& d0 = c.differentials[0];
  REQUIRE(d0.nonzeros() == 2);
  for (const auto& e : d0.entries()) CHECK(abs(e.value) == 1);
  CHECK(euler_characteristic(c) == -1);
}

TEST_CASE("non-coherent line over the dual numbers") {
  Rationals q;
  auto c = build_multipath_complex(q, kNonCoherent, coeffs(q, truncated_poly(2)));
  CHECK(c.dims == std::vector<std::size_t>{8, 8});
  CHECK(rank(q, c.differentials[0]) == 6);
}

TEST_CASE("summand layout") {
  Rationals q;
  auto c = build_multipath_complex(q, line_graph(2), coeffs(q, truncated_poly(2)));
  CHECK(c.dims == std::vector<std::size_t>{8, 8, 2});
  REQUIRE(c.summands[1].size() == 2);
  CHECK(c.summands[1][0].edges == EdgeSet(0b01));
  CHECK(c.summands[1][0].offset == 0);
  CHECK(c.summands[1][1].offset == 4);
  CHECK(c.summands[2][0].dim == 2);
}

TEST_CASE("d squared vanishes") {
  Rationals q;
  CHECK(verify_d_squared(q, build_multipath_complex(q, kH, coeffs(q, ground_field().first))));
  CHECK(verify_d_squared(q, build_multipath_complex(q, polygon_graph(4), coeffs(q, truncated_poly(2)))));
  PrimeField f2(2);
  CHECK(verify_d_squared(f2, build_multipath_complex(f2, polygon_graph(3), coeffs(f2, truncated_poly(3)))));
}

TEST_CASE("a corrupted sign breaks d squared") {
  Rationals q;
  auto p = enumerate_path_poset(line_graph(2));
  auto eps = sigma_e_assignment(p);
  eps[0] ^= 1;
  auto c = build_poset_complex(q, p, coeffs(q, ground_field().first), eps);
  CHECK_FALSE(verify_d_squared(q, c));
  CHECK(d_squared_failures(q, c) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(betti(q, c), InvariantError);
  CHECK_THROWS_AS(build_poset_complex(q, p, coeffs(q, ground_field().first), SignAssignment(2)),
                  std::invalid_argument);
}

TEST_CASE("Euler characteristic") {
  Rationals q;
  auto k = coeffs(q, ground_field().first);
  auto p2 = build_multipath_complex(q, polygon_graph(2), k);
  CHECK(p2.dims == std::vector<std::size_t>{1, 3, 3});
  CHECK(euler_characteristic(p2) == 1);
  for (int s = -2; s <= 3; ++s) {
    CHECK(euler_characteristic(shifted(p2, s)) == (s % 2 == 0 ? 1 : -1) * euler_characteristic(p2));
  }
  for (const auto& g : small_digraphs(3)) {
    auto c = build_multipath_complex(q, g, coeffs(q, truncated_poly(2)));
    CHECK(euler_characteristic(c) == euler_characteristic(betti(q, c)));
  }
}

TEST_CASE("sign choice does not change cohomology") {
  Rationals q;
  auto k = coeffs(q, ground_field().first);
  auto dual = coeffs(q, truncated_poly(2));
  for (const auto& g : small_digraphs()) {
    for (const auto* co : {&k, &dual}) {
      auto a = betti(q, build_multipath_complex(q, g, *co, 0, SignChoice::sigma));
      auto b = betti(q, build_multipath_complex(q, g, *co, 0, SignChoice::lex));
      CHECK(a == b);
    }
  }
}

TEST_CASE("base vertex does not matter when M = A") {
  Rationals q;
  auto dual = coeffs(q, truncated_poly(2));
  for (const auto& g : small_digraphs(3)) {
    const auto ref = betti(q, build_multipath_complex(q, g, dual));
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto h = g.relabeled(perm);
      CHECK(betti(q, build_multipath_complex(q, h, dual)) == ref);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (Vertex base = 1; base < g.vertex_count(); ++base) {
      CHECK(betti(q, build_multipath_complex(q, g, dual, base)) == ref);
    }
  }
}

TEST_CASE("projection onto the whole graph is the identity") {
  Rationals q;
  auto dual = coeffs(q, truncated_poly(2));
  for (const auto& g : {line_graph(3), polygon_graph(2), kH}) {
    auto c = build_multipath_complex(q, g, dual);
    auto pi = projection_map(q, g, c, g, c);
    CHECK(is_chain_map(q, pi, c, c));
    for (std::size_t i = 0; i < c.dims.size(); ++i) CHECK(pi.maps[i] == SparseMatrix<Rationals>::identity(q, c.dims[i]));
  }
}

TEST_CASE("projection from I_2 onto its first edge") {
  Rationals q;
  auto dual = coeffs(q, truncated_poly(2));
  const auto g = line_graph(2);
  const auto sub = g.spanning_subgraph(EdgeSet(0b01));
  auto cg = build_multipath_complex(q, g, dual);
  auto cs = build_multipath_complex(q, sub, dual);
  auto pi = projection_map(q, g, cg, sub, cs);
  CHECK(is_chain_map(q, pi, cg, cs));
  CHECK(rank(q, *pi.at(1)) == 4);
  CHECK(rank(q, *pi.at(0)) == 8);
  CHECK(pi.at(2)->rows() == 0);
}

TEST_CASE("projection kernels have the size of the dropped summands") {
  Rationals q;
  auto dual = coeffs(q, truncated_poly(2));
  for (const auto& g : {line_graph(3), polygon_graph(2), kH}) {
    auto cg = build_multipath_complex(q, g, dual);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const auto sub = g.spanning_subgraph(EdgeSet(bits));
      auto cs = build_multipath_complex(q, sub, dual);
      auto pi = projection_map(q, g, cg, sub, cs);
      CHECK(is_chain_map(q, pi, cg, cs));
      for (std::size_t lvl = 0; lvl < cg.dims.size(); ++lvl) {
        std::size_t dropped = 0;
        for (const Summand& s : cg.summands[lvl]) {
          if (!s.edges.is_subset_of(EdgeSet(bits))) dropped += s.dim;
        }
        CHECK(cg.dims[lvl] - rank(q, pi.maps[lvl]) == dropped);
      }
    }
  }
}

TEST_CASE("projections compose") {
  Rationals q;
  auto dual = coeffs(q, truncated_poly(2));
  const auto g = line_graph(3);
  const auto mid = g.spanning_subgraph(EdgeSet(0b011));
  const auto low = g.spanning_subgraph(EdgeSet(0b001));
  auto cg = build_multipath_complex(q, g, dual);
  auto cm = build_multipath_complex(q, mid, dual);
  auto cl = build_multipath_complex(q, low, dual);
  auto direct = projection_map(q, g, cg, low, cl);
  auto first = projection_map(q, g, cg, mid, cm);
  auto second = projection_map(q, mid, cm, low, cl);
  auto composed = compose(q, second, first, cg, cm, cl);
  for (std::size_t i = 0; i < cg.dims.size(); ++i) CHECK(composed.maps[i] == direct.maps[i]);
}

TEST_CASE("projection rejects graphs that are not spanning sub-graphs") {
  Rationals q;
  auto k = coeffs(q, ground_field().first);
  const auto g = line_graph(2);
  const auto other = parse_edge_list("vertices 3\n1 0\n");
  auto cg = build_multipath_complex(q, g, k);
  auto co = build_multipath_complex(q, other, k);
  CHECK_THROWS_AS(projection_map(q, g, cg, other, co), ValidationError);
  auto small = Digraph(2, {{0, 1}});
  auto cs = build_multipath_complex(q, small, k);
  CHECK_THROWS_AS(projection_map(q, g, cg, small, cs), ValidationError);
}

TEST_CASE("chain map detection") {
  Rationals q;
  auto k = coeffs(q, ground_field().first);
  auto c = build_multipath_complex(q, line_graph(2), k);
  ChainMap<Rationals> bad;
  bad.offset = 0;
  bad.maps = {SparseMatrix<Rationals>::identity(q, 1), SparseMatrix<Rationals>(2, 2),
              SparseMatrix<Rationals>::identity(q, 1)};
  CHECK_FALSE(is_chain_map(q, bad, c, c));
}

TEST_CASE("debug dump") {
  Rationals q;
  auto c = build_multipath_complex(q, kNonCoherent, coeffs(q, ground_field().first));
  auto j = complex_to_json(q, c);
  CHECK(j["dims"] == nlohmann::json::array({1, 2}));
  CHECK(j["differentials"][0]["entries"].size() == 2);
  CHECK(j["differentials"][0]["rows"] == 2);
}
