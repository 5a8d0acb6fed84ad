#include "multipath/selftest.hpp"

#include <chrono>
#include <functional>

#include "multipath/chromatic.hpp"
#include "multipath/digraph.hpp"
#include "multipath/field.hpp"
#include "multipath/homology.hpp"
#include "multipath/morse.hpp"
#include "multipath/signs.hpp"

namespace multipath {

namespace {

constexpr std::size_t kKeptFailures = 8;

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }

  void check(bool cond, const std::function<std::string()>& what) {
    ++r_.checks;
    if (cond) return;
    r_.passed = false;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(what());
  }

  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  SuiteResult r_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Digraph> all_digraphs(std::size_t max_vertices) {
  std::vector<Digraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    auto batch = enumerate_digraphs(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string show(const Digraph& g) {
  std::string s = std::to_string(g.vertex_count()) + " vertices [";
  for (const Edge& e : g.edges()) s += " " + std::to_string(e.source) + "->" + std::to_string(e.target);
  return s + " ]";
}

struct Coeffs {
  Rationals q;
  Coefficients<Rationals> ground;
  Coefficients<Rationals> dual;

  Coeffs() {
    auto [k, m] = ground_field();
    ground = Coefficients<Rationals>(q, k, m);
    auto d = truncated_poly(2);
    dual = Coefficients<Rationals>(q, d, Bimodule::regular(d));
  }
};

}  // namespace

SuiteResult suite_d_squared(std::size_t max_vertices) {
  Suite s("d_squared");
  Coeffs c;
  for (const Digraph& g : all_digraphs(max_vertices)) {
    for (const auto* co : {&c.ground, &c.dual}) {
      for (auto choice : {SignChoice::sigma, SignChoice::lex}) {
        auto cx = build_multipath_complex(c.q, g, *co, 0, choice);
        s.check(verify_d_squared(c.q, cx), [&] { return "multipath complex of " + show(g); });
      }
      for (auto variant : {ChromaticVariant::plain, ChromaticVariant::hat}) {
        auto cx = build_chromatic(c.q, g, *co, variant);
        s.check(verify_d_squared(c.q, cx), [&] { return "chromatic complex of " + show(g); });
      }
      auto cx = build_tilde_mu(c.q, g, *co);
      s.check(verify_d_squared(c.q, cx), [&] { return "complement complex of " + show(g); });
    }
  }
  return s.finish();
}

SuiteResult suite_sigma_parity(std::size_t max_vertices) {
  Suite s("sigma_parity");
  auto graphs = all_digraphs(max_vertices);
  for (std::size_t n = 1; n <= 6; ++n) {
    graphs.push_back(line_graph(n));
    graphs.push_back(polygon_graph(n));
  }
  for (const Digraph& g : graphs) {
    auto p = enumerate_path_poset(g);
    auto check = verify_sign(p, sigma_e_assignment(p));
    s.check(check.ok, [&] { return std::to_string(check.violated_squares.size()) + " bad squares on " + show(g); });
  }
  return s.finish();
}

SuiteResult suite_sign_independence(std::size_t max_vertices) {
  Suite s("sign_independence");
  Coeffs c;
  for (const Digraph& g : all_digraphs(max_vertices)) {
    for (const auto* co : {&c.ground, &c.dual}) {
      auto a = betti(c.q, build_multipath_complex(c.q, g, *co, 0, SignChoice::sigma));
      auto b = betti(c.q, build_multipath_complex(c.q, g, *co, 0, SignChoice::lex));
      s.check(a == b, [&] { return betti_string(a) + " vs " + betti_string(b) + " on " + show(g); });
    }
  }
  return s.finish();
}

SuiteResult suite_boolean_posets(std::size_t max_vertices) {
  Suite s("boolean_posets");
  for (const Digraph& g : all_digraphs(max_vertices)) {
    if (!is_connected(g)) continue;
    const bool boolean = is_boolean_path_poset(g);
    const bool line = are_isomorphic(g, line_graph(g.vertex_count() - 1));
    s.check(boolean == line, [&] { return "Boolean test disagrees with line test on " + show(g); });

    const std::size_t n = g.edge_count();
    if (n == 3 || n == 4) {
      auto p = enumerate_path_poset(g);
      bool maximal_ok = true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.up_covers(i).empty() && p.element(i).size() != n - 1) maximal_ok = false;
      }
      const bool punctured = p.size() == (std::size_t{1} << n) - 1 && maximal_ok;
      const bool polygon = are_isomorphic(g, polygon_graph(n - 1));
      s.check(punctured == polygon, [&] { return "punctured Boolean test disagrees with polygon test on " + show(g); });
    }
  }
  return s.finish();
}

SuiteResult suite_morse_shortcut(std::size_t max_vertices) {
  Suite s("morse_shortcut");
  Coeffs c;
  for (const Digraph& g : all_digraphs(max_vertices)) {
    auto p = enumerate_path_poset(g);
    auto m = greedy_matching(p);
    auto valid = verify_matching(p, m);
    s.check(valid.ok, [&] { return valid.reason + " on " + show(g); });
    auto shortcut = shortcut_homology(p, m);
    if (!shortcut) continue;
    auto direct = betti(c.q, build_multipath_complex(c.q, g, c.ground));
    s.check(*shortcut == direct,
            [&] { return betti_string(*shortcut) + " vs " + betti_string(direct) + " on " + show(g); });
  }
  return s.finish();
}

SuiteResult suite_projection() {
  Suite s("projection");
  Coeffs c;
  const std::vector<std::vector<Digraph>> chains = {
      {line_graph(3), Digraph(4, {{0, 1}, {1, 2}}), Digraph(4, {{0, 1}})},
      {polygon_graph(2), Digraph(3, {{0, 1}, {1, 2}}), Digraph(3, {{1, 2}})},
      {Digraph(6, {{0, 1}, {1, 4}, {2, 1}, {3, 4}, {5, 4}}), Digraph(6, {{0, 1}, {2, 1}, {3, 4}}),
       Digraph(6, {{3, 4}})},
  };
  for (const auto& chain : chains) {
    const Digraph& g = chain[0];
    const Digraph& g1 = chain[1];
    const Digraph& g2 = chain[2];
    for (const auto* co : {&c.ground, &c.dual}) {
      auto c0 = build_multipath_complex(c.q, g, *co);
      auto c1 = build_multipath_complex(c.q, g1, *co);
      auto c2 = build_multipath_complex(c.q, g2, *co);
      auto p01 = projection_map(c.q, g, c0, g1, c1);
      auto p12 = projection_map(c.q, g1, c1, g2, c2);
      auto p02 = projection_map(c.q, g, c0, g2, c2);
      s.check(is_chain_map(c.q, p01, c0, c1), [&] { return "projection is not a chain map from " + show(g); });
      s.check(is_chain_map(c.q, p12, c1, c2), [&] { return "projection is not a chain map from " + show(g1); });
      s.check(is_chain_map(c.q, p02, c0, c2), [&] { return "projection is not a chain map from " + show(g); });
      auto composite = compose(c.q, p12, p01, c0, c1, c2);
      bool same = composite.maps.size() == p02.maps.size();
      for (std::size_t i = 0; same && i < p02.maps.size(); ++i) same = composite.maps[i] == p02.maps[i];
      s.check(same, [&] { return "projections do not compose on " + show(g); });
      for (std::size_t i = 0; i < c0.dims.size(); ++i) {
        const int n = static_cast<int>(i);
        s.check(rank(c.q, p01.maps[i]) == c1.dim(n), [&] { return "projection is not onto from " + show(g); });
      }
    }
  }
  return s.finish();
}

std::vector<SuiteResult> run_selftest(std::size_t max_vertices) {
  return {suite_d_squared(max_vertices),         suite_sigma_parity(max_vertices),
          suite_sign_independence(max_vertices), suite_boolean_posets(max_vertices),
          suite_morse_shortcut(max_vertices),    suite_projection()};
}

}  // namespace multipath
