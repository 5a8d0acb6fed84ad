// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "multipath/chromatic.hpp"
#include "multipath/field.hpp"
#include "multipath/hochschild.hpp"
#include "multipath/homology.hpp"
#include "multipath/selftest.hpp"

using namespace multipath;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <class F>
Coefficients<F> coeffs(const F& f, const FiniteAlgebra& a) {
  return {f, a, Bimodule::regular(a)};
}

Digraph graph(const char* text) { return parse_edge_list(text); }

template <class F>
void small_table(const F& f, Outcome& out) {
  struct Row {
    const char* name;
    Digraph g;
    BettiTable expected;
  };
  const std::vector<Row> rows{
      {"point", Digraph(1, {}), {{0, 1}}},
      {"I_5", line_graph(5), {}},
      {"non-coherent 3-line", graph("vertices 3\n0 1\n2 1\n"), {{1, 1}}},
      {"Y out", graph("vertices 4\n0 1\n1 2\n1 3\n"), {}},
      {"Y in", graph("vertices 4\n0 1\n2 1\n3 1\n"), {{1, 2}}},
      {"H graph", graph("vertices 6\n0 1\n1 4\n2 1\n3 4\n5 4\n"), {{2, 2}}},
  };
  auto k = coeffs(f, ground_field().first);
  for (const auto& r : rows) {
    auto b = betti(f, build_multipath_complex(f, r.g, k));
    out.require(b == r.expected, std::string(r.name) + " over " + f.name() + " gave " + betti_string(b));
  }
}

template <class F>
void dual_line(const F& f, Outcome& out) {
  auto c = build_multipath_complex(f, graph("vertices 3\n0 1\n2 1\n"), coeffs(f, truncated_poly(2)));
  const auto r = rank(f, c.differentials.at(0));
  out.require(r == 6, "rank d0 over " + f.name() + " is " + std::to_string(r));
  auto b = betti(f, c);
  out.require(b == BettiTable{{0, 2}, {1, 2}}, "cohomology over " + f.name() + " is " + betti_string(b));
}

template <class F>
void polygons(const F& f, Outcome& out) {
  // closed form for k[x]/(x^m) in characteristic 0: HH_0 = m, HH_i = m - 1
  for (const auto& [m, a] : {std::pair{std::size_t{1}, ground_field().first}, std::pair{std::size_t{2}, truncated_poly(2)}}) {
    const std::string name = m == 1 ? "K" : "dual";
    for (std::size_t n = 2; n <= 4; ++n) {
      auto r = check_polygon_theorem(f, coeffs(f, a), n);
      out.require(r.check.ok, "P_" + std::to_string(n) + " with " + name + " over " + f.name() + ": " +
                                  (r.check.failures.empty() ? "" : r.check.failures.front()));
      for (std::size_t i = 0; i < r.hh.size(); ++i) {
        out.require(r.hh[i] == (i == 0 ? m : m - 1), "HH_" + std::to_string(i) + " of " + name + " is " +
                                                         std::to_string(r.hh[i]));
      }
    }
  }
}

template <class F>
void chromatic(const F& f, Outcome& out) {
  for (const auto& [name, a] : {std::pair{"K", ground_field().first}, std::pair{"dual", truncated_poly(2)}}) {
    auto co = coeffs(f, a);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto r = check_iso_line(f, co, n);
      out.require(r.ok, "I_" + std::to_string(n) + " with " + name + ": " +
                            (r.failures.empty() ? "" : r.failures.front()));
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      auto r = check_iso_polygon(f, co, n);
      out.require(r.ok, "P_" + std::to_string(n) + " with " + name + ": " +
                            (r.failures.empty() ? "" : r.failures.front()));
    }
  }
}

template <class F>
void exact_sequences(const F& f, Outcome& out) {
  const std::vector<std::pair<const char*, Digraph>> graphs{
      {"P_2", polygon_graph(2)},
      {"P_3", polygon_graph(3)},
      {"H graph", graph("vertices 6\n0 1\n1 4\n2 1\n3 4\n5 4\n")},
      {"Y out", graph("vertices 4\n0 1\n1 2\n1 3\n")},
      {"Y in", graph("vertices 4\n0 1\n2 1\n3 1\n")},
  };
  for (const auto& [name, a] : {std::pair{"K", ground_field().first}, std::pair{"dual", truncated_poly(2)}}) {
    for (const auto& [gname, g] : graphs) {
      auto r = check_les(f, g, coeffs(f, a));
      out.require(r.check.ok, std::string(gname) + " with " + name + ": " +
                                  (r.check.failures.empty() ? "" : r.check.failures.front()));
    }
  }
}

bool report(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= budget) {
    out.ok = false;
    out.detail = "over time budget";
  }
  std::printf("%s %d %s  time %.3f s (limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              budget, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

}  // namespace

int main() {
  bool all = true;
  Rationals q;

  all &= report(1, "small digraph table, A = M = K over Q and GF(5)", 1, [&] {
    Outcome out;
    small_table(q, out);
    small_table(PrimeField(5), out);
    return out;
  });

  all &= report(2, "dual numbers on the non-coherent 3-line: rank d0 = 6, H = {0: 2, 1: 2} over Q and GF(3)", 1, [&] {
    Outcome out;
    dual_line(q, out);
    dual_line(PrimeField(3), out);
    return out;
  });

  all &= report(3, "coherent lines I_1..I_5 over K[x]/(x^2): H = {0: 2}", 10, [&] {
    Outcome out;
    auto dual = coeffs(q, truncated_poly(2));
    for (std::size_t n = 1; n <= 5; ++n) {
      auto b = betti(q, build_multipath_complex(q, line_graph(n), dual));
      out.require(b == BettiTable{{0, 2}}, "I_" + std::to_string(n) + " gave " + betti_string(b));
    }
    return out;
  });

  all &= report(4, "polygons P_2..P_4 against bar-complex Hochschild homology, A = M in {K, K[x]/(x^2)}", 60, [&] {
    Outcome out;
    polygons(q, out);
    return out;
  });

  all &= report(5, "chromatic vs multipath on I_n (n <= 5) and P_n (n <= 4), A in {K, K[x]/(x^2)}", 60, [&] {
    Outcome out;
    chromatic(q, out);
    return out;
  });

  all &= report(6, "exact sequence on P_2, P_3, H graph and both Y graphs, A in {K, K[x]/(x^2)}", 60, [&] {
    Outcome out;
    exact_sequences(q, out);
    return out;
  });

  all &= report(7, "property suites on all digraphs with at most 4 vertices", 120, [&] {
    Outcome out;
    for (const auto& s : run_selftest(4)) {
      std::printf("       %-18s %s  %zu checks  %.3f s\n", s.name.c_str(), s.passed ? "ok" : "failed", s.checks,
                  s.seconds);
      out.require(s.passed, s.name + ": " + (s.failures.empty() ? "" : s.failures.front()));
    }
    return out;
  });

  return all ? 0 : 1;
}
