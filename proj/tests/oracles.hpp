#pragma once

// Slow, independent reference implementations used to pin down the fast ones.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "multipath/digraph.hpp"
#include "multipath/field.hpp"
#include "multipath/sparse_matrix.hpp"

namespace oracle {

using namespace multipath;

/// Dense Gaussian elimination with the first nonzero pivot.
template <class F>
std::size_t dense_rank(const F& f, std::vector<std::vector<typename F::value_type>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && f.is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const auto inv = f.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (f.is_zero(a[i][c])) continue;
      const auto factor = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

template <class F>
std::vector<std::vector<typename F::value_type>> dense_product(const F& f,
                                                                const std::vector<std::vector<typename F::value_type>>& a,
                                                                const std::vector<std::vector<typename F::value_type>>& b,
                                                                std::size_t inner, std::size_t cols) {
  std::vector<std::vector<typename F::value_type>> out(a.size(), std::vector<typename F::value_type>(cols, f.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
  return out;
}

/// Random sparse matrix with small integer entries.
template <class F>
SparseMatrix<F> random_matrix(const F& f, std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> value(-3, 3);
  std::vector<typename SparseMatrix<F>::Entry> entries;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) entries.push_back({i, j, f.from_int(value(rng))});
  return SparseMatrix<F>::from_entries(f, rows, cols, std::move(entries));
}

/// Every component is a lone vertex or a simple directed path, checked by
/// trying every ordering of the component's vertices.
inline bool literal_multipath(const Digraph& g, EdgeSet edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : edges.members()) {
      auto a = comp[g.edge(i).source];
      auto b = comp[g.edge(i).target];
      if (a == b) continue;
      auto lo = std::min(a, b), hi = std::max(a, b);
      for (auto& c : comp)
        if (c == hi) c = lo;
      changed = true;
    }
  }
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v)
      if (comp[v] == root) members.push_back(static_cast<Vertex>(v));
    if (members.size() <= 1) continue;
    std::vector<Edge> inside;
    for (std::size_t i : edges.members())
      if (comp[g.edge(i).source] == root) inside.push_back(g.edge(i));
    std::sort(inside.begin(), inside.end());
    bool is_path = false;
    std::sort(members.begin(), members.end());
    do {
      std::vector<Edge> walk;
      for (std::size_t k = 0; k + 1 < members.size(); ++k) walk.push_back({members[k], members[k + 1]});
      std::sort(walk.begin(), walk.end());
      if (walk == inside) is_path = true;
    } while (!is_path && std::next_permutation(members.begin(), members.end()));
    if (!is_path) return false;
  }
  return true;
}

/// Directed cycle test by boolean transitive closure.
inline bool has_cycle_by_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& [a, b] : arcs) reach[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (reach[i][i]) return true;
  return false;
}

/// HH_n(k[x]/(x^m), itself) over a field of characteristic p (0 for Q):
/// the periodic resolution gives HH_0 = m and, for n >= 1, m - 1 when p does
/// not divide m, and m when it does.
inline std::size_t truncated_poly_hh(std::size_t m, std::size_t n, unsigned long p) {
  if (n == 0) return m;
  const bool divides = p != 0 && m % p == 0;
  return divides ? m : m - 1;
}

}  // namespace oracle
