#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "multipath/algebra.hpp"
#include "multipath/path_poset.hpp"
#include "multipath/sparse_matrix.hpp"

namespace multipath {

/// M (x) A (x) ... (x) A, one factor per component in component order.
/// Basis vectors are indexed in mixed radix with the M factor as the most
/// significant digit.
struct TensorSpace {
  std::vector<std::size_t> factor_dims;

  std::size_t dim() const {
    std::size_t d = 1;
    for (std::size_t x : factor_dims) d *= x;
    return d;
  }
};

TensorSpace space_for(std::size_t components, std::size_t dim_a, std::size_t dim_m);
TensorSpace space_for(const Digraph& g, EdgeSet h, std::size_t dim_a, std::size_t dim_m, Vertex base = 0);

/// What a covering does when the added edge stays inside one component.
enum class SameComponent { forbid, identity, zero };

/// Merges tensor positions s and t (s != t) of a space with `components`
/// factors: the product x_s x_t goes to position min(s, t) and position
/// max(s, t) disappears.  Position 0 holds M, so s == 0 uses m.a and t == 0
/// uses a.m.
template <class F>
SparseMatrix<F> merge_map(const F& f, const Coefficients<F>& co, std::size_t components, std::size_t s,
                          std::size_t t) {
  if (s == t || s >= components || t >= components) throw std::invalid_argument("bad merge positions");
  auto dom = space_for(components, co.dim_a, co.dim_m);
  auto cod = space_for(components - 1, co.dim_a, co.dim_m);
  const std::size_t lo = std::min(s, t);
  const std::size_t hi = std::max(s, t);

  std::vector<std::size_t> digits(components);
  std::vector<typename SparseMatrix<F>::Entry> entries;
  for (std::size_t col = 0; col < dom.dim(); ++col) {
    std::size_t rest = col;
    for (std::size_t pos = components; pos-- > 0;) {
      digits[pos] = rest % dom.factor_dims[pos];
      rest /= dom.factor_dims[pos];
    }
    const typename Coefficients<F>::Sparse* product;
    if (s == 0) {
      product = &co.right[digits[0] * co.dim_a + digits[t]];
    } else if (t == 0) {
      product = &co.left[digits[s] * co.dim_m + digits[0]];
    } else {
      product = &co.mult[digits[s] * co.dim_a + digits[t]];
    }
    for (const auto& [k, value] : *product) {
      std::size_t row = 0;
      for (std::size_t pos = 0; pos < components; ++pos) {
        if (pos == hi) continue;
        const std::size_t d = pos == lo ? k : digits[pos];
        row = row * dom.factor_dims[pos] + d;
      }
      entries.push_back({row, col, value});
    }
  }
  return SparseMatrix<F>::from_entries(f, cod.dim(), dom.dim(), std::move(entries));
}

/// Matrix of F(H < H + e) for the spanning sub-graph H = `lower`.
template <class F>
SparseMatrix<F> covering_map(const F& f, const Coefficients<F>& co, const Digraph& g, EdgeSet lower,
                             std::size_t edge, Vertex base = 0, SameComponent same = SameComponent::forbid) {
  auto labels = component_labels(g, lower, base);
  const std::size_t s = labels.of_vertex[g.edge(edge).source];
  const std::size_t t = labels.of_vertex[g.edge(edge).target];
  if (s != t) return merge_map(f, co, labels.count, s, t);
  const std::size_t d = space_for(labels.count, co.dim_a, co.dim_m).dim();
  switch (same) {
    case SameComponent::identity:
      return SparseMatrix<F>::identity(f, d);
    case SameComponent::zero:
      return SparseMatrix<F>(d, d);
    default:
      throw std::invalid_argument("edge does not join two components");
  }
}

template <class F>
SparseMatrix<F> covering_map(const F& f, const Coefficients<F>& co, const SubgraphPoset& p, std::size_t covering,
                             Vertex base = 0, SameComponent same = SameComponent::forbid) {
  const Covering& c = p.coverings().at(covering);
  return covering_map(f, co, p.graph(), p.element(c.lower), c.edge, base, same);
}

/// F(mid1 < top) F(bottom < mid1) == F(mid2 < top) F(bottom < mid2).
template <class F>
bool verify_square_commutes(const F& f, const Coefficients<F>& co, const SubgraphPoset& p, const Square& sq,
                            Vertex base = 0, SameComponent same = SameComponent::forbid) {
  auto m = [&](std::size_t c) { return covering_map(f, co, p, c, base, same); };
  return multiply(f, m(sq.covers[1]), m(sq.covers[0])) == multiply(f, m(sq.covers[3]), m(sq.covers[2]));
}

}  // namespace multipath
