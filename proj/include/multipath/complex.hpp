#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "multipath/functor.hpp"
#include "multipath/parallel.hpp"
#include "multipath/signs.hpp"

namespace multipath {

/// One direct summand F(H) of a cochain group.
struct Summand {
  EdgeSet edges;
  std::size_t element = 0;  // index in the source poset
  std::size_t offset = 0;   // first basis index inside the degree
  std::size_t dim = 0;
};

/// Cochain complex concentrated in degrees offset .. offset + dims.size() - 1.
/// differentials[i] maps degree offset + i to offset + i + 1.
template <class F>
struct CochainComplex {
  int offset = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix<F>> differentials;
  std::vector<std::vector<Summand>> summands;

  int top_degree() const { return offset + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int degree) const {
    if (degree < offset || degree > top_degree()) return 0;
    return dims[static_cast<std::size_t>(degree - offset)];
  }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (std::size_t d : dims) t += d;
    return t;
  }
};

/// C^n = sum of F(H) over poset elements of level n, placed in degree
/// offset + n, with d = sum of (-1)^eps F(H < H').
template <class F>
CochainComplex<F> build_poset_complex(const F& f, const SubgraphPoset& p, const Coefficients<F>& co,
                                      const SignAssignment& eps, Vertex base = 0,
                                      SameComponent same = SameComponent::forbid, int offset = 0) {
  if (eps.size() != p.coverings().size()) throw std::invalid_argument("sign assignment does not match poset");
  CochainComplex<F> c;
  c.offset = offset;
  if (p.size() == 0) return c;
  const std::size_t levels = p.max_level() + 1;
  c.dims.assign(levels, 0);
  c.summands.assign(levels, {});
  std::vector<std::size_t> offset_of(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t lvl = p.level(i);
    const std::size_t d = space_for(p.graph(), p.element(i), co.dim_a, co.dim_m, base).dim();
    offset_of[i] = c.dims[lvl];
    c.summands[lvl].push_back({p.element(i), i, c.dims[lvl], d});
    c.dims[lvl] += d;
  }

  c.differentials.resize(levels - 1);
  parallel_for(levels - 1, [&](std::size_t lvl) {
    std::vector<typename SparseMatrix<F>::Entry> entries;
    auto [first, last] = p.level_range(lvl);
    for (std::size_t x = first; x < last; ++x) {
      for (std::size_t cov : p.up_covers(x)) {
        const Covering& k = p.coverings()[cov];
        auto block = covering_map(f, co, p, cov, base, same);
        for (const auto& e : block.entries()) {
          entries.push_back({offset_of[k.upper] + e.row, offset_of[x] + e.col, eps[cov] ? f.neg(e.value) : e.value});
        }
      }
    }
    c.differentials[lvl] = SparseMatrix<F>::from_entries(f, c.dims[lvl + 1], c.dims[lvl], std::move(entries));
  });
  return c;
}

/// Multipath complex of g with the given sign choice.
template <class F>
CochainComplex<F> build_multipath_complex(const F& f, const Digraph& g, const Coefficients<F>& co, Vertex base = 0,
                                          SignChoice signs = SignChoice::sigma) {
  auto p = enumerate_path_poset(g);
  return build_poset_complex(f, p, co, make_assignment(p, signs, base), base);
}

/// Indices i with d^{i+1} d^i != 0.
template <class F>
std::vector<std::size_t> d_squared_failures(const F& f, const CochainComplex<F>& c) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    if (!multiply(f, c.differentials[i + 1], c.differentials[i]).is_zero()) bad.push_back(i);
  }
  return bad;
}

template <class F>
bool verify_d_squared(const F& f, const CochainComplex<F>& c) {
  return d_squared_failures(f, c).empty();
}

template <class F>
long euler_characteristic(const CochainComplex<F>& c) {
  long chi = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const int degree = c.offset + static_cast<int>(i);
    chi += (degree % 2 == 0 ? 1 : -1) * static_cast<long>(c.dims[i]);
  }
  return chi;
}

/// C[k]: the same complex moved up by k degrees.
template <class F>
CochainComplex<F> shifted(CochainComplex<F> c, int k) {
  c.offset += k;
  return c;
}

/// Debug dump: offset, dims and triplet lists.
template <class F>
nlohmann::json complex_to_json(const F& f, const CochainComplex<F>& c) {
  nlohmann::json out;
  out["offset"] = c.offset;
  out["dims"] = c.dims;
  nlohmann::json ds = nlohmann::json::array();
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& m = c.differentials[i];
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries()) entries.push_back({e.row, e.col, f.to_string(e.value)});
    ds.push_back({{"degree", c.offset + static_cast<int>(i)}, {"rows", m.rows()}, {"cols", m.cols()},
                  {"entries", entries}});
  }
  out["differentials"] = ds;
  return out;
}

/// Degreewise maps between two complexes; maps[i] acts on degree offset + i.
template <class F>
struct ChainMap {
  int offset = 0;
  std::vector<SparseMatrix<F>> maps;

  const SparseMatrix<F>* at(int degree) const {
    if (degree < offset || degree >= offset + static_cast<int>(maps.size())) return nullptr;
    return &maps[static_cast<std::size_t>(degree - offset)];
  }
};

/// Matrix of d in degree n, or an empty matrix of the right shape outside the
/// stored range.
template <class F>
SparseMatrix<F> differential_at(const CochainComplex<F>& c, int degree) {
  if (degree >= c.offset && degree < c.top_degree()) return c.differentials[static_cast<std::size_t>(degree - c.offset)];
  return SparseMatrix<F>(c.dim(degree + 1), c.dim(degree));
}

template <class F>
SparseMatrix<F> map_at(const ChainMap<F>& m, int degree, std::size_t rows, std::size_t cols) {
  if (const auto* x = m.at(degree)) return *x;
  return SparseMatrix<F>(rows, cols);
}

/// d_target phi == phi d_source in every degree.
template <class F>
bool is_chain_map(const F& f, const ChainMap<F>& phi, const CochainComplex<F>& source,
                  const CochainComplex<F>& target) {
  const int lo = std::min(source.offset, target.offset) - 1;
  const int hi = std::max(source.top_degree(), target.top_degree()) + 1;
  for (int n = lo; n <= hi; ++n) {
    auto phi_n = map_at(phi, n, target.dim(n), source.dim(n));
    auto phi_n1 = map_at(phi, n + 1, target.dim(n + 1), source.dim(n + 1));
    if (phi_n.rows() != target.dim(n) || phi_n.cols() != source.dim(n)) return false;
    if (!(multiply(f, differential_at(target, n), phi_n) == multiply(f, phi_n1, differential_at(source, n)))) {
      return false;
    }
  }
  return true;
}

/// Degreewise composition psi phi.
template <class F>
ChainMap<F> compose(const F& f, const ChainMap<F>& psi, const ChainMap<F>& phi, const CochainComplex<F>& source,
                    const CochainComplex<F>& middle, const CochainComplex<F>& target) {
  ChainMap<F> out;
  out.offset = source.offset;
  for (std::size_t i = 0; i < source.dims.size(); ++i) {
    const int n = source.offset + static_cast<int>(i);
    out.maps.push_back(multiply(f, map_at(psi, n, target.dim(n), middle.dim(n)),
                                map_at(phi, n, middle.dim(n), source.dim(n))));
  }
  return out;
}

/// Projection C(G) -> C(G') for a spanning sub-graph G' of G: the identity on
/// summands F(H) with H a multipath of G', zero on the others, corrected by
/// (-1)^eta where eta relates the restricted signs of G to the signs of G'.
/// `cg` and `csub` must be the sigma-signed multipath complexes of g and sub
/// over the same coefficients and base vertex.
template <class F>
ChainMap<F> projection_map(const F& f, const Digraph& g, const CochainComplex<F>& cg, const Digraph& sub,
                           const CochainComplex<F>& csub, Vertex base = 0) {
  if (sub.vertex_count() != g.vertex_count()) throw ValidationError("sub-graph is not spanning");
  std::vector<std::size_t> to_g(sub.edge_count());
  for (std::size_t i = 0; i < sub.edge_count(); ++i) {
    auto j = g.index_of(sub.edge(i));
    if (!j) throw ValidationError("sub-graph has an edge outside the graph");
    to_g[i] = *j;
  }
  auto lift = [&](EdgeSet h) {
    EdgeSet out;
    for (std::size_t i : h.members()) out = out.with(to_g[i]);
    return out;
  };

  auto pg = enumerate_path_poset(g);
  auto ps = enumerate_path_poset(sub);
  auto sigma_g = sigma_e_assignment(pg, base);
  SignAssignment restricted(ps.coverings().size());
  for (std::size_t c = 0; c < ps.coverings().size(); ++c) {
    const Covering& k = ps.coverings()[c];
    auto lower = *pg.index_of(lift(ps.element(k.lower)));
    auto upper = *pg.index_of(lift(ps.element(k.upper)));
    restricted[c] = sigma_g[*pg.covering_index(lower, upper)];
  }
  auto eta = find_sign_isomorphism(ps, restricted, sigma_e_assignment(ps, base));
  if (!eta) throw std::logic_error("no sign isomorphism between restricted and intrinsic signs");

  ChainMap<F> out;
  out.offset = cg.offset;
  for (std::size_t lvl = 0; lvl < cg.dims.size(); ++lvl) {
    const int n = cg.offset + static_cast<int>(lvl);
    std::vector<typename SparseMatrix<F>::Entry> entries;
    if (n >= csub.offset && n <= csub.top_degree()) {
      const auto& target_blocks = csub.summands[static_cast<std::size_t>(n - csub.offset)];
      const auto& source_blocks = cg.summands[lvl];
      for (const Summand& t : target_blocks) {
        const EdgeSet lifted = lift(t.edges);
        auto it = std::find_if(source_blocks.begin(), source_blocks.end(),
                               [&](const Summand& s) { return s.edges == lifted; });
        if (it == source_blocks.end() || it->dim != t.dim) throw std::logic_error("summand layout mismatch");
        const auto sign = (*eta)[t.element] ? f.neg(f.one()) : f.one();
        for (std::size_t k = 0; k < t.dim; ++k) entries.push_back({t.offset + k, it->offset + k, sign});
      }
    }
    out.maps.push_back(SparseMatrix<F>::from_entries(f, csub.dim(n), cg.dims[lvl], std::move(entries)));
  }
  return out;
}

}  // namespace multipath
