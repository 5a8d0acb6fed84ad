#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multipath/complex.hpp"
#include "multipath/homology.hpp"

namespace multipath {

enum class ChromaticVariant { plain, hat };

/// 0 when an even number of edges of h precede e, else 1.
inline std::uint8_t zeta(EdgeSet h, std::size_t e) { return static_cast<std::uint8_t>(h.count_before(e) % 2); }

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

inline std::string betti_string(const BettiTable& b) {
  std::string s = "{";
  for (const auto& [n, d] : b) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(n) + ": " + std::to_string(d);
  }
  return s + "}";
}

/// Chromatic complex over all spanning sub-graphs with zeta signs.  An edge
/// joining two components multiplies along the edge orientation; an edge
/// inside one component acts as the identity (plain) or zero (hat).  Needs a
/// commutative algebra and a symmetric bimodule unless g is a coherent line
/// or polygon.
template <class F>
CochainComplex<F> build_chromatic(const F& f, const Digraph& g, const Coefficients<F>& co, ChromaticVariant variant,
                                  Vertex base = 0) {
  if (!(co.commutative && co.symmetric) && !is_coherent_line_or_polygon(g)) {
    throw ValidationError("chromatic complex needs a commutative algebra with symmetric actions on this graph");
  }
  auto p = spanning_subgraph_poset(g);
  return build_poset_complex(f, p, co, lex_assignment(p), base,
                             variant == ChromaticVariant::plain ? SameComponent::identity : SameComponent::zero);
}

/// Complex on the spanning sub-graphs that are not multipaths, with the
/// component-preserving coverings sent to zero.  Degrees are edge counts.
template <class F>
CochainComplex<F> build_tilde_mu(const F& f, const Digraph& g, const Coefficients<F>& co, Vertex base = 0) {
  auto p = complement_poset(g);
  return build_poset_complex(f, p, co, lex_assignment(p), base, SameComponent::zero, static_cast<int>(p.min_size()));
}

/// Signed identity blocks between summands with equal edge sets in equal
/// degrees.  sign(H) gives the sign bit, or nothing to map F(H) to zero.
template <class F>
ChainMap<F> summand_map(const F& f, const CochainComplex<F>& source, const CochainComplex<F>& target,
                        const std::function<std::optional<bool>(EdgeSet)>& sign) {
  ChainMap<F> out;
  out.offset = source.offset;
  for (std::size_t lvl = 0; lvl < source.dims.size(); ++lvl) {
    const int n = source.offset + static_cast<int>(lvl);
    std::vector<typename SparseMatrix<F>::Entry> entries;
    const std::vector<Summand>* targets =
        n >= target.offset && n <= target.top_degree() ? &target.summands[static_cast<std::size_t>(n - target.offset)]
                                                       : nullptr;
    for (const Summand& s : source.summands[lvl]) {
      auto bit = sign(s.edges);
      if (!bit) continue;
      const Summand* t = nullptr;
      if (targets) {
        for (const Summand& cand : *targets) {
          if (cand.edges == s.edges) t = &cand;
        }
      }
      if (!t || t->dim != s.dim) throw std::logic_error("no matching summand in target complex");
      const auto v = *bit ? f.neg(f.one()) : f.one();
      for (std::size_t k = 0; k < s.dim; ++k) entries.push_back({t->offset + k, s.offset + k, v});
    }
    out.maps.push_back(SparseMatrix<F>::from_entries(f, target.dim(n), source.dims[lvl], std::move(entries)));
  }
  return out;
}

/// eta relating zeta (restricted to P(G)) to sigma signs on P(G).
inline std::vector<std::uint8_t> zeta_to_sigma(const SubgraphPoset& pg, Vertex base) {
  auto eta = find_sign_isomorphism(pg, lex_assignment(pg), sigma_e_assignment(pg, base));
  if (!eta) throw InvariantError("no sign isomorphism between zeta and sigma");
  return *eta;
}

/// Coherent line I_n: the multipath complex and both chromatic complexes
/// have equal dimensions and cohomology, and conjugating by (-1)^eta is an
/// exact isomorphism onto the multipath complex.
template <class F>
CheckResult check_iso_line(const F& f, const Coefficients<F>& co, std::size_t n) {
  CheckResult r;
  const Digraph g = line_graph(n);
  auto mu = build_multipath_complex(f, g, co);
  auto plain = build_chromatic(f, g, co, ChromaticVariant::plain);
  auto hat = build_chromatic(f, g, co, ChromaticVariant::hat);
  r.require(mu.offset == plain.offset && mu.dims == plain.dims, "plain chromatic dims differ on I_" + std::to_string(n));
  r.require(mu.offset == hat.offset && mu.dims == hat.dims, "hat chromatic dims differ on I_" + std::to_string(n));
  const auto b_mu = betti(f, mu);
  const auto b_plain = betti(f, plain);
  const auto b_hat = betti(f, hat);
  r.require(b_mu == b_plain, "plain chromatic cohomology " + betti_string(b_plain) + " vs " + betti_string(b_mu));
  r.require(b_mu == b_hat, "hat chromatic cohomology " + betti_string(b_hat) + " vs " + betti_string(b_mu));

  auto pg = enumerate_path_poset(g);
  const auto eta = zeta_to_sigma(pg, 0);
  auto sign = [&](EdgeSet h) -> std::optional<bool> { return eta[*pg.index_of(h)] != 0; };
  for (const auto* c : {&plain, &hat}) {
    auto phi = summand_map(f, *c, mu, sign);
    r.require(is_chain_map(f, phi, *c, mu), "sign conjugation is not a chain map on I_" + std::to_string(n));
  }
  return r;
}

/// Coherent polygon P_n: the hat complex is the multipath complex plus one
/// copy of M in degree n + 1, on dimensions and on cohomology.
template <class F>
CheckResult check_iso_polygon(const F& f, const Coefficients<F>& co, std::size_t n) {
  CheckResult r;
  const Digraph g = polygon_graph(n);
  const int top = static_cast<int>(n) + 1;
  auto mu = build_multipath_complex(f, g, co);
  auto hat = build_chromatic(f, g, co, ChromaticVariant::hat);
  for (int k = 0; k <= top; ++k) {
    const std::size_t expect = mu.dim(k) + (k == top ? co.dim_m : 0);
    r.require(hat.dim(k) == expect, "hat dim in degree " + std::to_string(k) + " is " + std::to_string(hat.dim(k)) +
                                        ", expected " + std::to_string(expect));
  }
  const Summand* full = nullptr;
  if (top <= hat.top_degree()) {
    for (const Summand& sm : hat.summands[static_cast<std::size_t>(top - hat.offset)]) {
      if (sm.edges == g.all_edges()) full = &sm;
    }
  }
  r.require(full != nullptr, "hat complex has no summand for the full polygon");
  if (full) {
    bool zero = true;
    for (const auto& e : differential_at(hat, top - 1).entries()) {
      if (e.row >= full->offset && e.row < full->offset + full->dim) zero = false;
    }
    r.require(zero, "hat differential into the full polygon is nonzero");
  }
  const auto b_mu = betti(f, mu);
  const auto b_hat = betti(f, hat);
  const auto expect = b_mu + BettiTable{{top, co.dim_m}};
  r.require(b_hat == expect, "hat cohomology " + betti_string(b_hat) + ", expected " + betti_string(expect));
  return r;
}

template <class F>
CheckResult check_iso_In_Pn(const F& f, const Coefficients<F>& co, std::size_t n) {
  auto r = check_iso_line(f, co, n);
  auto q = check_iso_polygon(f, co, n);
  r.ok = r.ok && q.ok;
  r.failures.insert(r.failures.end(), q.failures.begin(), q.failures.end());
  return r;
}

struct LesReport {
  CheckResult check;
  BettiTable tilde;
  BettiTable hat;
  BettiTable mu;
};

/// 0 -> C~ -> C^ -> C_mu -> 0: dimensions add up, inclusion and quotient are
/// chain maps with zero composite and the right ranks, Euler characteristics
/// add, and each hat Betti number is bounded by its neighbours in the long
/// exact sequence.
template <class F>
LesReport check_les(const F& f, const Digraph& g, const Coefficients<F>& co, Vertex base = 0) {
  LesReport out;
  CheckResult& r = out.check;
  auto tilde = build_tilde_mu(f, g, co, base);
  auto hat = build_chromatic(f, g, co, ChromaticVariant::hat, base);
  auto mu = build_multipath_complex(f, g, co, base);

  const int lo = std::min({tilde.offset, hat.offset, mu.offset});
  const int hi = std::max({tilde.top_degree(), hat.top_degree(), mu.top_degree()});
  for (int k = lo; k <= hi; ++k) {
    r.require(tilde.dim(k) + mu.dim(k) == hat.dim(k), "dimensions do not add up in degree " + std::to_string(k));
  }

  auto pg = enumerate_path_poset(g);
  const auto eta = zeta_to_sigma(pg, base);
  auto inc = summand_map(f, tilde, hat, [](EdgeSet) -> std::optional<bool> { return false; });
  auto quo = summand_map(f, hat, mu, [&](EdgeSet h) -> std::optional<bool> {
    auto i = pg.index_of(h);
    if (!i) return std::nullopt;
    return eta[*i] != 0;
  });
  r.require(is_chain_map(f, inc, tilde, hat), "inclusion is not a chain map");
  r.require(is_chain_map(f, quo, hat, mu), "quotient is not a chain map");
  for (int k = lo; k <= hi; ++k) {
    auto i_k = map_at(inc, k, hat.dim(k), tilde.dim(k));
    auto q_k = map_at(quo, k, mu.dim(k), hat.dim(k));
    r.require(multiply(f, q_k, i_k).is_zero(), "quotient after inclusion is nonzero in degree " + std::to_string(k));
    const std::size_t ri = rank(f, i_k);
    const std::size_t rq = rank(f, q_k);
    r.require(ri == tilde.dim(k), "inclusion is not injective in degree " + std::to_string(k));
    r.require(rq == mu.dim(k), "quotient is not surjective in degree " + std::to_string(k));
    r.require(ri + rq == hat.dim(k), "sequence is not exact in the middle in degree " + std::to_string(k));
  }

  out.tilde = betti(f, tilde);
  out.hat = betti(f, hat);
  out.mu = betti(f, mu);
  r.require(euler_characteristic(tilde) + euler_characteristic(mu) == euler_characteristic(hat),
            "Euler characteristics of the complexes do not add");
  r.require(euler_characteristic(out.tilde) + euler_characteristic(out.mu) == euler_characteristic(out.hat),
            "Euler characteristics of the cohomology do not add");
  for (int k = lo; k <= hi; ++k) {
    auto get = [k](const BettiTable& b) { return b.count(k) ? b.at(k) : std::size_t{0}; };
    r.require(get(out.hat) <= get(out.tilde) + get(out.mu), "hat cohomology too large in degree " + std::to_string(k));
  }
  return out;
}

}  // namespace multipath
