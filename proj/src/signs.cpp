#include "multipath/signs.hpp"

#include <stdexcept>

#include "multipath/gf2.hpp"

namespace multipath {

std::uint8_t sigma_e(const SubgraphPoset& p, std::size_t covering, Vertex base) {
  const Covering& c = p.coverings().at(covering);
  auto [s, t] = source_target_index(p.graph(), p.element(c.lower), c.edge, base);
  if (s == t) throw std::invalid_argument("edge does not join two components");
  return static_cast<std::uint8_t>(t > s ? (t + 1) % 2 : s % 2);
}

std::uint8_t sigma_e(const SubgraphPoset& p, std::size_t lower, std::size_t upper, Vertex base) {
  auto c = p.covering_index(lower, upper);
  if (!c) throw std::invalid_argument("pair is not a covering");
  return sigma_e(p, *c, base);
}

SignAssignment sigma_e_assignment(const SubgraphPoset& p, Vertex base) {
  SignAssignment out(p.coverings().size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = sigma_e(p, c, base);
  return out;
}

std::uint8_t lex_sign(const SubgraphPoset& p, std::size_t covering) {
  const Covering& c = p.coverings().at(covering);
  return static_cast<std::uint8_t>(p.element(c.lower).count_before(c.edge) % 2);
}

std::uint8_t lex_sign(const SubgraphPoset& p, std::size_t lower, std::size_t upper) {
  auto c = p.covering_index(lower, upper);
  if (!c) throw std::invalid_argument("pair is not a covering");
  return lex_sign(p, *c);
}

SignAssignment lex_assignment(const SubgraphPoset& p) {
  SignAssignment out(p.coverings().size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = lex_sign(p, c);
  return out;
}

SignAssignment make_assignment(const SubgraphPoset& p, SignChoice choice, Vertex base) {
  return choice == SignChoice::sigma ? sigma_e_assignment(p, base) : lex_assignment(p);
}

SignCheck verify_sign(const SubgraphPoset& p, const SignAssignment& eps) {
  if (eps.size() != p.coverings().size()) {
    throw std::invalid_argument("sign assignment does not cover every covering");
  }
  SignCheck out;
  auto squares = p.squares();
  for (std::size_t i = 0; i < squares.size(); ++i) {
    unsigned sum = 0;
    for (std::size_t c : squares[i].covers) sum += eps[c];
    if (sum % 2 == 0) out.violated_squares.push_back(i);
  }
  out.ok = out.violated_squares.empty();
  return out;
}

std::optional<std::vector<std::uint8_t>> find_sign_isomorphism(const SubgraphPoset& p,
                                                               const SignAssignment& eps,
                                                               const SignAssignment& eps_prime) {
  const auto& covs = p.coverings();
  if (eps.size() != covs.size() || eps_prime.size() != covs.size()) {
    throw std::invalid_argument("sign assignment does not cover every covering");
  }
  gf2::BitMatrix a(covs.size(), p.size());
  std::vector<std::uint8_t> b(covs.size());
  for (std::size_t c = 0; c < covs.size(); ++c) {
    a.set(c, covs[c].lower, true);
    a.set(c, covs[c].upper, true);
    b[c] = static_cast<std::uint8_t>((eps[c] ^ eps_prime[c]) & 1u);
  }
  return gf2::solve(a, b);
}

PosetCW poset_cw(const SubgraphPoset& p) {
  PosetCW cw;
  cw.vertex_count = p.size();
  for (const Covering& c : p.coverings()) cw.edges.emplace_back(c.lower, c.upper);
  for (const Square& s : p.squares()) cw.faces.push_back(s.covers);
  return cw;
}

std::array<std::size_t, 3> cw_z2_cohomology_dims(const PosetCW& cw) {
  const std::size_t n0 = cw.vertex_count;
  const std::size_t n1 = cw.edges.size();
  const std::size_t n2 = cw.faces.size();
  gf2::BitMatrix d0(n1, n0);
  for (std::size_t i = 0; i < n1; ++i) {
    d0.flip(i, cw.edges[i].first);
    d0.flip(i, cw.edges[i].second);
  }
  gf2::BitMatrix d1(n2, n1);
  for (std::size_t f = 0; f < n2; ++f) {
    for (std::size_t e : cw.faces[f]) d1.flip(f, e);
  }
  const std::size_t r0 = d0.rank();
  const std::size_t r1 = d1.rank();
  return {n0 - r0, n1 - r0 - r1, n2 - r1};
}

std::array<std::size_t, 3> cw_z2_cohomology_dims(const SubgraphPoset& p) {
  return cw_z2_cohomology_dims(poset_cw(p));
}

}  // namespace multipath
