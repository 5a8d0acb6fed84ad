#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multipath/path_poset.hpp"

namespace multipath {

/// One value in {0,1} per covering, indexed like SubgraphPoset::coverings().
using SignAssignment = std::vector<std::uint8_t>;

enum class SignChoice { sigma, lex };

/// Source/target-index sign of a covering of P(G).  Throws if the added edge
/// joins a component to itself, since the formula needs s != t.
std::uint8_t sigma_e(const SubgraphPoset& p, std::size_t covering, Vertex base = 0);
std::uint8_t sigma_e(const SubgraphPoset& p, std::size_t lower, std::size_t upper, Vertex base = 0);
SignAssignment sigma_e_assignment(const SubgraphPoset& p, Vertex base = 0);

/// Parity of the edges of the lower element that precede the added edge.
std::uint8_t lex_sign(const SubgraphPoset& p, std::size_t covering);
std::uint8_t lex_sign(const SubgraphPoset& p, std::size_t lower, std::size_t upper);
SignAssignment lex_assignment(const SubgraphPoset& p);

SignAssignment make_assignment(const SubgraphPoset& p, SignChoice choice, Vertex base = 0);

struct SignCheck {
  bool ok = true;
  std::vector<std::size_t> violated_squares;  // indices into p.squares()
};

/// Odd parity on every square.  Throws std::invalid_argument if the
/// assignment does not cover every covering.
SignCheck verify_sign(const SubgraphPoset& p, const SignAssignment& eps);

/// eta with eta(x) + eps'(x,y) = eps(x,y) + eta(y) on every covering, free
/// variables set to 0; nothing if no such eta exists.
std::optional<std::vector<std::uint8_t>> find_sign_isomorphism(const SubgraphPoset& p,
                                                               const SignAssignment& eps,
                                                               const SignAssignment& eps_prime);

/// Cell structure with 0-cells, 1-cells and 2-cells.  Each 1-cell lists its two
/// vertices; each 2-cell lists its boundary 1-cells.
struct PosetCW {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::array<std::size_t, 4>> faces;
};

PosetCW poset_cw(const SubgraphPoset& p);

/// (dim H^0, dim H^1, dim H^2) over Z/2.
std::array<std::size_t, 3> cw_z2_cohomology_dims(const PosetCW& cw);
std::array<std::size_t, 3> cw_z2_cohomology_dims(const SubgraphPoset& p);

}  // namespace multipath
