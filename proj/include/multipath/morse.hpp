#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multipath/homology.hpp"
#include "multipath/path_poset.hpp"

namespace multipath {

/// Matched coverings as (lower, upper) element indices.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

struct MatchingCheck {
  bool ok = true;
  std::string reason;
};

/// Disjointness, then acyclicity of the Hasse graph with matched edges
/// reversed.  Throws std::invalid_argument if a pair is not a covering.
MatchingCheck verify_matching(const SubgraphPoset& p, const Matching& m);

/// True iff the Hasse graph with the matched edges reversed has a directed cycle.
bool reversed_hasse_has_cycle(const SubgraphPoset& p, const Matching& m);

/// Unmatched elements per level, indices 0..max_level.
std::vector<std::size_t> critical_cells(const SubgraphPoset& p, const Matching& m);

/// With one-dimensional coefficients: zero cohomology if nothing is critical,
/// {i: count} if every critical element sits in level i, nothing otherwise.
std::optional<BettiTable> shortcut_homology(const SubgraphPoset& p, const Matching& m);

/// Walks the coverings in canonical order, keeping each one whose endpoints
/// are free and whose addition keeps the matching acyclic.
Matching greedy_matching(const SubgraphPoset& p);

/// One "lower upper" line per pair, edge sets as hexadecimal bit masks.
Matching parse_matching(const SubgraphPoset& p, std::string_view text);
std::string serialize_matching(const SubgraphPoset& p, const Matching& m);

}  // namespace multipath
