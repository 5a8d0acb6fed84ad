#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multipath/digraph.hpp"

namespace multipath {

/// Connected components of the spanning sub-graph (V, edges), ignoring
/// orientation.  Components are numbered by their smallest vertex, except that
/// the component of `base` always gets number 0.
struct ComponentLabels {
  std::vector<std::uint8_t> of_vertex;
  std::size_t count = 0;
};

ComponentLabels component_labels(const Digraph& g, EdgeSet edges, Vertex base = 0);

/// In/out degree at most one and no directed cycle.
bool is_multipath(const Digraph& g, EdgeSet edges);

struct Covering {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t edge = 0;
};

/// bottom < mid1 = bottom + e1, mid2 = bottom + e2 < top, with e1 < e2.
struct Square {
  std::size_t bottom = 0;
  std::size_t mid1 = 0;
  std::size_t mid2 = 0;
  std::size_t top = 0;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  // covering indices: bottom-mid1, mid1-top, bottom-mid2, mid2-top
  std::array<std::size_t, 4> covers{};
};

/// A family of spanning sub-graphs of one digraph, ordered by inclusion.
/// Elements are sorted by (level, edge bits); level is the edge count minus
/// the smallest edge count in the family.  Coverings are sorted by
/// (lower, upper).
class SubgraphPoset {
 public:
  SubgraphPoset() = default;
  static SubgraphPoset from_elements(const Digraph& g, std::vector<EdgeSet> elements);

  const Digraph& graph() const { return graph_; }
  std::size_t size() const { return elements_.size(); }
  EdgeSet element(std::size_t i) const { return elements_[i]; }
  const std::vector<EdgeSet>& elements() const { return elements_; }

  std::size_t min_size() const { return min_size_; }
  std::size_t level(std::size_t i) const { return elements_[i].size() - min_size_; }
  std::size_t max_level() const;
  /// Half-open index range [first, last) of the elements at `level`.
  std::pair<std::size_t, std::size_t> level_range(std::size_t level) const;

  std::optional<std::size_t> index_of(EdgeSet h) const;

  const std::vector<Covering>& coverings() const { return coverings_; }
  const std::vector<std::size_t>& up_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down_covers(std::size_t i) const { return down_[i]; }
  std::optional<std::size_t> covering_index(std::size_t lower, std::size_t upper) const;

  /// All squares, grouped by bottom element in canonical order.
  std::vector<Square> squares() const;

 private:
  Digraph graph_;
  std::vector<EdgeSet> elements_;
  std::size_t min_size_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Covering> coverings_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// P(G): every multipath of g.
SubgraphPoset enumerate_path_poset(const Digraph& g);

/// SSG(G): every spanning sub-graph.  Limited to 20 edges.
SubgraphPoset spanning_subgraph_poset(const Digraph& g);

/// SSG(G) minus P(G).
SubgraphPoset complement_poset(const Digraph& g);

/// Component numbers (in h's component order) of the endpoints of edge `e`.
std::pair<std::size_t, std::size_t> source_target_index(const Digraph& g, EdgeSet h, std::size_t e,
                                                        Vertex base = 0);

/// |P(G)| = 2^|E| and P(G) has a maximum.  Throws ValidationError on a
/// disconnected graph.
bool is_boolean_path_poset(const Digraph& g);

/// Hasse diagram in DOT format; nodes are labelled by their edge lists.
std::string hasse_dot(const SubgraphPoset& p);

}  // namespace multipath
