#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace multipath {

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxEdges = 64;

using Vertex = std::uint32_t;

struct Edge {
  Vertex source = 0;
  Vertex target = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Subset of a digraph's edges, one bit per position in the edge order.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet first(std::size_t count) {
    return EdgeSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t edge) const { return (bits_ >> edge) & 1u; }
  constexpr EdgeSet with(std::size_t edge) const { return EdgeSet(bits_ | (std::uint64_t{1} << edge)); }
  constexpr EdgeSet without(std::size_t edge) const { return EdgeSet(bits_ & ~(std::uint64_t{1} << edge)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Number of members strictly preceding `edge` in the edge order.
  constexpr std::size_t count_before(std::size_t edge) const {
    return EdgeSet(bits_ & ((std::uint64_t{1} << edge) - 1)).size();
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  auto operator<=>(const EdgeSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite digraph without self-loops or repeated edges.  Vertices are ordered
/// by index and the edge sequence is always kept in lexicographic
/// (source, target) order, so edge positions double as the edge order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  EdgeSet all_edges() const { return EdgeSet::first(edges_.size()); }

  std::optional<std::size_t> index_of(Edge e) const;

  /// Spanning sub-graph with the given edge subset.
  Digraph spanning_subgraph(EdgeSet edges) const;

  /// Same graph with vertex v renamed to perm[v].
  Digraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Digraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Unoriented multigraph: a digon keeps both of its edges.
struct UnorientedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (min, max), sorted, repeats allowed
};

Digraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Digraph& g);
Digraph read_edge_list_file(const std::string& path);

UnorientedGraph underlying_unoriented(const Digraph& g);

/// True iff phi is injective and sends every edge of g1 onto an edge of g2.
bool is_regular_embedding(std::span<const Vertex> phi, const Digraph& g1, const Digraph& g2);

bool is_connected(const Digraph& g);

/// Brute force over vertex permutations; intended for graphs with few vertices.
bool are_isomorphic(const Digraph& a, const Digraph& b);

/// Coherently oriented line v0 -> v1 -> ... -> vn.
Digraph line_graph(std::size_t n);
/// Coherently oriented polygon on n+1 vertices (n+1 edges); n = 1 is the digon.
Digraph polygon_graph(std::size_t n);

/// True iff g is a coherently oriented line or polygon (the graphs on which
/// non-commutative coefficients extend to the chromatic complexes).
bool is_coherent_line_or_polygon(const Digraph& g);

/// One representative per isomorphism class of digraphs on exactly n vertices.
std::vector<Digraph> enumerate_digraphs(std::size_t n);

}  // namespace multipath
