#include "multipath/path_poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace multipath {

ComponentLabels component_labels(const Digraph& g, EdgeSet edges, Vertex base) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i : edges.members()) {
    const Edge& e = g.edge(i);
    auto a = find(e.source);
    auto b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  ComponentLabels out;
  out.of_vertex.assign(n, 0);
  if (n == 0) return out;
  if (base >= n) throw ValidationError("base vertex out of range");

  // walking vertices in (base first, then index) order meets each component at its key vertex
  std::vector<int> label_of_root(n, -1);
  auto visit = [&](std::size_t v) {
    auto r = find(v);
    if (label_of_root[r] < 0) label_of_root[r] = static_cast<int>(out.count++);
    out.of_vertex[v] = static_cast<std::uint8_t>(label_of_root[r]);
  };
  visit(base);
  for (std::size_t v = 0; v < n; ++v) {
    if (v != base) visit(v);
  }
  return out;
}

bool is_multipath(const Digraph& g, EdgeSet edges) {
  const std::size_t n = g.vertex_count();
  std::vector<int> next(n, -1);
  std::vector<std::uint8_t> has_in(n, 0);
  for (std::size_t i : edges.members()) {
    const Edge& e = g.edge(i);
    if (next[e.source] >= 0 || has_in[e.target]) return false;
    next[e.source] = static_cast<int>(e.target);
    has_in[e.target] = 1;
  }
  // with degrees bounded, a cycle is a loop of `next` with no entry point
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (has_in[v]) continue;
    for (int w = static_cast<int>(v); w >= 0; w = next[w]) seen[w] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) return false;
  }
  return true;
}

SubgraphPoset SubgraphPoset::from_elements(const Digraph& g, std::vector<EdgeSet> elements) {
  SubgraphPoset p;
  p.graph_ = g;
  std::sort(elements.begin(), elements.end(), [](EdgeSet a, EdgeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  p.elements_ = std::move(elements);
  p.min_size_ = p.elements_.empty() ? 0 : p.elements_.front().size();
  for (std::size_t i = 0; i < p.elements_.size(); ++i) p.index_.emplace(p.elements_[i].bits(), i);

  p.up_.assign(p.elements_.size(), {});
  p.down_.assign(p.elements_.size(), {});
  for (std::size_t i = 0; i < p.elements_.size(); ++i) {
    const EdgeSet x = p.elements_[i];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (x.contains(e)) continue;
      auto it = p.index_.find(x.with(e).bits());
      if (it == p.index_.end()) continue;
      const std::size_t c = p.coverings_.size();
      p.coverings_.push_back({i, it->second, e});
      p.up_[i].push_back(c);
      p.down_[it->second].push_back(c);
    }
  }
  return p;
}

std::size_t SubgraphPoset::max_level() const {
  return elements_.empty() ? 0 : level(elements_.size() - 1);
}

std::pair<std::size_t, std::size_t> SubgraphPoset::level_range(std::size_t lvl) const {
  auto lo = std::partition_point(elements_.begin(), elements_.end(),
                                 [&](EdgeSet h) { return h.size() - min_size_ < lvl; });
  auto hi = std::partition_point(lo, elements_.end(),
                                 [&](EdgeSet h) { return h.size() - min_size_ <= lvl; });
  return {static_cast<std::size_t>(lo - elements_.begin()), static_cast<std::size_t>(hi - elements_.begin())};
}

std::optional<std::size_t> SubgraphPoset::index_of(EdgeSet h) const {
  auto it = index_.find(h.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubgraphPoset::covering_index(std::size_t lower, std::size_t upper) const {
  if (lower >= elements_.size()) return std::nullopt;
  for (std::size_t c : up_[lower]) {
    if (coverings_[c].upper == upper) return c;
  }
  return std::nullopt;
}

std::vector<Square> SubgraphPoset::squares() const {
  std::vector<Square> out;
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    const auto& ups = up_[x];
    for (std::size_t a = 0; a < ups.size(); ++a) {
      for (std::size_t b = a + 1; b < ups.size(); ++b) {
        const Covering& c1 = coverings_[ups[a]];
        const Covering& c2 = coverings_[ups[b]];
        auto top = index_of(elements_[x].with(c1.edge).with(c2.edge));
        if (!top) continue;
        Square s;
        s.bottom = x;
        s.mid1 = c1.upper;
        s.mid2 = c2.upper;
        s.top = *top;
        s.e1 = c1.edge;
        s.e2 = c2.edge;
        s.covers = {ups[a], *covering_index(c1.upper, *top), ups[b], *covering_index(c2.upper, *top)};
        out.push_back(s);
      }
    }
  }
  return out;
}

SubgraphPoset enumerate_path_poset(const Digraph& g) {
  std::vector<EdgeSet> found{EdgeSet{}};
  std::unordered_map<std::uint64_t, bool> seen{{0, true}};
  std::deque<EdgeSet> queue{EdgeSet{}};
  while (!queue.empty()) {
    EdgeSet h = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (h.contains(e)) continue;
      EdgeSet next = h.with(e);
      if (seen.count(next.bits())) continue;
      seen.emplace(next.bits(), true);
      if (!is_multipath(g, next)) continue;
      found.push_back(next);
      queue.push_back(next);
    }
  }
  return SubgraphPoset::from_elements(g, std::move(found));
}

SubgraphPoset spanning_subgraph_poset(const Digraph& g) {
  if (g.edge_count() > 20) throw ValidationError("spanning sub-graph posets are limited to 20 edges");
  std::vector<EdgeSet> all;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  all.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) all.emplace_back(m);
  return SubgraphPoset::from_elements(g, std::move(all));
}

SubgraphPoset complement_poset(const Digraph& g) {
  if (g.edge_count() > 20) throw ValidationError("spanning sub-graph posets are limited to 20 edges");
  std::vector<EdgeSet> rest;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!is_multipath(g, EdgeSet(m))) rest.emplace_back(m);
  }
  return SubgraphPoset::from_elements(g, std::move(rest));
}

std::pair<std::size_t, std::size_t> source_target_index(const Digraph& g, EdgeSet h, std::size_t e,
                                                        Vertex base) {
  auto labels = component_labels(g, h, base);
  const Edge& edge = g.edge(e);
  return {labels.of_vertex[edge.source], labels.of_vertex[edge.target]};
}

bool is_boolean_path_poset(const Digraph& g) {
  if (!is_connected(g)) throw ValidationError("graph is not connected");
  if (g.edge_count() > 20) return false;
  auto p = enumerate_path_poset(g);
  return p.size() == (std::size_t{1} << g.edge_count()) && is_multipath(g, g.all_edges());
}

std::string hasse_dot(const SubgraphPoset& p) {
  const Digraph& g = p.graph();
  auto label = [&](EdgeSet h) {
    std::ostringstream s;
    s << '{';
    bool first = true;
    for (std::size_t i : h.members()) {
      if (!first) s << ',';
      first = false;
      s << g.edge(i).source << "->" << g.edge(i).target;
    }
    s << '}';
    return s.str();
  };
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << label(p.element(i)) << "\"];\n";
  }
  for (const Covering& c : p.coverings()) out << "  n" << c.lower << " -> n" << c.upper << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace multipath
