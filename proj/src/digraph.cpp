#include "multipath/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace multipath {

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ > kMaxVertices) {
    throw ValidationError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  if (edges_.size() > kMaxEdges) {
    throw ValidationError("at most " + std::to_string(kMaxEdges) + " edges are supported");
  }
  for (const Edge& e : edges_) {
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw ValidationError("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) +
                            " references a vertex outside 0.." + std::to_string(vertex_count_) + "-1");
    }
    if (e.source == e.target) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.source));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge " + std::to_string(dup->source) + "->" +
                          std::to_string(dup->target));
  }
}

std::optional<std::size_t> Digraph::index_of(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Digraph Digraph::spanning_subgraph(EdgeSet edges) const {
  std::vector<Edge> kept;
  for (std::size_t i : edges.members()) {
    if (i >= edges_.size()) throw ValidationError("edge subset exceeds the edge count");
    kept.push_back(edges_[i]);
  }
  return Digraph(vertex_count_, std::move(kept));
}

Digraph Digraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != vertex_count_) throw ValidationError("relabeling has the wrong size");
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.push_back({perm[e.source], perm[e.target]});
  return Digraph(vertex_count_, std::move(moved));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::uint64_t> parse_natural(std::string_view word) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto words = split_words(line);
    if (!vertices) {
      if (words.size() != 2 || words[0] != "vertices") {
        throw ParseError(line_no, "expected 'vertices N'");
      }
      auto n = parse_natural(words[1]);
      if (!n) throw ParseError(line_no, "vertex count is not a natural number");
      if (*n > kMaxVertices) throw ParseError(line_no, "too many vertices");
      vertices = static_cast<std::size_t>(*n);
    } else {
      if (words.size() != 2) throw ParseError(line_no, "expected 'u v'");
      auto u = parse_natural(words[0]);
      auto v = parse_natural(words[1]);
      if (!u || !v) throw ParseError(line_no, "vertex index is not a natural number");
      if (*u >= *vertices || *v >= *vertices) throw ParseError(line_no, "vertex index out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
      const Edge e{static_cast<Vertex>(*u), static_cast<Vertex>(*v)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError(line_no, "duplicate edge");
      edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
    }
  }
  if (!vertices) throw ParseError(line_no, "missing 'vertices N' header");
  return Digraph(*vertices, std::move(edges));
}

std::string serialize_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << '\n';
  return out.str();
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

UnorientedGraph underlying_unoriented(const Digraph& g) {
  UnorientedGraph u{g.vertex_count(), {}};
  for (const Edge& e : g.edges()) {
    u.edges.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
  }
  std::sort(u.edges.begin(), u.edges.end());
  return u;
}

bool is_regular_embedding(std::span<const Vertex> phi, const Digraph& g1, const Digraph& g2) {
  if (phi.size() != g1.vertex_count()) return false;
  std::set<Vertex> image;
  for (Vertex v : phi) {
    if (v >= g2.vertex_count() || !image.insert(v).second) return false;
  }
  for (const Edge& e : g1.edges()) {
    if (!g2.index_of({phi[e.source], phi[e.target]})) return false;
  }
  return true;
}

bool is_connected(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t groups = n;
  for (const Edge& e : g.edges()) {
    auto a = find(e.source);
    auto b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (is_regular_embedding(perm, a, b)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Digraph line_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1)});
  return Digraph(n + 1, std::move(edges));
}

Digraph polygon_graph(std::size_t n) {
  if (n == 0) throw ValidationError("polygon needs at least one step");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1)});
  edges.push_back({Vertex(n), Vertex(0)});
  return Digraph(n + 1, std::move(edges));
}

bool is_coherent_line_or_polygon(const Digraph& g) {
  if (!is_connected(g)) return false;
  const std::size_t n = g.vertex_count();
  std::vector<int> in(n, 0), out(n, 0);
  for (const Edge& e : g.edges()) {
    ++out[e.source];
    ++in[e.target];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] > 1 || out[v] > 1) return false;
  }
  // connected with in/out degree <= 1: a directed path or a directed cycle
  return g.edge_count() + 1 == n || g.edge_count() == n;
}

std::vector<Digraph> enumerate_digraphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) slots.push_back({u, v});
    }
  }
  if (slots.size() > 20) throw ValidationError("digraph enumeration is limited to 5 vertices");

  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // slot index lookup: u * n + v -> slot
  std::vector<std::size_t> slot_of(n * n, 0);
  for (std::size_t s = 0; s < slots.size(); ++s) slot_of[slots[s].source * n + slots[s].target] = s;

  std::vector<Digraph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const Edge& e = slots[std::countr_zero(rest)];
        image |= std::uint64_t{1} << slot_of[p[e.source] * n + p[e.target]];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) edges.push_back(slots[std::countr_zero(rest)]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace multipath
