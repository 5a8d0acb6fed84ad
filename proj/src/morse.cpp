#include "multipath/morse.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace multipath {

bool reversed_hasse_has_cycle(const SubgraphPoset& p, const Matching& m) {
  // matched coverings point down, the rest point up
  std::vector<std::vector<std::size_t>> adj(p.size());
  std::vector<std::uint8_t> matched(p.coverings().size(), 0);
  for (const auto& [lo, hi] : m) {
    auto c = p.covering_index(lo, hi);
    if (!c) throw std::invalid_argument("matched pair is not a covering");
    matched[*c] = 1;
  }
  for (std::size_t c = 0; c < p.coverings().size(); ++c) {
    const Covering& k = p.coverings()[c];
    if (matched[c]) {
      adj[k.upper].push_back(k.lower);
    } else {
      adj[k.lower].push_back(k.upper);
    }
  }

  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> color(p.size(), white);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < p.size(); ++root) {
    if (color[root] != white) continue;
    stack.push_back({root, 0});
    color[root] = grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (color[w] == grey) return true;
        if (color[w] == white) {
          color[w] = grey;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = black;
        stack.pop_back();
      }
    }
  }
  return false;
}

MatchingCheck verify_matching(const SubgraphPoset& p, const Matching& m) {
  std::vector<std::uint8_t> used(p.size(), 0);
  for (const auto& [lo, hi] : m) {
    if (!p.covering_index(lo, hi)) throw std::invalid_argument("matched pair is not a covering");
    if (used[lo] || used[hi]) {
      return {false, "element " + std::to_string(used[lo] ? lo : hi) + " is matched twice"};
    }
    used[lo] = used[hi] = 1;
  }
  if (reversed_hasse_has_cycle(p, m)) return {false, "matching has a cycle"};
  return {};
}

std::vector<std::size_t> critical_cells(const SubgraphPoset& p, const Matching& m) {
  std::vector<std::size_t> out(p.size() == 0 ? 0 : p.max_level() + 1, 0);
  std::vector<std::uint8_t> used(p.size(), 0);
  for (const auto& [lo, hi] : m) used[lo] = used[hi] = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!used[i]) ++out[p.level(i)];
  }
  return out;
}

std::optional<BettiTable> shortcut_homology(const SubgraphPoset& p, const Matching& m) {
  auto cells = critical_cells(p, m);
  BettiTable out;
  for (std::size_t lvl = 0; lvl < cells.size(); ++lvl) {
    if (cells[lvl] != 0) out[static_cast<int>(lvl)] = cells[lvl];
  }
  if (out.size() > 1) return std::nullopt;
  return out;
}

Matching greedy_matching(const SubgraphPoset& p) {
  Matching m;
  std::vector<std::uint8_t> used(p.size(), 0);
  for (const Covering& c : p.coverings()) {
    if (used[c.lower] || used[c.upper]) continue;
    m.emplace_back(c.lower, c.upper);
    if (reversed_hasse_has_cycle(p, m)) {
      m.pop_back();
      continue;
    }
    used[c.lower] = used[c.upper] = 1;
  }
  return m;
}

Matching parse_matching(const SubgraphPoset& p, std::string_view text) {
  Matching m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto element = [&](const std::string& word) {
    std::string_view w = word;
    if (w.starts_with("0x") || w.starts_with("0X")) w.remove_prefix(2);
    std::uint64_t bits = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), bits, 16);
    if (ec != std::errc() || ptr != w.data() + w.size() || w.empty()) {
      throw ParseError(line_no, "'" + word + "' is not a hexadecimal edge set");
    }
    auto i = p.index_of(EdgeSet(bits));
    if (!i) throw ParseError(line_no, "'" + word + "' is not an element of the poset");
    return *i;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string a, b, extra;
    if (!(words >> a)) continue;
    if (!(words >> b) || (words >> extra)) throw ParseError(line_no, "expected 'lower upper'");
    const std::size_t lo = element(a);
    const std::size_t hi = element(b);
    if (!p.covering_index(lo, hi)) throw ParseError(line_no, "pair is not a covering");
    m.emplace_back(lo, hi);
  }
  return m;
}

std::string serialize_matching(const SubgraphPoset& p, const Matching& m) {
  std::ostringstream out;
  char buf[32];
  for (const auto& [lo, hi] : m) {
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(p.element(lo).bits()));
    out << buf << ' ';
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(p.element(hi).bits()));
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace multipath
