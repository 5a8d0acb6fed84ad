#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multipath/complex.hpp"
#include "multipath/parallel.hpp"
#include "multipath/sparse_matrix.hpp"

namespace multipath {

/// Degree -> dimension; degrees with zero cohomology are left out.
using BettiTable = std::map<int, std::size_t>;

/// Raised when a computed object breaks an identity that must hold, such as
/// d^2 = 0.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact rank by sparse Gaussian elimination.  The pivot column is the one
/// with the fewest nonzeros and the pivot row the shortest row in it.
template <class F>
std::size_t rank(const F& f, const SparseMatrix<F>& m) {
  using V = typename F::value_type;
  using Row = std::vector<std::pair<std::size_t, V>>;
  std::vector<Row> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, e.value);  // (col,row) order keeps rows sorted
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (const auto& e : m.entries()) col_rows[e.col].insert(e.row);
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!col_rows[c].empty()) queue.emplace(col_rows[c].size(), c);
  }
  auto detach = [&](std::size_t c) { queue.erase({col_rows[c].size(), c}); };
  auto attach = [&](std::size_t c) {
    if (!col_rows[c].empty()) queue.emplace(col_rows[c].size(), c);
  };

  std::size_t r = 0;
  Row merged;
  while (!queue.empty()) {
    const std::size_t c = queue.begin()->second;
    std::size_t p = *col_rows[c].begin();
    for (std::size_t cand : col_rows[c]) {
      if (rows[cand].size() < rows[p].size()) p = cand;
    }
    const Row pivot = rows[p];
    V pivot_inv{};
    for (const auto& [col, v] : pivot) {
      if (col == c) pivot_inv = f.inv(v);
    }
    const std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
    for (std::size_t q : others) {
      if (q == p) continue;
      Row& target = rows[q];
      V factor{};
      for (const auto& [col, v] : target) {
        if (col == c) factor = f.mul(v, pivot_inv);
      }
      // target -= factor * pivot, tracking membership changes per column
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
          merged.push_back(std::move(target[i++]));
        } else if (i == target.size() || pivot[j].first < target[i].first) {
          const std::size_t col = pivot[j].first;
          detach(col);
          col_rows[col].insert(q);
          attach(col);
          merged.emplace_back(col, f.neg(f.mul(factor, pivot[j].second)));
          ++j;
        } else {
          const std::size_t col = target[i].first;
          V v = f.sub(target[i].second, f.mul(factor, pivot[j].second));
          if (f.is_zero(v)) {
            detach(col);
            col_rows[col].erase(q);
            attach(col);
          } else {
            merged.emplace_back(col, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      std::swap(target, merged);
    }
    for (const auto& [col, v] : pivot) {
      detach(col);
      col_rows[col].erase(p);
      attach(col);
    }
    rows[p].clear();
    ++r;
  }
  return r;
}

/// dim H^n = dim C^n - rank d^n - rank d^(n-1).  Throws InvariantError if
/// d^2 != 0.
template <class F>
BettiTable betti(const F& f, const CochainComplex<F>& c) {
  if (auto bad = d_squared_failures(f, c); !bad.empty()) {
    throw InvariantError("d^2 != 0 starting in degree " + std::to_string(c.offset + static_cast<int>(bad.front())));
  }
  std::vector<std::size_t> ranks(c.differentials.size());
  parallel_for(ranks.size(), [&](std::size_t i) { ranks[i] = rank(f, c.differentials[i]); });
  BettiTable out;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::size_t out_rank = i < ranks.size() ? ranks[i] : 0;
    const std::size_t in_rank = i > 0 ? ranks[i - 1] : 0;
    if (out_rank + in_rank > c.dims[i]) throw InvariantError("rank exceeds dimension");
    const std::size_t h = c.dims[i] - out_rank - in_rank;
    if (h != 0) out[c.offset + static_cast<int>(i)] = h;
  }
  return out;
}

/// Sum of (-1)^n dim H^n.
inline long euler_characteristic(const BettiTable& b) {
  long chi = 0;
  for (const auto& [n, d] : b) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  return chi;
}

/// Degreewise sum of two tables.
inline BettiTable operator+(BettiTable a, const BettiTable& b) {
  for (const auto& [n, d] : b) a[n] += d;
  return a;
}

}  // namespace multipath
