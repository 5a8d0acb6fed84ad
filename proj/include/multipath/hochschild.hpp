#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multipath/chromatic.hpp"
#include "multipath/homology.hpp"

namespace multipath {

inline constexpr std::size_t kMaxBarDegree = 6;
inline constexpr std::size_t kMaxBarAlgebraDim = 4;

/// Boundary b: M (x) A^n -> M (x) A^(n-1) of the bar complex, n >= 1, with
/// b(m, a1..an) = (m a1, a2..an) + sum_i (-1)^i (m, .., a_i a_{i+1}, ..)
///              + (-1)^n (an m, a1..a_{n-1}).
/// Basis indices are mixed radix with the M factor most significant.
template <class F>
SparseMatrix<F> bar_boundary(const F& f, const Coefficients<F>& co, std::size_t n) {
  if (n == 0) throw std::invalid_argument("bar boundary starts in degree 1");
  const std::size_t da = co.dim_a;
  const std::size_t dm = co.dim_m;
  std::size_t cols = dm, rows = dm;
  for (std::size_t i = 0; i < n; ++i) cols *= da;
  for (std::size_t i = 0; i + 1 < n; ++i) rows *= da;

  std::vector<typename SparseMatrix<F>::Entry> entries;
  std::vector<std::size_t> digits(n + 1);  // digits[0] in M, digits[1..n] in A
  std::vector<std::size_t> out(n);
  auto encode = [&]() {
    std::size_t idx = out[0];
    for (std::size_t i = 1; i < n; ++i) idx = idx * da + out[i];
    return idx;
  };
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rest = col;
    for (std::size_t pos = n; pos >= 1; --pos) {
      digits[pos] = rest % da;
      rest /= da;
    }
    digits[0] = rest;

    // i = 0: m . a1
    for (const auto& [k, v] : co.right[digits[0] * da + digits[1]]) {
      out[0] = k;
      for (std::size_t i = 2; i <= n; ++i) out[i - 1] = digits[i];
      entries.push_back({encode(), col, v});
    }
    // 1 <= i <= n-1: a_i a_{i+1}
    for (std::size_t i = 1; i < n; ++i) {
      for (const auto& [k, v] : co.mult[digits[i] * da + digits[i + 1]]) {
        std::size_t w = 0;
        for (std::size_t pos = 0; pos <= n; ++pos) {
          if (pos == i + 1) continue;
          out[w++] = pos == i ? k : digits[pos];
        }
        entries.push_back({encode(), col, i % 2 ? f.neg(v) : v});
      }
    }
    // i = n: a_n . m moved to the front
    for (const auto& [k, v] : co.left[digits[n] * dm + digits[0]]) {
      out[0] = k;
      for (std::size_t i = 1; i < n; ++i) out[i] = digits[i];
      entries.push_back({encode(), col, n % 2 ? f.neg(v) : v});
    }
  }
  return SparseMatrix<F>::from_entries(f, rows, cols, std::move(entries));
}

/// dim HH_n(A, M) for n = 0..max_degree.  Throws ValidationError past the
/// size caps and InvariantError if b b != 0.
template <class F>
std::vector<std::size_t> hh_dims(const F& f, const Coefficients<F>& co, std::size_t max_degree) {
  if (max_degree > kMaxBarDegree) throw ValidationError("bar complex degree is capped at " + std::to_string(kMaxBarDegree));
  if (co.dim_a > kMaxBarAlgebraDim) {
    throw ValidationError("bar complex algebra dimension is capped at " + std::to_string(kMaxBarAlgebraDim));
  }
  // b[n] for n = 1..max_degree+1
  std::vector<SparseMatrix<F>> b(max_degree + 2);
  for (std::size_t n = 1; n <= max_degree + 1; ++n) b[n] = bar_boundary(f, co, n);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    if (!multiply(f, b[n], b[n + 1]).is_zero()) throw InvariantError("bar complex has b^2 != 0");
  }
  std::vector<std::size_t> ranks(max_degree + 2, 0);
  parallel_for(max_degree + 1, [&](std::size_t i) { ranks[i + 1] = rank(f, b[i + 1]); });
  std::vector<std::size_t> out;
  std::size_t dim = co.dim_m;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    out.push_back(dim - ranks[n] - ranks[n + 1]);
    dim *= co.dim_a;
  }
  return out;
}

struct PolygonReport {
  CheckResult check;
  BettiTable multipath;          // cohomology of P_n
  std::vector<std::size_t> hh;   // HH_0 .. HH_{n-1}
};

/// dim H^i of the multipath complex of P_n equals dim HH_{n-i}(A, M) for
/// i = 1..n.
template <class F>
PolygonReport check_polygon_theorem(const F& f, const Coefficients<F>& co, std::size_t n) {
  if (n == 0) throw ValidationError("polygon needs n >= 1");
  PolygonReport out;
  out.multipath = betti(f, build_multipath_complex(f, polygon_graph(n), co));
  out.hh = hh_dims(f, co, n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const int deg = static_cast<int>(i);
    const std::size_t h = out.multipath.count(deg) ? out.multipath.at(deg) : 0;
    out.check.require(h == out.hh[n - i], "degree " + std::to_string(i) + ": multipath " + std::to_string(h) +
                                              ", Hochschild " + std::to_string(out.hh[n - i]));
  }
  return out;
}

}  // namespace multipath
