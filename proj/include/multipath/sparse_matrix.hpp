#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace multipath {

/// Sparse matrix over a field F.  Entries are kept sorted by (col, row) with
/// no repeated coordinates and no stored zeros.
template <class F>
class SparseMatrix {
 public:
  using value_type = typename F::value_type;

  struct Entry {
    std::size_t row;
    std::size_t col;
    value_type value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Sums repeated coordinates and drops zeros.
  static SparseMatrix from_entries(const F& f, std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
    for (const Entry& e : entries) {
      if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry outside bounds");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
    SparseMatrix m(rows, cols);
    for (Entry& e : entries) {
      if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
        m.entries_.back().value = f.add(m.entries_.back().value, e.value);
      } else {
        m.entries_.push_back(std::move(e));
      }
    }
    std::erase_if(m.entries_, [&](const Entry& e) { return f.is_zero(e.value); });
    return m;
  }

  static SparseMatrix identity(const F& f, std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, f.one()});
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::vector<std::vector<value_type>> to_dense(const F& f) const {
    std::vector<std::vector<value_type>> d(rows_, std::vector<value_type>(cols_, f.zero()));
    for (const Entry& e : entries_) d[e.row][e.col] = e.value;
    return d;
  }

  bool operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Entry& a = entries_[i];
      const Entry& b = o.entries_[i];
      if (a.row != b.row || a.col != b.col || !(a.value == b.value)) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// a * b.
template <class F>
SparseMatrix<F> multiply(const F& f, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  // columns of a, grouped
  std::vector<std::vector<std::size_t>> a_col(a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) a_col[a.entries()[i].col].push_back(i);
  std::vector<typename SparseMatrix<F>::Entry> out;
  for (const auto& eb : b.entries()) {
    for (std::size_t i : a_col[eb.row]) {
      const auto& ea = a.entries()[i];
      out.push_back({ea.row, eb.col, f.mul(ea.value, eb.value)});
    }
  }
  return SparseMatrix<F>::from_entries(f, a.rows(), b.cols(), std::move(out));
}

/// a + scale * b.
template <class F>
SparseMatrix<F> add(const F& f, const SparseMatrix<F>& a, const SparseMatrix<F>& b,
                    const typename F::value_type& scale) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
  auto out = a.entries();
  for (const auto& e : b.entries()) out.push_back({e.row, e.col, f.mul(scale, e.value)});
  return SparseMatrix<F>::from_entries(f, a.rows(), a.cols(), std::move(out));
}

template <class F>
SparseMatrix<F> add(const F& f, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return add(f, a, b, f.one());
}

}  // namespace multipath
