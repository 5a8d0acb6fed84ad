#include "multipath/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace multipath::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, std::vector<std::uint64_t>((cols + 63) / 64 + 1, 0)) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (v) {
    data_[r][c / 64] |= mask;
  } else {
    data_[r][c / 64] &= ~mask;
  }
}

namespace {

using Row = std::vector<std::uint64_t>;

bool bit(const Row& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1u; }

void xor_into(Row& dst, const Row& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && bit(rows[i], c)) xor_into(rows[i], rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  auto rows = data_;
  return reduce(rows, cols_).size();
}

std::optional<std::vector<std::uint8_t>> solve(const BitMatrix& a, const std::vector<std::uint8_t>& b) {
  if (b.size() != a.rows_) throw std::invalid_argument("right-hand side has the wrong length");
  // augmented column sits at index cols_
  auto rows = a.data_;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (b[r] & 1u) rows[r][a.cols_ / 64] ^= std::uint64_t{1} << (a.cols_ % 64);
  }
  auto pivots = reduce(rows, a.cols_ + 1);
  if (!pivots.empty() && pivots.back() == a.cols_) return std::nullopt;
  std::vector<std::uint8_t> x(a.cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = bit(rows[i], a.cols_) ? 1 : 0;
  return x;
}

}  // namespace multipath::gf2
