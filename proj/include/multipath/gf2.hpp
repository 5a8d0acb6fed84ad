#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace multipath::gf2 {

/// Dense matrix over GF(2), one bit-packed word vector per row.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r][c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) { data_[r][c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::size_t rank() const;

 private:
  friend std::optional<std::vector<std::uint8_t>> solve(const BitMatrix&, const std::vector<std::uint8_t>&);

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> data_;
};

/// A solution x of a x = b, with every free variable set to 0, or nothing if
/// the system is inconsistent.
std::optional<std::vector<std::uint8_t>> solve(const BitMatrix& a, const std::vector<std::uint8_t>& b);

}  // namespace multipath::gf2
