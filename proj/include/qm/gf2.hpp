#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qm::gf2 {

// Bit-packed row over GF(2) with one extra right-hand-side bit.
class Row {
 public:
  explicit Row(std::size_t columns) : bits_((columns + 64) / 64, 0), columns_(columns) {}

  void flip(std::size_t col) { bits_[col >> 6] ^= std::uint64_t{1} << (col & 63); }
  bool get(std::size_t col) const { return bits_[col >> 6] >> (col & 63) & 1; }
  void flip_rhs() { flip(columns_); }
  bool rhs() const { return get(columns_); }
  Row& operator^=(const Row& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
  }
  // Lowest set coefficient column, or columns() if the coefficient part is zero.
  std::size_t leading() const;
  std::size_t columns() const { return columns_; }

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t columns_;
};

// Online Gaussian elimination: rows are reduced as they arrive, so only pivot rows are stored.
class System {
 public:
  explicit System(std::size_t unknowns) : unknowns_(unknowns), pivot_of_(unknowns, npos) {}

  Row new_row() const { return Row(unknowns_); }
  // Returns false once the system has become inconsistent.
  bool add(Row row);
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }
  // Some solution (free variables set to zero).
  std::optional<std::vector<std::uint8_t>> solve() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t unknowns_;
  std::vector<Row> pivots_;
  std::vector<std::size_t> pivot_of_;
  bool consistent_ = true;
};

}  // namespace qm::gf2
