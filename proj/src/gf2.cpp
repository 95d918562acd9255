#include "qm/gf2.hpp"

#include <bit>

namespace qm::gf2 {

std::size_t Row::leading() const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    if (w == columns_ >> 6) word &= (std::uint64_t{1} << (columns_ & 63)) - 1;
    if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
    if (w == columns_ >> 6) break;
  }
  return columns_;
}

bool System::add(Row row) {
  if (!consistent_) return false;
  for (;;) {
    std::size_t lead = row.leading();
    if (lead == unknowns_) {
      if (row.rhs()) consistent_ = false;
      return consistent_;
    }
    std::size_t p = pivot_of_[lead];
    if (p == npos) {
      pivot_of_[lead] = pivots_.size();
      pivots_.push_back(std::move(row));
      return true;
    }
    row ^= pivots_[p];
  }
}

std::optional<std::vector<std::uint8_t>> System::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<std::uint8_t> x(unknowns_, 0);
  // pivot rows have distinct leading columns; substitute from the highest leading column down
  for (std::size_t col = unknowns_; col-- > 0;) {
    std::size_t p = pivot_of_[col];
    if (p == npos) continue;
    const Row& r = pivots_[p];
    bool v = r.rhs();
    for (std::size_t j = col + 1; j < unknowns_; ++j)
      if (x[j] && r.get(j)) v = !v;
    x[col] = v;
  }
  return x;
}

}  // namespace qm::gf2
