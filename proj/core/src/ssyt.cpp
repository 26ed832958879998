#include "nvs/ssyt.hpp"

#include <algorithm>

namespace nvs {

SsytStream::SsytStream(SkewShape shape, int max_entry)
    : shape_(std::move(shape)), max_(max_entry) {
  cells_ = shape_.cells();
  vals_.assign(cells_.size(), 0);
  left_.assign(cells_.size(), -1);
  up_.assign(cells_.size(), -1);
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    Cell c = cells_[k];
    for (std::size_t j = 0; j < k; ++j) {
      if (cells_[j].row == c.row && cells_[j].col == c.col - 1)
        left_[k] = static_cast<int>(j);
      if (cells_[j].row == c.row - 1 && cells_[j].col == c.col)
        up_[k] = static_cast<int>(j);
    }
  }
}

int SsytStream::min_value_at(std::size_t idx) const {
  int lo = 1;
  if (left_[idx] >= 0) lo = std::max(lo, vals_[static_cast<std::size_t>(left_[idx])]);
  if (up_[idx] >= 0) lo = std::max(lo, vals_[static_cast<std::size_t>(up_[idx])] + 1);
  return lo;
}

bool SsytStream::fill_min_from(std::size_t idx) {
  for (std::size_t k = idx; k < cells_.size(); ++k) {
    int lo = min_value_at(k);
    if (lo > max_) return false;
    vals_[k] = lo;
  }
  return true;
}

std::optional<Tableau> SsytStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_min_from(0)) {
      exhausted_ = true;
      return std::nullopt;
    }
    return Tableau{shape_, cells_, vals_};
  }
  // odometer: bump the rightmost cell that can grow, re-minimize the rest
  std::size_t k = cells_.size();
  while (k-- > 0) {
    if (vals_[k] < max_) {
      ++vals_[k];
      if (fill_min_from(k + 1)) return Tableau{shape_, cells_, vals_};
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

std::uint64_t ssyt_count(const SkewShape& shape, int max_entry) {
  std::uint64_t n = 0;
  for_each_ssyt(shape, max_entry, [&](const Tableau&) { ++n; });
  return n;
}

}  // namespace nvs
