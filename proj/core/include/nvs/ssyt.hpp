#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nvs/partition.hpp"

namespace nvs {

struct Tableau {
  SkewShape shape;
  std::vector<Cell> cells;    // row-major
  std::vector<int> entries;   // parallel to cells
  int entry(std::size_t idx) const { return entries[idx]; }
};

// Semi-standard fillings with entries in [M]: rows weakly increase,
// columns strictly increase.  Lexicographic order over the row-major
// entry vector; single-consumer cursor.
class SsytStream {
 public:
  SsytStream(SkewShape shape, int max_entry);
  std::optional<Tableau> next();

 private:
  bool fill_min_from(std::size_t idx);
  int min_value_at(std::size_t idx) const;

  SkewShape shape_;
  int max_;
  std::vector<Cell> cells_;
  std::vector<int> left_, up_;  // neighbor indices or -1
  std::vector<int> vals_;
  bool exhausted_ = false, started_ = false;
};

template <class F>
void for_each_ssyt(const SkewShape& shape, int max_entry, F&& fn) {
  SsytStream stream(shape, max_entry);
  while (auto t = stream.next()) fn(*t);
}

std::uint64_t ssyt_count(const SkewShape& shape, int max_entry);

}  // namespace nvs
