#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "common.hpp"

namespace flagdim {

/// Rank of a dense rational matrix by Gaussian elimination in exact
/// arithmetic (no pivot-size concerns over Q); consumes its argument.
inline std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat factor = rows[r][col] / rows[next][col];
      for (std::size_t c = col; c < ncols; ++c) {
        rows[r][c] -= factor * rows[next][c];
      }
    }
    ++next;
  }
  return next;
}

}  // namespace flagdim
