// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace qdiscord::detail {

// Cascade summation; the recursion split is fixed so results do not depend
// on how callers chunk work.
inline double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 16) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace qdiscord::detail
