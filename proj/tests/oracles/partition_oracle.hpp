#pragma once

// Partitions of m in reverse lexicographic order, by plain recursion.

#include <algorithm>
#include <vector>

namespace knots::oracle {

inline void partitions_rec(int rest, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, cap); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(rest - part, part, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

}  // namespace knots::oracle
