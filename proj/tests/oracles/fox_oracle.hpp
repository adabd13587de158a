#pragma once

// Knot determinant straight from a pair code, by Fox coloring matrix.  Arcs
// are recounted here rather than taken from the library's presentation.

#include <cstdlib>
#include <utility>
#include <vector>

#include "knots/codes.hpp"

namespace knots::oracle {

inline long long determinant(const PairCode& code) {
  const int n = code.crossings();
  if (n == 0) return 1;
  const int m = code.labels();
  // arc[x] = arc on which label x lies; a new arc begins right after every
  // under passage.  Start counting just after the last under label.
  int last_under = 0;
  for (int x = m; x >= 1; --x) {
    if (!code.is_over(x)) {
      last_under = x;
      break;
    }
  }
  std::vector<int> arc(static_cast<std::size_t>(m + 1), -1);
  int current = -1;
  for (int k = 1; k <= m; ++k) {
    const int x = wrap_label(last_under + k, m);
    if (k == 1) current = 0;
    arc[static_cast<std::size_t>(x)] = current;
    if (!code.is_over(x) && k < m) ++current;
  }
  // Under label u ends the arc holding u and begins the one holding u+1.
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  int row = 0;
  for (const Pair& p : code.pairs()) {
    auto& r = a[static_cast<std::size_t>(row++)];
    r[static_cast<std::size_t>(arc[static_cast<std::size_t>(p.over)])] += 2;
    r[static_cast<std::size_t>(arc[static_cast<std::size_t>(p.under)])] -= 1;
    r[static_cast<std::size_t>(arc[static_cast<std::size_t>(wrap_label(p.under + 1, m))])] -= 1;
  }
  // Delete the last row and column, then Bareiss elimination.
  const int k = n - 1;
  if (k == 0) return 1;
  std::vector<std::vector<long long>> b(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  long long sign = 1;
  long long prev = 1;
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && b[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(c)]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) {
        auto& bij = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        bij = (bij * b[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] -
               b[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]) /
              prev;
      }
    }
    prev = b[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
  }
  return std::llabs(sign * prev);
}

}  // namespace knots::oracle
