#pragma once

// Shadows (pair codes with over/under forgotten) and the loop-parity
// realizability test.
//
// A shadow is a 4-regular graph: one vertex per double point, one arc per
// label x running from passage x to passage x+1.  A loop is a simple cycle in
// that graph.  At each visited double point a loop either passes straight
// through one strand or turns the corner from one strand to the other.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "knots/codes.hpp"

namespace knots {

class Shadow {
 public:
  Shadow() = default;

  /// Builds the involution from explicit two-element sets.  Requires labels
  /// 1..2n exactly once; parity is not checked here.
  static Shadow from_pairs(std::span<const Pair> pairs);

  /// f(i) = j pairs 2i-1 with 2j (1-based values).
  static Shadow from_f(std::span<const int> f);

  static Shadow of(const PairCode& code);

  int crossings() const noexcept { return n_; }
  int labels() const noexcept { return 2 * n_; }

  int partner(int label) const noexcept {
    return h_[static_cast<std::size_t>(wrap_label(label, 2 * n_) - 1)];
  }

  /// Parity-valid shadows pair every odd label with an even one.
  bool parity_valid() const noexcept;

  /// f-sequence of a parity-valid shadow.
  std::vector<int> f() const;

  /// Relabeling x -> offset + x (or offset - x when reversed).
  Shadow relabel(int offset, bool reverse) const;

  bool operator==(const Shadow&) const = default;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxLabels> h_{};
};

struct Loop {
  std::uint64_t arcs = 0;      // bit x-1 set when arc x (x -> x+1) is used
  std::uint64_t straight = 0;  // bit x-1 set when the loop passes straight along strand x
  std::uint64_t crossed = 0;   // partners of the straight labels
  std::uint64_t forward = 0;   // bit x-1 set when arc x is traversed from x to x+1
  std::uint32_t vertices = 0;  // bit c set for every visited double point c (0-based)
  std::vector<int> corners;    // smaller label of each double point where the loop turns

  int length() const noexcept;
};

class SharedSegment : public std::logic_error {
 public:
  SharedSegment() : std::logic_error("loops share a segment") {}
};

/// All loops of the shadow, each once, in increasing arc-mask order.
std::vector<Loop> enumerate_loops(const Shadow& s);

bool loops_share_segment(const Loop& a, const Loop& b) noexcept;

/// +1 when the loops cross an even number of times, -1 when odd.  Shared
/// corners do not count.
int intersection_parity(const Shadow& s, const Loop& a, const Loop& b);

bool is_realizable(const Shadow& s);
bool is_realizable(const Shadow& s, std::span<const Loop> loops);

/// Loops that turn at every visited double point and leave the rest of the
/// diagram on one side.  Their arcs are the sites for upward second moves.
std::vector<Loop> free_loops(const Shadow& s);
std::vector<Loop> free_loops(const Shadow& s, std::span<const Loop> loops);

/// Labels x whose arc belongs to the loop, in increasing order.
std::vector<int> loop_arcs(const Loop& loop, int label_count);

}  // namespace knots
