#include "knots/planarity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace knots {

Shadow Shadow::from_pairs(std::span<const Pair> pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n > kMaxCrossings) throw CodeError(CodeErrc::TooManyCrossings, "shadow too large");
  Shadow s;
  s.n_ = n;
  std::array<bool, kMaxLabels + 1> seen{};
  for (const Pair& p : pairs) {
    for (int label : {p.over, p.under}) {
      if (label < 1 || label > 2 * n) throw CodeError(CodeErrc::LabelOutOfRange, std::to_string(label));
      if (seen[static_cast<std::size_t>(label)]) throw CodeError(CodeErrc::DuplicateLabel, std::to_string(label));
      seen[static_cast<std::size_t>(label)] = true;
    }
    s.h_[static_cast<std::size_t>(p.over - 1)] = static_cast<std::int8_t>(p.under);
    s.h_[static_cast<std::size_t>(p.under - 1)] = static_cast<std::int8_t>(p.over);
  }
  return s;
}

Shadow Shadow::from_f(std::span<const int> f) {
  std::vector<Pair> pairs;
  pairs.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) pairs.push_back({2 * static_cast<int>(i) + 1, 2 * f[i]});
  return from_pairs(pairs);
}

Shadow Shadow::of(const PairCode& code) {
  Shadow s;
  s.n_ = code.crossings();
  for (int x = 1; x <= code.labels(); ++x) {
    s.h_[static_cast<std::size_t>(x - 1)] = static_cast<std::int8_t>(code.partner(x));
  }
  return s;
}

bool Shadow::parity_valid() const noexcept {
  for (int x = 1; x <= 2 * n_; ++x) {
    if ((x + partner(x)) % 2 == 0) return false;
  }
  return true;
}

std::vector<int> Shadow::f() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = partner(2 * i - 1) / 2;
  return out;
}

Shadow Shadow::relabel(int offset, bool reverse) const {
  Shadow s;
  s.n_ = n_;
  const int m = 2 * n_;
  for (int x = 1; x <= m; ++x) {
    const int nx = wrap_label(reverse ? offset - x : offset + x, m);
    const int np = wrap_label(reverse ? offset - partner(x) : offset + partner(x), m);
    s.h_[static_cast<std::size_t>(nx - 1)] = static_cast<std::int8_t>(np);
  }
  return s;
}

int Loop::length() const noexcept { return std::popcount(arcs); }

namespace {

struct Graph {
  int m = 0;
  std::array<int, kMaxLabels + 1> vertex{};  // label -> double point index
};

Graph build_graph(const Shadow& s) {
  Graph g;
  g.m = s.labels();
  int next = 0;
  std::array<int, kMaxLabels + 1> seen{};
  seen.fill(-1);
  for (int x = 1; x <= g.m; ++x) {
    const int low = std::min(x, s.partner(x));
    if (seen[static_cast<std::size_t>(low)] < 0) seen[static_cast<std::size_t>(low)] = next++;
    g.vertex[static_cast<std::size_t>(x)] = seen[static_cast<std::size_t>(low)];
  }
  return g;
}

// One end of an arc: the label where it touches its double point, and the
// label at its other end.
struct End {
  int arc;
  int here;
  int there;
  bool forward;
};

class LoopSearch {
 public:
  LoopSearch(const Shadow& s) : s_(s), g_(build_graph(s)) {}

  std::vector<Loop> run() {
    const int m = g_.m;
    for (int a = 1; a <= m; ++a) {
      start_arc_ = a;
      start_label_ = a;
      const int head = wrap_label(a + 1, m);
      start_vertex_ = g_.vertex[static_cast<std::size_t>(a)];
      Loop loop;
      loop.arcs = bit(a);
      loop.forward = bit(a);
      loop.vertices = 1u << start_vertex_;
      if (g_.vertex[static_cast<std::size_t>(head)] == start_vertex_) {
        close(loop, head);
        continue;
      }
      loop.vertices |= 1u << g_.vertex[static_cast<std::size_t>(head)];
      extend(loop, head);
    }
    std::sort(out_.begin(), out_.end(), [](const Loop& x, const Loop& y) { return x.arcs < y.arcs; });
    return std::move(out_);
  }

 private:
  static std::uint64_t bit(int label) { return 1ull << (label - 1); }

  void mark_pass(Loop& loop, int in_label, int out_label) {
    if (in_label == out_label) {
      loop.straight |= bit(in_label);
      loop.crossed |= bit(s_.partner(in_label));
    } else {
      loop.corners.push_back(std::min(in_label, out_label));
    }
  }

  void close(Loop loop, int arrive_label) {
    mark_pass(loop, arrive_label, start_label_);
    std::sort(loop.corners.begin(), loop.corners.end());
    out_.push_back(std::move(loop));
  }

  // The loop has just arrived at passage `arrive` of some double point.
  void extend(Loop& loop, int arrive) {
    const int m = g_.m;
    const int other = s_.partner(arrive);
    for (int here : {arrive, other}) {
      const End ends[2] = {
          {here, here, wrap_label(here + 1, m), true},
          {wrap_label(here - 1, m), here, wrap_label(here - 1, m), false},
      };
      for (const End& e : ends) {
        if (e.arc <= start_arc_ || (loop.arcs & bit(e.arc))) continue;
        const int v = g_.vertex[static_cast<std::size_t>(e.there)];
        Loop next = loop;
        mark_pass(next, arrive, here);
        next.arcs |= bit(e.arc);
        if (e.forward) next.forward |= bit(e.arc);
        if (v == start_vertex_) {
          close(std::move(next), e.there);
          continue;
        }
        if (loop.vertices & (1u << v)) continue;
        next.vertices |= 1u << v;
        extend(next, e.there);
      }
    }
  }

  const Shadow& s_;
  Graph g_;
  int start_arc_ = 0;
  int start_label_ = 0;
  int start_vertex_ = 0;
  std::vector<Loop> out_;
};

}  // namespace

std::vector<Loop> enumerate_loops(const Shadow& s) {
  if (s.crossings() == 0) return {};
  return LoopSearch(s).run();
}

bool loops_share_segment(const Loop& a, const Loop& b) noexcept { return (a.arcs & b.arcs) != 0; }

int intersection_parity(const Shadow&, const Loop& a, const Loop& b) {
  if (loops_share_segment(a, b)) throw SharedSegment();
  return (std::popcount(a.crossed & b.straight) % 2 == 0) ? 1 : -1;
}

bool is_realizable(const Shadow& s, std::span<const Loop> loops) {
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      if (loops_share_segment(loops[i], loops[j])) continue;
      if (intersection_parity(s, loops[i], loops[j]) < 0) return false;
    }
  }
  return true;
}

bool is_realizable(const Shadow& s) {
  const std::vector<Loop> loops = enumerate_loops(s);
  return is_realizable(s, loops);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Arcs outside the loop, glued at every double point (at the loop's own
// corners only the two unused arcs meet).  One component means the whole
// rest of the diagram sits on a single side of the loop.
bool rest_is_connected(const Shadow& s, const Loop& loop) {
  const int m = s.labels();
  std::vector<int> parent(static_cast<std::size_t>(m + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    parent[static_cast<std::size_t>(find_root(parent, a))] = find_root(parent, b);
  };
  auto free_arc = [&](int x) { return (loop.arcs & (1ull << (x - 1))) == 0; };
  for (int x = 1; x <= m; ++x) {
    const int y = s.partner(x);
    if (x > y) continue;
    const int ends[4] = {wrap_label(x - 1, m), x, wrap_label(y - 1, m), y};
    int first = 0;
    for (int e : ends) {
      if (!free_arc(e)) continue;
      if (first == 0) {
        first = e;
      } else {
        unite(first, e);
      }
    }
  }
  int root = 0;
  for (int x = 1; x <= m; ++x) {
    if (!free_arc(x)) continue;
    const int r = find_root(parent, x);
    if (root == 0) root = r;
    if (r != root) return false;
  }
  return true;
}

}  // namespace

std::vector<Loop> free_loops(const Shadow& s, std::span<const Loop> loops) {
  std::vector<Loop> out;
  for (const Loop& loop : loops) {
    if (loop.straight != 0) continue;
    if (rest_is_connected(s, loop)) out.push_back(loop);
  }
  return out;
}

std::vector<Loop> free_loops(const Shadow& s) {
  const std::vector<Loop> loops = enumerate_loops(s);
  return free_loops(s, loops);
}

std::vector<int> loop_arcs(const Loop& loop, int label_count) {
  std::vector<int> out;
  for (int x = 1; x <= label_count; ++x) {
    if (loop.arcs & (1ull << (x - 1))) out.push_back(x);
  }
  return out;
}

}  // namespace knots
