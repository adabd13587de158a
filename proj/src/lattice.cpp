#include "knots/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace knots {

Word parse_polygon(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size() || v < 1 || v > 6) {
      throw LatticeError(LatticeErrc::AlphabetError,
                         "letter " + std::to_string(w.size() + 1) + " is '" + std::string(tok) + "', expected 1..6");
    }
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string polygon_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Point step(int letter) {
  switch (letter) {
    case 1: return {1, 0, 0};
    case 2: return {0, 1, 0};
    case 3: return {0, 0, 1};
    case 4: return {0, 0, -1};
    case 5: return {0, -1, 0};
    case 6: return {-1, 0, 0};
  }
  throw LatticeError(LatticeErrc::AlphabetError, "letter " + std::to_string(letter) + " outside 1..6");
}

std::vector<Point> vertices(const Word& w) {
  std::vector<Point> out;
  out.reserve(w.size());
  Point p{0, 0, 0};
  for (int a : w) {
    out.push_back(p);
    const Point d = step(a);
    for (int c = 0; c < 3; ++c) p[c] += d[c];
  }
  return out;
}

std::optional<Violation> validate_polygon(const Word& w) {
  using K = Violation::Kind;
  const int n = static_cast<int>(w.size());
  if (n == 0) return Violation{K::Empty, 0, 0, "empty word"};
  for (int i = 0; i < n; ++i) {
    if (w[static_cast<std::size_t>(i)] < 1 || w[static_cast<std::size_t>(i)] > 6) {
      throw LatticeError(LatticeErrc::AlphabetError, "letter " + std::to_string(i + 1) + " outside 1..6");
    }
  }
  std::array<int, 7> count{};
  for (int a : w) ++count[static_cast<std::size_t>(a)];
  if (count[1] != count[6] || count[2] != count[5] || count[3] != count[4]) {
    return Violation{K::Unbalanced, 1, n, "word does not close"};
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (w[static_cast<std::size_t>(j)] == 7 - w[static_cast<std::size_t>(i)]) {
      return Violation{K::Backtrack, i + 1, j + 1,
                       "letters " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " retrace an edge"};
    }
  }
  // A repeated vertex p_i = p_j (i < j) means letters i+1..j sum to zero.
  const std::vector<Point> v = vertices(w);
  std::map<Point, int> seen;
  for (int j = 0; j < n; ++j) {
    auto [it, fresh] = seen.emplace(v[static_cast<std::size_t>(j)], j);
    if (!fresh) {
      const int i = it->second;
      return Violation{K::SelfIntersection, i + 1, j,
                       "sub-word " + std::to_string(i + 1) + ".." + std::to_string(j) + " closes early"};
    }
  }
  return std::nullopt;
}

namespace {

std::optional<Word> checked(Word w) {
  if (validate_polygon(w)) return std::nullopt;
  return w;
}

}  // namespace

std::optional<Word> exchange(const Word& w, std::size_t k) {
  const std::size_t n = w.size();
  if (n < 2 || k >= n) return std::nullopt;
  Word out = w;
  std::swap(out[k], out[(k + 1) % n]);
  return checked(std::move(out));
}

std::optional<Word> pair_create(const Word& w, std::size_t k, int d) {
  if (k >= w.size() || d < 1 || d > 6) return std::nullopt;
  Word out;
  out.reserve(w.size() + 2);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  out.push_back(d);
  out.push_back(w[k]);
  out.push_back(7 - d);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
  return checked(std::move(out));
}

std::optional<Word> pair_annihilate(const Word& w, std::size_t k) {
  const std::size_t n = w.size();
  if (n < 6 || k >= n) return std::nullopt;
  const std::size_t k2 = (k + 2) % n;
  if (w[k2] != 7 - w[k]) return std::nullopt;
  Word out;
  out.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k && i != k2) out.push_back(w[i]);
  }
  return checked(std::move(out));
}

Word rotation_min(const Word& w) {
  Word best = w;
  Word r = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

bool lattice_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return rotation_min(a) < rotation_min(b);
}

const Word& preferred(const Word& a, const Word& b) { return lattice_less(b, a) ? b : a; }

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int a : w) h = (h ^ static_cast<std::size_t>(a)) * 1099511628211ull;
    return h;
  }
};

struct ByPreference {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

}  // namespace

LatticeReduction reduce_lattice(const Word& w, std::size_t length_budget, std::size_t step_budget) {
  if (const auto v = validate_polygon(w)) throw std::invalid_argument("not a polygon: " + v->message);
  LatticeReduction result;
  const Word start = rotation_min(w);
  result.best = start;
  std::priority_queue<Word, std::vector<Word>, ByPreference> frontier;
  std::unordered_set<Word, WordHash> visited;
  frontier.push(start);
  visited.insert(start);

  auto offer = [&](std::optional<Word> next) {
    ++result.steps;
    if (!next || next->size() > length_budget) return;
    Word norm = rotation_min(*next);
    if (!visited.insert(norm).second) return;
    if (lattice_less(norm, result.best)) result.best = norm;
    frontier.push(std::move(norm));
  };

  // Nothing is shorter than a unit square.
  while (!frontier.empty() && result.best.size() > 4) {
    const Word cur = frontier.top();
    frontier.pop();
    const std::size_t n = cur.size();
    for (std::size_t k = 0; k < n; ++k) offer(pair_annihilate(cur, k));
    for (std::size_t k = 0; k < n; ++k) offer(exchange(cur, k));
    if (n + 2 <= length_budget) {
      for (std::size_t k = 0; k < n; ++k) {
        for (int d = 1; d <= 6; ++d) offer(pair_create(cur, k, d));
      }
    }
    if (result.steps >= step_budget) {
      result.exhausted = !frontier.empty();
      break;
    }
  }
  return result;
}

namespace {

using i64 = long long;

struct Seg {
  i64 ax, ay, bx, by;
  i64 da, db;  // depth at the two ends
};

i64 cross(i64 ux, i64 uy, i64 vx, i64 vy) { return ux * vy - uy * vx; }

struct Hit {
  int seg;
  i64 num, den;  // parameter t = num / den along seg, den > 0
  int crossing;
  bool over;
};

// nullopt when the tilt gives a degenerate picture.
std::optional<PairCode> try_projection(const std::vector<Point>& pts, int axis, i64 a, i64 b, i64 K) {
  const int n = static_cast<int>(pts.size());
  const int u = (axis + 1) % 3;
  const int v = (axis + 2) % 3;
  auto proj = [&](const Point& p) {
    return std::array<i64, 3>{K * p[u] + a * p[axis], K * p[v] + b * p[axis], -a * p[u] - b * p[v] + K * p[axis]};
  };
  std::vector<Seg> segs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto p = proj(pts[static_cast<std::size_t>(i)]);
    const auto q = proj(pts[static_cast<std::size_t>((i + 1) % n)]);
    segs[static_cast<std::size_t>(i)] = {p[0], p[1], q[0], q[1], p[2], q[2]};
  }
  std::vector<Hit> hits;
  std::vector<std::array<i64, 4>> points;  // crossing location as rational (x_num, y_num, den)
  int next_id = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Seg& s = segs[static_cast<std::size_t>(i)];
      const Seg& t = segs[static_cast<std::size_t>(j)];
      const i64 rx = s.bx - s.ax, ry = s.by - s.ay;
      const i64 qx = t.bx - t.ax, qy = t.by - t.ay;
      const i64 den = cross(rx, ry, qx, qy);
      const i64 wx = t.ax - s.ax, wy = t.ay - s.ay;
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (den == 0) {
        if (cross(wx, wy, rx, ry) != 0) continue;  // parallel, apart
        // Collinear: any overlap beyond a shared endpoint is degenerate.
        const i64 len = rx * rx + ry * ry;
        i64 t0 = wx * rx + wy * ry;
        i64 t1 = (t.bx - s.ax) * rx + (t.by - s.ay) * ry;
        if (t0 > t1) std::swap(t0, t1);
        if (t1 < 0 || t0 > len) continue;
        if (adjacent && (t1 == 0 || t0 == len)) continue;
        return std::nullopt;
      }
      i64 sn = cross(wx, wy, qx, qy);
      i64 tn = cross(wx, wy, rx, ry);
      i64 d = den;
      if (d < 0) { d = -d; sn = -sn; tn = -tn; }
      if (sn < 0 || sn > d || tn < 0 || tn > d) continue;
      if (adjacent) {
        // They meet at the shared vertex only.
        const bool at_shared = (j == i + 1) ? (sn == d && tn == 0) : (sn == 0 && tn == d);
        if (at_shared) continue;
        return std::nullopt;
      }
      if (sn == 0 || sn == d || tn == 0 || tn == d) return std::nullopt;  // passes through a vertex
      // Location scaled by d.
      const std::array<i64, 4> loc{s.ax * d + sn * rx, s.ay * d + sn * ry, d, 0};
      for (const auto& other : points) {
        if (static_cast<__int128>(loc[0]) * other[2] == static_cast<__int128>(other[0]) * loc[2] &&
            static_cast<__int128>(loc[1]) * other[2] == static_cast<__int128>(other[1]) * loc[2]) {
          return std::nullopt;  // triple point
        }
      }
      points.push_back(loc);
      // Depths compared at the common projected point, both scaled by d.
      const __int128 ds = static_cast<__int128>(s.da) * (d - sn) + static_cast<__int128>(s.db) * sn;
      const __int128 dt = static_cast<__int128>(t.da) * (d - tn) + static_cast<__int128>(t.db) * tn;
      if (ds == dt) return std::nullopt;
      const int id = next_id++;
      hits.push_back({i, sn, d, id, ds > dt});
      hits.push_back({j, tn, d, id, dt > ds});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    if (x.seg != y.seg) return x.seg < y.seg;
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  });
  std::vector<Passage> passages;
  passages.reserve(hits.size());
  for (const Hit& h : hits) passages.push_back(Passage{h.crossing, h.over});
  if (passages.empty()) return PairCode{};
  return PairCode::from_passages(passages);
}

}  // namespace

PairCode project_to_code(const Word& w, Axis axis) {
  if (const auto v = validate_polygon(w)) throw std::invalid_argument("not a polygon: " + v->message);
  const std::vector<Point> pts = vertices(w);
  constexpr i64 K = 1009;
  static constexpr std::array<std::pair<i64, i64>, 8> tilts{{{3, 7}, {5, 11}, {7, 2}, {13, 17}, {2, 19}, {23, 5}, {29, 31}, {37, 3}}};
  for (const auto& [a, b] : tilts) {
    if (auto code = try_projection(pts, static_cast<int>(axis), a, b, K)) return *code;
  }
  throw LatticeError(LatticeErrc::IrregularProjection, "no regular projection of " + polygon_to_string(w));
}

namespace {

class PolygonWalk {
 public:
  PolygonWalk(int max_length, const std::function<void(const Word&)>& visit)
      : max_(max_length), visit_(visit) {}

  void run() {
    on_path_.insert(Point{0, 0, 0});
    extend(Point{0, 0, 0});
  }

 private:
  static int dist(const Point& p) { return std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]); }

  // The origin must stay the lexicographically smallest vertex.
  static bool above_origin(const Point& p) { return p > Point{0, 0, 0}; }

  void extend(const Point& at) {
    const int len = static_cast<int>(word_.size());
    for (int a = 1; a <= 6; ++a) {
      const Point d = step(a);
      const Point next{at[0] + d[0], at[1] + d[1], at[2] + d[2]};
      if (next == Point{0, 0, 0}) {
        if (len + 1 >= 4) {
          word_.push_back(a);
          emit();
          word_.pop_back();
        }
        continue;
      }
      if (len + 1 + dist(next) > max_) continue;
      if (!above_origin(next) || on_path_.count(next)) continue;
      on_path_.insert(next);
      word_.push_back(a);
      extend(next);
      word_.pop_back();
      on_path_.erase(next);
    }
  }

  // Each polygon is met once per orientation; keep the smaller word.
  void emit() {
    Word rev(word_.rbegin(), word_.rend());
    for (int& a : rev) a = 7 - a;
    if (word_ <= rev) visit_(word_);
  }

  int max_;
  const std::function<void(const Word&)>& visit_;
  Word word_;
  std::set<Point> on_path_;
};

}  // namespace

void for_each_polygon(int max_length, const std::function<void(const Word&)>& visit) {
  if (max_length < 4) return;
  PolygonWalk(max_length, visit).run();
}

}  // namespace knots
