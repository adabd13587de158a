#include "knots/moves.hpp"

#include <algorithm>
#include <unordered_set>

namespace knots {

std::string_view to_string(MoveErrc e) noexcept {
  switch (e) {
    case MoveErrc::SiteNotFound: return "SiteNotFound";
    case MoveErrc::InconsistentRoles: return "InconsistentRoles";
    case MoveErrc::FruitlessInsertion: return "FruitlessInsertion";
    case MoveErrc::NotNeighboringSegments: return "NotNeighboringSegments";
    case MoveErrc::EmptyCode: return "EmptyCode";
    case MoveErrc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

constexpr int kNewA = 1000;
constexpr int kNewB = 1001;

// Pairs may put label 1 on either side; the result is renormalized.
PairCode code_from_any_pairs(const std::vector<Pair>& pairs) {
  std::vector<Passage> seq(2 * pairs.size());
  for (const Pair& p : pairs) {
    seq[static_cast<std::size_t>(p.over - 1)] = {p.over, true};
    seq[static_cast<std::size_t>(p.under - 1)] = {p.over, false};
  }
  return PairCode::from_passages(seq);
}

PairCode remove_labels(const PairCode& code, std::initializer_list<int> labels) {
  std::vector<Passage> seq = code.passages();
  std::vector<int> sorted(labels);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int x : sorted) seq.erase(seq.begin() + (x - 1));
  return PairCode::from_passages(seq);
}

bool has_pair(const PairCode& code, Pair p) {
  return p.over >= 1 && p.over <= code.labels() && code.is_over(p.over) && code.partner(p.over) == p.under;
}

bool is_r2_site(const PairCode& code, const R2Site& s) {
  if (!has_pair(code, s.first) || !has_pair(code, s.second)) return false;
  const int m = code.labels();
  const bool over_adjacent = labels_adjacent(s.first.over, s.second.over, m);
  const bool under_adjacent = labels_adjacent(s.first.under, s.second.under, m);
  // Same-role adjacency: two overs next to each other, two unders next to each other.
  return over_adjacent && under_adjacent;
}

}  // namespace

std::optional<Pair> r1_site(const PairCode& code) {
  const int m = code.labels();
  for (int x = 1; x <= m; ++x) {
    if (!code.is_over(x)) continue;
    if (labels_adjacent(x, code.partner(x), m)) return Pair{x, code.partner(x)};
  }
  return std::nullopt;
}

std::optional<R2Site> r2_site(const PairCode& code) {
  const int m = code.labels();
  if (m < 4) return std::nullopt;
  for (int x = 1; x <= m; ++x) {
    const int x1 = wrap_label(x + 1, m);
    if (code.is_over(x) != code.is_over(x1)) continue;
    const int y = code.partner(x);
    const int y1 = code.partner(x1);
    if (y == x1 || !labels_adjacent(y, y1, m)) continue;
    Pair a = code.is_over(x) ? Pair{x, y} : Pair{y, x};
    Pair b = code.is_over(x1) ? Pair{x1, y1} : Pair{y1, x1};
    if (b.over < a.over) std::swap(a, b);
    return R2Site{a, b};
  }
  return std::nullopt;
}

std::vector<R3Site> r3_sites(const PairCode& code) {
  std::vector<R3Site> out;
  const int m = code.labels();
  if (m < 6) return out;
  for (int a = 1; a <= m; ++a) {
    if (!code.is_over(a)) continue;
    for (int da : {-1, 1}) {
      const int a2 = wrap_label(a + da, m);
      if (!code.is_over(a2)) continue;
      const int mid = code.partner(a);
      const int b = code.partner(a2);
      for (int dm : {-1, 1}) {
        const int mid2 = wrap_label(mid + dm, m);
        if (!code.is_over(mid2)) continue;
        const int b2 = code.partner(mid2);
        if (!labels_adjacent(b, b2, m)) continue;
        const int six[6] = {a, a2, mid, mid2, b, b2};
        bool distinct = true;
        for (int s = 0; s < 6 && distinct; ++s) {
          for (int t = s + 1; t < 6 && distinct; ++t) distinct = six[s] != six[t];
        }
        if (distinct) out.push_back({a, a2, mid, mid2, b, b2});
      }
    }
  }
  return out;
}

PairCode apply_r1_down(const PairCode& code, Pair site) {
  if (!has_pair(code, site) || !labels_adjacent(site.over, site.under, code.labels())) {
    throw MoveError(MoveErrc::SiteNotFound, "no first-move site at " + std::to_string(site.over));
  }
  return remove_labels(code, {site.over, site.under});
}

PairCode apply_r2_down(const PairCode& code, const R2Site& site) {
  if (!is_r2_site(code, site)) {
    throw MoveError(MoveErrc::SiteNotFound, "no second-move site at " + std::to_string(site.first.over));
  }
  return remove_labels(code, {site.first.over, site.first.under, site.second.over, site.second.under});
}

PairCode apply_r3(const PairCode& code, const R3Site& s) {
  const int m = code.labels();
  if (!has_pair(code, {s.i, s.j}) || !has_pair(code, {s.i2, s.k}) || !has_pair(code, {s.j2, s.k2}) ||
      !labels_adjacent(s.i, s.i2, m) || !labels_adjacent(s.j, s.j2, m) || !labels_adjacent(s.k, s.k2, m)) {
    throw MoveError(MoveErrc::SiteNotFound, "no third-move site at " + std::to_string(s.i));
  }
  const std::vector<R3Site> sites = r3_sites(code);
  if (std::find(sites.begin(), sites.end(), s) == sites.end()) {
    throw MoveError(MoveErrc::InconsistentRoles, "triple does not bound a legal triangle");
  }
  std::vector<Pair> pairs;
  for (const Pair& p : code.pairs()) {
    if (p.over == s.i || p.over == s.i2 || p.over == s.j2) continue;
    pairs.push_back(p);
  }
  pairs.push_back({s.i, s.k2});
  pairs.push_back({s.i2, s.j2});
  pairs.push_back({s.j, s.k});
  return code_from_any_pairs(pairs);
}

Orbit r3_orbit(const PairCode& code, std::size_t max_size) {
  Orbit orbit;
  const PairCode start = canonical_relabel(code);
  std::unordered_set<PairCode, PairCodeHash> seen{start};
  std::vector<PairCode> frontier{start};
  orbit.members.push_back(start);
  while (!frontier.empty()) {
    std::vector<PairCode> next;
    for (const PairCode& c : frontier) {
      for (const R3Site& site : r3_sites(c)) {
        PairCode d = canonical_relabel(apply_r3(c, site));
        if (seen.contains(d)) continue;
        if (orbit.members.size() >= max_size) {
          orbit.complete = false;
          break;
        }
        seen.insert(d);
        orbit.members.push_back(d);
        next.push_back(std::move(d));
      }
      if (!orbit.complete) break;
    }
    if (!orbit.complete) break;
    frontier = std::move(next);
  }
  std::sort(orbit.members.begin(), orbit.members.end(),
            [](const PairCode& a, const PairCode& b) { return code_key(a) < code_key(b); });
  return orbit;
}

int m_statistic(const PairCode& code) {
  if (code.empty()) throw MoveError(MoveErrc::EmptyCode, "M is undefined for the empty code");
  const int m = code.labels();
  int min_self = m;
  int max_self = 0;
  int min_step = m;
  int max_step = 0;
  for (int x = 1; x <= m; ++x) {
    const int d = forward_distance(x, code.partner(x), m);
    min_self = std::min(min_self, d);
    max_self = std::max(max_self, d);
    const int x1 = wrap_label(x + 1, m);
    if (code.is_over(x) != code.is_over(x1)) continue;
    const int step = forward_distance(code.partner(x), code.partner(x1), m);
    min_step = std::min(min_step, step);
    max_step = std::max(max_step, step);
  }
  const int a = min_self;
  const int b = m - max_self;
  const int c = min_step;
  const int d = max_step == 0 ? m : m - max_step;
  return std::min({a, b, c, d});
}

PairCode insert_kink(const PairCode& code, int position, bool over_first) {
  std::vector<Passage> seq = code.passages();
  if (position < 0 || position > static_cast<int>(seq.size()) || (position == 0 && !seq.empty())) {
    throw MoveError(MoveErrc::SiteNotFound, "kink position " + std::to_string(position));
  }
  const auto at = seq.begin() + position;
  seq.insert(at, {{kNewA, over_first}, {kNewA, !over_first}});
  return PairCode::from_passages(seq);
}

namespace {

bool kink_is_fruitful(const PairCode& with_kink, int position) {
  const int a = position + 1;
  const int b = position + 2;
  for (const R3Site& s : r3_sites(with_kink)) {
    for (int x : {s.i, s.i2, s.j, s.j2, s.k, s.k2}) {
      if (x == a || x == b) return true;
    }
  }
  return false;
}

}  // namespace

PairCode apply_r1_up(const PairCode& code, int position, bool over_first) {
  PairCode out = insert_kink(code, position, over_first);
  if (!kink_is_fruitful(out, position)) {
    throw MoveError(MoveErrc::FruitlessInsertion, "kink at " + std::to_string(position) + " creates no third-move site");
  }
  return out;
}

std::vector<KinkSite> fruitful_kinks(const PairCode& code) {
  std::vector<KinkSite> out;
  for (int p = 1; p <= code.labels(); ++p) {
    for (bool over_first : {true, false}) {
      if (kink_is_fruitful(insert_kink(code, p, over_first), p)) out.push_back({p, over_first});
    }
  }
  return out;
}

std::vector<R2UpSite> r2_up_sites(const PairCode& code) {
  std::vector<R2UpSite> out;
  const Shadow s = Shadow::of(code);
  for (const Loop& loop : free_loops(s)) {
    const std::vector<int> arcs = loop_arcs(loop, s.labels());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        const int p = arcs[a];
        const int q = arcs[b];
        const bool fp = loop.forward & (1ull << (p - 1));
        const bool fq = loop.forward & (1ull << (q - 1));
        const R2UpSite site{p, q, fp != fq};
        if (std::find(out.begin(), out.end(), site) == out.end()) out.push_back(site);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const R2UpSite& x, const R2UpSite& y) {
    return std::tie(x.p, x.q, x.parallel) < std::tie(y.p, y.q, y.parallel);
  });
  return out;
}

PairCode apply_r2_up(const PairCode& code, const R2UpSite& site, bool over_first) {
  if (site.p == site.q || site.p < 1 || site.q < 1 || site.p > code.labels() || site.q > code.labels()) {
    throw MoveError(MoveErrc::NotNeighboringSegments, "bad arc pair");
  }
  int p = site.p;
  int q = site.q;
  bool p_over = over_first;
  if (q < p) {
    std::swap(p, q);
    p_over = !p_over;
  }
  std::vector<Passage> seq = code.passages();
  // Later insertion first so the earlier index stays valid.
  if (site.parallel) {
    seq.insert(seq.begin() + q, {{kNewA, !p_over}, {kNewB, !p_over}});
  } else {
    seq.insert(seq.begin() + q, {{kNewB, !p_over}, {kNewA, !p_over}});
  }
  seq.insert(seq.begin() + p, {{kNewA, p_over}, {kNewB, p_over}});
  return PairCode::from_passages(seq);
}

PairCode apply_r2_up(const PairCode& code, const Loop& loop, int p, int q, bool over_first) {
  const auto on_loop = [&](int x) { return x >= 1 && x <= code.labels() && (loop.arcs & (1ull << (x - 1))); };
  if (p == q || !on_loop(p) || !on_loop(q)) {
    throw MoveError(MoveErrc::NotNeighboringSegments, "arcs " + std::to_string(p) + "," + std::to_string(q));
  }
  const Shadow s = Shadow::of(code);
  const std::vector<Loop> faces = free_loops(s);
  const bool is_free = std::any_of(faces.begin(), faces.end(), [&](const Loop& f) { return f.arcs == loop.arcs; });
  if (!is_free) throw MoveError(MoveErrc::NotNeighboringSegments, "loop is not free");
  const bool fp = loop.forward & (1ull << (p - 1));
  const bool fq = loop.forward & (1ull << (q - 1));
  return apply_r2_up(code, R2UpSite{p, q, fp != fq}, over_first);
}

namespace {

std::optional<PairCode> downward_step(const PairCode& code) {
  if (auto s = r1_site(code)) return apply_r1_down(code, *s);
  if (auto s = r2_site(code)) return apply_r2_down(code, *s);
  return std::nullopt;
}

}  // namespace

PairCode simplify(const PairCode& code, std::size_t orbit_budget) {
  PairCode current = code;
  while (true) {
    if (auto d = downward_step(current)) {
      current = *d;
      continue;
    }
    if (current.crossings() < 3) return canonical_relabel(current);
    const Orbit orbit = r3_orbit(current, orbit_budget);
    bool moved = false;
    for (const PairCode& member : orbit.members) {
      if (auto d = downward_step(member)) {
        current = *d;
        moved = true;
        break;
      }
    }
    if (moved) continue;
    if (!orbit.complete) {
      throw MoveError(MoveErrc::BudgetExceeded, "third-move orbit exceeded " + std::to_string(orbit_budget));
    }
    return orbit.members.front();
  }
}

}  // namespace knots
