#include "knots/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knots {

ShadowCursor first_shadow(int n) {
  ShadowCursor cur;
  cur.f.resize(static_cast<std::size_t>(n));
  std::iota(cur.f.begin(), cur.f.end(), 1);
  return cur;
}

std::optional<ShadowCursor> next_shadow(const ShadowCursor& cur) {
  ShadowCursor next = cur;
  if (!std::next_permutation(next.f.begin(), next.f.end())) return std::nullopt;
  return next;
}

std::string_view to_string(ShadowTest t) noexcept {
  switch (t) {
    case ShadowTest::Admissible: return "admissible";
    case ShadowTest::Kink: return "kink";
    case ShadowTest::Composite: return "composite";
    case ShadowTest::NotPreferred: return "not-preferred";
    case ShadowTest::NotRealizable: return "not-realizable";
  }
  return "unknown";
}

namespace {

bool has_kink(const Shadow& s) {
  const int m = s.labels();
  for (int x = 1; x <= m; ++x) {
    if (labels_adjacent(x, s.partner(x), m)) return true;
  }
  return false;
}

bool has_closed_interval(const Shadow& s) {
  const int m = s.labels();
  for (int k = 1; k <= m; ++k) {
    int lo = m + 1;
    int hi = 0;
    for (int l = k; l <= m; ++l) {
      const int p = s.partner(l);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      if (l > k && lo >= k && hi <= l && !(k == 1 && l == m)) return true;
    }
  }
  return false;
}

// True when some relabeling has a strictly smaller f-sequence.
bool has_smaller_relabeling(const Shadow& s) {
  const int m = s.labels();
  const int n = s.crossings();
  for (int k = 0; k < m; ++k) {
    for (bool rev : {false, true}) {
      for (int i = 1; i <= n; ++i) {
        const int y = 2 * i - 1;
        const int x = wrap_label(rev ? k - y : y - k, m);
        const int h = s.partner(x);
        const int fy = wrap_label(rev ? k - h : k + h, m) / 2;
        const int fi = s.partner(y) / 2;
        if (fy < fi) return true;
        if (fy > fi) break;
      }
    }
  }
  return false;
}

}  // namespace

ShadowTest shadow_admissible(const Shadow& s) {
  if (has_kink(s)) return ShadowTest::Kink;
  if (has_closed_interval(s)) return ShadowTest::Composite;
  if (has_smaller_relabeling(s)) return ShadowTest::NotPreferred;
  if (!is_realizable(s)) return ShadowTest::NotRealizable;
  return ShadowTest::Admissible;
}

std::vector<std::string> assignment_bits(int n) {
  std::vector<std::string> out;
  if (n == 0) return {""};
  const std::uint64_t count = 1ull << (n - 1);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n - 1; ++i) {
      if ((v >> (n - 2 - i)) & 1u) bits[static_cast<std::size_t>(i + 1)] = '1';
    }
    out.push_back(std::move(bits));
  }
  return out;
}

PairCode code_from_assignment(const Shadow& s, std::string_view bits) {
  const std::vector<int> f = s.f();
  std::vector<int> g(f.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = bits.at(i) == '1' ? 1 : 0;
  return from_fg(f, g);
}

std::vector<PairCode> assignments(const Shadow& s) {
  std::vector<PairCode> out;
  for (const std::string& bits : assignment_bits(s.crossings())) out.push_back(code_from_assignment(s, bits));
  return out;
}

namespace {

using SimplifyMemo = std::unordered_map<PairCode, PairCode, PairCodeHash>;

PairCode simplify_memo(const PairCode& code, std::size_t budget, SimplifyMemo& memo) {
  const PairCode key = canonical_relabel(code);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  PairCode result = simplify(key, budget);
  memo.emplace(key, result);
  return result;
}

Orbit checked_orbit(const PairCode& code, std::size_t budget) {
  Orbit orbit = r3_orbit(code, budget);
  if (!orbit.complete) {
    throw MoveError(MoveErrc::BudgetExceeded,
                    "third-move orbit of " + to_string(code) + " exceeded " + std::to_string(budget));
  }
  return orbit;
}

// Every downward first or second move available on the code.
std::vector<PairCode> all_down_moves(const PairCode& code) {
  std::vector<PairCode> out;
  const int m = code.labels();
  for (const Pair& p : code.pairs()) {
    if (labels_adjacent(p.over, p.under, m)) out.push_back(apply_r1_down(code, p));
  }
  if (m >= 4) {
    for (int x = 1; x <= m; ++x) {
      const int x1 = wrap_label(x + 1, m);
      if (code.is_over(x) != code.is_over(x1)) continue;
      const int y = code.partner(x);
      const int y1 = code.partner(x1);
      if (y == x1 || !labels_adjacent(y, y1, m)) continue;
      Pair a = code.is_over(x) ? Pair{x, y} : Pair{y, x};
      Pair b = code.is_over(x1) ? Pair{x1, y1} : Pair{y1, x1};
      if (b.over < a.over) std::swap(a, b);
      out.push_back(apply_r2_down(code, R2Site{a, b}));
    }
  }
  return out;
}

// Searches the orbit of an enlarged code for a single downward move that lands
// on something better than `target`.
std::optional<PairCode> excursion_beats(const PairCode& enlarged, const PairCode& target,
                                        const ReduceOptions& options) {
  const Orbit orbit = checked_orbit(enlarged, options.orbit_budget);
  for (const PairCode& member : orbit.members) {
    for (const PairCode& down : all_down_moves(member)) {
      const PairCode w = canonical_relabel(down);
      if (w.crossings() < target.crossings()) return w;
      if (w.crossings() == target.crossings() && code_key(w) < code_key(target) && !is_composite(w)) return w;
    }
  }
  return std::nullopt;
}

thread_local SimplifyMemo tls_memo;

}  // namespace

ReduceOutcome reduce_to_preferred(const PairCode& code, const ReduceOptions& options) {
  if (options.up_budget < 0 || options.up_budget > 1) {
    throw std::invalid_argument("up budget must be 0 or 1");
  }
  SimplifyMemo& memo = tls_memo;
  if (memo.size() > 200000) memo.clear();
  if (code.empty()) return {true, code};
  if (r1_site(code) || r2_site(code)) return {false, simplify_memo(code, options.orbit_budget, memo)};
  const PairCode canonical = canonical_relabel(code);
  if (!(canonical == code)) return {false, canonical};

  const Orbit orbit = checked_orbit(code, options.orbit_budget);
  for (const PairCode& member : orbit.members) {
    if (r1_site(member) || r2_site(member)) return {false, simplify_memo(member, options.orbit_budget, memo)};
  }
  if (!(orbit.members.front() == code)) return {false, orbit.members.front()};

  for (const KinkSite& k : fruitful_kinks(code)) {
    const PairCode up = insert_kink(code, k.position, k.over_first);
    if (auto w = excursion_beats(up, code, options)) return {false, *w};
  }
  if (options.up_budget >= 1) {
    for (const R2UpSite& site : r2_up_sites(code)) {
      for (bool over_first : {true, false}) {
        const PairCode up = apply_r2_up(code, site, over_first);
        if (auto w = excursion_beats(up, code, options)) return {false, *w};
      }
    }
  }
  return {true, code};
}

std::vector<Shadow> admissible_shadows(int n, int workers) {
  if (n == 0) return {Shadow{}};
  std::vector<Shadow> candidates;
  for (std::optional<ShadowCursor> cur = first_shadow(n); cur; cur = next_shadow(*cur)) {
    const Shadow s = Shadow::from_f(cur->f);
    if (has_kink(s) || has_closed_interval(s) || has_smaller_relabeling(s)) continue;
    candidates.push_back(s);
  }
  std::vector<char> ok(candidates.size(), 0);
  const auto count = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, workers)) if (workers > 1)
  for (long long i = 0; i < count; ++i) {
    ok[static_cast<std::size_t>(i)] = is_realizable(candidates[static_cast<std::size_t>(i)]) ? 1 : 0;
  }
  std::vector<Shadow> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (ok[i]) out.push_back(candidates[i]);
  }
  return out;
}

namespace {

struct ShadowResult {
  std::vector<KnotRecord> survivors;
  std::string error;
  bool budget = false;
};

ShadowResult process_shadow(int n, int shadow_id, const Shadow& s, const EnumerateOptions& options) {
  ShadowResult result;
  try {
    for (const std::string& bits : assignment_bits(n)) {
      const PairCode code = n == 0 ? PairCode{} : code_from_assignment(s, bits);
      if (!reduce_to_preferred(code, options.reduce).keep) continue;
      KnotRecord rec;
      rec.n = n;
      rec.code = code;
      rec.shadow_id = shadow_id;
      rec.assignment_bits = bits;
      rec.status = n > options.confirmed_up_to ? "unconfirmed" : "ok";
      result.survivors.push_back(std::move(rec));
    }
  } catch (const MoveError& e) {
    result.error = e.what();
    result.budget = e.code() == MoveErrc::BudgetExceeded;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

Catalog run(int max_n, const EnumerateOptions& options, bool parallel) {
  Catalog catalog;
  const int workers = parallel ? std::max(1, options.workers) : 1;
  for (int n = 0; n <= max_n; ++n) {
    const std::vector<Shadow> shadows = admissible_shadows(n, workers);
    std::vector<ShadowResult> results(shadows.size());
    const auto count = static_cast<long long>(shadows.size());
    if (parallel && workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
      for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        results[idx] = process_shadow(n, static_cast<int>(i), shadows[idx], options);
      }
    } else {
      for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        results[idx] = process_shadow(n, static_cast<int>(i), shadows[idx], options);
      }
    }
    std::vector<KnotRecord> level;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].error.empty()) {
        throw EnumerationError(n, static_cast<int>(i), results[i].budget, results[i].error);
      }
      for (KnotRecord& r : results[i].survivors) level.push_back(std::move(r));
    }
    std::sort(level.begin(), level.end(),
              [](const KnotRecord& a, const KnotRecord& b) { return code_key(a.code) < code_key(b.code); });
    level.erase(std::unique(level.begin(), level.end(),
                            [](const KnotRecord& a, const KnotRecord& b) { return a.code == b.code; }),
                level.end());
    SummaryRow row;
    row.n = n;
    row.shadows = static_cast<long long>(shadows.size());
    row.assignments = n == 0 ? row.shadows : row.shadows * (1ll << (n - 1));
    row.survivors = static_cast<long long>(level.size());
    catalog.summary.push_back(row);
    for (KnotRecord& r : level) catalog.records.push_back(std::move(r));
  }
  return catalog;
}

}  // namespace

Catalog enumerate_knots(int max_n, const EnumerateOptions& options) { return run(max_n, options, true); }

Catalog enumerate_knots_serial(int max_n, const EnumerateOptions& options) { return run(max_n, options, false); }

}  // namespace knots
