#pragma once

// Reidemeister moves acting directly on pair codes.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knots/codes.hpp"
#include "knots/planarity.hpp"

namespace knots {

enum class MoveErrc {
  SiteNotFound,
  InconsistentRoles,
  FruitlessInsertion,
  NotNeighboringSegments,
  EmptyCode,
  BudgetExceeded,
};

std::string_view to_string(MoveErrc e) noexcept;

class MoveError : public std::runtime_error {
 public:
  MoveError(MoveErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  MoveErrc code() const noexcept { return code_; }

 private:
  MoveErrc code_;
};

struct R2Site {
  Pair first;   // the pair holding the lower overcrossing label
  Pair second;
  bool operator==(const R2Site&) const = default;
};

// Three double points bounding a triangle: pairs (i, j), (i2, k), (j2, k2)
// with i2 = i +- 1, j2 = j +- 1, k2 = k +- 1.  Strand i..i2 passes over
// both others, k..k2 under both, j..j2 under then over.
struct R3Site {
  int i = 0, i2 = 0, j = 0, j2 = 0, k = 0, k2 = 0;
  bool operator==(const R3Site&) const = default;
};

/// Lowest pair of the form (x, x +- 1), adjacency taken cyclically.
std::optional<Pair> r1_site(const PairCode& code);

/// First two pairs (x, y), (x +- 1, y +- 1) whose labels play the same role,
/// scanning x upward.
std::optional<R2Site> r2_site(const PairCode& code);

std::vector<R3Site> r3_sites(const PairCode& code);

PairCode apply_r1_down(const PairCode& code, Pair site);
PairCode apply_r2_down(const PairCode& code, const R2Site& site);

/// Replaces (i, j), (i2, k), (j2, k2) by (i, k2), (i2, j2), (j, k).
PairCode apply_r3(const PairCode& code, const R3Site& site);

struct Orbit {
  std::vector<PairCode> members;  // canonical forms, ascending by key
  bool complete = true;           // false when the size budget stopped the search
};

inline constexpr std::size_t kDefaultOrbitBudget = 20000;

/// Closure of the canonical form of `code` under third moves.
Orbit r3_orbit(const PairCode& code, std::size_t max_size = kDefaultOrbitBudget);

int m_statistic(const PairCode& code);

/// Adds a kink on the arc following label `position` (0 for the empty code).
/// No fruitfulness check.
PairCode insert_kink(const PairCode& code, int position, bool over_first);

/// A kink that creates a third-move site through the new double point.
PairCode apply_r1_up(const PairCode& code, int position, bool over_first);

struct KinkSite {
  int position = 0;
  bool over_first = false;
};

std::vector<KinkSite> fruitful_kinks(const PairCode& code);

/// Two arcs of a free loop that can be pushed across each other.  Parallel
/// sites produce pairs (x, y), (x+1, y+1); anti-parallel ones (x, y+1), (x+1, y).
struct R2UpSite {
  int p = 0;
  int q = 0;
  bool parallel = false;
  bool operator==(const R2UpSite&) const = default;
};

std::vector<R2UpSite> r2_up_sites(const PairCode& code);

/// Pushes arc p across arc q; arcs must both lie on `loop`, a free loop of the
/// code's shadow.  `over_first` puts arc p on top.
PairCode apply_r2_up(const PairCode& code, const Loop& loop, int p, int q, bool over_first);

PairCode apply_r2_up(const PairCode& code, const R2UpSite& site, bool over_first);

/// Greedy descent: removes first and second move sites, searching third-move
/// orbits for new ones, until none remain.  Returns the preferred member of
/// the final orbit.
PairCode simplify(const PairCode& code, std::size_t orbit_budget = kDefaultOrbitBudget);

}  // namespace knots
