#pragma once

// Enumeration of prime knot projections: shadow iteration, admissibility,
// crossing assignments and reduction to one preferred name per class.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knots/codes.hpp"
#include "knots/moves.hpp"
#include "knots/planarity.hpp"

namespace knots {

struct ShadowCursor {
  std::vector<int> f;  // permutation of 1..n
};

ShadowCursor first_shadow(int n);

/// Lexicographic successor; nullopt after the decreasing permutation.
std::optional<ShadowCursor> next_shadow(const ShadowCursor& cur);

enum class ShadowTest {
  Admissible,
  Kink,          // some label paired with a neighbour
  Composite,     // a proper closed interval of labels
  NotPreferred,  // another relabeling has a smaller f-sequence
  NotRealizable, // fails the loop-parity test
};

std::string_view to_string(ShadowTest t) noexcept;

/// Runs the four tests in order and reports the first failure.
ShadowTest shadow_admissible(const Shadow& s);

/// Assignment bits g_1..g_n in counting order with g_1 = 0.
std::vector<std::string> assignment_bits(int n);

/// The 2^(n-1) codes of the shadow, alternating one first.
std::vector<PairCode> assignments(const Shadow& s);

PairCode code_from_assignment(const Shadow& s, std::string_view bits);

struct ReduceOptions {
  int up_budget = 1;
  std::size_t orbit_budget = kDefaultOrbitBudget;
};

struct ReduceOutcome {
  bool keep = false;
  PairCode representative;  // the code itself when kept, else a preferred equivalent
};

ReduceOutcome reduce_to_preferred(const PairCode& code, const ReduceOptions& options = {});

struct KnotRecord {
  int n = 0;
  PairCode code;
  int shadow_id = 0;  // position among admissible shadows of this n, from 0
  std::string assignment_bits;
  std::string invariants;  // certificate text, empty until computed
  std::string status;      // "ok" or "unconfirmed"
};

struct SummaryRow {
  int n = 0;
  long long shadows = 0;
  long long assignments = 0;
  long long survivors = 0;
};

struct Catalog {
  std::vector<KnotRecord> records;  // n ascending, then lexicographic
  std::vector<SummaryRow> summary;
};

/// Admissible shadows for n crossings, in iteration order.
std::vector<Shadow> admissible_shadows(int n, int workers = 1);

struct EnumerateOptions {
  ReduceOptions reduce;
  int workers = 1;
  int confirmed_up_to = 8;  // records above this crossing number are "unconfirmed"
};

Catalog enumerate_knots(int max_n, const EnumerateOptions& options = {});

/// Single-threaded reference used to check the parallel path.
Catalog enumerate_knots_serial(int max_n, const EnumerateOptions& options = {});

class EnumerationError : public std::runtime_error {
 public:
  EnumerationError(int n, int shadow_id, bool budget, const std::string& what)
      : std::runtime_error(what), n_(n), shadow_id_(shadow_id), budget_(budget) {}
  int crossings() const noexcept { return n_; }
  int shadow_id() const noexcept { return shadow_id_; }
  /// True when an orbit budget ran out, as opposed to any other failure.
  bool budget_exhausted() const noexcept { return budget_; }

 private:
  int n_;
  int shadow_id_;
  bool budget_;
};

}  // namespace knots
