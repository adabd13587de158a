#pragma once

// Pair codes: the discrete names of knot projections.
//
// A projection with n double points is traversed from a base point; the
// 2n passages through double points are numbered 1..2n.  Each double point
// becomes an ordered pair (over label, under label).  Everything in this
// header treats labels cyclically: arithmetic is mod 2n with representatives
// in 1..2n.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knots {

inline constexpr int kMaxCrossings = 20;
inline constexpr int kMaxLabels = 2 * kMaxCrossings;

/// Reduces an arbitrary integer to the label range 1..label_count.
/// 0 maps to label_count; label_count == 0 yields 0.
constexpr int wrap_label(int label, int label_count) noexcept {
  if (label_count <= 0) return 0;
  int r = (label - 1) % label_count;
  if (r < 0) r += label_count;
  return r + 1;
}

constexpr bool labels_adjacent(int a, int b, int label_count) noexcept {
  return label_count > 1 &&
         (wrap_label(a + 1, label_count) == b || wrap_label(b + 1, label_count) == a);
}

/// Forward distance from a to b along the cycle, in 0..label_count-1.
constexpr int forward_distance(int a, int b, int label_count) noexcept {
  int d = (b - a) % label_count;
  return d < 0 ? d + label_count : d;
}

struct Pair {
  int over = 0;
  int under = 0;
  auto operator<=>(const Pair&) const = default;
};

enum class CodeErrc {
  MalformedText,
  DuplicateLabel,
  LabelOutOfRange,
  ParityViolation,
  OneNotLeft,
  CrossingCountMismatch,
  TooManyCrossings,
};

std::string_view to_string(CodeErrc e) noexcept;

class CodeError : public std::runtime_error {
 public:
  CodeError(CodeErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  CodeErrc code() const noexcept { return code_; }

 private:
  CodeErrc code_;
};

/// One passage of the strand through a double point, in traversal order.
/// Used to build codes by editing the label sequence directly.
struct Passage {
  int crossing = 0;  // arbitrary id shared by the two passages of a double point
  bool over = false;
};

class PairCode {
 public:
  /// The empty name (unknot, n = 0).
  PairCode() = default;

  /// Validates every invariant: labels exactly 1..2n, one odd and one even
  /// label per pair, label 1 on the left.
  static PairCode from_pairs(std::span<const Pair> pairs);

  /// Builds a code from a traversal sequence.  Labels are the 1-based
  /// positions in `seq`.  If label 1 ends up under, every pair is transposed
  /// so the result satisfies the label-1-left invariant.
  static PairCode from_passages(std::span<const Passage> seq);

  int crossings() const noexcept { return n_; }
  int labels() const noexcept { return 2 * n_; }
  bool empty() const noexcept { return n_ == 0; }

  /// Partner of a label; the argument is wrapped into 1..2n first.
  int partner(int label) const noexcept {
    return partner_[static_cast<std::size_t>(wrap_label(label, 2 * n_) - 1)];
  }
  bool is_over(int label) const noexcept {
    return (over_ >> (wrap_label(label, 2 * n_) - 1)) & 1u;
  }
  /// +partner if the label is an overcrossing, -partner otherwise.
  int companion(int label) const noexcept {
    return is_over(label) ? partner(label) : -partner(label);
  }

  /// Pairs sorted by overcrossing label.
  std::vector<Pair> pairs() const;

  /// Passage sequence; crossing ids are the overcrossing labels.
  std::vector<Passage> passages() const;

  std::uint64_t over_mask() const noexcept { return over_; }

  bool operator==(const PairCode&) const = default;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxLabels> partner_{};
  std::uint64_t over_ = 0;
};

/// The (f, g) description of a parity-valid code: f(i) = j when 2i-1 is paired
/// with 2j, g(i) = 0 when 2i-1 is the overcrossing label of its pair.
struct FGForm {
  std::vector<int> f;
  std::vector<int> g;
  bool operator==(const FGForm&) const = default;
};

FGForm fg_form(const PairCode& code);
PairCode from_fg(std::span<const int> f, std::span<const int> g);

/// Companion map a(i) for i = 1..2n (index 0 unused).
std::vector<int> companion_map(const PairCode& code);

// Text format: "o:u" pairs in ascending-o order separated by single spaces.
PairCode parse_code(std::string_view text);
std::string to_string(const PairCode& code);

PairCode rotate(const PairCode& code, int offset, bool reverse);
PairCode transpose(const PairCode& code);
PairCode inverse_code(const PairCode& code);

/// Packed (f, g) key; for codes with equal crossing count, numeric order of
/// keys is the lexicographic preference order.
using CodeKey = unsigned __int128;
CodeKey code_key(const PairCode& code);

bool lex_less(const PairCode& a, const PairCode& b);

/// Lexicographic minimum over all starting points and both orientations.
PairCode canonical_relabel(const PairCode& code);

/// All 4n relabelings (with duplicates) in (offset, reverse) order.
std::vector<PairCode> relabelings(const PairCode& code);

PairCode connected_sum(const PairCode& a, const PairCode& b);
bool is_composite(const PairCode& code);

/// Strict preference between arbitrary codes: fewer crossings first, then
/// lexicographic.
inline bool preferred_over(const PairCode& a, const PairCode& b) {
  if (a.crossings() != b.crossings()) return a.crossings() < b.crossings();
  return code_key(a) < code_key(b);
}

struct PairCodeHash {
  std::size_t operator()(const PairCode& c) const noexcept;
};

}  // namespace knots
