#pragma once

// Closed self-avoiding polygons on the cubic lattice, written as words over
// the six unit steps 1,2,3 = +x,+y,+z and 4,5,6 = -z,-y,-x (a and 7-a are
// opposite).

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knots/codes.hpp"

namespace knots {

using Word = std::vector<int>;

enum class LatticeErrc {
  AlphabetError,
  IrregularProjection,
};

class LatticeError : public std::runtime_error {
 public:
  LatticeError(LatticeErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  LatticeErrc code() const noexcept { return code_; }

 private:
  LatticeErrc code_;
};

/// "1,2,6,5" -> {1,2,6,5}.  Throws AlphabetError on anything else.
Word parse_polygon(std::string_view text);
std::string polygon_to_string(const Word& w);

using Point = std::array<int, 3>;
Point step(int letter);
/// Vertices p_0 = origin, p_k = p_{k-1} + step(a_k), for k < size.
std::vector<Point> vertices(const Word& w);

struct Violation {
  enum class Kind { Empty, Unbalanced, Backtrack, SelfIntersection };
  Kind kind;
  int first = 0;  // 1-based letter positions of the offending sub-word
  int last = 0;
  std::string message;
};

std::optional<Violation> validate_polygon(const Word& w);
inline bool is_valid_polygon(const Word& w) { return !validate_polygon(w).has_value(); }

/// Swaps letters k and k+1 (0-based, cyclic).  nullopt if the result is not a
/// valid polygon; equal letters give the word back unchanged.
std::optional<Word> exchange(const Word& w, std::size_t k);

/// Replaces letter k by d, a_k, 7-d.
std::optional<Word> pair_create(const Word& w, std::size_t k, int d);

/// Removes letters k and k+2 (cyclic) when a_{k+2} = 7 - a_k.
std::optional<Word> pair_annihilate(const Word& w, std::size_t k);

/// Lexicographically smallest rotation.
Word rotation_min(const Word& w);

/// Shorter first, then lexicographic on rotation-minimal forms.
bool lattice_less(const Word& a, const Word& b);
const Word& preferred(const Word& a, const Word& b);

struct LatticeReduction {
  Word best;                // rotation-minimal
  std::size_t steps = 0;    // move applications performed
  bool exhausted = false;   // step budget ran out before the search closed
};

LatticeReduction reduce_lattice(const Word& w, std::size_t length_budget, std::size_t step_budget);

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Pair code of a slightly tilted projection along `axis`; the higher point
/// along the projection direction passes over.
PairCode project_to_code(const Word& w, Axis axis);

/// Calls `visit` once per polygon (up to translation and orientation) of
/// every even length 4..max_length.  The word starts at the polygon's
/// lexicographically smallest vertex.
void for_each_polygon(int max_length, const std::function<void(const Word&)>& visit);

}  // namespace knots
