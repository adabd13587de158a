#pragma once

// Wirtinger presentations and conjugacy-class colorings in the symmetric
// groups P_m.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knots/codes.hpp"

namespace knots {

enum class GroupErrc {
  NotRealizable,
  ClassTooLarge,
};

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GroupErrc code() const noexcept { return code_; }

 private:
  GroupErrc code_;
};

/// g_target = g_conjugator^sign * g_source * g_conjugator^-sign
struct Relation {
  int target = 0;
  int conjugator = 0;
  int source = 0;
  int sign = 1;
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  int generators = 1;
  std::vector<int> arc_starts;       // undercrossing label that opens each generator's arc
  std::vector<Relation> relations;   // one per pair, in code.pairs() order
};

/// Relative crossing signs in code.pairs() order; the double point holding
/// label 1 is +1.  Throws NotRealizable when no consistent assignment exists.
std::vector<int> crossing_signs(const PairCode& code);

Presentation wirtinger(const PairCode& code);

using Partition = std::vector<int>;

std::string to_string(const Partition& p);

/// Successor in the order (m), (m-1,1), ..., (1,...,1); nullopt at the end.
std::optional<Partition> next_partition(const Partition& p);

std::vector<Partition> partitions_of(int m);

inline constexpr int kMaxClassDegree = 8;
inline constexpr int kDefaultMMax = 5;

/// True when some images of the generators in the class satisfy every
/// relation and, under mutual conjugation, generate the whole class.
bool realizes_class(const Presentation& pres, const Partition& p, int m_max = kMaxClassDegree);

struct ClassAnswer {
  Partition partition;
  bool yes = false;
  bool operator==(const ClassAnswer&) const = default;
};

std::vector<ClassAnswer> invariant_vector(const PairCode& code, int m_max = kDefaultMMax);

/// "partition=2+1;answer=Y;..." in partition order.
std::string certificate(const std::vector<ClassAnswer>& answers);

/// First partition on which the two vectors disagree, if any.
std::optional<Partition> separating_partition(const std::vector<ClassAnswer>& a,
                                              const std::vector<ClassAnswer>& b);

}  // namespace knots
