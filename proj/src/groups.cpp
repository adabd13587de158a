#include "knots/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "knots/planarity.hpp"

namespace knots {

namespace {

bool strictly_between(int a, int z, int b, int m) {
  const int dz = forward_distance(a, z, m);
  return dz > 0 && dz < forward_distance(a, b, m);
}

// Relative sign of two interlaced double points {x, y} and {u, v}, where the
// labels occur in the cyclic order x, u, y, v.  Chords joining two different
// arcs among (x,u), (u,y), (y,v) each flip the result.
int interlaced_relation(const PairCode& code, int x, int u) {
  const int m = code.labels();
  const int y = code.partner(x);
  const int v = code.partner(u);
  const int ends[4] = {x, u, y, v};
  auto arc_of = [&](int z) {
    for (int k = 0; k < 3; ++k) {
      if (strictly_between(ends[k], z, ends[k + 1], m)) return k;
    }
    return 3;
  };
  int flips = 0;
  for (int z = 1; z <= m; ++z) {
    const int p = code.partner(z);
    if (z > p) continue;
    if (z == x || z == y || z == u || z == v) continue;
    const int az = arc_of(z);
    const int ap = arc_of(p);
    if (az != ap && az < 3 && ap < 3) ++flips;
  }
  int L = -1;
  if (code.is_over(x) != code.is_over(u)) L = -L;
  if (flips % 2) L = -L;
  return L;
}

}  // namespace

std::vector<int> crossing_signs(const PairCode& code) {
  const int n = code.crossings();
  if (n == 0) return {};
  if (!is_realizable(Shadow::of(code))) throw GroupError(GroupErrc::NotRealizable, to_string(code));
  const int m = code.labels();
  const std::vector<Pair> pairs = code.pairs();
  std::vector<int> index(static_cast<std::size_t>(m + 1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[static_cast<std::size_t>(pairs[k].over)] = static_cast<int>(k);
    index[static_cast<std::size_t>(pairs[k].under)] = static_cast<int>(k);
  }
  // Edges of the interlacement graph with their relation.
  struct Edge {
    int to;
    int relation;
  };
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int x = pairs[static_cast<std::size_t>(a)].over;
    const int y = code.partner(x);
    for (int b = a + 1; b < n; ++b) {
      const int p = pairs[static_cast<std::size_t>(b)].over;
      const int q = code.partner(p);
      const bool p_in = strictly_between(x, p, y, m);
      const bool q_in = strictly_between(x, q, y, m);
      if (p_in == q_in) continue;
      const int rel = interlaced_relation(code, x, p_in ? p : q);
      adj[static_cast<std::size_t>(a)].push_back({b, rel});
      adj[static_cast<std::size_t>(b)].push_back({a, rel});
    }
  }
  // Components of a composite code get independent signs; the group does
  // not depend on the relative choice.
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (sign[static_cast<std::size_t>(root)] != 0) continue;
    sign[static_cast<std::size_t>(root)] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop();
      for (const Edge& e : adj[static_cast<std::size_t>(a)]) {
        const int want = sign[static_cast<std::size_t>(a)] * e.relation;
        int& s = sign[static_cast<std::size_t>(e.to)];
        if (s == 0) {
          s = want;
          queue.push(e.to);
        } else if (s != want) {
          throw GroupError(GroupErrc::NotRealizable, "inconsistent crossing signs for " + to_string(code));
        }
      }
    }
  }
  return sign;
}

Presentation wirtinger(const PairCode& code) {
  Presentation pres;
  const int n = code.crossings();
  if (n == 0) return pres;
  const int m = code.labels();
  const std::vector<int> signs = crossing_signs(code);
  for (int x = 1; x <= m; ++x) {
    if (!code.is_over(x)) pres.arc_starts.push_back(x);
  }
  pres.generators = n;
  auto arc_of = [&](int label) {
    label = wrap_label(label, m);
    const auto it = std::upper_bound(pres.arc_starts.begin(), pres.arc_starts.end(), label);
    if (it == pres.arc_starts.begin()) return n - 1;
    return static_cast<int>(it - pres.arc_starts.begin()) - 1;
  };
  const std::vector<Pair> pairs = code.pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Relation r;
    r.target = arc_of(pairs[k].under);
    r.source = arc_of(pairs[k].under - 1);
    r.conjugator = arc_of(pairs[k].over);
    r.sign = signs[k];
    pres.relations.push_back(r);
  }
  return pres;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int part : p) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
  }
  return out;
}

std::optional<Partition> next_partition(const Partition& p) {
  int sigma = -1;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (p[static_cast<std::size_t>(k)] >= 2) {
      sigma = k;
      break;
    }
  }
  if (sigma < 0) return std::nullopt;
  const int m = std::accumulate(p.begin(), p.end(), 0);
  Partition next(p.begin(), p.begin() + sigma);
  const int value = p[static_cast<std::size_t>(sigma)] - 1;
  int remaining = m - std::accumulate(next.begin(), next.end(), 0);
  while (remaining >= value) {
    next.push_back(value);
    remaining -= value;
  }
  if (remaining > 0) next.push_back(remaining);
  return next;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m <= 0) return out;
  for (std::optional<Partition> p = Partition{m}; p; p = next_partition(*p)) out.push_back(*p);
  return out;
}

namespace {

using Perm = std::array<std::uint8_t, kMaxClassDegree>;

std::uint32_t perm_key(const Perm& p, int m) {
  std::uint32_t key = 0;
  for (int i = 0; i < m; ++i) key = key * 8 + p[static_cast<std::size_t>(i)];
  return key;
}

Perm inverse(const Perm& p, int m) {
  Perm out{};
  for (int i = 0; i < m; ++i) out[p[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

// c^e s c^-e as functions composed right to left.
Perm conjugate(const Perm& c, const Perm& c_inv, const Perm& s, int e, int m) {
  const Perm& outer = e > 0 ? c : c_inv;
  const Perm& inner = e > 0 ? c_inv : c;
  Perm out{};
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = outer[s[inner[static_cast<std::size_t>(i)]]];
  }
  return out;
}

Partition cycle_type(const Perm& p, int m) {
  std::array<bool, kMaxClassDegree> seen{};
  Partition out;
  for (int i = 0; i < m; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

class ClassSearch {
 public:
  ClassSearch(const Presentation& pres, const Partition& p)
      : pres_(pres), m_(std::accumulate(p.begin(), p.end(), 0)) {
    Perm perm{};
    std::iota(perm.begin(), perm.begin() + m_, 0);
    do {
      if (cycle_type(perm, m_) == p) {
        index_.emplace(perm_key(perm, m_), static_cast<int>(members_.size()));
        members_.push_back(perm);
        inverses_.push_back(inverse(perm, m_));
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + m_));
    // members_[0] is the lexicographically first member, used for generator 0.
  }

  bool run() {
    std::vector<int> vals(static_cast<std::size_t>(pres_.generators), -1);
    vals[0] = 0;
    return search(vals);
  }

 private:
  int conj_index(int c, int s, int e) const {
    const Perm q = conjugate(members_[static_cast<std::size_t>(c)], inverses_[static_cast<std::size_t>(c)],
                             members_[static_cast<std::size_t>(s)], e, m_);
    return index_.at(perm_key(q, m_));
  }

  bool propagate(std::vector<int>& vals) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Relation& r : pres_.relations) {
        const int c = vals[static_cast<std::size_t>(r.conjugator)];
        const int s = vals[static_cast<std::size_t>(r.source)];
        int& t = vals[static_cast<std::size_t>(r.target)];
        if (c < 0) continue;
        if (s >= 0) {
          const int want = conj_index(c, s, r.sign);
          if (t < 0) {
            t = want;
            changed = true;
          } else if (t != want) {
            return false;
          }
        } else if (t >= 0) {
          vals[static_cast<std::size_t>(r.source)] = conj_index(c, t, -r.sign);
          changed = true;
        }
      }
    }
    return true;
  }

  bool covers_class(const std::vector<int>& vals) const {
    std::vector<int> gens(vals.begin(), vals.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<char> seen(members_.size(), 0);
    std::vector<int> stack{vals[0]};
    seen[static_cast<std::size_t>(vals[0])] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      for (int g : gens) {
        for (int sign : {1, -1}) {
          const int q = conj_index(g, e, sign);
          if (seen[static_cast<std::size_t>(q)]) continue;
          seen[static_cast<std::size_t>(q)] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    return count == members_.size();
  }

  bool search(std::vector<int> vals) const {
    if (!propagate(vals)) return false;
    const auto open = std::find(vals.begin(), vals.end(), -1);
    if (open == vals.end()) return covers_class(vals);
    const auto slot = static_cast<std::size_t>(open - vals.begin());
    for (int k = 0; k < static_cast<int>(members_.size()); ++k) {
      std::vector<int> next = vals;
      next[slot] = k;
      if (search(std::move(next))) return true;
    }
    return false;
  }

  const Presentation& pres_;
  int m_;
  std::vector<Perm> members_;
  std::vector<Perm> inverses_;
  std::unordered_map<std::uint32_t, int> index_;
};

}  // namespace

bool realizes_class(const Presentation& pres, const Partition& p, int m_max) {
  const int m = std::accumulate(p.begin(), p.end(), 0);
  if (m > std::min(m_max, kMaxClassDegree)) {
    throw GroupError(GroupErrc::ClassTooLarge, "partition " + to_string(p) + " exceeds degree bound");
  }
  return ClassSearch(pres, p).run();
}

std::vector<ClassAnswer> invariant_vector(const PairCode& code, int m_max) {
  if (m_max > kMaxClassDegree) {
    throw GroupError(GroupErrc::ClassTooLarge, "m_max " + std::to_string(m_max) + " exceeds " +
                                                   std::to_string(kMaxClassDegree));
  }
  const Presentation pres = wirtinger(code);
  std::vector<ClassAnswer> out;
  for (int m = 1; m <= m_max; ++m) {
    for (const Partition& p : partitions_of(m)) out.push_back({p, realizes_class(pres, p, m_max)});
  }
  return out;
}

std::string certificate(const std::vector<ClassAnswer>& answers) {
  std::string out;
  for (const ClassAnswer& a : answers) {
    if (!out.empty()) out += ';';
    out += "partition=" + to_string(a.partition) + ";answer=" + (a.yes ? "Y" : "N");
  }
  return out;
}

std::optional<Partition> separating_partition(const std::vector<ClassAnswer>& a,
                                              const std::vector<ClassAnswer>& b) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].partition == b[i].partition && a[i].yes != b[i].yes) return a[i].partition;
  }
  return std::nullopt;
}

}  // namespace knots
