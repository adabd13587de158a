#include "knots/codes.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace knots {

std::string_view to_string(CodeErrc e) noexcept {
  switch (e) {
    case CodeErrc::MalformedText: return "MalformedText";
    case CodeErrc::DuplicateLabel: return "DuplicateLabel";
    case CodeErrc::LabelOutOfRange: return "LabelOutOfRange";
    case CodeErrc::ParityViolation: return "ParityViolation";
    case CodeErrc::OneNotLeft: return "OneNotLeft";
    case CodeErrc::CrossingCountMismatch: return "CrossingCountMismatch";
    case CodeErrc::TooManyCrossings: return "TooManyCrossings";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(CodeErrc e, const std::string& detail) {
  throw CodeError(e, std::string(to_string(e)) + ": " + detail);
}

struct RawCode {
  int n = 0;
  std::array<std::int8_t, kMaxLabels> partner{};
  std::uint64_t over = 0;
};

// Transposes every pair when label 1 is an undercrossing.
void normalize(RawCode& raw) {
  if (raw.n == 0) return;
  if ((raw.over & 1u) == 0) {
    const std::uint64_t all = (raw.n * 2 == 64) ? ~0ull : ((1ull << (2 * raw.n)) - 1);
    raw.over = ~raw.over & all;
  }
}

RawCode relabel_raw(const PairCode& code, int offset, bool reverse) {
  RawCode raw;
  raw.n = code.crossings();
  const int m = code.labels();
  for (int x = 1; x <= m; ++x) {
    const int nx = wrap_label(reverse ? offset - x : offset + x, m);
    const int np = wrap_label(reverse ? offset - code.partner(x) : offset + code.partner(x), m);
    raw.partner[static_cast<std::size_t>(nx - 1)] = static_cast<std::int8_t>(np);
    if (code.is_over(x)) raw.over |= 1ull << (nx - 1);
  }
  normalize(raw);
  return raw;
}

CodeKey raw_key(const RawCode& raw) {
  CodeKey key = 0;
  for (int i = 1; i <= raw.n; ++i) {
    const int p = raw.partner[static_cast<std::size_t>(2 * i - 2)];
    key = (key << 5) | static_cast<CodeKey>(p / 2 - 1);
  }
  for (int i = 1; i <= raw.n; ++i) {
    const bool odd_over = (raw.over >> (2 * i - 2)) & 1u;
    key = (key << 1) | static_cast<CodeKey>(odd_over ? 0 : 1);
  }
  return key;
}

}  // namespace

// PairCode has no public raw constructor; this helper writes the fields
// through from_pairs' validated path or the passage builder.
static PairCode make_code(const RawCode& raw);

PairCode PairCode::from_pairs(std::span<const Pair> pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n > kMaxCrossings) fail(CodeErrc::TooManyCrossings, std::to_string(n) + " pairs");
  const int m = 2 * n;
  std::array<bool, kMaxLabels + 1> seen{};
  for (const Pair& p : pairs) {
    for (int label : {p.over, p.under}) {
      if (label < 1 || label > m) fail(CodeErrc::LabelOutOfRange, std::to_string(label));
      if (seen[static_cast<std::size_t>(label)]) fail(CodeErrc::DuplicateLabel, std::to_string(label));
      seen[static_cast<std::size_t>(label)] = true;
    }
  }
  for (const Pair& p : pairs) {
    if ((p.over + p.under) % 2 == 0) {
      fail(CodeErrc::ParityViolation,
           "(" + std::to_string(p.over) + "," + std::to_string(p.under) + ")");
    }
    if (p.under == 1) fail(CodeErrc::OneNotLeft, "label 1 is an undercrossing");
  }
  PairCode code;
  code.n_ = n;
  for (const Pair& p : pairs) {
    code.partner_[static_cast<std::size_t>(p.over - 1)] = static_cast<std::int8_t>(p.under);
    code.partner_[static_cast<std::size_t>(p.under - 1)] = static_cast<std::int8_t>(p.over);
    code.over_ |= 1ull << (p.over - 1);
  }
  return code;
}

PairCode PairCode::from_passages(std::span<const Passage> seq) {
  const int m = static_cast<int>(seq.size());
  if (m % 2 != 0) fail(CodeErrc::MalformedText, "odd passage count");
  if (m / 2 > kMaxCrossings) fail(CodeErrc::TooManyCrossings, std::to_string(m / 2) + " crossings");
  RawCode raw;
  raw.n = m / 2;
  // crossing id -> first label seen
  std::vector<std::pair<int, int>> first;
  first.reserve(static_cast<std::size_t>(raw.n));
  for (int pos = 0; pos < m; ++pos) {
    const Passage& p = seq[static_cast<std::size_t>(pos)];
    const int label = pos + 1;
    if (p.over) raw.over |= 1ull << pos;
    auto it = std::find_if(first.begin(), first.end(),
                           [&](const auto& e) { return e.first == p.crossing; });
    if (it == first.end()) {
      first.emplace_back(p.crossing, label);
      continue;
    }
    const int other = it->second;
    if (other < 0) fail(CodeErrc::DuplicateLabel, "crossing visited more than twice");
    if (seq[static_cast<std::size_t>(other - 1)].over == p.over) {
      fail(CodeErrc::MalformedText, "crossing without exactly one overpass");
    }
    if ((other + label) % 2 == 0) {
      fail(CodeErrc::ParityViolation,
           "(" + std::to_string(other) + "," + std::to_string(label) + ")");
    }
    raw.partner[static_cast<std::size_t>(other - 1)] = static_cast<std::int8_t>(label);
    raw.partner[static_cast<std::size_t>(label - 1)] = static_cast<std::int8_t>(other);
    it->second = -1;
  }
  for (const auto& e : first) {
    if (e.second > 0) fail(CodeErrc::MalformedText, "crossing visited once");
  }
  normalize(raw);
  return make_code(raw);
}

std::vector<Pair> PairCode::pairs() const {
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int x = 1; x <= 2 * n_; ++x) {
    if (is_over(x)) out.push_back({x, partner(x)});
  }
  return out;
}

std::vector<Passage> PairCode::passages() const {
  std::vector<Passage> seq(static_cast<std::size_t>(2 * n_));
  for (int x = 1; x <= 2 * n_; ++x) {
    const bool o = is_over(x);
    seq[static_cast<std::size_t>(x - 1)] = {o ? x : partner(x), o};
  }
  return seq;
}

static PairCode make_code(const RawCode& raw) {
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(raw.n));
  for (int x = 1; x <= 2 * raw.n; ++x) {
    if ((raw.over >> (x - 1)) & 1u) pairs.push_back({x, raw.partner[static_cast<std::size_t>(x - 1)]});
  }
  return PairCode::from_pairs(pairs);
}

FGForm fg_form(const PairCode& code) {
  FGForm fg;
  const int n = code.crossings();
  fg.f.resize(static_cast<std::size_t>(n));
  fg.g.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    fg.f[static_cast<std::size_t>(i - 1)] = code.partner(2 * i - 1) / 2;
    fg.g[static_cast<std::size_t>(i - 1)] = code.is_over(2 * i - 1) ? 0 : 1;
  }
  return fg;
}

PairCode from_fg(std::span<const int> f, std::span<const int> g) {
  if (f.size() != g.size()) fail(CodeErrc::CrossingCountMismatch, "f and g lengths differ");
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int odd = 2 * static_cast<int>(i) + 1;
    const int even = 2 * f[i];
    pairs.push_back(g[i] == 0 ? Pair{odd, even} : Pair{even, odd});
  }
  return PairCode::from_pairs(pairs);
}

std::vector<int> companion_map(const PairCode& code) {
  std::vector<int> a(static_cast<std::size_t>(code.labels() + 1), 0);
  for (int x = 1; x <= code.labels(); ++x) a[static_cast<std::size_t>(x)] = code.companion(x);
  return a;
}

PairCode parse_code(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::vector<Pair> pairs;
  if (text.empty()) return PairCode{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(' ', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t colon = token.find(':');
    if (token.empty() || colon == std::string_view::npos) {
      fail(CodeErrc::MalformedText, "bad token '" + std::string(token) + "'");
    }
    Pair p;
    const auto parse_int = [&](std::string_view s, int& out) {
      if (s.empty()) return false;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (!parse_int(token.substr(0, colon), p.over) || !parse_int(token.substr(colon + 1), p.under)) {
      fail(CodeErrc::MalformedText, "bad token '" + std::string(token) + "'");
    }
    pairs.push_back(p);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return PairCode::from_pairs(pairs);
}

std::string to_string(const PairCode& code) {
  std::string out;
  for (const Pair& p : code.pairs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.over);
    out += ':';
    out += std::to_string(p.under);
  }
  return out;
}

PairCode rotate(const PairCode& code, int offset, bool reverse) {
  if (code.empty()) return code;
  return make_code(relabel_raw(code, offset, reverse));
}

PairCode transpose(const PairCode& code) {
  std::vector<Pair> pairs;
  for (const Pair& p : code.pairs()) pairs.push_back({p.under, p.over});
  std::vector<Passage> seq = code.passages();
  for (Passage& p : seq) p.over = !p.over;
  return PairCode::from_passages(seq);
}

PairCode inverse_code(const PairCode& code) {
  // (i, j) -> (2n+1-i, 2n+1-j) is the reversed relabeling with offset 2n+1.
  if (code.empty()) return code;
  return make_code(relabel_raw(code, code.labels() + 1, true));
}

CodeKey code_key(const PairCode& code) {
  RawCode raw;
  raw.n = code.crossings();
  for (int x = 1; x <= code.labels(); ++x) {
    raw.partner[static_cast<std::size_t>(x - 1)] = static_cast<std::int8_t>(code.partner(x));
  }
  raw.over = code.over_mask();
  return raw_key(raw);
}

bool lex_less(const PairCode& a, const PairCode& b) {
  if (a.crossings() != b.crossings()) {
    fail(CodeErrc::CrossingCountMismatch,
         std::to_string(a.crossings()) + " vs " + std::to_string(b.crossings()));
  }
  return code_key(a) < code_key(b);
}

PairCode canonical_relabel(const PairCode& code) {
  if (code.empty()) return code;
  const int m = code.labels();
  RawCode best;
  CodeKey best_key = 0;
  bool have = false;
  for (int k = 0; k < m; ++k) {
    for (bool rev : {false, true}) {
      RawCode raw = relabel_raw(code, k, rev);
      const CodeKey key = raw_key(raw);
      if (!have || key < best_key) {
        best = raw;
        best_key = key;
        have = true;
      }
    }
  }
  return make_code(best);
}

std::vector<PairCode> relabelings(const PairCode& code) {
  std::vector<PairCode> out;
  if (code.empty()) return {code};
  for (int k = 0; k < code.labels(); ++k) {
    for (bool rev : {false, true}) out.push_back(rotate(code, k, rev));
  }
  return out;
}

PairCode connected_sum(const PairCode& a, const PairCode& b) {
  std::vector<Pair> pairs = a.pairs();
  const int shift = a.labels();
  for (const Pair& p : b.pairs()) pairs.push_back({p.over + shift, p.under + shift});
  return PairCode::from_pairs(pairs);
}

bool is_composite(const PairCode& code) {
  const int m = code.labels();
  for (int k = 1; k <= m; ++k) {
    for (int l = k + 1; l <= m; ++l) {
      if (k == 1 && l == m) continue;
      bool closed = true;
      for (int x = k; x <= l && closed; ++x) {
        const int p = code.partner(x);
        closed = p >= k && p <= l;
      }
      if (closed) return true;
    }
  }
  return false;
}

std::size_t PairCodeHash::operator()(const PairCode& c) const noexcept {
  const CodeKey key = code_key(c);
  const auto lo = static_cast<std::uint64_t>(key);
  const auto hi = static_cast<std::uint64_t>(key >> 64);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
  h ^= static_cast<std::uint64_t>(c.crossings()) * 0xBF58476D1CE4E5B9ull;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace knots
