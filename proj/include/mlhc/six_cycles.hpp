#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"
#include "mlhc/sigma.hpp"

namespace mlhc {

/// Dyck words x, y differing as (1,1,0,w,0) vs (1,0,1,w,0) on positions a..b,
/// where the prefix before a is a run of unmatched opens separated by Dyck words.
struct FlippablePair {
  Bitstring x;
  Bitstring y;
  std::size_t a = 0;  // start of the flippable substring
  std::size_t b = 0;  // its last position (the match of a)
  std::size_t d = 0;  // number of unmatched opens before a

  friend bool operator==(const FlippablePair& l, const FlippablePair& r) { return l.x == r.x && l.a == r.a; }
  friend auto operator<=>(const FlippablePair& l, const FlippablePair& r) {
    if (auto c = l.x <=> r.x; c != 0) return c;
    return l.a <=> r.a;
  }
};

/// Gadget 6-cycle. `pattern` has length 2n+1 over {0,1,*} and ends in '0';
/// `vertices` lists the six substitutions in cyclic adjacency order.
struct SixCycle {
  std::string pattern;
  std::array<Bitstring, 6> vertices;
  std::array<std::size_t, 3> stars{};  // 1-based positions of '*'
};

namespace detail {

inline bool is_flippable_at(const Bitstring& x, const std::vector<int>& heights, std::size_t a) {
  if (a + 2 > x.size()) return false;
  if (!(x.bit(a) == 1 && x.bit(a + 1) == 1 && x.bit(a + 2) == 0)) return false;
  for (std::size_t j = 1; j < a; ++j) {
    if (heights[j] < 1) return false;
  }
  return true;
}

}  // namespace detail

/// Starting positions of flippable substrings in x, ascending.
inline std::vector<std::size_t> flippable_positions(const Bitstring& x) {
  require_dyck(x, "flippable_positions");
  const auto h = height_profile(x);
  std::vector<std::size_t> out;
  for (std::size_t a = 1; a + 2 <= x.size(); ++a) {
    // Once the path touches the axis no later position qualifies.
    if (a > 1 && h[a - 1] < 1) break;
    if (detail::is_flippable_at(x, h, a)) out.push_back(a);
  }
  return out;
}

inline FlippablePair make_flippable_pair(const Bitstring& x, std::size_t a) {
  require_dyck(x, "make_flippable_pair");
  const auto h = height_profile(x);
  if (a < 1 || !detail::is_flippable_at(x, h, a)) {
    throw domain_error("position " + std::to_string(a) + " is not flippable in \"" + x.str() + "\"");
  }
  const auto partner = matching_positions(x);
  FlippablePair p;
  p.x = x;
  p.y = x.flipped(a + 1).flipped(a + 2);
  p.a = a;
  p.b = partner[a];
  p.d = static_cast<std::size_t>(h[a - 1]);
  return p;
}

/// Pull: swaps positions a+1 and a+2 (110 -> 101).
inline Bitstring pull(const Bitstring& x, std::size_t a) { return make_flippable_pair(x, a).y; }

/// All flippable pairs of D_n, ordered by (x, a).
inline std::vector<FlippablePair> enumerate_flippable_pairs(int n, const Limits& limits = {}) {
  check_enumeration_cap(n, limits, "enumerate_flippable_pairs");
  std::vector<FlippablePair> out;
  for (const auto& x : enumerate_dyck(n, limits)) {
    for (std::size_t a : flippable_positions(x)) out.push_back(make_flippable_pair(x, a));
  }
  return out;
}

/// The gadget for a flippable pair. Pattern layout:
///   (u_1,0,...,u_d,0,1,*,*,w,*,v_d,1,...,v_1,1,v_0,0)
/// for x = (1,u_1,...,1,u_d,1,1,0,w,0,v_d,0,...,v_1,0,v_0).
///
/// Vertex order: start where the stars hold x's own bits (1,0,0), step to the
/// substitution differing in the middle star, and continue around:
/// 100, 110, 010, 011, 001, 101.
inline SixCycle six_cycle(const FlippablePair& p) {
  const Bitstring& x = p.x;
  const auto partner = matching_positions(x);

  std::vector<std::size_t> opens;  // unmatched opens before a, outermost first
  for (std::size_t j = 1; j < p.a; ++j) {
    if (x.bit(j)) {
      opens.push_back(j);
    } else {
      opens.pop_back();
    }
  }
  if (opens.size() != p.d) throw structural_error("six_cycle: depth mismatch for \"" + x.str() + "\"");

  auto span = [&](std::size_t first, std::size_t last_exclusive) {
    return last_exclusive > first ? x.slice(first, last_exclusive - first).str() : std::string();
  };

  std::string pattern;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::size_t next_open = i + 1 < opens.size() ? opens[i + 1] : p.a;
    pattern += span(opens[i] + 1, next_open) + '0';
  }
  pattern += "1**" + span(p.a + 3, p.b) + '*';
  std::size_t cursor = p.b + 1;
  for (auto it = opens.rbegin(); it != opens.rend(); ++it) {
    const std::size_t close = partner[*it];
    pattern += span(cursor, close) + '1';
    cursor = close + 1;
  }
  pattern += span(cursor, x.size() + 1);
  pattern += '0';

  SixCycle c;
  c.pattern = pattern;
  c.stars = {p.a + 1, p.a + 2, p.b};
  static constexpr std::array<std::array<char, 3>, 6> kOrder{{
      {'1', '0', '0'}, {'1', '1', '0'}, {'0', '1', '0'}, {'0', '1', '1'}, {'0', '0', '1'}, {'1', '0', '1'}}};
  for (std::size_t k = 0; k < 6; ++k) {
    std::string s = pattern;
    for (std::size_t t = 0; t < 3; ++t) s[c.stars[t] - 1] = kOrder[k][t];
    c.vertices[k] = Bitstring(s);
  }
  return c;
}

struct TauSequences {
  FlipSequence tau_x;
  FlipSequence tau_y;
};

/// Modified flip sequences after resplicing P_sigma(x) and P_sigma(y) with the
/// gadget. With sigma(x) = (alpha, b, a, a+2, a+1, a, a+2, gamma) and
/// sigma(y) = (alpha, a+1, a, delta):
///   tau_x = (alpha, a+2, a, delta)
///   tau_y = (alpha, b, a, a+1, a+2, a, a+1, gamma)
/// The pieces are sliced out of sigma(x), sigma(y) and checked against their
/// expected shape.
inline TauSequences tau_sequences(const FlippablePair& p) {
  const FlipSequence sx = sigma(p.x);
  const FlipSequence sy = sigma(p.y);
  const std::size_t a = p.a;
  const std::size_t b = p.b;
  const std::size_t alpha_len = 2 * a - 2;

  auto fail = [&](const char* what) {
    throw structural_error(std::string("tau_sequences: ") + what + " for pair (" + p.x.str() + "," + p.y.str() + ")");
  };
  if (sx.size() < alpha_len + 6 || sy.size() < alpha_len + 2) fail("sequence too short");

  const FlipSequence alpha(sx.begin(), sx.begin() + static_cast<std::ptrdiff_t>(alpha_len));
  if (!std::equal(alpha.begin(), alpha.end(), sy.begin())) fail("alpha mismatch");
  const FlipSequence x_core(sx.begin() + static_cast<std::ptrdiff_t>(alpha_len),
                            sx.begin() + static_cast<std::ptrdiff_t>(alpha_len + 6));
  if (x_core != FlipSequence{b, a, a + 2, a + 1, a, a + 2}) fail("sigma(x) core mismatch");
  if (sy[alpha_len] != a + 1 || sy[alpha_len + 1] != a) fail("sigma(y) core mismatch");

  const FlipSequence gamma(sx.begin() + static_cast<std::ptrdiff_t>(alpha_len + 6), sx.end());
  const FlipSequence delta(sy.begin() + static_cast<std::ptrdiff_t>(alpha_len + 2), sy.end());

  const FlipSequence sw = sigma_sub(a + 3, p.x.slice(a + 3, b - a - 3));
  if (p.d == 0) {
    if (!alpha.empty() || gamma != sw || !delta.empty()) fail("d=0 shape mismatch");
  } else {
    // gamma = (sigma_{a+3}(w), a-1, b, beta)
    // delta = (a-1, a+1, b, a+2, sigma_{a+3}(w), a+1, b, beta)
    if (gamma.size() < sw.size() + 2) fail("gamma too short");
    if (!std::equal(sw.begin(), sw.end(), gamma.begin())) fail("gamma prefix mismatch");
    if (gamma[sw.size()] != a - 1 || gamma[sw.size() + 1] != b) fail("gamma separator mismatch");
    const FlipSequence beta(gamma.begin() + static_cast<std::ptrdiff_t>(sw.size() + 2), gamma.end());
    FlipSequence expect{a - 1, a + 1, b, a + 2};
    expect.insert(expect.end(), sw.begin(), sw.end());
    expect.insert(expect.end(), {a + 1, b});
    expect.insert(expect.end(), beta.begin(), beta.end());
    if (delta != expect) fail("delta shape mismatch");
  }

  TauSequences t;
  t.tau_x = alpha;
  t.tau_x.insert(t.tau_x.end(), {a + 2, a});
  t.tau_x.insert(t.tau_x.end(), delta.begin(), delta.end());
  t.tau_y = alpha;
  t.tau_y.insert(t.tau_y.end(), {b, a, a + 1, a + 2, a, a + 1});
  t.tau_y.insert(t.tau_y.end(), gamma.begin(), gamma.end());
  return t;
}

struct IntersectionEdges {
  std::array<std::size_t, 2> on_x;
  std::size_t on_y;
};

/// 1-based edge indices where the gadget meets P_sigma(x) and P_sigma(y);
/// edge k joins path entries k and k+1.
inline IntersectionEdges intersection_edge_indices(const FlippablePair& p) {
  return {{2 * p.a - 1, 2 * p.a + 4}, 2 * p.a - 1};
}

}  // namespace mlhc
