#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"
#include "mlhc/lexical_matching.hpp"
#include "mlhc/plane_forest.hpp"
#include "mlhc/six_cycles.hpp"

namespace mlhc {

/// 2-regular spanning subgraph of G_n, stored as two neighbor slots per vertex.
class CycleCover {
 public:
  explicit CycleCover(const TwoFactor& tf) : index_(tf.index()), adj_(index_.size()) {
    for (Word v : index_.sorted_vertices()) adj_[index_.rank(v)] = tf.neighbors(v);
  }

  std::size_t width() const noexcept { return index_.width(); }
  const VertexIndex& index() const noexcept { return index_; }

  const std::array<Word, 2>& neighbors(Word v) const { return adj_[index_.rank(v)]; }

  bool has_edge(Word u, Word v) const {
    const auto& nb = neighbors(u);
    return nb[0] == v || nb[1] == v;
  }

  /// Toggles the six gadget edges (all vertices carry a trailing 0 bit).
  void toggle(const SixCycle& c) {
    std::array<std::pair<Word, Word>, 6> edges;
    for (std::size_t k = 0; k < 6; ++k) edges[k] = {pack(c.vertices[k]), pack(c.vertices[(k + 1) % 6])};
    std::array<bool, 6> present{};
    for (std::size_t k = 0; k < 6; ++k) present[k] = has_edge(edges[k].first, edges[k].second);
    for (std::size_t k = 0; k < 6; ++k) {
      if (!present[k]) continue;
      clear_slot(edges[k].first, edges[k].second);
      clear_slot(edges[k].second, edges[k].first);
    }
    for (std::size_t k = 0; k < 6; ++k) {
      if (present[k]) continue;
      fill_slot(edges[k].first, edges[k].second, c);
      fill_slot(edges[k].second, edges[k].first, c);
    }
    for (const auto& v : c.vertices) {
      const auto& nb = neighbors(pack(v));
      if (nb[0] == kEmpty || nb[1] == kEmpty) {
        throw structural_error("apply_six_cycles: gadget " + c.pattern + " leaves " + v.str() + " with degree < 2");
      }
    }
  }

  std::size_t component_count() const {
    std::vector<bool> seen(adj_.size(), false);
    std::size_t count = 0;
    for (Word start : index_.sorted_vertices()) {
      if (seen[index_.rank(start)]) continue;
      ++count;
      Word prev = start;
      Word cur = start;
      do {
        seen[index_.rank(cur)] = true;
        const auto& nb = neighbors(cur);
        const Word next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
      } while (cur != start);
    }
    return count;
  }

 private:
  static constexpr Word kEmpty = ~Word{0};

  void clear_slot(Word v, Word gone) {
    auto& nb = adj_[index_.rank(v)];
    if (nb[0] == gone) {
      nb[0] = kEmpty;
    } else if (nb[1] == gone) {
      nb[1] = kEmpty;
    }
  }

  void fill_slot(Word v, Word added, const SixCycle& c) {
    auto& nb = adj_[index_.rank(v)];
    if (nb[0] == kEmpty) {
      nb[0] = added;
    } else if (nb[1] == kEmpty) {
      nb[1] = added;
    } else {
      throw structural_error("apply_six_cycles: gadget " + c.pattern + " overlaps at " + unpack(v, width()).str());
    }
  }

  VertexIndex index_;
  std::vector<std::array<Word, 2>> adj_;
};

inline CycleCover apply_six_cycles(const TwoFactor& tf, const std::vector<FlippablePair>& pairs) {
  CycleCover cover(tf);
  for (const auto& p : pairs) cover.toggle(six_cycle(p));
  return cover;
}

/// Cyclic vertex sequence of G_n (the closing edge back to the start is implicit).
struct HamiltonCycle {
  int n = 0;
  std::vector<Word> vertices;

  std::size_t width() const noexcept { return 2 * static_cast<std::size_t>(n) + 1; }

  std::vector<Bitstring> strings() const {
    std::vector<Bitstring> out;
    out.reserve(vertices.size());
    for (Word w : vertices) out.push_back(unpack(w, width()));
    return out;
  }

  /// Position flipped to reach each next vertex, including the wraparound step.
  FlipSequence flips() const {
    FlipSequence out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.push_back(flip_position(vertices[i], vertices[(i + 1) % vertices.size()], width()));
    }
    return out;
  }
};

/// 1^n 0^{n+1}
inline Word assembly_start_vertex(int n) {
  const auto un = static_cast<std::size_t>(n);
  return ((Word{1} << un) - 1) << (un + 1);
}

/// Walks a single-cycle cover from 1^n 0^{n+1}, first stepping to the neighbor
/// whose differing bit position is smaller.
inline HamiltonCycle traverse(const CycleCover& cover, int n) {
  const std::size_t width = cover.width();
  const Word start = assembly_start_vertex(n);
  const auto& first = cover.neighbors(start);
  const Word next =
      flip_position(start, first[0], width) < flip_position(start, first[1], width) ? first[0] : first[1];

  HamiltonCycle hc;
  hc.n = n;
  hc.vertices.reserve(cover.index().size());
  hc.vertices.push_back(start);
  Word prev = start;
  Word cur = next;
  while (cur != start) {
    if (hc.vertices.size() >= cover.index().size()) throw structural_error("traverse: walk does not close");
    hc.vertices.push_back(cur);
    const auto& nb = cover.neighbors(cur);
    const Word step = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = step;
  }
  if (hc.vertices.size() != cover.index().size()) {
    throw structural_error("traverse: cycle through start has " + std::to_string(hc.vertices.size()) + " of " +
                           std::to_string(cover.index().size()) + " vertices");
  }
  return hc;
}

/// Two-factor, spanning tree of the auxiliary graph, gadget toggling, traversal.
inline HamiltonCycle assemble(int n, const Limits& limits = {}) {
  if (n < 1) throw domain_error("assemble: n must be >= 1");
  check_graph_cap(n, limits, "assemble");
  const TwoFactor tf = build_two_factor(n, limits);
  const AuxGraph g = build_aux_graph(n, Limits{std::max(limits.max_enumeration_n, n), limits.max_graph_n});
  const auto tree = spanning_tree(g);
  return traverse(apply_six_cycles(tf, tree), n);
}

// ---------------------------------------------------------------------------
// Verification works from raw text only.

struct VerifyReport {
  std::size_t vertex_count = 0;
  std::size_t expected_count = 0;
  std::size_t duplicates = 0;
  std::size_t bad_steps = 0;
  bool closes = false;
  bool pass = false;
};

namespace detail {

inline std::uint64_t middle_level_count(int n) {
  // 2 * C(2n+1, n)
  std::uint64_t c = 1;
  const auto m = static_cast<std::uint64_t>(2 * n + 1);
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(n); ++k) c = c * (m - k + 1) / k;
  return 2 * c;
}

inline std::uint64_t parse_vertex_line(std::string_view line, int n, std::size_t line_no) {
  const auto width = static_cast<std::size_t>(2 * n + 1);
  if (line.size() != width) {
    throw parse_error("expected " + std::to_string(width) + " bits, got " + std::to_string(line.size()), line_no);
  }
  std::uint64_t w = 0;
  int ones = 0;
  for (char c : line) {
    if (c != '0' && c != '1') throw parse_error("invalid character '" + std::string(1, c) + "'", line_no);
    w = (w << 1) | static_cast<std::uint64_t>(c == '1');
    ones += c == '1';
  }
  if (ones != n && ones != n + 1) {
    throw parse_error("weight " + std::to_string(ones) + " is not " + std::to_string(n) + " or " +
                          std::to_string(n + 1),
                      line_no);
  }
  return w;
}

}  // namespace detail

/// Checks that `lines` list a Hamilton cycle of G_n. With `closed`, a trailing
/// repeat of the first vertex is expected and removed.
inline VerifyReport verify_cycle(const std::vector<std::string>& lines, int n, bool closed = false) {
  if (n < 1 || 2 * n + 1 > 63) throw domain_error("verify_cycle: unsupported n");
  std::vector<std::uint64_t> seq;
  seq.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    seq.push_back(detail::parse_vertex_line(line, n, i + 1));
  }

  VerifyReport r;
  r.expected_count = detail::middle_level_count(n);
  bool closing_ok = true;
  if (closed) {
    closing_ok = seq.size() >= 2 && seq.front() == seq.back();
    if (closing_ok) seq.pop_back();
  }
  r.vertex_count = seq.size();

  std::vector<std::uint64_t> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) r.duplicates += sorted[i] == sorted[i - 1];

  for (std::size_t i = 1; i < seq.size(); ++i) r.bad_steps += std::popcount(seq[i] ^ seq[i - 1]) != 1;
  r.closes = closing_ok && seq.size() >= 2 && std::popcount(seq.front() ^ seq.back()) == 1;
  r.pass = r.duplicates == 0 && r.bad_steps == 0 && r.closes && r.vertex_count == r.expected_count;
  return r;
}

inline VerifyReport verify_cycle(std::istream& in, int n, bool closed = false) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return verify_cycle(lines, n, closed);
}

}  // namespace mlhc
