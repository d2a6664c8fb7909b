#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"

namespace mlhc {

enum class Matching { M, N };

namespace detail {

inline void require_middle_vertex(const Bitstring& x, bool upper, const char* what) {
  if (x.size() < 3 || x.size() % 2 == 0) {
    throw domain_error(std::string(what) + ": length of \"" + x.str() + "\" is not 2n+1 with n >= 1");
  }
  const std::size_t n = x.size() / 2;
  const std::size_t want = upper ? n + 1 : n;
  if (x.weight() != want) {
    throw domain_error(std::string(what) + ": \"" + x.str() + "\" must have weight " + std::to_string(want));
  }
}

struct PrefixKey {
  int surplus;
  std::size_t length;
};

// Prefixes ending in `last`, ordered by decreasing surplus (#0s - #1s), ties
// by increasing length for the forward maps and decreasing length for inverses.
inline std::vector<std::size_t> sorted_prefixes(const Bitstring& x, int last, bool ties_increasing) {
  std::vector<PrefixKey> keys;
  int surplus = 0;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    surplus += x.bit(j) ? -1 : 1;
    if (x.bit(j) == last) keys.push_back({surplus, j});
  }
  std::sort(keys.begin(), keys.end(), [&](const PrefixKey& a, const PrefixKey& b) {
    if (a.surplus != b.surplus) return a.surplus > b.surplus;
    return ties_increasing ? a.length < b.length : a.length > b.length;
  });
  std::vector<std::size_t> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(k.length);
  return out;
}

}  // namespace detail

/// Lengths of the prefixes of x ending in 0, in the total order that defines M and N.
inline std::vector<std::size_t> ordered_prefixes(const Bitstring& x) {
  detail::require_middle_vertex(x, false, "ordered_prefixes");
  return detail::sorted_prefixes(x, 0, true);
}

/// Prefixes of y ending in 1 in the order that defines M^-1 and N^-1.
inline std::vector<std::size_t> ordered_prefixes_inverse(const Bitstring& y) {
  detail::require_middle_vertex(y, true, "ordered_prefixes_inverse");
  return detail::sorted_prefixes(y, 1, false);
}

inline Bitstring match_M(const Bitstring& x) { return x.flipped(ordered_prefixes(x)[1]); }
inline Bitstring match_N(const Bitstring& x) { return x.flipped(ordered_prefixes(x)[0]); }
inline Bitstring match_M_inv(const Bitstring& y) { return y.flipped(ordered_prefixes_inverse(y)[1]); }
inline Bitstring match_N_inv(const Bitstring& y) { return y.flipped(ordered_prefixes_inverse(y)[0]); }

inline Bitstring apply_matching(Matching which, bool inverse, const Bitstring& x) {
  if (which == Matching::M) return inverse ? match_M_inv(x) : match_M(x);
  return inverse ? match_N_inv(x) : match_N(x);
}

// ---------------------------------------------------------------------------
// Packed single-scan variant used when walking the whole graph. Tracks the
// first two prefixes of the order instead of sorting.

/// Partner of the packed vertex `v` (width 2n+1) under M or N; direction is
/// inferred from the weight (weight n maps forward, weight n+1 maps back).
inline Word packed_partner(Word v, std::size_t width, Matching which) {
  const std::size_t n = width / 2;
  const bool forward = static_cast<std::size_t>(std::popcount(v)) == n;
  const int last = forward ? 0 : 1;
  int surplus = 0;
  int s1 = 0, s2 = 0;
  std::size_t j1 = 0, j2 = 0;
  for (std::size_t j = 1; j <= width; ++j) {
    const int b = packed_bit(v, j, width);
    surplus += b ? -1 : 1;
    if (b != last) continue;
    // A later prefix overtakes an earlier one on strictly larger surplus
    // (forward) or on larger-or-equal surplus (inverse).
    const bool beats1 = j1 == 0 || (forward ? surplus > s1 : surplus >= s1);
    const bool beats2 = j2 == 0 || (forward ? surplus > s2 : surplus >= s2);
    if (beats1) {
      s2 = s1;
      j2 = j1;
      s1 = surplus;
      j1 = j;
    } else if (beats2) {
      s2 = surplus;
      j2 = j;
    }
  }
  const std::size_t pos = which == Matching::N ? j1 : j2;
  return v ^ position_mask(pos, width);
}

// ---------------------------------------------------------------------------

/// Dense index over the vertices of G_n: weight-n words take ranks [0, C),
/// weight-(n+1) words take [C, 2C), each in increasing numeric order.
class VertexIndex {
 public:
  explicit VertexIndex(int n) : n_(static_cast<std::size_t>(n)), width_(2 * n_ + 1) {
    for (std::size_t i = 0; i <= width_; ++i) {
      binom_[i][0] = 1;
      for (std::size_t k = 1; k <= i; ++k) binom_[i][k] = binom_[i - 1][k - 1] + (k < i ? binom_[i - 1][k] : 0);
    }
    level_size_ = binom_[width_][n_];
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t level_size() const noexcept { return level_size_; }
  std::size_t size() const noexcept { return 2 * level_size_; }

  bool contains(Word v) const noexcept {
    if (width_ < 64 && (v >> width_) != 0) return false;
    const auto k = static_cast<std::size_t>(std::popcount(v));
    return k == n_ || k == n_ + 1;
  }

  std::size_t rank(Word v) const {
    const auto k = static_cast<std::size_t>(std::popcount(v));
    if (!contains(v)) throw domain_error("VertexIndex::rank: not a vertex of G_n");
    std::size_t r = 0;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < width_; ++i) {
      if ((v >> i) & 1U) r += binom_[i][++seen];
    }
    return k == n_ ? r : level_size_ + r;
  }

  /// Every vertex, in increasing numeric (= lexicographic) order.
  std::vector<Word> sorted_vertices() const {
    auto level = [&](std::size_t k) {
      std::vector<Word> out;
      out.reserve(binom_[width_][k]);
      Word w = (Word{1} << k) - 1;
      const Word limit = Word{1} << width_;
      while (w < limit) {
        out.push_back(w);
        // Gosper's hack: next larger word with the same popcount.
        const Word c = w & (~w + 1);
        const Word r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
      }
      return out;
    };
    auto lo = level(n_);
    auto hi = level(n_ + 1);
    std::vector<Word> all(lo.size() + hi.size());
    std::merge(lo.begin(), lo.end(), hi.begin(), hi.end(), all.begin());
    return all;
  }

 private:
  std::size_t n_;
  std::size_t width_;
  std::size_t level_size_ = 0;
  std::array<std::array<std::size_t, 65>, 65> binom_{};
};

/// The 2-factor M ∪ N of G_n.
class TwoFactor {
 public:
  TwoFactor(int n, VertexIndex index, std::vector<Word> m_partner, std::vector<Word> n_partner,
            std::vector<std::vector<Word>> cycles)
      : n_(n),
        index_(std::move(index)),
        m_partner_(std::move(m_partner)),
        n_partner_(std::move(n_partner)),
        cycles_(std::move(cycles)) {}

  int n() const noexcept { return n_; }
  std::size_t width() const noexcept { return index_.width(); }
  const VertexIndex& index() const noexcept { return index_; }

  Word m_partner(Word v) const { return m_partner_[index_.rank(v)]; }
  Word n_partner(Word v) const { return n_partner_[index_.rank(v)]; }
  std::array<Word, 2> neighbors(Word v) const { return {m_partner(v), n_partner(v)}; }

  std::pair<Bitstring, Bitstring> neighbors(const Bitstring& v) const {
    const Word w = pack(v);
    return {unpack(m_partner(w), width()), unpack(n_partner(w), width())};
  }

  /// Cycles ordered by their lexicographically smallest vertex; each starts
  /// there and proceeds toward that vertex's M-neighbor.
  const std::vector<std::vector<Word>>& cycles() const noexcept { return cycles_; }

  std::vector<Bitstring> cycle_strings(std::size_t i) const {
    std::vector<Bitstring> out;
    out.reserve(cycles_.at(i).size());
    for (Word w : cycles_[i]) out.push_back(unpack(w, width()));
    return out;
  }

 private:
  int n_;
  VertexIndex index_;
  std::vector<Word> m_partner_;
  std::vector<Word> n_partner_;
  std::vector<std::vector<Word>> cycles_;
};

inline TwoFactor build_two_factor(int n, const Limits& limits = {}) {
  if (n < 1) throw domain_error("build_two_factor: n must be >= 1");
  check_graph_cap(n, limits, "build_two_factor");
  VertexIndex index(n);
  const std::size_t width = index.width();
  const std::size_t total = index.size();

  std::vector<Word> m_partner(total), n_partner(total);
  const auto vertices = index.sorted_vertices();
  for (Word v : vertices) {
    const std::size_t r = index.rank(v);
    m_partner[r] = packed_partner(v, width, Matching::M);
    n_partner[r] = packed_partner(v, width, Matching::N);
  }

  std::vector<std::vector<Word>> cycles;
  std::vector<bool> seen(total, false);
  for (Word start : vertices) {
    if (seen[index.rank(start)]) continue;
    // `start` is the smallest unvisited vertex, hence the minimum of its cycle.
    std::vector<Word> cycle;
    Word prev = start;
    Word cur = start;
    bool via_m = true;
    do {
      seen[index.rank(cur)] = true;
      cycle.push_back(cur);
      const std::size_t r = index.rank(cur);
      const Word next = via_m ? m_partner[r] : n_partner[r];
      prev = cur;
      cur = next;
      via_m = !via_m;
    } while (cur != start);
    if (!via_m) throw structural_error("build_two_factor: odd cycle through " + unpack(prev, width).str());
    cycles.push_back(std::move(cycle));
  }
  return TwoFactor(n, std::move(index), std::move(m_partner), std::move(n_partner), std::move(cycles));
}

}  // namespace mlhc
