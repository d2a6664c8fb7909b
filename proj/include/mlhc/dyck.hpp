#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/errors.hpp"

namespace mlhc {

/// Size caps. Enumeration-level operations work on D_n (Catalan-sized);
/// graph-level operations touch every vertex of G_n.
struct Limits {
  int max_enumeration_n = 14;
  int max_graph_n = 10;

  static Limits with_override(int max_n) { return Limits{max_n, max_n}; }
};

inline void check_enumeration_cap(int n, const Limits& limits, const char* what) {
  if (n > limits.max_enumeration_n) {
    throw size_limit_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                           std::to_string(limits.max_enumeration_n));
  }
}

inline void check_graph_cap(int n, const Limits& limits, const char* what) {
  if (n > limits.max_graph_n) {
    throw size_limit_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                           std::to_string(limits.max_graph_n));
  }
  if (2 * static_cast<std::size_t>(n) + 1 > kMaxPackedWidth) {
    throw size_limit_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds packed word width");
  }
}

/// heights[j] = #1s - #0s over positions 1..j; heights[0] = 0.
inline std::vector<int> height_profile(const Bitstring& x) {
  std::vector<int> h(x.size() + 1, 0);
  for (std::size_t j = 1; j <= x.size(); ++j) h[j] = h[j - 1] + (x.bit(j) ? 1 : -1);
  return h;
}

inline bool is_dyck(const Bitstring& x) {
  int h = 0;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    h += x.bit(j) ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

/// Balanced, with exactly one prefix having more 0s than 1s.
inline bool is_dyck_minus(const Bitstring& x) {
  int h = 0;
  int negative = 0;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    h += x.bit(j) ? 1 : -1;
    if (h < 0) ++negative;
  }
  return h == 0 && negative == 1;
}

inline void require_dyck(const Bitstring& x, const char* what) {
  if (!is_dyck(x)) throw domain_error(std::string(what) + ": \"" + x.str() + "\" is not a Dyck word");
}

/// partner[p] for every 1-based position p of a Dyck word (index 0 unused).
inline std::vector<std::size_t> matching_positions(const Bitstring& x) {
  std::vector<std::size_t> partner(x.size() + 1, 0);
  std::vector<std::size_t> open;
  for (std::size_t p = 1; p <= x.size(); ++p) {
    if (x.bit(p)) {
      open.push_back(p);
    } else {
      if (open.empty()) throw domain_error("matching_positions: unbalanced word \"" + x.str() + "\"");
      partner[p] = open.back();
      partner[open.back()] = p;
      open.pop_back();
    }
  }
  if (!open.empty()) throw domain_error("matching_positions: unbalanced word \"" + x.str() + "\"");
  return partner;
}

/// All of D_n in lexicographic order ('0' < '1').
inline std::vector<Bitstring> enumerate_dyck(int n, const Limits& limits = {}) {
  if (n < 0) throw domain_error("enumerate_dyck: negative n");
  check_enumeration_cap(n, limits, "enumerate_dyck");
  std::vector<Bitstring> out;
  const std::size_t len = 2 * static_cast<std::size_t>(n);
  std::string buf(len, '0');
  // Depth-first, trying '0' before '1' so output is sorted.
  auto rec = [&](auto&& self, std::size_t pos, int ones, int height) -> void {
    if (pos == len) {
      out.emplace_back(buf);
      return;
    }
    if (height > 0) {
      buf[pos] = '0';
      self(self, pos + 1, ones, height - 1);
    }
    if (ones < n) {
      buf[pos] = '1';
      self(self, pos + 1, ones + 1, height + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

struct CanonicDecomposition {
  Bitstring u;
  Bitstring v;
};

/// x = (1, u, 0, v) with u, v Dyck words.
inline CanonicDecomposition canonic_decompose(const Bitstring& x) {
  if (x.empty()) throw domain_error("canonic_decompose: empty word");
  require_dyck(x, "canonic_decompose");
  int h = 0;
  std::size_t close = 0;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    h += x.bit(j) ? 1 : -1;
    if (h == 0) {
      close = j;
      break;
    }
  }
  return {x.slice(2, close - 2), x.slice(close + 1, x.size() - close)};
}

/// Moves the root to its leftmost child: (1, u, 0, v) -> (u, 1, v, 0).
inline Bitstring rotate(const Bitstring& x) {
  if (x.empty()) throw domain_error("rotate: empty word");
  auto [u, v] = canonic_decompose(x);
  return u + '1' + v + '0';
}

}  // namespace mlhc
