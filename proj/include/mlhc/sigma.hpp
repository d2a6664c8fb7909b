#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"

namespace mlhc {

/// Sequence of 1-based bit positions to flip, one after another.
using FlipSequence = std::vector<std::size_t>;

/// Index pair framing a hill (1, w', 0) visited by the flip recursion.
struct BasePair {
  std::size_t a;
  std::size_t b;
  friend auto operator<=>(const BasePair&, const BasePair&) = default;
};

/// Emits the flip sequence of a Dyck word lazily, in the exact order of the
/// recursive definition, using an explicit work stack.
///
/// For the whole word x = (1, u, 0, v) the sequence is (b, 1, rec(2, u)) with
/// b = |u| + 2. For a Dyck substring x' = (1, u', 0, v') starting at a, rec(a, x')
/// is empty when x' is, and otherwise (b, a, rec(a+1, u'), a-1, b, rec(b+1, v'))
/// with b the position matching a.
class SigmaGenerator {
 public:
  /// Flip sequence of the whole word.
  explicit SigmaGenerator(const Bitstring& x) : partner_(checked_partner(x, "sigma")) {
    if (x.empty()) throw domain_error("sigma: empty word");
    const std::size_t b = partner_[1];
    stack_.push_back(Frame::region(2, b));
    stack_.push_back(Frame::literal(1));
    stack_.push_back(Frame::literal(b));
  }

  /// Sub-recursion on the Dyck word `xp` placed at absolute position `a` >= 2.
  /// Positions are emitted in absolute coordinates.
  SigmaGenerator(std::size_t a, const Bitstring& xp) : partner_(checked_partner(xp, "sigma_sub")) {
    if (a < 2) throw domain_error("sigma_sub: start position must be >= 2");
    offset_ = a - 1;
    stack_.push_back(Frame::region(1, xp.size() + 1));
  }

  /// Next position, or nullopt when exhausted.
  std::optional<std::size_t> next() {
    while (!stack_.empty()) {
      Frame f = stack_.back();
      stack_.pop_back();
      if (f.is_literal) return f.first + offset_;
      if (f.first >= f.last) continue;
      // Local coordinates: hill (first, b), remainder (b+1, last).
      const std::size_t a = f.first;
      const std::size_t b = partner_[a];
      stack_.push_back(Frame::region(b + 1, f.last));
      stack_.push_back(Frame::literal(b));
      stack_.push_back(Frame::literal(a - 1));
      stack_.push_back(Frame::region(a + 1, b));
      stack_.push_back(Frame::literal(a));
      return b + offset_;
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    bool is_literal;
    std::size_t first;  // literal position, or region start
    std::size_t last;   // region end (exclusive)
    static Frame literal(std::size_t p) { return {true, p, 0}; }
    static Frame region(std::size_t first, std::size_t last) { return {false, first, last}; }
  };

  static std::vector<std::size_t> checked_partner(const Bitstring& x, const char* what) {
    require_dyck(x, what);
    return matching_positions(x);
  }

  std::vector<std::size_t> partner_;
  std::vector<Frame> stack_;
  std::size_t offset_ = 0;
};

inline FlipSequence drain(SigmaGenerator gen) {
  FlipSequence out;
  while (auto p = gen.next()) out.push_back(*p);
  return out;
}

inline FlipSequence sigma(const Bitstring& x) { return drain(SigmaGenerator(x)); }

inline FlipSequence sigma_sub(std::size_t a, const Bitstring& xp) { return drain(SigmaGenerator(a, xp)); }

/// Vertices visited from `start` by flipping `flips` in order (start included).
inline std::vector<Bitstring> apply_flips(const Bitstring& start, const FlipSequence& flips) {
  std::vector<Bitstring> out;
  out.reserve(flips.size() + 1);
  out.push_back(start);
  for (std::size_t p : flips) out.push_back(out.back().flipped(p));
  return out;
}

/// The path P_sigma(x), materialized.
inline std::vector<Bitstring> path_vertices(const Bitstring& x) { return apply_flips(x, sigma(x)); }

/// Lazy walk along P_sigma(x); yields the same vertices as path_vertices.
class SigmaPath {
 public:
  explicit SigmaPath(const Bitstring& x) : gen_(x), current_(x) {}

  /// Current vertex, then advances. nullopt after the last vertex.
  std::optional<Bitstring> next() {
    if (done_) return std::nullopt;
    Bitstring out = current_;
    if (auto p = gen_.next()) {
      current_ = current_.flipped(*p);
    } else {
      done_ = true;
    }
    return out;
  }

 private:
  SigmaGenerator gen_;
  Bitstring current_;
  bool done_ = false;
};

/// Final vertex of P_sigma(x): (u, 0, 1, v) for x = (1, u, 0, v).
inline Bitstring last_vertex(const Bitstring& x) {
  auto [u, v] = canonic_decompose(x);
  return u + '0' + '1' + v;
}

/// All matched pairs inside the first hill, in recursion order (sorted by a).
inline std::vector<BasePair> base_pairs(const Bitstring& x) {
  require_dyck(x, "base_pairs");
  if (x.empty()) return {};
  const auto partner = matching_positions(x);
  std::vector<BasePair> out;
  for (std::size_t a = 1; a <= partner[1]; ++a) {
    if (x.bit(a)) out.push_back({a, partner[a]});
  }
  return out;
}

enum class PrefixWhich { first, second };

/// Entry 2a-1 (first) or 2b-1 (second) of P_sigma(x), 1-based.
inline Bitstring prefix_vertex(const Bitstring& x, const BasePair& p, PrefixWhich which) {
  const auto pairs = base_pairs(x);
  if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) {
    throw domain_error("prefix_vertex: (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                       ") is not a base pair of \"" + x.str() + "\"");
  }
  const std::size_t entry = which == PrefixWhich::first ? 2 * p.a - 1 : 2 * p.b - 1;
  SigmaPath path(x);
  for (std::size_t i = 1;; ++i) {
    auto v = path.next();
    if (!v) throw structural_error("prefix_vertex: path shorter than entry " + std::to_string(entry));
    if (i == entry) return *v;
  }
}

}  // namespace mlhc
