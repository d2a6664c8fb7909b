#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"
#include "mlhc/six_cycles.hpp"

namespace mlhc {

/// x, rotate(x), rotate^2(x), ... up to the first repetition.
inline std::vector<Bitstring> rotation_orbit(const Bitstring& x) {
  require_dyck(x, "rotation_orbit");
  if (x.empty()) throw domain_error("rotation_orbit: empty word");
  std::vector<Bitstring> orbit{x};
  for (Bitstring cur = rotate(x); cur != x; cur = rotate(cur)) orbit.push_back(cur);
  return orbit;
}

inline Bitstring canonical_representative(const Bitstring& x) {
  const auto orbit = rotation_orbit(x);
  return *std::min_element(orbit.begin(), orbit.end());
}

/// Star with n rays rooted at a leaf: 1 (10)^{n-1} 0.
inline Bitstring star(int n) {
  if (n < 1) throw domain_error("star: n must be >= 1");
  std::string s = "1";
  for (int i = 1; i < n; ++i) s += "10";
  s += '0';
  return Bitstring(s);
}

/// Plane tree: a rotation class of rooted trees.
struct PlaneTreeClass {
  Bitstring canonical;
  std::vector<Bitstring> orbit;
};

struct AuxEdge {
  std::size_t from;  // class of label.x
  std::size_t to;    // class of label.y
  FlippablePair label;

  bool is_loop() const noexcept { return from == to; }
};

/// Multigraph on plane-tree classes with one edge per flippable pair. Loops and
/// parallel edges are kept.
struct AuxGraph {
  int n = 0;
  std::vector<PlaneTreeClass> classes;  // ordered by canonical word
  std::unordered_map<Bitstring, std::size_t> class_of;
  std::vector<AuxEdge> edges;  // ordered by label (x, a)
};

inline AuxGraph build_aux_graph(int n, const Limits& limits = {}) {
  if (n < 1) throw domain_error("build_aux_graph: n must be >= 1");
  check_enumeration_cap(n, limits, "build_aux_graph");
  AuxGraph g;
  g.n = n;
  // Words come in lex order, so the first unassigned member of an orbit is its minimum.
  for (const auto& x : enumerate_dyck(n, limits)) {
    if (g.class_of.count(x)) continue;
    PlaneTreeClass c{x, rotation_orbit(x)};
    for (const auto& member : c.orbit) g.class_of.emplace(member, g.classes.size());
    g.classes.push_back(std::move(c));
  }
  for (auto& p : enumerate_flippable_pairs(n, limits)) {
    const std::size_t from = g.class_of.at(p.x);
    const std::size_t to = g.class_of.at(p.y);
    g.edges.push_back({from, to, std::move(p)});
  }
  return g;
}

/// Spanning tree of H_n: breadth-first search from the star's class, scanning
/// each class's incident edges by label (x, then a). Loops are never taken.
inline std::vector<FlippablePair> spanning_tree(const AuxGraph& g) {
  if (g.classes.empty()) return {};
  std::vector<std::vector<std::size_t>> incident(g.classes.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.is_loop()) continue;
    incident[edge.from].push_back(e);
    incident[edge.to].push_back(e);
  }
  for (auto& list : incident) {
    std::sort(list.begin(), list.end(),
              [&](std::size_t l, std::size_t r) { return g.edges[l].label < g.edges[r].label; });
  }

  const std::size_t root = g.class_of.at(star(g.n));
  std::vector<bool> reached(g.classes.size(), false);
  std::vector<FlippablePair> tree;
  std::deque<std::size_t> queue{root};
  reached[root] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[c]) {
      const auto& edge = g.edges[e];
      const std::size_t other = edge.from == c ? edge.to : edge.from;
      if (reached[other]) continue;
      reached[other] = true;
      tree.push_back(edge.label);
      queue.push_back(other);
    }
  }
  if (tree.size() + 1 != g.classes.size()) {
    throw structural_error("spanning_tree: auxiliary graph for n=" + std::to_string(g.n) + " is disconnected");
  }
  return tree;
}

struct TreeMove {
  enum class Kind { rotate, pull };
  Kind kind = Kind::rotate;
  std::size_t a = 0;  // pull position; unused for rotate

  friend bool operator==(const TreeMove&, const TreeMove&) = default;
};

inline Bitstring apply_move(const Bitstring& x, const TreeMove& m) {
  return m.kind == TreeMove::Kind::rotate ? rotate(x) : pull(x, m.a);
}

/// Rotations until the root is a leaf, then pulls of the leftmost deepest leaf
/// until the star is reached. Every pull lowers the total depth by one.
inline std::vector<TreeMove> path_to_star(const Bitstring& x) {
  require_dyck(x, "path_to_star");
  if (x.empty()) throw domain_error("path_to_star: empty word");
  const int n = static_cast<int>(x.size() / 2);
  std::vector<TreeMove> moves;
  Bitstring cur = x;

  for (std::size_t guard = 0; !canonic_decompose(cur).v.empty(); ++guard) {
    if (guard > cur.size()) throw structural_error("path_to_star: no leaf rooting in orbit of " + x.str());
    cur = rotate(cur);
    moves.push_back({TreeMove::Kind::rotate, 0});
  }

  for (;;) {
    const auto h = height_profile(cur);
    std::size_t leaf = 0;
    int depth = 0;
    for (std::size_t p = 1; p < cur.size(); ++p) {
      if (cur.bit(p) == 1 && cur.bit(p + 1) == 0 && h[p] > depth) {
        depth = h[p];
        leaf = p;
      }
    }
    if (depth <= 2) break;
    // The leftmost deepest leaf is its parent's first child.
    const std::size_t a = leaf - 1;
    cur = pull(cur, a);
    moves.push_back({TreeMove::Kind::pull, a});
  }
  if (cur != star(n)) throw structural_error("path_to_star: ended at " + cur.str() + " instead of the star");
  return moves;
}

}  // namespace mlhc
