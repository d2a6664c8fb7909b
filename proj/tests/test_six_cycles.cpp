#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlhc/lexical_matching.hpp"
#include "mlhc/six_cycles.hpp"
#include "oracles.hpp"

using namespace mlhc;

namespace {

std::vector<std::string> with_zero(const std::vector<Bitstring>& path) {
  std::vector<std::string> out;
  for (const auto& v : path) out.push_back(v.str() + "0");
  return out;
}

std::vector<std::string> gadget_strings(const SixCycle& c) {
  std::vector<std::string> out;
  for (const auto& v : c.vertices) out.push_back(v.str());
  return out;
}

}  // namespace

TEST_CASE("flippable_positions", "[six-cycles]") {
  CHECK(flippable_positions("1100"_bits) == std::vector<std::size_t>{1});
  CHECK(flippable_positions("101100"_bits).empty());
  CHECK(flippable_positions("111000"_bits) == std::vector<std::size_t>{2});
  CHECK(flippable_positions("10"_bits).empty());
  CHECK_THROWS_AS(flippable_positions("0110"_bits), domain_error);
}

TEST_CASE("detection agrees with the defining decomposition", "[six-cycles][property]") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<std::string, std::size_t>> expected;
    for (const auto& r : oracle::flippable_pairs(n)) expected.insert({r.x, r.a});
    std::set<std::pair<std::string, std::size_t>> actual;
    for (const auto& x : enumerate_dyck(n)) {
      for (std::size_t a : flippable_positions(x)) actual.insert({x.str(), a});
    }
    REQUIRE(actual == expected);
  }
}

TEST_CASE("pull", "[six-cycles]") {
  CHECK(pull("1100"_bits, 1) == "1010"_bits);
  CHECK(pull("111000"_bits, 2) == "110100"_bits);
  CHECK(pull("110100"_bits, 1) == "101100"_bits);
  CHECK_THROWS_AS(pull("101100"_bits, 3), domain_error);
  CHECK_THROWS_AS(pull("111000"_bits, 1), domain_error);
}

TEST_CASE("enumerate_flippable_pairs", "[six-cycles]") {
  CHECK(enumerate_flippable_pairs(1).empty());
  const auto p2 = enumerate_flippable_pairs(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].x == "1100"_bits);
  CHECK(p2[0].y == "1010"_bits);

  const auto p3 = enumerate_flippable_pairs(3);
  REQUIRE(p3.size() == 3);
  CHECK((p3[0].x == "110010"_bits && p3[0].y == "101010"_bits));
  CHECK((p3[1].x == "110100"_bits && p3[1].y == "101100"_bits));
  CHECK((p3[2].x == "111000"_bits && p3[2].y == "110100"_bits));
  CHECK(std::is_sorted(p3.begin(), p3.end()));

  CHECK(enumerate_flippable_pairs(4).size() == oracle::flippable_pairs(4).size());
  CHECK_THROWS_AS(enumerate_flippable_pairs(15), size_limit_error);
}

TEST_CASE("six_cycle patterns", "[six-cycles]") {
  const auto c = six_cycle(make_flippable_pair("1100"_bits, 1));
  CHECK(c.pattern == "1***0");
  const auto listed = gadget_strings(c);
  std::set<std::string> vs(listed.begin(), listed.end());
  CHECK(vs == std::set<std::string>{"10010", "10100", "11000", "10110", "11010", "11100"});
  CHECK(listed == std::vector<std::string>{"11000", "11100", "10100", "10110", "10010", "11010"});

  CHECK(six_cycle(make_flippable_pair("111000"_bits, 2)).pattern == "01***10");

  // |S_4| from the pattern enumeration.
  std::set<std::string> s4;
  for (const auto& r : oracle::flippable_pairs(4)) s4.insert(r.pattern);
  CHECK(s4.size() == 10);
  std::set<std::string> ours;
  for (const auto& p : enumerate_flippable_pairs(4)) ours.insert(six_cycle(p).pattern);
  CHECK(ours == s4);
}

TEST_CASE("six_cycle structure", "[six-cycles][property]") {
  for (int n = 2; n <= 7; ++n) {
    std::map<std::pair<std::string, std::size_t>, std::string> oracle_patterns;
    for (const auto& r : oracle::flippable_pairs(n)) oracle_patterns[{r.x, r.a}] = r.pattern;
    const auto pairs = enumerate_flippable_pairs(n);
    REQUIRE(pairs.size() == oracle_patterns.size());
    for (const auto& p : pairs) {
      const auto c = six_cycle(p);
      REQUIRE(c.pattern == oracle_patterns.at({p.x.str(), p.a}));
      REQUIRE(c.pattern.size() == 2 * static_cast<std::size_t>(n) + 1);
      REQUIRE(std::count(c.pattern.begin(), c.pattern.end(), '*') == 3);
      REQUIRE(std::count(c.pattern.begin(), c.pattern.end(), '1') == n - 1);
      REQUIRE(c.pattern.back() == '0');
      std::set<Bitstring> distinct(c.vertices.begin(), c.vertices.end());
      REQUIRE(distinct.size() == 6);
      for (std::size_t k = 0; k < 6; ++k) {
        const auto& v = c.vertices[k];
        REQUIRE(hamming_distance(v, c.vertices[(k + 1) % 6]) == 1);
        REQUIRE(v.bit(v.size()) == 0);
        REQUIRE((v.weight() == static_cast<std::size_t>(n) || v.weight() == static_cast<std::size_t>(n + 1)));
      }
      // first vertex carries x's own bits at the stars
      for (std::size_t s : c.stars) REQUIRE(c.vertices[0].bit(s) == p.x.bit(s));
    }
  }
}

TEST_CASE("tau_sequences", "[six-cycles]") {
  const auto p = make_flippable_pair("1100"_bits, 1);
  const auto t = tau_sequences(p);
  CHECK(t.tau_x == FlipSequence{3, 1});
  CHECK(t.tau_y == FlipSequence{4, 1, 2, 3, 1, 2});
  CHECK(apply_flips(p.x, t.tau_x).back() == "0110"_bits);
  CHECK(last_vertex(p.y) == "0110"_bits);
  CHECK(apply_flips(p.y, t.tau_y).back() == "1001"_bits);
  CHECK(last_vertex(p.x) == "1001"_bits);
}

TEST_CASE("resplice swaps endpoints and keeps vertex sets", "[six-cycles][property]") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : enumerate_flippable_pairs(n)) {
      const auto px = with_zero(path_vertices(p.x));
      const auto py = with_zero(path_vertices(p.y));
      const auto t = tau_sequences(p);
      const auto qx = with_zero(apply_flips(p.x, t.tau_x));
      const auto qy = with_zero(apply_flips(p.y, t.tau_y));

      REQUIRE(qx.back() == py.back());
      REQUIRE(qy.back() == px.back());

      std::set<std::string> before(px.begin(), px.end());
      before.insert(py.begin(), py.end());
      std::set<std::string> after(qx.begin(), qx.end());
      after.insert(qy.begin(), qy.end());
      REQUIRE(after == before);
      REQUIRE(qx.size() + qy.size() == px.size() + py.size());

      // symmetric difference of P_x, P_y and the gadget equals P'_x ∪ P'_y
      std::set<oracle::Edge> sym = oracle::path_edges(px);
      for (const auto& e : oracle::path_edges(py)) sym.insert(e);
      for (const auto& e : oracle::cycle_edges(gadget_strings(six_cycle(p)))) {
        if (!sym.erase(e)) sym.insert(e);
      }
      std::set<oracle::Edge> resp = oracle::path_edges(qx);
      for (const auto& e : oracle::path_edges(qy)) REQUIRE(resp.insert(e).second);
      REQUIRE(sym == resp);
    }
  }
}

TEST_CASE("intersection_edge_indices", "[six-cycles]") {
  auto i1 = intersection_edge_indices(make_flippable_pair("1100"_bits, 1));
  CHECK(i1.on_x == std::array<std::size_t, 2>{1, 6});
  CHECK(i1.on_y == 1);
  auto i2 = intersection_edge_indices(make_flippable_pair("111000"_bits, 2));
  CHECK(i2.on_x == std::array<std::size_t, 2>{3, 8});
  CHECK(i2.on_y == 3);
  for (const auto& p : enumerate_flippable_pairs(5)) {
    const auto i = intersection_edge_indices(p);
    CHECK(i.on_x[1] - i.on_x[0] == 5);
  }
}

TEST_CASE("gadget meets the paths exactly at the predicted edges", "[six-cycles][property]") {
  for (int n = 2; n <= 6; ++n) {
    const TwoFactor tf = build_two_factor(n);
    for (const auto& p : enumerate_flippable_pairs(n)) {
      const auto gadget = oracle::cycle_edges(gadget_strings(six_cycle(p)));
      const auto px = with_zero(path_vertices(p.x));
      const auto py = with_zero(path_vertices(p.y));
      const auto idx = intersection_edge_indices(p);

      std::set<std::size_t> hits_x, hits_y;
      for (std::size_t k = 1; k < px.size(); ++k) {
        if (gadget.count(oracle::edge(px[k - 1], px[k]))) hits_x.insert(k);
      }
      for (std::size_t k = 1; k < py.size(); ++k) {
        if (gadget.count(oracle::edge(py[k - 1], py[k]))) hits_y.insert(k);
      }
      REQUIRE(hits_x == std::set<std::size_t>{idx.on_x[0], idx.on_x[1]});
      REQUIRE(hits_y == std::set<std::size_t>{idx.on_y});

      // the other three gadget edges are not 2-factor edges
      std::size_t in_two_factor = 0;
      for (const auto& [a, b] : gadget) {
        const auto nb = tf.neighbors(Bitstring(a));
        in_two_factor += nb.first.str() == b || nb.second.str() == b;
      }
      REQUIRE(in_two_factor == 3);
    }
  }
}

TEST_CASE("gadgets are pairwise edge-disjoint and do not interleave", "[six-cycles][property]") {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = enumerate_flippable_pairs(n);
    std::map<oracle::Edge, std::size_t> owner;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (const auto& e : oracle::cycle_edges(gadget_strings(six_cycle(pairs[i])))) {
        REQUIRE(owner.emplace(e, i).second);
      }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[i].x != pairs[j].x) continue;
        const auto ei = intersection_edge_indices(pairs[i]).on_x;
        const auto ej = intersection_edge_indices(pairs[j]).on_x;
        REQUIRE((ei[1] < ej[0] || ej[1] < ei[0]));
      }
    }
  }
}
