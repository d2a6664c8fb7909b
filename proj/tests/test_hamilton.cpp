#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mlhc/hamilton.hpp"
#include "oracles.hpp"

using namespace mlhc;

namespace {

std::vector<std::string> lines_of(const HamiltonCycle& hc) {
  std::vector<std::string> out;
  for (const auto& b : hc.strings()) out.push_back(b.str());
  return out;
}

std::set<oracle::Edge> cover_edges(const CycleCover& cover) {
  std::set<oracle::Edge> out;
  const std::size_t w = cover.width();
  for (Word v : cover.index().sorted_vertices()) {
    for (Word u : cover.neighbors(v)) out.insert(oracle::edge(unpack(v, w).str(), unpack(u, w).str()));
  }
  return out;
}

}  // namespace

TEST_CASE("apply_six_cycles with no gadgets keeps the 2-factor", "[hamilton]") {
  for (int n = 1; n <= 5; ++n) {
    const TwoFactor tf = build_two_factor(n);
    const CycleCover cover = apply_six_cycles(tf, {});
    CHECK(cover.component_count() == tf.cycles().size());
  }
}

TEST_CASE("each tree gadget joins two cycles", "[hamilton][property]") {
  for (int n = 2; n <= 6; ++n) {
    const TwoFactor tf = build_two_factor(n);
    const auto tree = spanning_tree(build_aux_graph(n));
    CycleCover cover(tf);
    std::size_t comps = cover.component_count();
    const std::set<oracle::Edge> original = cover_edges(cover);
    std::set<oracle::Edge> toggled;
    for (const auto& p : tree) {
      const auto c = six_cycle(p);
      std::vector<std::string> vs;
      for (const auto& v : c.vertices) vs.push_back(v.str());
      for (const auto& e : oracle::cycle_edges(vs)) toggled.insert(e);
      cover.toggle(c);
      const std::size_t now = cover.component_count();
      REQUIRE(now + 1 == comps);
      comps = now;
    }
    REQUIRE(comps == 1);
    // edges outside the gadgets are untouched
    const auto final_edges = cover_edges(cover);
    for (const auto& e : original) {
      if (!toggled.count(e)) REQUIRE(final_edges.count(e));
    }
    for (const auto& e : final_edges) {
      if (!toggled.count(e)) REQUIRE(original.count(e));
    }
  }
}

TEST_CASE("apply_six_cycles gives a single cycle for n = 3", "[hamilton]") {
  const TwoFactor tf = build_two_factor(3);
  const CycleCover cover = apply_six_cycles(tf, spanning_tree(build_aux_graph(3)));
  CHECK(cover.component_count() == 1);
}

TEST_CASE("assemble small cases", "[hamilton]") {
  const auto h1 = assemble(1);
  CHECK(h1.vertices.size() == 6);
  CHECK(h1.strings().front() == "100"_bits);
  CHECK(verify_cycle(lines_of(h1), 1).pass);

  const auto h2 = assemble(2);
  CHECK(h2.vertices.size() == 20);
  CHECK(h2.strings().front() == "11000"_bits);
  CHECK(verify_cycle(lines_of(h2), 2).pass);

  const auto h5 = assemble(5);
  CHECK(h5.vertices.size() == 924);

  CHECK_THROWS_AS(assemble(0), domain_error);
  CHECK_THROWS_AS(assemble(11), size_limit_error);
}

TEST_CASE("assembled cycles verify for n <= 8", "[hamilton][property]") {
  for (int n = 1; n <= 8; ++n) {
    const auto hc = assemble(n);
    const auto r = verify_cycle(lines_of(hc), n);
    REQUIRE(r.vertex_count == 2 * oracle::binomial(2 * n + 1, n));
    REQUIRE(r.pass);
    const auto flips = hc.flips();
    REQUIRE(flips.size() == hc.vertices.size());
    for (std::size_t p : flips) REQUIRE((p >= 1 && p <= hc.width()));
    // first step goes to the neighbor differing at the smaller position
    REQUIRE(flips.front() < flips.back());
  }
}

TEST_CASE("assemble is deterministic", "[hamilton]") {
  CHECK(assemble(5).vertices == assemble(5).vertices);
}

TEST_CASE("replaying flips reproduces the cycle", "[hamilton]") {
  const auto hc = assemble(4);
  const auto strings = lines_of(hc);
  const auto flips = hc.flips();
  const auto replay = oracle::apply_flips(strings.front(), flips);
  REQUIRE(replay.size() == strings.size() + 1);
  for (std::size_t i = 0; i < strings.size(); ++i) REQUIRE(replay[i] == strings[i]);
  CHECK(replay.back() == strings.front());
}

TEST_CASE("verify_cycle rejects broken input", "[verify]") {
  const auto good = lines_of(assemble(1));

  auto missing = good;
  missing.erase(missing.begin() + 2);
  auto r = verify_cycle(missing, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.vertex_count == 5);
  CHECK(r.expected_count == 6);

  // same weight, two bits moved
  auto corrupted = lines_of(assemble(2));
  std::string& v = corrupted[3];
  const auto one = v.find('1');
  const auto zero = v.find('0');
  std::swap(v[one], v[zero]);
  r = verify_cycle(corrupted, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.bad_steps >= 1);

  auto dup = good;
  dup[5] = dup[1];
  r = verify_cycle(dup, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.duplicates == 1);

  auto swapped = good;
  std::swap(swapped[1], swapped[2]);
  r = verify_cycle(swapped, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.bad_steps >= 1);

  CHECK_FALSE(verify_cycle(std::vector<std::string>{}, 1).pass);
}

TEST_CASE("verify_cycle parse errors carry line numbers", "[verify]") {
  auto lines = lines_of(assemble(2));
  lines[3] = "1100";
  try {
    verify_cycle(lines, 2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
  lines[3] = "11x00";
  CHECK_THROWS_AS(verify_cycle(lines, 2), parse_error);
  lines[3] = "11110";
  try {
    verify_cycle(lines, 2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("verify_cycle closed form and streams", "[verify]") {
  auto lines = lines_of(assemble(3));
  CHECK(verify_cycle(lines, 3).pass);
  CHECK_FALSE(verify_cycle(lines, 3, true).pass);
  lines.push_back(lines.front());
  CHECK(verify_cycle(lines, 3, true).pass);
  CHECK_FALSE(verify_cycle(lines, 3).pass);

  std::ostringstream text;
  for (const auto& l : lines) text << l << "\r\n";
  std::istringstream in(text.str());
  CHECK(verify_cycle(in, 3, true).pass);
}
