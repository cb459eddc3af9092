#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "navprobe/nav_graph.hpp"
#include "navprobe/rng.hpp"

using namespace navprobe;

namespace {

NavGraph line_graph(const std::vector<Vec3>& positions) {
  NavGraph g("line");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    g.add_node("n" + std::to_string(i), positions[i]);
  }
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    g.add_edge("n" + std::to_string(i), "n" + std::to_string(i + 1));
  }
  return g;
}

Path line_path(const NavGraph& g, std::size_t n) {
  Path p{g.scan(), {}};
  for (std::size_t i = 0; i < n; ++i) p.nodes.push_back("n" + std::to_string(i));
  return p;
}

// Test-only oracle: exhaustive DFS over simple paths, summing edge lengths
// in path order.
std::optional<double> brute_force_shortest(const NavGraph& g, const std::string& start,
                                           const std::string& goal) {
  std::optional<double> best;
  std::set<std::string> visited;
  std::function<void(const std::string&, double)> dfs = [&](const std::string& node,
                                                            double length) {
    if (node == goal) {
      if (!best || length < *best) best = length;
      return;
    }
    visited.insert(node);
    for (const auto& next : g.neighbors(node)) {
      if (visited.count(next)) continue;
      dfs(next, length + distance(g.position(node), g.position(next)));
    }
    visited.erase(node);
  };
  dfs(start, 0.0);
  return best;
}

NavGraph random_graph(Rng& rng, std::size_t n_nodes) {
  NavGraph g("random");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    ids.push_back("n" + std::to_string(i));
    g.add_node(ids.back(), Vec3{rng.next_unit() * 10.0, rng.next_unit() * 10.0,
                                rng.next_unit() * 3.0});
  }
  for (std::size_t i = 1; i < n_nodes; ++i) {
    g.add_edge(ids[i], ids[rng.next_below(i)]);  // random spanning tree
  }
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t k = i + 1; k < n_nodes; ++k) {
      if (rng.next_unit() < 0.25) g.add_edge(ids[i], ids[k]);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("heading follows the compass convention") {
  const Vec3 origin{0, 0, 0};
  CHECK(heading(origin, Vec3{0, 1, 0}) == doctest::Approx(0.0));
  CHECK(heading(origin, Vec3{1, 0, 0}) == doctest::Approx(90.0));
  CHECK(heading(origin, Vec3{0, -1, 0}) == doctest::Approx(180.0));
  CHECK(heading(origin, Vec3{-1, 0, 0}) == doctest::Approx(270.0));
  CHECK(heading(origin, Vec3{-1, -1, 0}) == doctest::Approx(225.0));
  CHECK(heading(origin, Vec3{0, 1, 5}) == doctest::Approx(0.0));  // z ignored
  CHECK_THROWS_AS(heading(origin, Vec3{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("heading_change wraps into (-180, 180]") {
  CHECK(heading_change(10.0, 350.0) == doctest::Approx(-20.0));
  CHECK(heading_change(90.0, 90.0) == doctest::Approx(0.0));
  CHECK(heading_change(0.0, 180.0) == doctest::Approx(180.0));
  CHECK(heading_change(350.0, 10.0) == doctest::Approx(20.0));
  CHECK(heading_change(180.0, 0.0) == doctest::Approx(180.0));
}

TEST_CASE("heading_change antisymmetry away from the boundary") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.next_unit() * 360.0;
    const double b = rng.next_unit() * 360.0;
    const double ab = heading_change(a, b);
    if (std::abs(std::abs(ab) - 180.0) < 1e-9) continue;
    CHECK(heading_change(b, a) == doctest::Approx(-ab));
  }
}

TEST_CASE("detect_turns on a straight line is empty") {
  const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
  CHECK(detect_turns(line_path(g, 3), g).empty());
}

TEST_CASE("detect_turns classifies left, right and around") {
  SUBCASE("90 degree left") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    const auto turns = detect_turns(line_path(g, 3), g);
    REQUIRE(turns.size() == 1);
    CHECK(turns[0].node_index == 1);
    CHECK(turns[0].delta_heading == doctest::Approx(-90.0));
    CHECK(turns[0].kind == TurnKind::Left);
  }
  SUBCASE("90 degree right") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {1, -1, 0}});
    const auto turns = detect_turns(line_path(g, 3), g);
    REQUIRE(turns.size() == 1);
    CHECK(turns[0].delta_heading == doctest::Approx(90.0));
    CHECK(turns[0].kind == TurnKind::Right);
  }
  SUBCASE("sharp reversal is around") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {0.1, 0.5, 0}});
    const auto turns = detect_turns(line_path(g, 3), g);
    REQUIRE(turns.size() == 1);
    CHECK(std::abs(turns[0].delta_heading) > 120.0);
    CHECK(turns[0].kind == TurnKind::Around);
  }
  SUBCASE("threshold parameter gates detection") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});  // 90 deg left
    CHECK(detect_turns(line_path(g, 3), g, 91.0).empty());
    CHECK(detect_turns(line_path(g, 3), g, 89.0).size() == 1);
  }
}

TEST_CASE("vertical hops carry the previous heading") {
  const NavGraph g =
      line_graph({{0, 0, 0}, {1, 0, 0}, {1, 0, 2}, {2, 0, 2}, {2, 1, 2}});
  const auto turns = detect_turns(line_path(g, 5), g);
  REQUIRE(turns.size() == 1);  // only the final left turn
  CHECK(turns[0].node_index == 3);
  CHECK(turns[0].kind == TurnKind::Left);
}

TEST_CASE("reversed paths mirror their turns") {
  const NavGraph g = line_graph(
      {{0, 0, 0}, {2, 0.1, 0}, {3, 1.5, 0}, {5, 1.2, 0}, {6, 3, 0}, {8, 2.5, 0}});
  const Path fwd = line_path(g, 6);
  Path rev = fwd;
  std::reverse(rev.nodes.begin(), rev.nodes.end());
  const auto fwd_turns = detect_turns(fwd, g);
  const auto rev_turns = detect_turns(rev, g);
  REQUIRE(!fwd_turns.empty());
  REQUIRE(fwd_turns.size() == rev_turns.size());
  for (std::size_t i = 0; i < fwd_turns.size(); ++i) {
    const auto& f = fwd_turns[fwd_turns.size() - 1 - i];
    CHECK(rev_turns[i].delta_heading == doctest::Approx(-f.delta_heading));
    if (f.kind == TurnKind::Left) CHECK(rev_turns[i].kind == TurnKind::Right);
    if (f.kind == TurnKind::Right) CHECK(rev_turns[i].kind == TurnKind::Left);
  }
}

TEST_CASE("shortest_path basics") {
  NavGraph g("tri");
  g.add_node("a", {0, 0, 0});
  g.add_node("b", {1, 0, 0});
  g.add_node("c", {2, 0, 0});
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("a", "c");

  SUBCASE("start equals goal") {
    const Path p = shortest_path(g, "a", "a");
    CHECK(p.nodes == std::vector<std::string>{"a"});
    CHECK(path_length_meters(p, g) == 0.0);
  }
  SUBCASE("equal-length routes break ties lexicographically") {
    // Direct a->c and a->b->c are both 2 m on this collinear layout.
    const Path p = shortest_path(g, "a", "c");
    CHECK(p.nodes == std::vector<std::string>{"a", "b", "c"});
  }
  SUBCASE("unknown and unreachable nodes") {
    CHECK_THROWS_AS(shortest_path(g, "a", "zz"), std::invalid_argument);
    g.add_node("island", {50, 50, 0});
    CHECK_THROWS_WITH_AS(shortest_path(g, "a", "island"),
                         doctest::Contains("disconnected"), std::runtime_error);
  }
}

TEST_CASE("shortest_path matches the brute-force oracle on random graphs") {
  Rng rng(4242);
  int compared = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + rng.next_below(7);
    const NavGraph g = random_graph(rng, n);
    const auto ids = g.node_ids();
    const std::string& start = ids[rng.next_below(ids.size())];
    const std::string& goal = ids[rng.next_below(ids.size())];
    const auto expected = brute_force_shortest(g, start, goal);
    REQUIRE(expected.has_value());  // spanning tree keeps it connected
    const Path p = shortest_path(g, start, goal);
    CHECK(path_length_meters(p, g) == *expected);
    ++compared;
  }
  CHECK(compared == 40);
}

TEST_CASE("path_length_meters") {
  NavGraph g("len");
  g.add_node("a", {0, 0, 0});
  g.add_node("b", {3, 4, 0});
  g.add_edge("a", "b");
  CHECK(path_length_meters(Path{"len", {"a"}}, g) == 0.0);
  CHECK(path_length_meters(Path{"len", {"a", "b"}}, g) == doctest::Approx(5.0));

  const NavGraph l = line_graph({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
  CHECK(path_length_meters(line_path(l, 3), l) == doctest::Approx(2.0));
  CHECK_THROWS_AS(path_length_meters(Path{"len", {"a", "zz"}}, g), std::invalid_argument);
}

TEST_CASE("sample_paths respects bounds, seed and exclusion") {
  NavGraph g("grid");
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      g.add_node("r" + std::to_string(r) + "c" + std::to_string(c),
                 Vec3{c * 2.0, r * 2.0, 0.0});
    }
  }
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const std::string id = "r" + std::to_string(r) + "c" + std::to_string(c);
      if (c + 1 < 8) g.add_edge(id, "r" + std::to_string(r) + "c" + std::to_string(c + 1));
      if (r + 1 < 8) g.add_edge(id, "r" + std::to_string(r + 1) + "c" + std::to_string(c));
    }
  }

  const auto paths = sample_paths(g, 123, 20);
  CHECK(!paths.empty());
  std::set<std::vector<std::string>> seen;
  for (const auto& p : paths) {
    CHECK(p.edge_count() >= 6);
    CHECK(p.edge_count() <= 9);
    CHECK(seen.insert(p.nodes).second);  // deduplicated
  }

  const auto again = sample_paths(g, 123, 20);
  REQUIRE(again.size() == paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) CHECK(again[i].nodes == paths[i].nodes);

  std::set<std::vector<std::string>> exclusion{paths.front().nodes};
  for (const auto& p : sample_paths(g, 123, 20, 6, 9, exclusion)) {
    CHECK(p.nodes != paths.front().nodes);
  }
}

TEST_CASE("sample_paths errors out when the graph cannot satisfy the bounds") {
  const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}});
  CHECK_THROWS_WITH_AS(sample_paths(g, 1, 5), doctest::Contains("sampling exhausted"),
                       std::runtime_error);
}

TEST_CASE("stair_segments finds signed maximal runs") {
  SUBCASE("flat path") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    CHECK(stair_segments(line_path(g, 3), g).empty());
  }
  SUBCASE("three climbing edges merge") {
    const NavGraph g = line_graph(
        {{0, 0, 0}, {1, 0, 0.4}, {2, 0, 0.8}, {3, 0, 1.2}, {4, 0, 1.2}});
    const auto segs = stair_segments(line_path(g, 5), g);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].first_edge == 0);
    CHECK(segs[0].last_edge == 2);
    CHECK(segs[0].direction == StairDirection::Up);
  }
  SUBCASE("single descending edge") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, -0.5}});
    const auto segs = stair_segments(line_path(g, 2), g);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].direction == StairDirection::Down);
  }
  SUBCASE("sign change splits runs") {
    const NavGraph g = line_graph({{0, 0, 0}, {1, 0, 0.5}, {2, 0, 0}});
    const auto segs = stair_segments(line_path(g, 3), g);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].direction == StairDirection::Up);
    CHECK(segs[1].direction == StairDirection::Down);
  }
}

TEST_CASE("evaluate computes NE, SR and SPL") {
  NavGraph g("metrics");
  g.add_node("start", {0, 0, 0});
  g.add_node("goal", {10, 0, 0});
  g.add_node("detour", {5.0, std::sqrt(75.0), 0});
  g.add_edge("start", "goal");
  g.add_edge("start", "detour");
  g.add_edge("detour", "goal");

  SUBCASE("optimal path") {
    const auto m = evaluate(Path{"metrics", {"start", "goal"}}, "goal", g);
    CHECK(m.nav_error == 0.0);
    CHECK(m.success);
    CHECK(m.spl == doctest::Approx(1.0));
  }
  SUBCASE("twice the length halves SPL") {
    const auto m = evaluate(Path{"metrics", {"start", "detour", "goal"}}, "goal", g);
    CHECK(m.success);
    CHECK(m.spl == doctest::Approx(0.5));
  }
  SUBCASE("failure zeroes SPL") {
    NavGraph far("far");
    far.add_node("a", {0, 0, 0});
    far.add_node("b", {5, 0, 0});
    far.add_edge("a", "b");
    const auto m = evaluate(Path{"far", {"a"}}, "b", far);
    CHECK(m.nav_error == doctest::Approx(5.0));
    CHECK_FALSE(m.success);
    CHECK(m.spl == 0.0);
  }
  SUBCASE("3 m threshold is strict") {
    NavGraph edge("edge");
    edge.add_node("goal", {0, 0, 0});
    edge.add_node("close", {2.99, 0, 0});
    edge.add_node("far", {3.01, 0, 0});
    edge.add_edge("close", "goal");
    edge.add_edge("far", "goal");
    CHECK(evaluate(Path{"edge", {"close"}}, "goal", edge).success);
    CHECK_FALSE(evaluate(Path{"edge", {"far"}}, "goal", edge).success);
  }
}

TEST_CASE("evaluate needs a reachable goal for the SPL denominator") {
  NavGraph g("split");
  g.add_node("a", {0, 0, 0});
  g.add_node("b", {1, 0, 0});
  g.add_node("island", {2, 0, 0});
  g.add_edge("a", "b");
  CHECK_THROWS_WITH_AS(evaluate(Path{"split", {"a", "b"}}, "island", g),
                       doctest::Contains("disconnected"), std::runtime_error);
  CHECK_THROWS_AS(evaluate(Path{"split", {"a", "b"}}, "zz", g), std::invalid_argument);
}

TEST_CASE("graph construction guards") {
  NavGraph g("guards");
  g.add_node("a", {0, 0, 0});
  CHECK_THROWS_AS(g.add_node("a", {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("a", "missing"), std::invalid_argument);
  g.add_node("b", {1, 0, 0});
  g.add_edge("a", "b");
  CHECK(g.has_edge("b", "a"));  // symmetric
  CHECK(g.edge_count() == 1);
}
