#include <doctest.h>

#include <cmath>

#include "navprobe/counterfactual.hpp"

using namespace navprobe;

namespace {

// Star junction: the agent arrives from the south at "pivot" and can leave
// north (straight), east (right), west (left) or back south.
NavGraph star_graph() {
  NavGraph g("star");
  g.add_node("south", {0, -2, 0});
  g.add_node("pivot", {0, 0, 0});
  g.add_node("north", {0, 2, 0});
  g.add_node("east", {2, 0, 0});
  g.add_node("west", {-2, 0, 0});
  g.add_edge("south", "pivot");
  g.add_edge("pivot", "north");
  g.add_edge("pivot", "east");
  g.add_edge("pivot", "west");
  return g;
}

TurnAnnotation only_turn(const NavGraph& g, const Path& p) {
  const auto turns = detect_turns(p, g);
  REQUIRE(turns.size() == 1);
  return turns[0];
}

}  // namespace

TEST_CASE("direction_bin boundaries") {
  CHECK(direction_bin(0.0) == DirectionBin::Straight);
  CHECK(direction_bin(30.0) == DirectionBin::Straight);
  CHECK(direction_bin(-30.0) == DirectionBin::Straight);
  CHECK(direction_bin(30.5) == DirectionBin::Right);
  CHECK(direction_bin(-30.5) == DirectionBin::Left);
  CHECK(direction_bin(120.0) == DirectionBin::Right);
  CHECK(direction_bin(-120.0) == DirectionBin::Left);
  CHECK(direction_bin(120.5) == DirectionBin::Around);
  CHECK(direction_bin(-120.5) == DirectionBin::Around);
  CHECK(direction_bin(180.0) == DirectionBin::Around);
}

TEST_CASE("a corridor turn has no counterfactual") {
  NavGraph g("corridor");
  g.add_node("a", {0, -2, 0});
  g.add_node("b", {0, 0, 0});
  g.add_node("c", {2, 0, 0});
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  const Path p{"corridor", {"a", "b", "c"}};
  CHECK(counterfactuals_at_turn(g, p, only_turn(g, p)) == 0);
}

TEST_CASE("a four-way junction offers two counterfactuals") {
  const NavGraph g = star_graph();
  const Path p{"star", {"south", "pivot", "west"}};  // turns left
  CHECK(counterfactuals_at_turn(g, p, only_turn(g, p)) == 2);  // straight + right
}

TEST_CASE("neighbors sharing the taken bin do not count") {
  NavGraph g("fan");
  g.add_node("south", {0, -2, 0});
  g.add_node("pivot", {0, 0, 0});
  // Three exits, all to the right (45 and 90 degrees).
  g.add_node("r1", {2, 2, 0});
  g.add_node("r2", {2, 0, 0});
  g.add_node("r3", {2, -0.5, 0});
  g.add_edge("south", "pivot");
  g.add_edge("pivot", "r1");
  g.add_edge("pivot", "r2");
  g.add_edge("pivot", "r3");
  const Path p{"fan", {"south", "pivot", "r2"}};
  CHECK(counterfactuals_at_turn(g, p, only_turn(g, p)) == 0);
}

TEST_CASE("pure backtracking is not a counterfactual") {
  NavGraph g("deadend");
  g.add_node("a", {0, -2, 0});
  g.add_node("b", {0, 0, 0});
  g.add_node("c", {2, 0, 0});
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  // The only alternative at b is returning to a, which is excluded.
  const Path p{"deadend", {"a", "b", "c"}};
  CHECK(counterfactuals_at_turn(g, p, only_turn(g, p)) == 0);
}

TEST_CASE("counterfactual count is bounded by degree minus two") {
  const NavGraph g = star_graph();
  const Path p{"star", {"south", "pivot", "east"}};
  const std::size_t count = counterfactuals_at_turn(g, p, only_turn(g, p));
  CHECK(count <= g.neighbors("pivot").size() - 2);
}

TEST_CASE("inconsistent annotations are rejected") {
  const NavGraph g = star_graph();
  const Path straight{"star", {"south", "pivot", "north"}};
  TurnAnnotation bogus{1, 90.0, TurnKind::Right};
  CHECK_THROWS_AS(counterfactuals_at_turn(g, straight, bogus), std::invalid_argument);
  TurnAnnotation out_of_range{0, 90.0, TurnKind::Right};
  const Path p{"star", {"south", "pivot", "east"}};
  CHECK_THROWS_AS(counterfactuals_at_turn(g, p, out_of_range), std::invalid_argument);
}

TEST_CASE("analyze_corpus aggregates hand-enumerated fixtures") {
  std::map<std::string, NavGraph> graphs;
  graphs.emplace("star", star_graph());

  Episode left_turn;
  left_turn.path_id = "ep_left";
  left_turn.scan = "star";
  left_turn.path = {"south", "pivot", "west"};
  left_turn.instructions = {"turn left"};

  Episode straight;
  straight.path_id = "ep_straight";
  straight.scan = "star";
  straight.path = {"south", "pivot", "north"};
  straight.instructions = {"go straight"};

  Episode right_turn;
  right_turn.path_id = "ep_right";
  right_turn.scan = "star";
  right_turn.path = {"south", "pivot", "east"};
  right_turn.instructions = {"turn right"};

  std::vector<EpisodeTurnStats> per_episode;
  const auto report =
      analyze_corpus({left_turn, straight, right_turn}, graphs, &per_episode);

  // Two episodes turn once (2 counterfactuals each); one goes straight.
  CHECK(report.n_episodes == 3);
  CHECK(report.n_turns == 2);
  CHECK(report.avg_turns_per_episode == doctest::Approx(2.0 / 3.0));
  CHECK(report.avg_counterfactuals_per_turn == doctest::Approx(2.0));
  CHECK(report.pct_turns_with_counterfactual == doctest::Approx(100.0));
  REQUIRE(per_episode.size() == 3);
  CHECK(per_episode[0].n_turns == 1);
  CHECK(per_episode[0].n_counterfactuals == 2);
  CHECK(per_episode[1].n_turns == 0);
}

TEST_CASE("an all-straight corpus reports zeros") {
  std::map<std::string, NavGraph> graphs;
  graphs.emplace("star", star_graph());
  Episode ep;
  ep.path_id = "ep";
  ep.scan = "star";
  ep.path = {"south", "pivot", "north"};
  ep.instructions = {"go straight"};
  const auto report = analyze_corpus({ep}, graphs);
  CHECK(report.n_turns == 0);
  CHECK(report.avg_turns_per_episode == 0.0);
  CHECK(report.avg_counterfactuals_per_turn == 0.0);
  CHECK(report.pct_turns_with_counterfactual == 0.0);
}

TEST_CASE("analyze_corpus names the missing scan") {
  Episode ep;
  ep.path_id = "ep";
  ep.scan = "nowhere";
  ep.path = {"a", "b"};
  ep.instructions = {"x"};
  CHECK_THROWS_WITH_AS(analyze_corpus({ep}, {}), doctest::Contains("nowhere"),
                       std::runtime_error);
}

TEST_CASE("relabeling node ids leaves counts unchanged") {
  NavGraph g("renamed");
  g.add_node("zz_south", {0, -2, 0});
  g.add_node("aa_pivot", {0, 0, 0});
  g.add_node("mm_north", {0, 2, 0});
  g.add_node("qq_east", {2, 0, 0});
  g.add_node("bb_west", {-2, 0, 0});
  g.add_edge("zz_south", "aa_pivot");
  g.add_edge("aa_pivot", "mm_north");
  g.add_edge("aa_pivot", "qq_east");
  g.add_edge("aa_pivot", "bb_west");
  const Path p{"renamed", {"zz_south", "aa_pivot", "bb_west"}};
  CHECK(counterfactuals_at_turn(g, p, only_turn(g, p)) == 2);
}
