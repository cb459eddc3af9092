#include "navprobe/counterfactual.hpp"

#include <cmath>
#include <stdexcept>

namespace navprobe {

std::string_view to_string(DirectionBin bin) {
  switch (bin) {
    case DirectionBin::Straight: return "straight";
    case DirectionBin::Left: return "left";
    case DirectionBin::Right: return "right";
    case DirectionBin::Around: return "around";
  }
  return "straight";
}

DirectionBin direction_bin(double delta_heading, double turn_threshold,
                           double around_threshold) {
  const double magnitude = std::abs(delta_heading);
  if (magnitude <= turn_threshold) return DirectionBin::Straight;
  if (magnitude > around_threshold) return DirectionBin::Around;
  return delta_heading > 0.0 ? DirectionBin::Right : DirectionBin::Left;
}

std::size_t counterfactuals_at_turn(const NavGraph& g, const Path& p,
                                    const TurnAnnotation& turn, double turn_threshold,
                                    double around_threshold) {
  validate_path(p, g);
  if (turn.node_index == 0 || turn.node_index + 1 >= p.nodes.size()) {
    throw std::invalid_argument("turn index is not interior to the path");
  }
  const std::string& arrival = p.nodes[turn.node_index - 1];
  const std::string& pivot = p.nodes[turn.node_index];
  const std::string& taken = p.nodes[turn.node_index + 1];
  const Vec3& pivot_pos = g.position(pivot);

  const auto headings = edge_headings(p, g);
  const auto& h_in_opt = headings[turn.node_index - 1];
  if (!h_in_opt) {
    throw std::invalid_argument("turn is inconsistent with the path: no incoming heading");
  }
  const double h_in = *h_in_opt;

  auto bin_of = [&](const std::string& neighbor) {
    const double h_out = heading(pivot_pos, g.position(neighbor));
    return direction_bin(heading_change(h_in, h_out), turn_threshold, around_threshold);
  };

  const DirectionBin taken_bin = bin_of(taken);
  if (taken_bin == DirectionBin::Straight) {
    throw std::invalid_argument("turn is inconsistent with the path: taken edge is straight");
  }

  std::size_t count = 0;
  for (const auto& neighbor : g.neighbors(pivot)) {
    if (neighbor == arrival || neighbor == taken) continue;
    if (xy_distance(pivot_pos, g.position(neighbor)) < 1e-9) continue;  // unclassifiable
    if (bin_of(neighbor) != taken_bin) ++count;
  }
  return count;
}

CounterfactualReport analyze_corpus(const std::vector<Episode>& episodes,
                                    const std::map<std::string, NavGraph>& graphs,
                                    std::vector<EpisodeTurnStats>* per_episode,
                                    double turn_threshold, double around_threshold) {
  CounterfactualReport report;
  std::size_t total_counterfactuals = 0;
  std::size_t turns_with_counterfactual = 0;

  for (const auto& ep : episodes) {
    auto it = graphs.find(ep.scan);
    if (it == graphs.end()) {
      throw std::runtime_error("no graph loaded for scan \"" + ep.scan + "\"");
    }
    const NavGraph& g = it->second;
    const Path path = ep.nav_path();
    const auto turns = detect_turns(path, g, turn_threshold, around_threshold);
    std::size_t episode_cf = 0;
    for (const auto& turn : turns) {
      const std::size_t cf =
          counterfactuals_at_turn(g, path, turn, turn_threshold, around_threshold);
      episode_cf += cf;
      if (cf > 0) ++turns_with_counterfactual;
    }
    report.n_episodes += 1;
    report.n_turns += turns.size();
    total_counterfactuals += episode_cf;
    if (per_episode) {
      per_episode->push_back({ep.path_id, turns.size(), episode_cf});
    }
  }

  if (report.n_episodes > 0) {
    report.avg_turns_per_episode =
        static_cast<double>(report.n_turns) / static_cast<double>(report.n_episodes);
  }
  if (report.n_turns > 0) {
    report.avg_counterfactuals_per_turn =
        static_cast<double>(total_counterfactuals) / static_cast<double>(report.n_turns);
    report.pct_turns_with_counterfactual =
        100.0 * static_cast<double>(turns_with_counterfactual) /
        static_cast<double>(report.n_turns);
  }
  return report;
}

std::string counterfactual_report_to_json(const CounterfactualReport& report) {
  nlohmann::json j{
      {"episodes", report.n_episodes},
      {"turns", report.n_turns},
      {"avg_turns_per_episode", report.avg_turns_per_episode},
      {"avg_counterfactuals_per_turn", report.avg_counterfactuals_per_turn},
      {"pct_turns_with_counterfactual", report.pct_turns_with_counterfactual},
  };
  return j.dump(2);
}

}  // namespace navprobe
