#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "navprobe/dataset_io.hpp"
#include "navprobe/nav_graph.hpp"

namespace navprobe {

enum class DirectionBin { Straight, Left, Right, Around };
std::string_view to_string(DirectionBin bin);

// |delta| <= turn_threshold is Straight, |delta| > around_threshold is
// Around, otherwise the sign picks Right (+) or Left (-).
DirectionBin direction_bin(double delta_heading, double turn_threshold = kTurnThresholdDeg,
                           double around_threshold = kAroundThresholdDeg);

// Number of neighbors of the turn node (the arrival node excluded) whose
// direction bin relative to the incoming heading differs from the taken
// neighbor's bin. Throws when the annotation does not match the path.
std::size_t counterfactuals_at_turn(const NavGraph& g, const Path& p, const TurnAnnotation& turn,
                                    double turn_threshold = kTurnThresholdDeg,
                                    double around_threshold = kAroundThresholdDeg);

struct CounterfactualReport {
  std::size_t n_episodes = 0;
  std::size_t n_turns = 0;
  double avg_turns_per_episode = 0.0;
  double avg_counterfactuals_per_turn = 0.0;
  double pct_turns_with_counterfactual = 0.0;  // in [0, 100]
};

struct EpisodeTurnStats {
  std::string path_id;
  std::size_t n_turns = 0;
  std::size_t n_counterfactuals = 0;
};

// Runs detect_turns + counterfactuals_at_turn over every episode. Episodes
// without turns still count toward the per-episode turn average. Throws
// naming the scan when its graph is missing.
CounterfactualReport analyze_corpus(const std::vector<Episode>& episodes,
                                    const std::map<std::string, NavGraph>& graphs,
                                    std::vector<EpisodeTurnStats>* per_episode = nullptr,
                                    double turn_threshold = kTurnThresholdDeg,
                                    double around_threshold = kAroundThresholdDeg);

std::string counterfactual_report_to_json(const CounterfactualReport& report);

}  // namespace navprobe
