#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "navprobe/dataset_io.hpp"
#include "navprobe/nav_graph.hpp"

namespace navprobe {

enum class SegmentKind { Straight, Turn, Stairs };
std::string_view to_string(SegmentKind kind);

// One piece of a path: node spans are contiguous, non-overlapping and
// cover the path in order. Turn segments are zero-width (a single node);
// Straight and Stairs segments span the edges they cover.
struct Segment {
  SegmentKind kind = SegmentKind::Straight;
  std::size_t first_node = 0;
  std::size_t last_node = 0;
  double distance = 0.0;                        // Straight only
  TurnKind turn = TurnKind::Left;               // Turn only
  StairDirection stairs = StairDirection::Up;   // Stairs only
};

struct PhraseSets {
  std::vector<std::string> straight_templates;  // {"go straight", "go forward", "continue straight"}
  std::vector<std::string> stop_phrases;        // {"stop", "wait here"}
  std::string walk_connector;                   // "and walk"
  std::string turn_left;
  std::string turn_right;
  std::string turn_around;
  std::string stairs_up;
  std::string stairs_down;

  static PhraseSets defaults();
  static PhraseSets from_json_file(const std::filesystem::path& file);
};

// Walks the path once: Turn segments where detect_turns fires, Stairs
// segments where stair_segments fires (taking the covered edges away from
// Straight), and Straight segments for the maximal remaining runs with
// their cumulative 3D distance. A turn inside a stair run splits it.
std::vector<Segment> segment_path(const Path& p, const NavGraph& g,
                                  double turn_threshold = kTurnThresholdDeg,
                                  double around_threshold = kAroundThresholdDeg,
                                  double z_threshold = kStairZThresholdMeters);

// Rounded to the nearest whole meter (floor 1); "one".."ten" as words,
// digits beyond.
std::string spell_meters(double distance);

// Renders segments into sentences: a standalone Straight becomes
// "<template> and walk X meters.", a Turn followed by a Straight merges
// into "Turn right, and walk X meters.", Stairs become
// "Go up the stairs." / "Go down the stairs.", and a random stop phrase
// closes the instruction. Deterministic under the seed.
std::string realize(const std::vector<Segment>& segments, const PhraseSets& phrases,
                    std::uint64_t seed);

struct GenerationOptions {
  std::size_t target_count = 0;
  std::uint64_t seed = 0;
  std::size_t min_edges = 6;
  std::size_t max_edges = 9;
  double turn_threshold = kTurnThresholdDeg;
  double around_threshold = kAroundThresholdDeg;
  double z_threshold = kStairZThresholdMeters;
  PhraseSets phrases = PhraseSets::defaults();
};

struct GenerationResult {
  std::vector<Episode> episodes;
  std::size_t shortfall = 0;  // target_count minus what sampling produced
};

// Samples paths per scan (seed derived from the sorted scan order),
// realizes one instruction per path, and emits Generated episodes ordered
// by (scan id, sample index). Paths whose node sequence is in `exclusion`
// are skipped. Falling short of target_count is reported, not thrown.
GenerationResult generate_dataset(const std::map<std::string, NavGraph>& graphs,
                                  const GenerationOptions& options,
                                  const std::set<std::vector<std::string>>& exclusion = {});

}  // namespace navprobe
