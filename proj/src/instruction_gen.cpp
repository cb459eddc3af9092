#include "navprobe/instruction_gen.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "navprobe/rng.hpp"

namespace navprobe {

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Straight: return "straight";
    case SegmentKind::Turn: return "turn";
    case SegmentKind::Stairs: return "stairs";
  }
  return "straight";
}

PhraseSets PhraseSets::defaults() {
  PhraseSets p;
  p.straight_templates = {"go straight", "go forward", "continue straight"};
  p.stop_phrases = {"stop", "wait here"};
  p.walk_connector = "and walk";
  p.turn_left = "turn left";
  p.turn_right = "turn right";
  p.turn_around = "turn around";
  p.stairs_up = "go up the stairs";
  p.stairs_down = "go down the stairs";
  return p;
}

PhraseSets PhraseSets::from_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  nlohmann::json j = nlohmann::json::parse(in);
  PhraseSets p = defaults();
  if (j.contains("straight_templates")) {
    p.straight_templates = j.at("straight_templates").get<std::vector<std::string>>();
  }
  if (j.contains("stop_phrases")) {
    p.stop_phrases = j.at("stop_phrases").get<std::vector<std::string>>();
  }
  p.walk_connector = j.value("walk_connector", p.walk_connector);
  p.turn_left = j.value("turn_left", p.turn_left);
  p.turn_right = j.value("turn_right", p.turn_right);
  p.turn_around = j.value("turn_around", p.turn_around);
  p.stairs_up = j.value("stairs_up", p.stairs_up);
  p.stairs_down = j.value("stairs_down", p.stairs_down);
  if (p.straight_templates.empty() || p.stop_phrases.empty()) {
    throw std::runtime_error(file.string() + ": phrase lists must be non-empty");
  }
  return p;
}

std::vector<Segment> segment_path(const Path& p, const NavGraph& g, double turn_threshold,
                                  double around_threshold, double z_threshold) {
  validate_path(p, g);
  if (p.nodes.size() < 2) {
    throw std::invalid_argument("segment_path needs a path with at least one edge");
  }

  std::map<std::size_t, TurnKind> turn_at;
  for (const auto& turn : detect_turns(p, g, turn_threshold, around_threshold)) {
    turn_at[turn.node_index] = turn.kind;
  }
  const std::size_t n_edges = p.edge_count();
  std::vector<std::optional<StairDirection>> stair_edge(n_edges);
  for (const auto& seg : stair_segments(p, g, z_threshold)) {
    for (std::size_t e = seg.first_edge; e <= seg.last_edge; ++e) {
      stair_edge[e] = seg.direction;
    }
  }

  std::vector<Segment> segments;
  std::optional<Segment> open;
  auto flush = [&] {
    if (open) {
      segments.push_back(*open);
      open.reset();
    }
  };

  for (std::size_t edge = 0; edge < n_edges; ++edge) {
    if (auto it = turn_at.find(edge); edge > 0 && it != turn_at.end()) {
      flush();
      segments.push_back(Segment{SegmentKind::Turn, edge, edge, 0.0, it->second, {}});
    }
    const double edge_len =
        distance(g.position(p.nodes[edge]), g.position(p.nodes[edge + 1]));
    if (stair_edge[edge]) {
      if (open && open->kind == SegmentKind::Stairs && open->stairs == *stair_edge[edge]) {
        open->last_node = edge + 1;
      } else {
        flush();
        open = Segment{SegmentKind::Stairs, edge, edge + 1, 0.0, {}, *stair_edge[edge]};
      }
    } else {
      if (open && open->kind == SegmentKind::Straight) {
        open->last_node = edge + 1;
        open->distance += edge_len;
      } else {
        flush();
        open = Segment{SegmentKind::Straight, edge, edge + 1, edge_len, {}, {}};
      }
    }
  }
  flush();
  return segments;
}

namespace {

long rounded_meters(double distance) {
  const long rounded = std::lround(distance);
  return rounded < 1 ? 1 : rounded;
}

std::string capitalize(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  }
  return text;
}

}  // namespace

std::string spell_meters(double distance) {
  static const char* kWords[] = {"",     "one", "two",   "three", "four", "five",
                                 "six",  "seven", "eight", "nine",  "ten"};
  const long value = rounded_meters(distance);
  if (value <= 10) return kWords[value];
  return std::to_string(value);
}

std::string realize(const std::vector<Segment>& segments, const PhraseSets& phrases,
                    std::uint64_t seed) {
  if (segments.empty()) {
    throw std::invalid_argument("cannot realize an empty segment list");
  }
  Rng rng(seed);
  auto distance_phrase = [&](const Segment& seg) {
    const long value = rounded_meters(seg.distance);
    return phrases.walk_connector + " " + spell_meters(seg.distance) +
           (value == 1 ? " meter." : " meters.");
  };
  auto turn_phrase = [&](TurnKind kind) -> const std::string& {
    switch (kind) {
      case TurnKind::Left: return phrases.turn_left;
      case TurnKind::Right: return phrases.turn_right;
      case TurnKind::Around: return phrases.turn_around;
    }
    return phrases.turn_left;
  };

  std::string out;
  auto append = [&](const std::string& sentence) {
    if (!out.empty()) out += ' ';
    out += sentence;
  };

  std::size_t i = 0;
  while (i < segments.size()) {
    const Segment& seg = segments[i];
    switch (seg.kind) {
      case SegmentKind::Turn:
        if (i + 1 < segments.size() && segments[i + 1].kind == SegmentKind::Straight) {
          append(capitalize(turn_phrase(seg.turn)) + ", " + distance_phrase(segments[i + 1]));
          i += 2;
        } else {
          append(capitalize(turn_phrase(seg.turn)) + ".");
          i += 1;
        }
        break;
      case SegmentKind::Straight:
        append(capitalize(rng.pick(phrases.straight_templates)) + " " + distance_phrase(seg));
        i += 1;
        break;
      case SegmentKind::Stairs:
        append(capitalize(seg.stairs == StairDirection::Up ? phrases.stairs_up
                                                           : phrases.stairs_down) +
               ".");
        i += 1;
        break;
    }
  }
  append(capitalize(rng.pick(phrases.stop_phrases)) + ".");
  return out;
}

GenerationResult generate_dataset(const std::map<std::string, NavGraph>& graphs,
                                  const GenerationOptions& options,
                                  const std::set<std::vector<std::string>>& exclusion) {
  if (graphs.empty()) throw std::invalid_argument("generate_dataset needs at least one graph");
  GenerationResult result;
  if (options.target_count == 0) return result;

  const std::size_t n_scans = graphs.size();
  struct ScanState {
    const NavGraph* graph = nullptr;
    std::uint64_t seed = 0;
    std::set<std::vector<std::string>> exclusion;
    std::vector<Path> paths;
  };
  std::vector<ScanState> scans;
  scans.reserve(n_scans);
  std::size_t index = 0;
  for (const auto& [scan, g] : graphs) {
    ScanState state;
    state.graph = &g;
    state.seed = derive_seed(options.seed, index++);
    state.exclusion = exclusion;
    scans.push_back(std::move(state));
  }

  std::size_t produced = 0;
  // Round 0 spreads the quota evenly; later rounds let richer scans absorb
  // whatever the small ones could not provide.
  for (std::size_t round = 0; round < 3 && produced < options.target_count; ++round) {
    for (std::size_t s = 0; s < scans.size() && produced < options.target_count; ++s) {
      ScanState& state = scans[s];
      std::size_t ask = options.target_count - produced;
      if (round == 0) {
        const std::size_t quota =
            options.target_count / n_scans + (s < options.target_count % n_scans ? 1 : 0);
        ask = std::min(ask, quota);
      }
      if (ask == 0) continue;
      std::vector<Path> paths;
      try {
        paths = sample_paths(*state.graph, derive_seed(state.seed, round), ask,
                             options.min_edges, options.max_edges, state.exclusion);
      } catch (const std::runtime_error&) {
        continue;  // exhausted for this scan
      }
      for (auto& path : paths) {
        state.exclusion.insert(path.nodes);
        state.paths.push_back(std::move(path));
        ++produced;
      }
    }
  }

  for (auto& state : scans) {
    for (std::size_t k = 0; k < state.paths.size(); ++k) {
      const Path& path = state.paths[k];
      const auto segments = segment_path(path, *state.graph, options.turn_threshold,
                                         options.around_threshold, options.z_threshold);
      Episode ep;
      ep.scan = state.graph->scan();
      ep.path_id = "gen_" + ep.scan + "_" + std::to_string(k);
      ep.path = path.nodes;
      ep.heading = 0.0;
      ep.distance = path_length_meters(path, *state.graph);
      ep.instructions = {realize(segments, options.phrases, derive_seed(state.seed, 0x10000 + k))};
      ep.source = EpisodeSource::Generated;
      result.episodes.push_back(std::move(ep));
    }
  }
  result.shortfall = options.target_count - produced;
  return result;
}

}  // namespace navprobe
