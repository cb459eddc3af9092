#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "navprobe/nav_graph.hpp"

namespace navprobe {

enum class EpisodeSource { Original, Generated };

// One R2R-style record: a path in a named scan plus its instructions.
// Unknown input fields are kept in `extra` so files round-trip.
struct Episode {
  std::string path_id;
  std::string scan;
  std::vector<std::string> path;
  double heading = 0.0;
  std::vector<std::string> instructions;
  std::optional<double> distance;
  EpisodeSource source = EpisodeSource::Original;
  bool path_id_is_number = false;  // R2R files carry numeric ids
  nlohmann::json extra = nlohmann::json::object();

  Path nav_path() const { return Path{scan, path}; }
};

// Accepts a JSON array of episode objects or JSONL, R2R field names.
// Validates per-record schema (error messages carry the record index and
// field) and rejects duplicate path_ids within the file.
std::vector<Episode> load_episodes(const std::filesystem::path& file);
std::vector<Episode> parse_episodes(const std::string& content, const std::string& origin);

Episode episode_from_json(const nlohmann::json& j, std::size_t record_index);
nlohmann::json episode_to_json(const Episode& ep);

void write_episodes_json(const std::vector<Episode>& episodes, const std::filesystem::path& file);
void write_episodes_jsonl(const std::vector<Episode>& episodes, const std::filesystem::path& file);
std::string episodes_to_jsonl(const std::vector<Episode>& episodes);

// First non-whitespace byte '[' means a JSON array, otherwise JSONL.
bool file_is_json_array(const std::filesystem::path& file);

struct Violation {
  std::size_t record_index = 0;
  std::string path_id;
  std::string kind;  // "missing-scan" | "unknown-node" | "not-adjacent" | "repeated-node"
  std::string detail;
};

// Report-based: never throws for bad episodes, only lists them.
std::vector<Violation> validate_against_graphs(const std::vector<Episode>& episodes,
                                               const std::map<std::string, NavGraph>& graphs);

nlohmann::json violations_to_json(const std::vector<Violation>& violations);

// Graph files, two formats auto-detected per file:
//  - plain: {"scan": str, "nodes": [{"id","x","y","z"}], "edges": [[a,b]]}
//  - Matterport connectivity: a JSON array of viewpoint entries with 4x4
//    "pose" matrices and boolean "unobstructed" rows; positions come from
//    the pose translation column and edges are symmetrized over included
//    viewpoints. The scan id falls back to the file stem (minus a
//    "_connectivity" suffix) when the format does not name one.
NavGraph load_graph(const std::filesystem::path& file);

// Loads every *.json under dir (non-recursive), keyed by scan id.
std::map<std::string, NavGraph> load_graphs(const std::filesystem::path& dir);

nlohmann::json graph_to_json(const NavGraph& g);

}  // namespace navprobe
