#include "navprobe/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace navprobe {

using nlohmann::json;

namespace {

constexpr const char* kKnownFields[] = {
    "path_id", "scan", "path", "heading", "instructions", "distance", "source",
};

[[noreturn]] void record_error(std::size_t index, const std::string& message) {
  throw std::runtime_error("episode record " + std::to_string(index) + ": " + message);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + file.string());
}

std::vector<std::string> string_array_field(const json& j, const char* field,
                                            std::size_t index) {
  const auto& value = j.at(field);
  if (!value.is_array()) record_error(index, std::string("field \"") + field + "\" must be an array");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      record_error(index, std::string("field \"") + field + "\" must contain strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Episode episode_from_json(const json& j, std::size_t record_index) {
  if (!j.is_object()) record_error(record_index, "not a JSON object");
  for (const char* field : {"path_id", "scan", "path"}) {
    if (!j.contains(field)) {
      record_error(record_index, std::string("missing field \"") + field + "\"");
    }
  }

  Episode ep;
  const auto& id = j.at("path_id");
  if (id.is_number_integer()) {
    ep.path_id = std::to_string(id.get<long long>());
    ep.path_id_is_number = true;
  } else if (id.is_string()) {
    ep.path_id = id.get<std::string>();
  } else {
    record_error(record_index, "field \"path_id\" must be a string or integer");
  }

  if (!j.at("scan").is_string()) record_error(record_index, "field \"scan\" must be a string");
  ep.scan = j.at("scan").get<std::string>();

  ep.path = string_array_field(j, "path", record_index);
  if (ep.path.empty()) record_error(record_index, "field \"path\" must be non-empty");

  if (j.contains("heading")) {
    if (!j.at("heading").is_number()) {
      record_error(record_index, "field \"heading\" must be a number");
    }
    ep.heading = j.at("heading").get<double>();
  }
  if (j.contains("distance")) {
    if (!j.at("distance").is_number()) {
      record_error(record_index, "field \"distance\" must be a number");
    }
    ep.distance = j.at("distance").get<double>();
  }
  if (j.contains("source")) {
    const std::string source = j.at("source").is_string() ? j.at("source").get<std::string>() : "";
    if (source == "generated") {
      ep.source = EpisodeSource::Generated;
    } else if (source == "original") {
      ep.source = EpisodeSource::Original;
    } else {
      record_error(record_index, "field \"source\" must be \"original\" or \"generated\"");
    }
  }
  if (j.contains("instructions")) {
    ep.instructions = string_array_field(j, "instructions", record_index);
  }
  if (ep.instructions.empty() && ep.source == EpisodeSource::Original) {
    record_error(record_index, "field \"instructions\" must be a non-empty array");
  }

  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* field : kKnownFields) {
      if (key == field) {
        known = true;
        break;
      }
    }
    if (!known) ep.extra[key] = value;
  }
  return ep;
}

json episode_to_json(const Episode& ep) {
  json j = ep.extra.is_object() ? ep.extra : json::object();
  if (ep.path_id_is_number) {
    j["path_id"] = std::stoll(ep.path_id);
  } else {
    j["path_id"] = ep.path_id;
  }
  j["scan"] = ep.scan;
  j["path"] = ep.path;
  j["heading"] = ep.heading;
  j["instructions"] = ep.instructions;
  if (ep.distance) j["distance"] = *ep.distance;
  if (ep.source == EpisodeSource::Generated) j["source"] = "generated";
  return j;
}

std::vector<Episode> parse_episodes(const std::string& content, const std::string& origin) {
  std::vector<json> records;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    // empty file == empty corpus
  } else if (content[first] == '[') {
    json root;
    try {
      root = json::parse(content);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
    for (auto& item : root) records.push_back(std::move(item));
  } else {
    std::istringstream lines(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        records.push_back(json::parse(line));
      } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  std::vector<Episode> episodes;
  episodes.reserve(records.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < records.size(); ++i) {
    Episode ep = episode_from_json(records[i], i);
    if (!seen_ids.insert(ep.path_id).second) {
      record_error(i, "duplicate path_id \"" + ep.path_id + "\"");
    }
    episodes.push_back(std::move(ep));
  }
  return episodes;
}

std::vector<Episode> load_episodes(const std::filesystem::path& file) {
  return parse_episodes(read_file(file), file.string());
}

bool file_is_json_array(const std::filesystem::path& file) {
  const std::string content = read_file(file);
  const auto first = content.find_first_not_of(" \t\r\n");
  return first != std::string::npos && content[first] == '[';
}

void write_episodes_json(const std::vector<Episode>& episodes,
                         const std::filesystem::path& file) {
  json root = json::array();
  for (const auto& ep : episodes) root.push_back(episode_to_json(ep));
  write_file(file, root.dump(2) + "\n");
}

std::string episodes_to_jsonl(const std::vector<Episode>& episodes) {
  std::string out;
  for (const auto& ep : episodes) {
    out += episode_to_json(ep).dump();
    out += '\n';
  }
  return out;
}

void write_episodes_jsonl(const std::vector<Episode>& episodes,
                          const std::filesystem::path& file) {
  write_file(file, episodes_to_jsonl(episodes));
}

std::vector<Violation> validate_against_graphs(const std::vector<Episode>& episodes,
                                               const std::map<std::string, NavGraph>& graphs) {
  std::vector<Violation> violations;
  for (std::size_t i = 0; i < episodes.size(); ++i) {
    const Episode& ep = episodes[i];
    auto it = graphs.find(ep.scan);
    if (it == graphs.end()) {
      violations.push_back({i, ep.path_id, "missing-scan", "scan \"" + ep.scan + "\" has no graph"});
      continue;
    }
    const NavGraph& g = it->second;
    bool nodes_ok = true;
    for (const auto& node : ep.path) {
      if (!g.has_node(node)) {
        violations.push_back({i, ep.path_id, "unknown-node", "node \"" + node + "\""});
        nodes_ok = false;
      }
    }
    if (!nodes_ok) continue;
    for (std::size_t k = 0; k + 1 < ep.path.size(); ++k) {
      if (ep.path[k] == ep.path[k + 1]) {
        violations.push_back({i, ep.path_id, "repeated-node",
                              "node \"" + ep.path[k] + "\" repeats consecutively"});
      } else if (!g.has_edge(ep.path[k], ep.path[k + 1])) {
        violations.push_back({i, ep.path_id, "not-adjacent",
                              "\"" + ep.path[k] + "\" -> \"" + ep.path[k + 1] + "\""});
      }
    }
  }
  return violations;
}

json violations_to_json(const std::vector<Violation>& violations) {
  json items = json::array();
  for (const auto& v : violations) {
    items.push_back({{"record", v.record_index},
                     {"path_id", v.path_id},
                     {"kind", v.kind},
                     {"detail", v.detail}});
  }
  return json{{"violations", items}, {"count", violations.size()}};
}

namespace {

NavGraph graph_from_plain_json(const json& root, const std::filesystem::path& file) {
  if (!root.contains("nodes") || !root.at("nodes").is_array()) {
    throw std::runtime_error(file.string() + ": graph file needs a \"nodes\" array");
  }
  NavGraph g(root.value("scan", file.stem().string()));
  for (const auto& node : root.at("nodes")) {
    g.add_node(node.at("id").get<std::string>(),
               Vec3{node.at("x").get<double>(), node.at("y").get<double>(),
                    node.at("z").get<double>()});
  }
  for (const auto& edge : root.value("edges", json::array())) {
    if (!edge.is_array() || edge.size() != 2) {
      throw std::runtime_error(file.string() + ": edges must be [id, id] pairs");
    }
    g.add_edge(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
  }
  return g;
}

std::string scan_from_connectivity_filename(const std::filesystem::path& file) {
  std::string stem = file.stem().string();
  const std::string suffix = "_connectivity";
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.erase(stem.size() - suffix.size());
  }
  return stem;
}

// Matterport connectivity: positions from the pose translation column;
// only "included" viewpoints become nodes, and unobstructed transitions
// between them become (symmetrized) edges.
NavGraph graph_from_connectivity(const json& root, const std::filesystem::path& file) {
  NavGraph g(scan_from_connectivity_filename(file));
  std::vector<std::string> ids(root.size());
  std::vector<bool> included(root.size(), false);
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& entry = root.at(i);
    ids[i] = entry.at("image_id").get<std::string>();
    included[i] = entry.value("included", true);
    if (!included[i]) continue;
    const auto& pose = entry.at("pose");
    if (!pose.is_array() || pose.size() != 16) {
      throw std::runtime_error(file.string() + ": pose must hold 16 numbers");
    }
    g.add_node(ids[i], Vec3{pose.at(3).get<double>(), pose.at(7).get<double>(),
                            pose.at(11).get<double>()});
  }
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!included[i]) continue;
    const auto& unobstructed = root.at(i).at("unobstructed");
    for (std::size_t k = 0; k < unobstructed.size() && k < ids.size(); ++k) {
      if (k == i || !included[k]) continue;
      if (unobstructed.at(k).get<bool>()) g.add_edge(ids[i], ids[k]);
    }
  }
  return g;
}

}  // namespace

NavGraph load_graph(const std::filesystem::path& file) {
  const json root = json::parse(read_file(file));
  if (root.is_array()) return graph_from_connectivity(root, file);
  if (root.is_object()) return graph_from_plain_json(root, file);
  throw std::runtime_error(file.string() + ": unrecognized graph file format");
}

std::map<std::string, NavGraph> load_graphs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error(dir.string() + " is not a directory");
  }
  std::map<std::string, NavGraph> graphs;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    NavGraph g = load_graph(file);
    const std::string scan = g.scan();
    if (!graphs.emplace(scan, std::move(g)).second) {
      throw std::runtime_error("duplicate graph for scan \"" + scan + "\"");
    }
  }
  return graphs;
}

json graph_to_json(const NavGraph& g) {
  json nodes = json::array();
  for (const auto& id : g.node_ids()) {
    const Vec3& p = g.position(id);
    nodes.push_back({{"id", id}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
  }
  json edges = json::array();
  for (const auto& id : g.node_ids()) {
    for (const auto& nbr : g.neighbors(id)) {
      if (id < nbr) edges.push_back({id, nbr});
    }
  }
  return json{{"scan", g.scan()}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace navprobe
