#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace navprobe {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);
double xy_distance(const Vec3& a, const Vec3& b);

inline constexpr double kTurnThresholdDeg = 30.0;
inline constexpr double kAroundThresholdDeg = 120.0;
inline constexpr double kStairZThresholdMeters = 0.3;
inline constexpr double kSuccessRadiusMeters = 3.0;

// Per-scan viewpoint graph: node positions in meters plus an undirected
// adjacency with no self-loops.
class NavGraph {
 public:
  explicit NavGraph(std::string scan_id = "") : scan_id_(std::move(scan_id)) {}

  const std::string& scan() const { return scan_id_; }

  void add_node(const std::string& id, Vec3 position);
  void add_edge(const std::string& a, const std::string& b);

  bool has_node(const std::string& id) const;
  bool has_edge(const std::string& a, const std::string& b) const;
  const Vec3& position(const std::string& id) const;
  const std::set<std::string>& neighbors(const std::string& id) const;

  std::size_t node_count() const { return positions_.size(); }
  std::size_t edge_count() const;
  std::vector<std::string> node_ids() const;  // sorted

 private:
  std::string scan_id_;
  std::map<std::string, Vec3> positions_;
  std::map<std::string, std::set<std::string>> adjacency_;
};

struct Path {
  std::string scan_id;
  std::vector<std::string> nodes;

  std::size_t edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Throws unless the path is non-empty, every node exists, and consecutive
// nodes are distinct and adjacent.
void validate_path(const Path& p, const NavGraph& g);

enum class TurnKind { Left, Right, Around };
std::string_view to_string(TurnKind kind);

struct TurnAnnotation {
  std::size_t node_index = 0;   // interior index into Path::nodes
  double delta_heading = 0.0;   // signed degrees in (-180, 180]
  TurnKind kind = TurnKind::Left;
};

// Compass bearing of b from a in the xy plane: 0 = +y axis, clockwise
// positive, result in [0, 360). z is ignored. Throws on xy-coincident
// points ("degenerate edge").
double heading(const Vec3& a, const Vec3& b);

// (h_out - h_in) wrapped to (-180, 180]. Positive = clockwise = right.
double heading_change(double h_in, double h_out);

// Heading per path edge. Edges with no xy extent inherit the nearest
// earlier heading (leading ones borrow the first defined heading); the
// entries are empty only when every edge is vertical.
std::vector<std::optional<double>> edge_headings(const Path& p, const NavGraph& g);

// One annotation per interior node whose heading change exceeds
// turn_threshold; |change| beyond around_threshold classifies as Around,
// otherwise the sign picks Right (+) or Left (-). Edges with no xy extent
// carry the previous heading forward, so vertical hops never register as
// turns.
std::vector<TurnAnnotation> detect_turns(const Path& p, const NavGraph& g,
                                         double turn_threshold = kTurnThresholdDeg,
                                         double around_threshold = kAroundThresholdDeg);

// Dijkstra over 3D Euclidean edge lengths. Equal-length alternatives tie-
// break to the lexicographically smallest node-id sequence. Throws on
// unknown nodes and "disconnected" when the goal is unreachable.
Path shortest_path(const NavGraph& g, const std::string& start, const std::string& goal);

double path_length_meters(const Path& p, const NavGraph& g);

// Uniformly samples start/goal pairs, keeps shortest paths whose edge
// count lies in [min_edges, max_edges] and whose node sequence is not in
// `exclusion`. Deduplicates, stops at `count` or when the attempt budget
// runs out; throws "sampling exhausted" only if nothing was found.
std::vector<Path> sample_paths(const NavGraph& g, std::uint64_t seed, std::size_t count,
                               std::size_t min_edges = 6, std::size_t max_edges = 9,
                               const std::set<std::vector<std::string>>& exclusion = {});

enum class StairDirection { Up, Down };
std::string_view to_string(StairDirection dir);

struct StairSegment {
  std::size_t first_edge = 0;  // inclusive
  std::size_t last_edge = 0;   // inclusive
  StairDirection direction = StairDirection::Up;
};

// Maximal runs of consecutive edges with per-edge |dz| > z_threshold and a
// shared sign.
std::vector<StairSegment> stair_segments(const Path& p, const NavGraph& g,
                                         double z_threshold = kStairZThresholdMeters);

struct PathMetrics {
  double nav_error = 0.0;
  bool success = false;
  double spl = 0.0;
};

// nav_error = distance from the final node to the goal; success inside a
// strict 3 m radius; SPL = success * shortest / max(taken, shortest),
// with SPL 1 for a successful zero-length optimum.
PathMetrics evaluate(const Path& predicted, const std::string& goal, const NavGraph& g);

}  // namespace navprobe
