#include "navprobe/nav_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <queue>
#include <stdexcept>

#include "navprobe/rng.hpp"

namespace navprobe {

namespace {

constexpr double kDegenerateXyEpsilon = 1e-9;

[[noreturn]] void throw_unknown_node(const NavGraph& g, const std::string& id) {
  throw std::invalid_argument("unknown node \"" + id + "\" in scan \"" + g.scan() + "\"");
}

}  // namespace

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(b.x - a.x, b.y - a.y, b.z - a.z);
}

double xy_distance(const Vec3& a, const Vec3& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

void NavGraph::add_node(const std::string& id, Vec3 position) {
  if (id.empty()) throw std::invalid_argument("node id must be non-empty");
  if (!positions_.emplace(id, position).second) {
    throw std::invalid_argument("duplicate node id \"" + id + "\"");
  }
  adjacency_.emplace(id, std::set<std::string>{});
}

void NavGraph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw std::invalid_argument("self-loop on node \"" + a + "\"");
  if (!has_node(a)) throw_unknown_node(*this, a);
  if (!has_node(b)) throw_unknown_node(*this, b);
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

bool NavGraph::has_node(const std::string& id) const { return positions_.count(id) != 0; }

bool NavGraph::has_edge(const std::string& a, const std::string& b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.count(b) != 0;
}

const Vec3& NavGraph::position(const std::string& id) const {
  auto it = positions_.find(id);
  if (it == positions_.end()) throw_unknown_node(*this, id);
  return it->second;
}

const std::set<std::string>& NavGraph::neighbors(const std::string& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw_unknown_node(*this, id);
  return it->second;
}

std::size_t NavGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [_, nbrs] : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::string> NavGraph::node_ids() const {
  std::vector<std::string> ids;
  ids.reserve(positions_.size());
  for (const auto& [id, _] : positions_) ids.push_back(id);
  return ids;
}

void validate_path(const Path& p, const NavGraph& g) {
  if (p.nodes.empty()) throw std::invalid_argument("empty path");
  for (const auto& node : p.nodes) {
    if (!g.has_node(node)) throw_unknown_node(g, node);
  }
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    if (p.nodes[i] == p.nodes[i + 1]) {
      throw std::invalid_argument("path repeats node \"" + p.nodes[i] + "\" consecutively");
    }
    if (!g.has_edge(p.nodes[i], p.nodes[i + 1])) {
      throw std::invalid_argument("path nodes \"" + p.nodes[i] + "\" and \"" + p.nodes[i + 1] +
                                  "\" are not adjacent");
    }
  }
}

std::string_view to_string(TurnKind kind) {
  switch (kind) {
    case TurnKind::Left: return "left";
    case TurnKind::Right: return "right";
    case TurnKind::Around: return "around";
  }
  return "left";
}

std::string_view to_string(StairDirection dir) {
  return dir == StairDirection::Up ? "up" : "down";
}

double heading(const Vec3& a, const Vec3& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  if (std::hypot(dx, dy) < kDegenerateXyEpsilon) {
    throw std::invalid_argument("degenerate edge: endpoints coincide in the xy plane");
  }
  double deg = std::atan2(dx, dy) * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 360.0;
  if (deg >= 360.0) deg = 0.0;
  return deg;
}

double heading_change(double h_in, double h_out) {
  double delta = std::fmod(h_out - h_in, 360.0);
  if (delta > 180.0) delta -= 360.0;
  if (delta <= -180.0) delta += 360.0;
  return delta;
}

std::vector<std::optional<double>> edge_headings(const Path& p, const NavGraph& g) {
  std::vector<std::optional<double>> headings(p.edge_count());
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const Vec3& a = g.position(p.nodes[i]);
    const Vec3& b = g.position(p.nodes[i + 1]);
    if (xy_distance(a, b) < kDegenerateXyEpsilon) continue;
    headings[i] = heading(a, b);
  }
  std::optional<double> carry;
  for (auto& h : headings) {
    if (h) {
      carry = h;
    } else {
      h = carry;
    }
  }
  carry.reset();
  for (auto it = headings.rbegin(); it != headings.rend(); ++it) {
    if (*it) {
      carry = *it;
    } else {
      *it = carry;
    }
  }
  return headings;
}

namespace {

TurnKind classify_turn(double delta, double around_threshold) {
  if (std::abs(delta) > around_threshold) return TurnKind::Around;
  return delta > 0.0 ? TurnKind::Right : TurnKind::Left;
}

}  // namespace

std::vector<TurnAnnotation> detect_turns(const Path& p, const NavGraph& g,
                                         double turn_threshold, double around_threshold) {
  validate_path(p, g);
  std::vector<TurnAnnotation> turns;
  if (p.nodes.size() < 3) return turns;
  const auto headings = edge_headings(p, g);
  for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
    const auto& h_in = headings[i - 1];
    const auto& h_out = headings[i];
    if (!h_in || !h_out) continue;  // fully degenerate path
    const double delta = heading_change(*h_in, *h_out);
    if (std::abs(delta) > turn_threshold) {
      turns.push_back({i, delta, classify_turn(delta, around_threshold)});
    }
  }
  return turns;
}

namespace {

std::vector<std::string> reconstruct_sequence(
    const std::map<std::string, std::string>& parent, const std::string& start,
    const std::string& node) {
  std::vector<std::string> seq;
  std::string cur = node;
  while (cur != start) {
    seq.push_back(cur);
    cur = parent.at(cur);
  }
  seq.push_back(start);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

Path shortest_path(const NavGraph& g, const std::string& start, const std::string& goal) {
  if (!g.has_node(start)) throw std::invalid_argument("unknown node \"" + start + "\"");
  if (!g.has_node(goal)) throw std::invalid_argument("unknown node \"" + goal + "\"");
  if (start == goal) return Path{g.scan(), {start}};

  std::map<std::string, double> dist;
  std::map<std::string, std::string> parent;
  using Entry = std::pair<double, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[start] = 0.0;
  queue.push({0.0, start});

  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    auto known = dist.find(node);
    if (known == dist.end() || d > known->second) continue;  // stale entry
    if (node == goal) break;
    for (const auto& next : g.neighbors(node)) {
      const double nd = d + distance(g.position(node), g.position(next));
      auto it = dist.find(next);
      if (it == dist.end() || nd < it->second) {
        dist[next] = nd;
        parent[next] = node;
        queue.push({nd, next});
      } else if (nd == it->second && parent.count(next)) {
        // Equal length: keep the lexicographically smaller sequence.
        auto candidate = reconstruct_sequence(parent, start, node);
        candidate.push_back(next);
        const auto current = reconstruct_sequence(parent, start, next);
        if (candidate < current) {
          parent[next] = node;
        }
      }
    }
  }

  if (dist.find(goal) == dist.end()) {
    throw std::runtime_error("disconnected: no path from \"" + start + "\" to \"" + goal +
                             "\" in scan \"" + g.scan() + "\"");
  }
  return Path{g.scan(), reconstruct_sequence(parent, start, goal)};
}

double path_length_meters(const Path& p, const NavGraph& g) {
  validate_path(p, g);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    total += distance(g.position(p.nodes[i]), g.position(p.nodes[i + 1]));
  }
  return total;
}

std::vector<Path> sample_paths(const NavGraph& g, std::uint64_t seed, std::size_t count,
                               std::size_t min_edges, std::size_t max_edges,
                               const std::set<std::vector<std::string>>& exclusion) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot sample from an empty graph");
  if (min_edges > max_edges) throw std::invalid_argument("min_edges exceeds max_edges");
  const auto ids = g.node_ids();
  Rng rng(seed);
  std::vector<Path> out;
  std::set<std::vector<std::string>> seen;
  const std::size_t budget = std::max<std::size_t>(count * 200, 2000);
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    const auto& start = ids[static_cast<std::size_t>(rng.next_below(ids.size()))];
    const auto& goal = ids[static_cast<std::size_t>(rng.next_below(ids.size()))];
    if (start == goal) continue;
    Path path;
    try {
      path = shortest_path(g, start, goal);
    } catch (const std::runtime_error&) {
      continue;  // disconnected pair
    }
    const std::size_t edges = path.edge_count();
    if (edges < min_edges || edges > max_edges) continue;
    if (exclusion.count(path.nodes) != 0) continue;
    if (!seen.insert(path.nodes).second) continue;
    out.push_back(std::move(path));
  }
  if (out.empty() && count > 0) {
    throw std::runtime_error("sampling exhausted: no path with " + std::to_string(min_edges) +
                             "-" + std::to_string(max_edges) + " edges found in scan \"" +
                             g.scan() + "\"");
  }
  return out;
}

std::vector<StairSegment> stair_segments(const Path& p, const NavGraph& g, double z_threshold) {
  validate_path(p, g);
  std::vector<StairSegment> segments;
  std::optional<StairSegment> open;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const double dz = g.position(p.nodes[i + 1]).z - g.position(p.nodes[i]).z;
    std::optional<StairDirection> dir;
    if (std::abs(dz) > z_threshold) {
      dir = dz > 0.0 ? StairDirection::Up : StairDirection::Down;
    }
    if (open && dir && open->direction == *dir) {
      open->last_edge = i;
    } else {
      if (open) segments.push_back(*open);
      open.reset();
      if (dir) open = StairSegment{i, i, *dir};
    }
  }
  if (open) segments.push_back(*open);
  return segments;
}

PathMetrics evaluate(const Path& predicted, const std::string& goal, const NavGraph& g) {
  validate_path(predicted, g);
  if (!g.has_node(goal)) throw std::invalid_argument("unknown goal node \"" + goal + "\"");
  PathMetrics metrics;
  metrics.nav_error = distance(g.position(predicted.nodes.back()), g.position(goal));
  metrics.success = metrics.nav_error < kSuccessRadiusMeters;
  const double shortest_len =
      path_length_meters(shortest_path(g, predicted.nodes.front(), goal), g);
  if (!metrics.success) {
    metrics.spl = 0.0;
  } else if (shortest_len == 0.0) {
    metrics.spl = 1.0;
  } else {
    const double taken = path_length_meters(predicted, g);
    metrics.spl = shortest_len / std::max(taken, shortest_len);
  }
  return metrics;
}

}  // namespace navprobe
