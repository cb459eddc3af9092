#pragma once

#include <cstdint>
#include <string>

#include "navprobe/nav_graph.hpp"
#include "navprobe/rng.hpp"

namespace navprobe::testing {

// Jittered indoor-style grid: 4-neighbor connectivity, ~2 m spacing, a
// climbing band of rows in the middle so paths cross stairs. Jitter keeps
// geometry generic (no exact heading ties) while corners stay near 90
// degrees.
inline NavGraph grid_scan(const std::string& scan_id, std::uint64_t seed,
                          std::size_t rows = 8, std::size_t cols = 8) {
  NavGraph g(scan_id);
  Rng rng(seed);
  auto name = [](std::size_t r, std::size_t c) {
    return "r" + std::to_string(r) + "c" + std::to_string(c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double jx = (rng.next_unit() - 0.5) * 0.6;
      const double jy = (rng.next_unit() - 0.5) * 0.6;
      double z = 0.0;
      if (r >= rows / 2 && r < rows / 2 + 2) {
        z = 0.45 * static_cast<double>(r - rows / 2 + 1);
      } else if (r >= rows / 2 + 2) {
        z = 0.9;
      }
      g.add_node(name(r, c),
                 Vec3{static_cast<double>(c) * 2.0 + jx, static_cast<double>(r) * 2.0 + jy, z});
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(name(r, c), name(r, c + 1));
      if (r + 1 < rows) g.add_edge(name(r, c), name(r + 1, c));
    }
  }
  return g;
}

}  // namespace navprobe::testing
