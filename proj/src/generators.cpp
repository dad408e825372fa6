// Copyright 2026 The outer1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "outer1/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace outer1 {

Drawing cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, v == n ? 1 : v + 1);
  return Drawing(n, std::move(edges));
}

Drawing sharp_example() {
  Drawing d(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7},
                {3, 5}, {4, 6}, {2, 7}});
  auto nbrs = [&](Vertex v) {
    return std::vector<Vertex>(d.neighbors(v).begin(), d.neighbors(v).end());
  };
  if (nbrs(3) != std::vector<Vertex>{2, 4, 5} || d.degree(5) != 3 || d.degree(7) != 3) {
    throw std::logic_error("sharp example transcription fails its degree check");
  }
  return d;
}

namespace {

struct HEntry {
  int n;
  std::vector<Edge> edges;
};

// Found by search over hub polygons carrying copies of G_i, then frozen.
const std::vector<HEntry>& h_table() {
  static const std::vector<HEntry> table = {
#include "h_family_data.inc"
  };
  return table;
}

}  // namespace

Drawing h_family(int i) {
  if (i < 2 || i > 17) throw std::out_of_range("h_family index must be in 2..17");
  const HEntry& e = h_table().at(i - 2);
  return Drawing(e.n, e.edges);
}

Drawing random_outer_1_planar(int n, double density, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random drawing needs n >= 3");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  std::vector<Edge> chords;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 2; b <= n; ++b) {
      if (!(a == 1 && b == n)) chords.emplace_back(a, b);
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(chords.begin(), chords.end(), rng);
  const auto target = static_cast<std::size_t>(std::llround(density * chords.size()));

  std::vector<Edge> kept;
  std::vector<bool> crossed;
  for (const Edge& e : chords) {
    if (kept.size() >= target) break;
    int hits = 0;
    std::size_t hit = 0;
    for (std::size_t k = 0; k < kept.size() && hits < 2; ++k) {
      if (interleave(e, kept[k])) {
        ++hits;
        hit = k;
      }
    }
    if (hits >= 2 || (hits == 1 && crossed[hit])) continue;
    if (hits == 1) crossed[hit] = true;
    kept.push_back(e);
    crossed.push_back(hits == 1);
  }
  const Drawing ring = cycle(n);
  std::vector<Edge> edges(ring.edges().begin(), ring.edges().end());
  edges.insert(edges.end(), kept.begin(), kept.end());
  return Drawing(n, std::move(edges));
}

}  // namespace outer1
