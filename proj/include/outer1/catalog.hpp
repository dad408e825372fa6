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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "outer1/drawing.hpp"

namespace outer1 {

enum class RoleKind { Solid, Hollow, MarkedHollow };

std::string_view to_string(RoleKind k);

/// Degree requirement a pattern vertex places on its host image.
struct VertexRole {
  RoleKind kind = RoleKind::Hollow;
  int drawn_degree = 0;
  std::optional<int> degree_cap;  // marked-hollow only

  bool admits(int host_degree) const {
    switch (kind) {
      case RoleKind::Solid: return host_degree == drawn_degree;
      case RoleKind::Hollow: return host_degree >= drawn_degree;
      case RoleKind::MarkedHollow:
        return host_degree >= drawn_degree && host_degree <= degree_cap.value_or(drawn_degree);
    }
    return false;
  }
  /// Largest host degree the role allows, or nullopt when unbounded.
  std::optional<int> max_host_degree() const {
    if (kind == RoleKind::Solid) return drawn_degree;
    if (kind == RoleKind::MarkedHollow) return degree_cap;
    return std::nullopt;
  }
  bool restricted() const { return kind != RoleKind::Hollow; }
};

struct PatternVertex {
  std::string label;
  VertexRole role;
};

/// One configuration. Vertex order is the clockwise order of its drawing;
/// edges are pairs of vertex indices.
struct ConfigPattern {
  int id = 0;
  std::vector<PatternVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> crossings;  // pairs of edge indices
  std::map<std::string, int> anchors;          // name -> vertex index
  std::optional<std::pair<int, int>> d1_pair;
  std::vector<std::pair<int, int>> merges;     // hollow pairs allowed to coincide

  int size() const { return static_cast<int>(vertices.size()); }
  /// Vertex index for `label`, or -1.
  int index_of(std::string_view label) const;
  bool has_edge(int a, int b) const;
  bool may_merge(int a, int b) const;
};

/// Raised when catalog text is malformed or fails its self-check.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses catalog text; see data/catalog.txt for the format.
std::vector<ConfigPattern> parse_catalog(std::string_view text);

/// Structural checks on a parsed catalog; throws CatalogError naming the
/// failed fact:
///  - drawn degrees equal pattern incidence counts, crossings interleave in
///    the listed order, edges unique;
///  - (a) every pattern other than G6 has an edge joining a solid degree-2
///    vertex to a vertex whose host degree is bounded by 7;
///  - (b) every pattern other than G3 has an edge joining a solid degree-2
///    vertex to a vertex of host degree at most 5, or two solid degree-3
///    vertices;
///  - (c) exactly G3, G6, G7, G12 carry a marked vertex, labelled y.
void validate_catalog(const std::vector<ConfigPattern>& catalog);

/// The shipped catalog (17 patterns, validated once, shared read-only).
const std::vector<ConfigPattern>& load_catalog();
const ConfigPattern& pattern(int id);

/// Injective (modulo `merge` pairs) map pattern vertex -> host vertex.
struct Match {
  int pattern_id = 0;
  std::vector<Vertex> assignment;  // indexed like ConfigPattern::vertices

  Vertex at(const ConfigPattern& p, std::string_view label) const;
  friend auto operator<=>(const Match&, const Match&) = default;
};

/// Pattern automorphisms (permutations of vertex indices preserving roles,
/// edges, merges), identity first.
std::vector<std::vector<int>> automorphisms(const ConfigPattern& p);

/// All containments of `p` in `d`, one representative per automorphism
/// orbit (the lexicographically smallest assignment), sorted.
///
/// With `check_d2` and 6 <= id <= 17, a match must also realise the
/// pattern's drawing: crossing pattern edges map to crossing host edges and
/// the pattern's cyclic order maps to the host's, up to rotation and
/// reflection.
std::vector<Match> find_matches(const Drawing& d, const ConfigPattern& p, bool check_d2 = false);

/// First match in sorted order, without enumerating the rest.
std::optional<Match> first_match(const Drawing& d, const ConfigPattern& p, bool check_d2 = false);

/// True iff some match avoids mapping any solid or marked-hollow vertex of
/// `p` onto `a` or `b`.
bool properly_contains(const Drawing& d, const ConfigPattern& p, Vertex a, Vertex b);

/// The drawing side-condition of a single match (see find_matches).
bool realizes_drawing(const Drawing& d, const ConfigPattern& p, const Match& m);

}  // namespace outer1
