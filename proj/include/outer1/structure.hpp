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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "outer1/catalog.hpp"
#include "outer1/drawing.hpp"

namespace outer1 {

/// A search that the structural results guarantee to succeed came back
/// empty: the input is not what it claims to be, or the catalog is wrong.
class GuaranteeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unavoidable configuration in a drawing with minimum degree >= 2, trying
/// G1, G2, ..., G17 and returning the first (lexicographically smallest)
/// match. Components are searched together; any one component suffices.
Match find_structure(const Drawing& d, bool check_d2 = false);

struct LightEdge {
  Edge endpoints;
  int degree_sum = 0;
  int source_config = 0;  // configuration that produced it; 0 = direct scan
};

/// An edge of degree sum <= 9, or <= 7 in maximal mode (caller asserts the
/// drawing is maximal). The edge is read off the first configuration match
/// whose light edge meets the bound, G3 skipped in maximal mode; a direct
/// scan of all edges is the fallback.
LightEdge find_light_edge(const Drawing& d, bool maximal_mode = false);

enum class ReductionKind {
  P1Pendant,
  P2AdjacentDeg2,
  P3TriangleDeg2,
  P4G3,
  P5G6,
  P6G7,
  P7G8,
  P8G9,
  P9G10,
  P10G11,
};

std::string_view to_string(ReductionKind k);

/// Configuration id behind a catalog-backed kind, 0 for P1..P3.
int config_id(ReductionKind k);

struct ReductionStep {
  ReductionKind kind = ReductionKind::P1Pendant;
  std::vector<Vertex> deleted;
  /// Labels u, v, w, x, y, z, a, x1, y1 as the extension rule needs them.
  std::map<std::string, Vertex> anchors;

  Vertex anchor(const std::string& name) const;
  bool has(const std::string& name) const { return anchors.count(name) != 0; }
};

/// Reducible configuration, priority P1, P2, P3, G3, G6, G7, G8, G9, G10,
/// G11. Works on any outer-1-plane drawing with at least one vertex.
ReductionStep find_reduction(const Drawing& d);

/// Whether adding the edge between the images of G3's u and v keeps the
/// graph outer-1-planar (exhaustive recognition, n <= 9).
bool check_d1(const Drawing& d, const Match& g3_match);

}  // namespace outer1
